#pragma once

#include "symsum/manifold.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symsum {

/// The classes of symplectic (-1)-spheres found by a bounded search.  Every
/// member A satisfies A^2 = -1, <K, A> = -1 and pairs positively with the
/// model's reference symplectic class; `complete` records whether the search
/// provably exhausted the set (finite for rational models with n <= 8, and
/// for minimal ruled models, where the set is the fiber-cone family).
struct ExceptionalSet {
    std::vector<HomologyClass> classes;
    i64 bound = 0;
    bool complete = false;
    std::string note;
};

/// All exceptional classes with coefficients bounded by degree_bound, in
/// lexicographic order.
///
/// Rational models search the box exhaustively.  Irrational ruled models
/// return the fiber-cone family {e_i} + {f - e_i} (complete: spheres in an
/// irrational ruled surface lie in fibers, so no class with nonzero base
/// degree qualifies); set include_numerical_extras to also list box classes
/// that satisfy the numerical conditions without being sphere classes.
/// Blown-up S2xS2 models enumerate through their rational re-expression.
/// General models are rejected: there is no enumeration basis, callers
/// supply known_exceptionals instead.
ExceptionalSet enumerate_exceptional(const ManifoldModel& m, i64 degree_bound, int jobs = 1,
                                     bool include_numerical_extras = false);

/// Cremona-reduction recognizer for rational models: true iff repeated
/// reflection in 2H - Ei - Ej - Ek (largest three multiplicities, applied
/// while their sum exceeds the degree) together with permutations reduces A
/// to some E_i.  Characterizes smooth rational (-1)-curve classes for
/// n <= 8; used as the independent cross-check of enumerate_exceptional.
bool is_exceptional_cremona(const ManifoldModel& m, const HomologyClass& A);

enum class MeetsAllVerdict { yes_certified, yes_bounded, no };

struct MeetsAllResult {
    MeetsAllVerdict verdict = MeetsAllVerdict::no;
    std::optional<HomologyClass> witness; // exceptional class with pairing <= 0
    i64 witness_pairing = 0;
    i64 bound = 0;
    std::vector<std::string> assumptions;
    std::string note;
};

/// Does F meet every symplectic (-1)-sphere?  `no` comes with the witness
/// class (pairing 0: a disjoint sphere, the non-minimality trigger; pairing
/// < 0: a positivity violation, i.e. inconsistent input).  General models
/// use the asserted known_exceptionals list, or are vacuously certified when
/// flagged minimal; otherwise they are rejected.
MeetsAllResult meets_all_exceptional(const ManifoldModel& m, const SurfaceInModel& F,
                                     i64 degree_bound, int jobs = 1);

} // namespace symsum
