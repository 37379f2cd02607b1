#pragma once

#include "symsum/knef.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symsum {

/// One side of a symplectic sum: a model plus the embedded surface the sum
/// is taken along.
struct SumSide {
    ManifoldModel model;
    SurfaceInModel surface;
};

/// The pair (X1, F1), (X2, F2) with surfaces of equal positive genus and
/// opposite squares.
struct SumDescriptor {
    SumSide side1;
    SumSide side2;
    int genus = 0;
};

SumDescriptor make_sum(SumSide side1, SumSide side2);

struct SumValidation {
    bool ok = false;
    std::vector<std::string> violations;
};

/// Checks genus matching (positive) and [F1]^2 + [F2]^2 = 0, naming each
/// violation.
SumValidation validate_sum(const SumDescriptor& s);

/// Chern numbers of the sum along square-zero surfaces:
///   c1^2(Z) = c1^2(X1) + c1^2(X2) + 8(g-1),
///   c2(Z)   = c2(X1)   + c2(X2)   + 4(g-1).
/// Sums along surfaces of opposite nonzero squares are rejected: signature
/// additivity in that regime is an extra assumption this operation does not
/// make (verify_chain folds it separately, with the assumption recorded).
Chern sum_chern(const SumDescriptor& s);

/// <K1 + PD[F1], A1> + <K2 + PD[F2], A2>: the quantity that equals -1 for
/// the two halves of a limiting (-1)-sphere.
i64 can_relation(const SumDescriptor& s, const HomologyClass& A1, const HomologyClass& A2);

struct Splitting {
    HomologyClass A1;
    HomologyClass A2; // zero class for an empty side
    i64 d = 0;        // A1.F1 = A2.F2
};

struct SplittingCaps {
    i64 coeff_bound = 8;
    int max_atoms = 2;   // candidate atoms across both sides
    int max_mult = 3;    // multiplicity per candidate (multiple covers)
    int max_results = 200;
};

struct SplittingEnumeration {
    std::vector<Splitting> splittings;
    bool certified_empty = false; // emptiness proven for all combination sizes
    bool truncated = false;
    SplittingCaps caps;
    size_t candidates_side1 = 0;
    size_t candidates_side2 = 0;
    std::string note;
};

/// Enumerates pairs (A1, A2) with d = A1.F1 = A2.F2 >= 0 and
/// can_relation = -1, where each A_i is zero or a nonnegative integer
/// combination of sphere-candidate classes: box classes of adjunction genus
/// zero, square >= -1 (lower squares cannot contribute components, by the
/// dimension count) and positive omega-area.
///
/// When every candidate pairs >= 0 with K + F on both sides, the list is
/// certifiably empty for combinations of every size; that is the mechanism
/// by which sums of K-nef surfaces admit no splitting.  Otherwise the
/// enumeration is capped (atoms, multiplicity, results) and the caps are
/// reported; the witness splittings of the non-minimal configurations are
/// small and appear first.
SplittingEnumeration enumerate_can_splittings(const SumDescriptor& s, i64 coeff_bound,
                                              int jobs = 1, SplittingCaps caps = {});

enum class MinimalityVerdict { not_minimal_case_i, conditional_case_ii, minimal_case_iii };
const char* minimality_verdict_name(MinimalityVerdict v);

struct MinimalityDecision {
    MinimalityVerdict verdict = MinimalityVerdict::minimal_case_iii;
    int witness_side = 0;                    // case (i): which side carries the sphere
    std::optional<HomologyClass> witness;    // case (i): the disjoint exceptional class
    int ruled_side = 0;                      // case (ii): which side is the ruled section
    std::optional<bool> resolved_minimal;    // case (ii): minimal iff the other side is
    std::string resolution;                  // case (ii): how the flag was resolved
    std::optional<KnefCertificate> cert1, cert2; // case (iii)
    std::vector<std::string> assumptions;
    i64 degree_bound = 0;
};

/// Decides minimality of the symplectic sum:
///   (i)  a side has an exceptional sphere disjoint from its surface
///        -> not minimal, with the witness;
///   (ii) a side is a ruled surface with the surface as a section
///        -> minimal iff the other side is minimal (resolved from its
///        flags/blowup count when possible);
///   (iii) otherwise both surfaces certify rationally K-nef -> minimal.
/// Any other outcome is an internal inconsistency and aborts loudly.
MinimalityDecision decide_minimality(const SumDescriptor& s, i64 degree_bound, int jobs = 1);

/// A symplectic Lefschetz fibration over S^2, at the level of the data the
/// fiber-sum criterion needs.
struct FibrationDescriptor {
    int fiber_genus = 0;
    bool relatively_minimal = false;
    bool is_trivial_projection = false; // the projection Sigma_g x S^2 -> S^2
};

struct LefschetzReport {
    bool minimal = false;
    std::vector<std::string> reasons;
};

/// Fiber sums of relatively minimal Lefschetz fibrations of equal positive
/// fiber genus, neither the trivial projection, are minimal.  Hypothesis
/// failures are rejected with the failing hypothesis named.
LefschetzReport lefschetz_fiber_sum_minimal(const FibrationDescriptor& f1,
                                            const FibrationDescriptor& f2);

} // namespace symsum
