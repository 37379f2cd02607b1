#pragma once

#include "symsum/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symsum {

enum class Kind { Rational, RuledTrivial, RuledTwisted, S2xS2, General };
enum class MinimalModelKind { rational, ruled, neither };

const char* kind_name(Kind k);
const char* minimal_model_kind_name(MinimalModelKind k);

struct ModelFlags {
    bool minimal = false;
    MinimalModelKind minimal_model_kind = MinimalModelKind::neither;
    int b_plus = 1;
    bool aspherical = false;
};

struct Chern {
    i64 c1_sq = 0;
    i64 c2 = 0;
    bool operator==(const Chern&) const = default;
};

/// A symplectic 4-manifold at the level of the data the engine reasons
/// about: its intersection lattice, the Poincare dual of the canonical
/// class, b1, a reference symplectic class of positive square, and the
/// topological flags the case analysis consumes.
///
/// Built-in kinds derive everything; General models carry user-asserted
/// fields.  A General model whose lattice is only a sublattice of H_2 sets
/// lattice_is_full_h2 = false and must then assert its Chern pair
/// explicitly.  known_exceptionals, when present, asserts the complete list
/// of symplectic (-1)-sphere classes (used for blowups of manifolds whose
/// exceptional set is known from elsewhere, e.g. blowups of aspherical or
/// minimal b+>1 manifolds).
struct ManifoldModel {
    Kind kind = Kind::General;
    int h = 0; // base genus for ruled kinds
    int n = 0; // number of blowups
    std::string name;
    LatticePtr lattice;
    HomologyClass K;
    int b1 = 0;
    HomologyClass omega_ref;
    ModelFlags flags;
    std::string note;

    bool lattice_is_full_h2 = true;
    std::optional<Chern> asserted_chern;
    std::optional<std::vector<HomologyClass>> known_exceptionals;

    /// CP^2 # n CP^2-bar with basis H, E1..En and K = -3H + sum Ei.
    static ManifoldModel rational(int n);
    /// (Sigma_h x S^2) # n CP^2-bar, h >= 1, basis sigma, f, e1..en,
    /// K = -2 sigma + (2h-2) f + sum ei.
    static ManifoldModel ruled_trivial(int h, int n);
    /// Twisted S^2-bundle over Sigma_h, h >= 1.  For n > 0 the blowup is
    /// diffeomorphic to the blown-up trivial bundle and is returned in that
    /// presentation, with a note.
    static ManifoldModel ruled_twisted(int h, int n);
    /// S^2 x S^2 (n = 0), or its blowups kept in the sigma, f, e basis.
    static ManifoldModel s2xs2(int n = 0);
    /// Fully user-specified model; flags are asserted, not derived.
    static ManifoldModel general(std::string name, LatticePtr lattice, HomologyClass K, int b1,
                                 HomologyClass omega_ref, ModelFlags flags);

    /// The fiber class of the ruling for ruled kinds (f, or s+ - s- in the
    /// twisted presentation).  Throws for other kinds.
    HomologyClass fiber_class() const;

    bool is_irrational_ruled_minimal() const {
        return (kind == Kind::RuledTrivial || kind == Kind::RuledTwisted) && n == 0 && h >= 1;
    }
};

/// Rank grows by one (new label of square -1), K gains the new class, b1 is
/// unchanged, minimality is lost.  S2xS2 blowups stay in the sigma, f, e
/// presentation; use s2xs2_as_rational to re-express them explicitly.
ManifoldModel blow_up(const ManifoldModel& m);

/// Explicit re-expression of a blown-up S^2 x S^2 as CP^2 # (n+1) CP^2-bar,
/// together with the coefficient map between the two bases
/// (sigma -> H - E1, f -> H - E2, e1 -> H - E1 - E2, ei -> E_{i+1}).
/// Requires n >= 1; S^2 x S^2 itself is not a blowup of CP^2.
ManifoldModel s2xs2_as_rational(const ManifoldModel& m);
HomologyClass s2xs2_class_to_rational(const ManifoldModel& src, const ManifoldModel& dst,
                                      const HomologyClass& a);

/// (c1^2, c2) = (K.K, 2 - 2 b1 + rank).  General models with a partial
/// lattice must assert their Chern pair; asserted pairs are returned as-is.
Chern chern_numbers(const ManifoldModel& m);

/// Noether congruence c1^2 + c2 = 0 (mod 12).
bool noether_check(i64 a, i64 b);

/// A named embedded surface in a model: class, genus, and whether it is
/// symplectic (asserted).  Construction checks that the adjunction genus
/// equals the stored genus and that symplectic surfaces have positive
/// omega-area.
struct SurfaceInModel {
    HomologyClass cls;
    int genus = 0;
    bool symplectic = true;
    std::string name;
};

SurfaceInModel make_surface(const ManifoldModel& m, HomologyClass cls, int genus,
                            bool symplectic = true, std::string name = "F");

/// Genus of `cls` in `m` by adjunction; throws if not an integer.
int surface_genus(const ManifoldModel& m, const HomologyClass& cls);

/// True exactly when m is a minimal ruled model over a surface of genus
/// F.genus and F meets the fiber class once: the configuration in which the
/// surface is (homologically) a section of a ruling.  Requires F.genus > 0,
/// so S^2 x S^2 never qualifies.
bool detect_ruled_section(const ManifoldModel& m, const SurfaceInModel& F);

} // namespace symsum
