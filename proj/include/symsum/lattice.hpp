#pragma once

#include "symsum/checked.hpp"
#include "symsum/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace symsum {

/// An integral unimodular symmetric bilinear form with a named basis.
///
/// This is the second-homology intersection lattice of a closed oriented
/// 4-manifold: `gram` is the matrix of the intersection pairing in the given
/// basis, its determinant is +1 or -1, and (b_plus, b_minus) is the signature
/// computed exactly over the rationals.  Instances are immutable and shared;
/// two lattices are compatible when their gram matrices and basis labels
/// agree, so reloading the same description never creates an incompatible
/// copy.
struct IntersectionLattice {
    std::string name;
    int rank = 0;
    std::vector<std::vector<i64>> gram; // rank x rank, symmetric, det = +-1
    std::vector<std::string> labels;    // length rank, distinct
    int b_plus = 0;
    int b_minus = 0;

    /// Validates symmetry, unimodularity, label sanity and computes the
    /// signature.  Throws std::invalid_argument with a diagnostic otherwise.
    static std::shared_ptr<const IntersectionLattice>
    create(std::string name, std::vector<std::vector<i64>> gram, std::vector<std::string> labels);

    bool compatible_with(const IntersectionLattice& other) const {
        return gram == other.gram && labels == other.labels;
    }

    int label_index(const std::string& label) const; // -1 when absent
};

using LatticePtr = std::shared_ptr<const IntersectionLattice>;

/// Exact signature (positives, negatives, zeros) of a symmetric integer
/// matrix, via congruence diagonalization over the rationals.
struct Signature {
    int positives = 0;
    int negatives = 0;
    int zeros = 0;
};
Signature signature_of(const std::vector<std::vector<i64>>& gram);

/// Determinant of a symmetric integer matrix, exact.
Rat determinant_of(const std::vector<std::vector<i64>>& gram);

/// An integral homology class: a coefficient vector in a fixed lattice.
/// Poincare duality is the identity on coefficient vectors; a class and its
/// dual share one representation, and the pairing does all the work.
class HomologyClass {
public:
    HomologyClass() = default;
    HomologyClass(LatticePtr lattice, std::vector<i64> coeffs);

    const LatticePtr& lattice() const { return lattice_; }
    const std::vector<i64>& coeffs() const { return coeffs_; }
    i64 coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
    bool is_zero() const;

    static HomologyClass zero(LatticePtr lattice);
    static HomologyClass basis(LatticePtr lattice, int i);

    HomologyClass operator+(const HomologyClass& o) const;
    HomologyClass operator-(const HomologyClass& o) const;
    HomologyClass operator*(i64 scalar) const;
    HomologyClass operator-() const { return *this * -1; }
    bool operator==(const HomologyClass& o) const;

    /// Renders the class in the lattice's basis, e.g. "3H - E1 - E2".
    std::string str() const;

private:
    LatticePtr lattice_;
    std::vector<i64> coeffs_;
};

/// Intersection pairing a^T . gram . b.  Symmetric, bilinear, exact.
/// Classes from different (incompatible) lattices are rejected with a
/// diagnostic naming both lattices.
i64 pairing(const HomologyClass& a, const HomologyClass& b);

/// Shorthand for pairing(a, a).
i64 square(const HomologyClass& a);

/// Pairing of a raw coefficient vector against a class, used by enumerators
/// that avoid materializing HomologyClass per lattice point.
i64 pairing_raw(const IntersectionLattice& lat, const std::vector<i64>& a, const std::vector<i64>& b);
i64 square_raw(const IntersectionLattice& lat, const std::vector<i64>& a);

/// Genus of an embedded connected surface in class A via the adjunction
/// formula 2g - 2 = A^2 + <K, A>, returned exactly:
///   genus = (square(A) + pairing(K, A)) / 2 + 1.
/// A non-integer result is a valid return; it signals that K is not
/// characteristic or that A is not representable by such a surface.
Rat adjunction_genus(const HomologyClass& K, const HomologyClass& A);

/// True when <K, A> = A^2 (mod 2) for every basis class A, i.e. K is a
/// characteristic vector and adjunction genera of integral classes are
/// integers.
bool is_characteristic(const HomologyClass& K);

/// Outcome of a light-cone check in a lattice of type (1, n): two classes of
/// nonnegative square on the omega side of the positive cone pair
/// nonnegatively.
struct LightConeReport {
    bool hypotheses_hold = false; // alpha^2 >= 0, beta^2 >= 0, alpha.omega >= 0, beta.omega >= 0
    i64 alpha_sq = 0, beta_sq = 0, alpha_omega = 0, beta_omega = 0;
    i64 pairing = 0;            // alpha . beta
    bool asserted_nonneg = false; // set iff hypotheses hold (and then pairing >= 0)
};

/// Checks the light-cone hypotheses for (alpha, beta) against a reference
/// class of positive square, and when they hold asserts pairing >= 0.
/// Rejects lattices with b_plus != 1 (the statement needs Lorentzian
/// signature) and reference classes of non-positive square.  A
/// hypothesis-satisfying pair with negative pairing is mathematically
/// impossible and raises std::logic_error.
LightConeReport light_cone_check(const HomologyClass& alpha, const HomologyClass& beta,
                                 const HomologyClass& omega_ref);

} // namespace symsum
