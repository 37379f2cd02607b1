#include "symsum/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symsum {

namespace {

// Congruence-diagonalize a rational copy of the matrix with shear and swap
// moves only.  Shears leave the determinant fixed and swaps flip its sign
// twice (simultaneous row and column swap), so the product of the resulting
// diagonal is det(gram) exactly, and the diagonal signs give the signature
// (Sylvester's law of inertia).
struct DiagResult {
    std::vector<Rat> diag;
};

DiagResult diagonalize(const std::vector<std::vector<i64>>& gram) {
    int n = static_cast<int>(gram.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(gram[i][j]);

    auto swap_rc = [&](int i, int j) {
        std::swap(m[i], m[j]);
        for (int r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
    };

    DiagResult res;
    for (int p = 0; p < n; ++p) {
        if (m[p][p].sign() == 0) {
            int nz = -1;
            for (int r = p + 1; r < n; ++r)
                if (m[r][r].sign() != 0) { nz = r; break; }
            if (nz >= 0) {
                swap_rc(p, nz);
            } else {
                // all remaining diagonal entries vanish; pull in an
                // off-diagonal entry (hyperbolic situation)
                int a = -1, b = -1;
                for (int r = p; r < n && a < 0; ++r)
                    for (int c = r + 1; c < n; ++c)
                        if (m[r][c].sign() != 0) { a = r; b = c; break; }
                if (a < 0) {
                    for (int r = p; r < n; ++r) res.diag.push_back(Rat(0));
                    return res;
                }
                if (a != p) swap_rc(p, a);
                // now m[p][b] != 0 and m[p][p] = 0: add row/col b into p
                for (int k = 0; k < n; ++k) m[p][k] = m[p][k] + m[b][k];
                for (int k = 0; k < n; ++k) m[k][p] = m[k][p] + m[k][b];
            }
        }
        Rat piv = m[p][p];
        if (piv.sign() == 0) { res.diag.push_back(Rat(0)); continue; }
        for (int r = p + 1; r < n; ++r) {
            if (m[r][p].sign() == 0) continue;
            Rat c = -(m[r][p] / piv);
            for (int k = 0; k < n; ++k) m[r][k] = m[r][k] + c * m[p][k];
            for (int k = 0; k < n; ++k) m[k][r] = m[k][r] + c * m[k][p];
        }
        res.diag.push_back(piv);
    }
    return res;
}

} // namespace

Signature signature_of(const std::vector<std::vector<i64>>& gram) {
    Signature s;
    for (const Rat& d : diagonalize(gram).diag) {
        int sg = d.sign();
        if (sg > 0) ++s.positives;
        else if (sg < 0) ++s.negatives;
        else ++s.zeros;
    }
    return s;
}

Rat determinant_of(const std::vector<std::vector<i64>>& gram) {
    Rat det(1);
    for (const Rat& d : diagonalize(gram).diag) det = det * d;
    return det;
}

std::shared_ptr<const IntersectionLattice>
IntersectionLattice::create(std::string name, std::vector<std::vector<i64>> gram,
                            std::vector<std::string> labels) {
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("lattice '" + name + "': " + msg);
    };
    int rank = static_cast<int>(gram.size());
    if (rank <= 0) fail("rank must be positive");
    for (const auto& row : gram)
        if (static_cast<int>(row.size()) != rank) fail("gram matrix is not square");
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) fail("gram matrix is not symmetric");
    if (static_cast<int>(labels.size()) != rank) fail("expected one basis label per row");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) fail("duplicate basis label '" + l + "'");

    Rat det = determinant_of(gram);
    if (!(det == Rat(1) || det == Rat(-1)))
        fail("not unimodular: det = " + det.str());
    Signature sig = signature_of(gram);
    if (sig.zeros != 0) fail("degenerate pairing"); // unreachable given det = +-1

    auto lat = std::make_shared<IntersectionLattice>();
    lat->name = std::move(name);
    lat->rank = rank;
    lat->gram = std::move(gram);
    lat->labels = std::move(labels);
    lat->b_plus = sig.positives;
    lat->b_minus = sig.negatives;
    return lat;
}

int IntersectionLattice::label_index(const std::string& label) const {
    for (int i = 0; i < rank; ++i)
        if (labels[static_cast<size_t>(i)] == label) return i;
    return -1;
}

HomologyClass::HomologyClass(LatticePtr lattice, std::vector<i64> coeffs)
    : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
    if (!lattice_) throw std::invalid_argument("homology class needs a lattice");
    if (static_cast<int>(coeffs_.size()) != lattice_->rank)
        throw std::invalid_argument("class in lattice '" + lattice_->name + "': expected " +
                                    std::to_string(lattice_->rank) + " coefficients, got " +
                                    std::to_string(coeffs_.size()));
}

bool HomologyClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 c) { return c == 0; });
}

HomologyClass HomologyClass::zero(LatticePtr lattice) {
    std::vector<i64> c(static_cast<size_t>(lattice->rank), 0);
    return HomologyClass(std::move(lattice), std::move(c));
}

HomologyClass HomologyClass::basis(LatticePtr lattice, int i) {
    std::vector<i64> c(static_cast<size_t>(lattice->rank), 0);
    c.at(static_cast<size_t>(i)) = 1;
    return HomologyClass(std::move(lattice), std::move(c));
}

static void require_compatible(const HomologyClass& a, const HomologyClass& b,
                               const char* what) {
    if (a.lattice() == b.lattice()) return;
    if (a.lattice() && b.lattice() && a.lattice()->compatible_with(*b.lattice())) return;
    std::ostringstream os;
    os << what << ": classes live in different lattices ('"
       << (a.lattice() ? a.lattice()->name : "<none>") << "' vs '"
       << (b.lattice() ? b.lattice()->name : "<none>") << "')";
    throw std::invalid_argument(os.str());
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
    require_compatible(*this, o, "class addition");
    std::vector<i64> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return HomologyClass(lattice_, std::move(c));
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const {
    require_compatible(*this, o, "class subtraction");
    std::vector<i64> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
    return HomologyClass(lattice_, std::move(c));
}

HomologyClass HomologyClass::operator*(i64 scalar) const {
    std::vector<i64> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(coeffs_[i], scalar);
    return HomologyClass(lattice_, std::move(c));
}

bool HomologyClass::operator==(const HomologyClass& o) const {
    if (!lattice_ || !o.lattice_) return coeffs_ == o.coeffs_ && !lattice_ == !o.lattice_;
    return lattice_->compatible_with(*o.lattice_) && coeffs_ == o.coeffs_;
}

std::string HomologyClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        i64 c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        i64 a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << lattice_->labels[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

i64 pairing_raw(const IntersectionLattice& lat, const std::vector<i64>& a,
                const std::vector<i64>& b) {
    i64 total = 0;
    for (int i = 0; i < lat.rank; ++i) {
        i64 ai = a[static_cast<size_t>(i)];
        if (ai == 0) continue;
        i64 row = 0;
        const auto& gi = lat.gram[static_cast<size_t>(i)];
        for (int j = 0; j < lat.rank; ++j) {
            i64 bj = b[static_cast<size_t>(j)];
            if (bj == 0 || gi[static_cast<size_t>(j)] == 0) continue;
            row = checked_add(row, checked_mul(gi[static_cast<size_t>(j)], bj));
        }
        total = checked_add(total, checked_mul(ai, row));
    }
    return total;
}

i64 square_raw(const IntersectionLattice& lat, const std::vector<i64>& a) {
    return pairing_raw(lat, a, a);
}

i64 pairing(const HomologyClass& a, const HomologyClass& b) {
    require_compatible(a, b, "pairing");
    return pairing_raw(*a.lattice(), a.coeffs(), b.coeffs());
}

i64 square(const HomologyClass& a) { return pairing(a, a); }

Rat adjunction_genus(const HomologyClass& K, const HomologyClass& A) {
    require_compatible(K, A, "adjunction");
    return Rat(checked_add(square(A), pairing(K, A)), 2) + Rat(1);
}

bool is_characteristic(const HomologyClass& K) {
    const auto& lat = *K.lattice();
    for (int i = 0; i < lat.rank; ++i) {
        HomologyClass e = HomologyClass::basis(K.lattice(), i);
        i64 diff = checked_sub(pairing(K, e), square(e));
        if (diff % 2 != 0) return false;
    }
    return true;
}

LightConeReport light_cone_check(const HomologyClass& alpha, const HomologyClass& beta,
                                 const HomologyClass& omega_ref) {
    require_compatible(alpha, beta, "light-cone check");
    require_compatible(alpha, omega_ref, "light-cone check");
    const auto& lat = *alpha.lattice();
    if (lat.b_plus != 1)
        throw std::invalid_argument("light-cone check needs a lattice of type (1, n); '" +
                                    lat.name + "' has b+ = " + std::to_string(lat.b_plus));
    if (square(omega_ref) <= 0)
        throw std::invalid_argument("light-cone reference class must have positive square");

    LightConeReport r;
    r.alpha_sq = square(alpha);
    r.beta_sq = square(beta);
    r.alpha_omega = pairing(alpha, omega_ref);
    r.beta_omega = pairing(beta, omega_ref);
    r.pairing = pairing(alpha, beta);
    r.hypotheses_hold =
        r.alpha_sq >= 0 && r.beta_sq >= 0 && r.alpha_omega >= 0 && r.beta_omega >= 0;
    if (r.hypotheses_hold) {
        if (r.pairing < 0)
            throw std::logic_error("light-cone lemma violated: " + alpha.str() + " . " +
                                   beta.str() + " = " + std::to_string(r.pairing));
        r.asserted_nonneg = true;
    }
    return r;
}

} // namespace symsum
