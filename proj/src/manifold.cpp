#include "symsum/manifold.hpp"

#include <algorithm>
#include <sstream>

namespace symsum {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Rational: return "rational";
        case Kind::RuledTrivial: return "ruled_trivial";
        case Kind::RuledTwisted: return "ruled_twisted";
        case Kind::S2xS2: return "s2xs2";
        case Kind::General: return "general";
    }
    return "?";
}

const char* minimal_model_kind_name(MinimalModelKind k) {
    switch (k) {
        case MinimalModelKind::rational: return "rational";
        case MinimalModelKind::ruled: return "ruled";
        case MinimalModelKind::neither: return "neither";
    }
    return "?";
}

namespace {

std::vector<std::vector<i64>> diag_gram(const std::vector<i64>& d) {
    size_t r = d.size();
    std::vector<std::vector<i64>> g(r, std::vector<i64>(r, 0));
    for (size_t i = 0; i < r; ++i) g[i][i] = d[i];
    return g;
}

// U (+) n<-1>: basis (sigma, f, e1..en) with sigma^2 = f^2 = 0, sigma.f = 1.
std::vector<std::vector<i64>> ruled_gram(int n) {
    int r = 2 + n;
    std::vector<std::vector<i64>> g(static_cast<size_t>(r), std::vector<i64>(static_cast<size_t>(r), 0));
    g[0][1] = g[1][0] = 1;
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(2 + i)][static_cast<size_t>(2 + i)] = -1;
    return g;
}

std::vector<std::string> numbered_labels(const std::vector<std::string>& head,
                                         const std::string& stem, int n) {
    std::vector<std::string> out = head;
    for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

void validate_model(const ManifoldModel& m) {
    if (!is_characteristic(m.K))
        throw std::invalid_argument("model '" + m.name + "': K = " + m.K.str() +
                                    " is not characteristic");
    if (square(m.omega_ref) <= 0)
        throw std::invalid_argument("model '" + m.name + "': omega_ref = " + m.omega_ref.str() +
                                    " must have positive square");
    if (m.flags.b_plus < 1)
        throw std::invalid_argument("model '" + m.name + "': b+ must be >= 1");
    if (!m.lattice_is_full_h2 && !m.asserted_chern)
        throw std::invalid_argument("model '" + m.name +
                                    "': partial lattice requires an asserted Chern pair");
    if (m.known_exceptionals) {
        for (const auto& e : *m.known_exceptionals) {
            if (square(e) != -1 || pairing(m.K, e) != -1)
                throw std::invalid_argument("model '" + m.name + "': asserted exceptional class " +
                                            e.str() + " fails E^2 = K.E = -1");
            if (pairing(m.omega_ref, e) <= 0)
                throw std::invalid_argument("model '" + m.name + "': asserted exceptional class " +
                                            e.str() + " has non-positive omega-area");
        }
    }
}

} // namespace

ManifoldModel ManifoldModel::rational(int n) {
    if (n < 0) throw std::invalid_argument("rational(n): n must be >= 0");
    ManifoldModel m;
    m.kind = Kind::Rational;
    m.n = n;
    m.name = n == 0 ? "CP2" : "CP2#" + std::to_string(n);
    std::vector<i64> d(static_cast<size_t>(1 + n), -1);
    d[0] = 1;
    m.lattice = IntersectionLattice::create(m.name, diag_gram(d), numbered_labels({"H"}, "E", n));
    std::vector<i64> k(static_cast<size_t>(1 + n), 1);
    k[0] = -3;
    m.K = HomologyClass(m.lattice, k);
    m.b1 = 0;
    std::vector<i64> w(static_cast<size_t>(1 + n), -1);
    w[0] = n + 1;
    m.omega_ref = HomologyClass(m.lattice, w);
    m.flags = {n == 0, MinimalModelKind::rational, 1, false};
    validate_model(m);
    return m;
}

ManifoldModel ManifoldModel::ruled_trivial(int h, int n) {
    if (h < 1) throw std::invalid_argument("ruled_trivial(h, n): base genus h must be >= 1");
    if (n < 0) throw std::invalid_argument("ruled_trivial(h, n): n must be >= 0");
    ManifoldModel m;
    m.kind = Kind::RuledTrivial;
    m.h = h;
    m.n = n;
    m.name = "Sigma" + std::to_string(h) + "xS2" + (n ? "#" + std::to_string(n) : "");
    m.lattice = IntersectionLattice::create(m.name, ruled_gram(n),
                                            numbered_labels({"sigma", "f"}, "e", n));
    std::vector<i64> k(static_cast<size_t>(2 + n), 1);
    k[0] = -2;
    k[1] = 2 * h - 2;
    m.K = HomologyClass(m.lattice, k);
    m.b1 = 2 * h;
    std::vector<i64> w(static_cast<size_t>(2 + n), -1);
    w[0] = w[1] = n + 1;
    m.omega_ref = HomologyClass(m.lattice, w);
    m.flags = {n == 0, MinimalModelKind::ruled, 1, false};
    validate_model(m);
    return m;
}

ManifoldModel ManifoldModel::ruled_twisted(int h, int n) {
    if (h < 1) throw std::invalid_argument("ruled_twisted(h, n): base genus h must be >= 1");
    if (n < 0) throw std::invalid_argument("ruled_twisted(h, n): n must be >= 0");
    if (n > 0) {
        // blown-up twisted and trivial bundles are diffeomorphic; keep one
        // lattice presentation per diffeomorphism type
        ManifoldModel m = ruled_trivial(h, n);
        m.note = "twisted bundle with n > 0 normalized to the blown-up trivial presentation";
        return m;
    }
    ManifoldModel m;
    m.kind = Kind::RuledTwisted;
    m.h = h;
    m.n = 0;
    m.name = "Sigma" + std::to_string(h) + "~xS2";
    m.lattice = IntersectionLattice::create(m.name, diag_gram({1, -1}), {"s+", "s-"});
    m.K = HomologyClass(m.lattice, {2 * h - 3, -(2 * h - 1)});
    m.b1 = 2 * h;
    // both sections carry positive area and the fiber has area 1
    m.omega_ref = HomologyClass(m.lattice, {2, -1});
    m.flags = {true, MinimalModelKind::ruled, 1, false};
    validate_model(m);
    return m;
}

ManifoldModel ManifoldModel::s2xs2(int n) {
    if (n < 0) throw std::invalid_argument("s2xs2(n): n must be >= 0");
    ManifoldModel m;
    m.kind = Kind::S2xS2;
    m.n = n;
    m.name = "S2xS2" + std::string(n ? "#" + std::to_string(n) : "");
    m.lattice = IntersectionLattice::create(m.name, ruled_gram(n),
                                            numbered_labels({"sigma", "f"}, "e", n));
    std::vector<i64> k(static_cast<size_t>(2 + n), 1);
    k[0] = k[1] = -2;
    m.K = HomologyClass(m.lattice, k);
    m.b1 = 0;
    std::vector<i64> w(static_cast<size_t>(2 + n), -1);
    w[0] = w[1] = n + 1;
    m.omega_ref = HomologyClass(m.lattice, w);
    m.flags = {n == 0, MinimalModelKind::rational, 1, false};
    validate_model(m);
    return m;
}

ManifoldModel ManifoldModel::general(std::string name, LatticePtr lattice, HomologyClass K,
                                     int b1, HomologyClass omega_ref, ModelFlags flags) {
    ManifoldModel m;
    m.kind = Kind::General;
    m.name = std::move(name);
    m.lattice = std::move(lattice);
    m.K = std::move(K);
    m.b1 = b1;
    m.omega_ref = std::move(omega_ref);
    m.flags = flags;
    validate_model(m);
    return m;
}

HomologyClass ManifoldModel::fiber_class() const {
    switch (kind) {
        case Kind::RuledTrivial:
        case Kind::S2xS2: {
            std::vector<i64> c(static_cast<size_t>(lattice->rank), 0);
            c[1] = 1;
            return HomologyClass(lattice, c);
        }
        case Kind::RuledTwisted:
            return HomologyClass(lattice, {1, -1});
        default:
            throw std::invalid_argument("model '" + name + "' has no ruling fiber class");
    }
}

ManifoldModel blow_up(const ManifoldModel& m) {
    switch (m.kind) {
        case Kind::Rational: return ManifoldModel::rational(m.n + 1);
        case Kind::RuledTrivial: return ManifoldModel::ruled_trivial(m.h, m.n + 1);
        case Kind::RuledTwisted: return ManifoldModel::ruled_trivial(m.h, 1);
        case Kind::S2xS2: return ManifoldModel::s2xs2(m.n + 1);
        case Kind::General: {
            ManifoldModel out = m;
            int r = m.lattice->rank;
            auto gram = m.lattice->gram;
            for (auto& row : gram) row.push_back(0);
            gram.emplace_back(static_cast<size_t>(r + 1), 0);
            gram.back().back() = -1;
            auto labels = m.lattice->labels;
            std::string stem = "Eb";
            int idx = 1;
            while (std::find(labels.begin(), labels.end(), stem + std::to_string(idx)) != labels.end())
                ++idx;
            labels.push_back(stem + std::to_string(idx));
            out.name = m.name + "#1";
            out.lattice = IntersectionLattice::create(out.name, gram, labels);
            auto extend = [&](const HomologyClass& c, i64 last) {
                auto v = c.coeffs();
                v.push_back(last);
                return HomologyClass(out.lattice, v);
            };
            out.K = extend(m.K, 1);
            // 2*omega - E keeps positive square and pairs +1 with the new class
            out.omega_ref = extend(m.omega_ref * 2, -1);
            out.flags.minimal = false;
            if (m.asserted_chern)
                out.asserted_chern = Chern{m.asserted_chern->c1_sq - 1, m.asserted_chern->c2 + 1};
            if (m.known_exceptionals) {
                // asserted list carries over, plus the new exceptional divisor
                std::vector<HomologyClass> exc;
                for (const auto& e : *m.known_exceptionals) exc.push_back(extend(e, 0));
                exc.push_back(HomologyClass::basis(out.lattice, r));
                out.known_exceptionals = std::move(exc);
            } else if (m.flags.minimal) {
                // a minimal source has no exceptional classes, so the blowup's
                // set is exactly the new divisor
                out.known_exceptionals = std::vector<HomologyClass>{HomologyClass::basis(out.lattice, r)};
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

ManifoldModel s2xs2_as_rational(const ManifoldModel& m) {
    if (m.kind != Kind::S2xS2 || m.n < 1)
        throw std::invalid_argument("only blown-up S2xS2 models re-express as rational models");
    ManifoldModel out = ManifoldModel::rational(m.n + 1);
    out.note = "re-expressed from " + m.name +
               " via sigma -> H-E1, f -> H-E2, e1 -> H-E1-E2, e_i -> E_{i+1}";
    return out;
}

HomologyClass s2xs2_class_to_rational(const ManifoldModel& src, const ManifoldModel& dst,
                                      const HomologyClass& a) {
    if (src.kind != Kind::S2xS2 || src.n < 1 || dst.kind != Kind::Rational ||
        dst.n != src.n + 1)
        throw std::invalid_argument("class map needs a blown-up S2xS2 and its rational re-expression");
    const auto& c = a.coeffs();
    std::vector<i64> out(static_cast<size_t>(dst.lattice->rank), 0);
    // sigma -> H - E1, f -> H - E2, e1 -> H - E1 - E2, e_i -> E_{i+1} (i >= 2)
    out[0] = checked_add(checked_add(c[0], c[1]), c.size() > 2 ? c[2] : 0);
    out[1] = checked_neg(checked_add(c[0], c.size() > 2 ? c[2] : 0));
    out[2] = checked_neg(checked_add(c[1], c.size() > 2 ? c[2] : 0));
    for (size_t i = 3; i < c.size(); ++i) out[i] = c[i];
    return HomologyClass(dst.lattice, out);
}

Chern chern_numbers(const ManifoldModel& m) {
    if (m.asserted_chern) return *m.asserted_chern;
    if (!m.lattice_is_full_h2)
        throw std::invalid_argument("model '" + m.name +
                                    "': cannot derive Chern numbers from a partial lattice");
    return Chern{square(m.K), 2 - 2 * static_cast<i64>(m.b1) + m.lattice->rank};
}

bool noether_check(i64 a, i64 b) {
    i64 s = checked_add(a, b);
    return ((s % 12) + 12) % 12 == 0;
}

SurfaceInModel make_surface(const ManifoldModel& m, HomologyClass cls, int genus,
                            bool symplectic, std::string name) {
    if (!cls.lattice()->compatible_with(*m.lattice))
        throw std::invalid_argument("surface '" + name + "' does not live in model '" + m.name + "'");
    Rat g = adjunction_genus(m.K, cls);
    if (!g.is_integer() || g.num() != genus)
        throw std::invalid_argument("surface '" + name + "' in '" + m.name + "': adjunction genus of " +
                                    cls.str() + " is " + g.str() + ", stored genus is " +
                                    std::to_string(genus));
    if (genus < 0)
        throw std::invalid_argument("surface '" + name + "': negative genus");
    if (symplectic && pairing(m.omega_ref, cls) <= 0)
        throw std::invalid_argument("surface '" + name + "' in '" + m.name +
                                    "': symplectic surface must have positive omega-area, got " +
                                    std::to_string(pairing(m.omega_ref, cls)));
    return SurfaceInModel{std::move(cls), genus, symplectic, std::move(name)};
}

int surface_genus(const ManifoldModel& m, const HomologyClass& cls) {
    Rat g = adjunction_genus(m.K, cls);
    if (!g.is_integer())
        throw std::invalid_argument("class " + cls.str() + " in '" + m.name +
                                    "' has non-integer adjunction genus " + g.str());
    return static_cast<int>(g.num());
}

bool detect_ruled_section(const ManifoldModel& m, const SurfaceInModel& F) {
    if (F.genus <= 0)
        throw std::invalid_argument("detect_ruled_section needs a surface of positive genus");
    if (!m.is_irrational_ruled_minimal()) return false; // S2xS2: sections have genus 0
    if (m.h != F.genus) return false;
    return pairing(F.cls, m.fiber_class()) == 1;
}

} // namespace symsum
