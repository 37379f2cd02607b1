#include "symsum/exceptional.hpp"

#include "symsum/search.hpp"

#include <algorithm>

namespace symsum {

namespace {

ExceptionalSet enumerate_box(const ManifoldModel& m, i64 bound, int jobs) {
    BoxSearch search(m.lattice, bound);
    search.add({true, {}, -1, -1, "A^2 = -1"});
    search.add({false, m.K.coeffs(), -1, -1, "K.A = -1"});
    search.add({false, m.omega_ref.coeffs(), 1, SearchConstraint::kNoBound, "omega.A > 0"});
    ExceptionalSet out;
    out.bound = bound;
    for (auto& v : search.collect(jobs)) out.classes.emplace_back(m.lattice, std::move(v));
    return out;
}

} // namespace

ExceptionalSet enumerate_exceptional(const ManifoldModel& m, i64 degree_bound, int jobs,
                                     bool include_numerical_extras) {
    if (degree_bound < 1) throw std::invalid_argument("enumerate_exceptional: bound must be >= 1");
    switch (m.kind) {
        case Kind::Rational: {
            ExceptionalSet out = enumerate_box(m, degree_bound, jobs);
            // the set of exceptional classes of CP2#n is finite for n <= 8
            // and its largest degree is 6, so a bound >= 6 exhausts it
            out.complete = m.n <= 8 && degree_bound >= 6;
            if (!out.complete)
                out.note = m.n > 8 ? "infinitely many exceptional classes; box search only"
                                   : "bound below 6; box search only";
            return out;
        }
        case Kind::S2xS2: {
            if (m.n == 0) {
                ExceptionalSet out;
                out.bound = degree_bound;
                out.complete = true;
                out.note = "S2xS2 is minimal";
                return out;
            }
            // enumerate in the rational re-expression and pull the classes
            // back through H = sigma + f - e1, E1 = f - e1, E2 = sigma - e1
            ManifoldModel rat = s2xs2_as_rational(m);
            ExceptionalSet inner = enumerate_exceptional(rat, degree_bound, jobs);
            ExceptionalSet out;
            out.bound = degree_bound;
            out.complete = inner.complete;
            out.note = "enumerated via the rational re-expression " + rat.name;
            for (const auto& c : inner.classes) {
                const auto& v = c.coeffs();
                std::vector<i64> w(static_cast<size_t>(m.lattice->rank), 0);
                w[0] = checked_add(v[0], v[2]);                                  // sigma
                w[1] = checked_add(v[0], v[1]);                                  // f
                w[2] = checked_neg(checked_add(checked_add(v[0], v[1]), v[2]));  // e1
                for (size_t i = 3; i < v.size(); ++i) w[i] = v[i];
                out.classes.emplace_back(m.lattice, std::move(w));
            }
            std::sort(out.classes.begin(), out.classes.end(),
                      [](const HomologyClass& a, const HomologyClass& b) {
                          return a.coeffs() < b.coeffs();
                      });
            return out;
        }
        case Kind::RuledTrivial:
        case Kind::RuledTwisted: {
            ExceptionalSet out;
            out.bound = degree_bound;
            if (m.kind == Kind::RuledTwisted) {
                // minimal twisted bundle over positive genus: no (-1)-spheres
                out.complete = true;
                out.note = "minimal twisted bundle";
            } else {
                for (int i = 0; i < m.n; ++i) {
                    std::vector<i64> e(static_cast<size_t>(m.lattice->rank), 0);
                    e[static_cast<size_t>(2 + i)] = 1;
                    out.classes.emplace_back(m.lattice, e);          // e_i
                    std::vector<i64> fe(static_cast<size_t>(m.lattice->rank), 0);
                    fe[1] = 1;
                    fe[static_cast<size_t>(2 + i)] = -1;
                    out.classes.emplace_back(m.lattice, fe);         // f - e_i
                }
                out.complete = true;
                out.note = "fiber-cone family {e_i, f - e_i}; spheres in an irrational "
                           "ruled surface lie in fibers";
            }
            if (include_numerical_extras) {
                ExceptionalSet box = enumerate_box(m, degree_bound, jobs);
                for (auto& c : box.classes)
                    if (std::find(out.classes.begin(), out.classes.end(), c) == out.classes.end()) {
                        out.classes.push_back(c);
                        out.complete = false;
                        out.note += "; includes numerical box solutions that are not sphere classes";
                    }
            }
            std::sort(out.classes.begin(), out.classes.end(),
                      [](const HomologyClass& a, const HomologyClass& b) {
                          return a.coeffs() < b.coeffs();
                      });
            return out;
        }
        case Kind::General:
            throw std::invalid_argument("model '" + m.name +
                                        "': no enumeration basis for a general model; assert "
                                        "known_exceptionals instead");
    }
    throw std::logic_error("unreachable");
}

bool is_exceptional_cremona(const ManifoldModel& m, const HomologyClass& A) {
    if (m.kind != Kind::Rational)
        throw std::invalid_argument("Cremona recognition needs a rational model, got '" +
                                    std::string(kind_name(m.kind)) + "'");
    if (square(A) != -1 || pairing(m.K, A) != -1) return false;

    // work with (degree d; multiplicities b_i), A = d H - sum b_i E_i,
    // padded to at least three blowup slots so the quadratic move is defined
    i64 d = A.coeff(0);
    std::vector<i64> b;
    for (int i = 1; i < m.lattice->rank; ++i) b.push_back(checked_neg(A.coeff(i)));
    while (b.size() < 3) b.push_back(0);

    while (true) {
        std::sort(b.begin(), b.end(), std::greater<i64>());
        if (d < 0) return false;
        if (d == 0) {
            // must be exactly one multiplicity -1 (the class of some E_i)
            for (size_t i = 0; i + 1 < b.size(); ++i)
                if (b[i] != 0) return false;
            return b.back() == -1;
        }
        i64 s = checked_add(checked_add(b[0], b[1]), b[2]);
        if (s <= d) return false; // no reducing move available
        i64 nd = checked_sub(checked_mul(2, d), s);
        i64 b0 = checked_sub(d, checked_add(b[1], b[2]));
        i64 b1 = checked_sub(d, checked_add(b[0], b[2]));
        i64 b2 = checked_sub(d, checked_add(b[0], b[1]));
        b[0] = b0;
        b[1] = b1;
        b[2] = b2;
        d = nd;
    }
}

MeetsAllResult meets_all_exceptional(const ManifoldModel& m, const SurfaceInModel& F,
                                     i64 degree_bound, int jobs) {
    if (!F.symplectic)
        throw std::invalid_argument("meets_all_exceptional expects a symplectic surface");
    MeetsAllResult r;
    r.bound = degree_bound;

    std::vector<HomologyClass> classes;
    bool complete = false;
    if (m.kind == Kind::General) {
        if (m.known_exceptionals) {
            classes = *m.known_exceptionals;
            complete = true;
            r.assumptions.push_back("asserted exceptional list of '" + m.name +
                                    "' is complete (" + std::to_string(classes.size()) +
                                    " classes)");
        } else if (m.flags.minimal) {
            r.verdict = MeetsAllVerdict::yes_certified;
            r.assumptions.push_back("'" + m.name +
                                    "' asserted minimal: no (-1)-spheres to meet");
            return r;
        } else {
            throw std::invalid_argument(
                "model '" + m.name +
                "': a general model needs either the minimal flag or an asserted "
                "exceptional list");
        }
    } else {
        ExceptionalSet es = enumerate_exceptional(m, degree_bound, jobs);
        classes = es.classes;
        complete = es.complete;
        if (!es.note.empty()) r.note = es.note;
    }

    for (const auto& e : classes) {
        i64 p = pairing(F.cls, e);
        if (p <= 0) {
            r.verdict = MeetsAllVerdict::no;
            r.witness = e;
            r.witness_pairing = p;
            return r;
        }
    }
    r.verdict = complete ? MeetsAllVerdict::yes_certified : MeetsAllVerdict::yes_bounded;
    return r;
}

} // namespace symsum
