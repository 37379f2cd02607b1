#include "symsum/sum.hpp"

#include "symsum/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symsum {

const char* minimality_verdict_name(MinimalityVerdict v) {
    switch (v) {
        case MinimalityVerdict::not_minimal_case_i: return "not_minimal_case_i";
        case MinimalityVerdict::conditional_case_ii: return "conditional_case_ii";
        case MinimalityVerdict::minimal_case_iii: return "minimal_case_iii";
    }
    return "?";
}

SumDescriptor make_sum(SumSide side1, SumSide side2) {
    SumDescriptor s{std::move(side1), std::move(side2), 0};
    s.genus = s.side1.surface.genus;
    return s;
}

SumValidation validate_sum(const SumDescriptor& s) {
    SumValidation v;
    if (s.side1.surface.genus != s.side2.surface.genus)
        v.violations.push_back("genus mismatch: " + std::to_string(s.side1.surface.genus) +
                               " vs " + std::to_string(s.side2.surface.genus));
    if (s.side1.surface.genus <= 0 || s.side2.surface.genus <= 0)
        v.violations.push_back("surfaces must have positive genus");
    if (s.genus != s.side1.surface.genus)
        v.violations.push_back("descriptor genus disagrees with the surfaces");
    i64 q1 = square(s.side1.surface.cls);
    i64 q2 = square(s.side2.surface.cls);
    if (checked_add(q1, q2) != 0)
        v.violations.push_back("[F1]^2 + [F2]^2 = " + std::to_string(q1) + " + " +
                               std::to_string(q2) + " != 0");
    if (!s.side1.surface.symplectic || !s.side2.surface.symplectic)
        v.violations.push_back("both surfaces must be symplectic");
    v.ok = v.violations.empty();
    return v;
}

Chern sum_chern(const SumDescriptor& s) {
    auto val = validate_sum(s);
    if (!val.ok) {
        std::string msg = "sum_chern: invalid sum:";
        for (auto& x : val.violations) msg += " " + x + ";";
        throw std::invalid_argument(msg);
    }
    i64 q1 = square(s.side1.surface.cls);
    if (q1 != 0)
        throw std::invalid_argument(
            "sum_chern: surfaces have squares " + std::to_string(q1) + " and " +
            std::to_string(-q1) +
            "; Chern additivity is only asserted along square-zero surfaces (signature "
            "additivity in the opposite-squares regime is an assumption this operation "
            "does not make)");
    Chern a = chern_numbers(s.side1.model);
    Chern b = chern_numbers(s.side2.model);
    i64 g = s.genus;
    return Chern{checked_add(checked_add(a.c1_sq, b.c1_sq), 8 * (g - 1)),
                 checked_add(checked_add(a.c2, b.c2), 4 * (g - 1))};
}

i64 can_relation(const SumDescriptor& s, const HomologyClass& A1, const HomologyClass& A2) {
    HomologyClass l1 = s.side1.model.K + s.side1.surface.cls;
    HomologyClass l2 = s.side2.model.K + s.side2.surface.cls;
    return checked_add(pairing(l1, A1), pairing(l2, A2));
}

namespace {

struct Candidate {
    std::vector<i64> coeffs;
    i64 v = 0; // <K + F, c>
    i64 d = 0; // c . F
};

// Sphere-candidate classes in the box: adjunction genus 0, square >= -1
// (components of lower square cannot contribute, by the dimension count),
// positive omega-area.
std::vector<Candidate> side_candidates(const SumSide& side, i64 bound, int jobs) {
    const auto& m = side.model;
    HomologyClass lambda = m.K + side.surface.cls;
    BoxSearch search(m.lattice, bound);
    search.add({true, m.K.coeffs(), -2, -2, "A^2 + K.A = -2"});
    search.add({true, {}, -1, SearchConstraint::kNoBound, "A^2 >= -1"});
    search.add({false, m.omega_ref.coeffs(), 1, SearchConstraint::kNoBound, "omega.A > 0"});
    std::vector<Candidate> out;
    for (auto& x : search.collect(jobs)) {
        Candidate c;
        c.v = pairing_raw(*m.lattice, lambda.coeffs(), x);
        c.d = pairing_raw(*m.lattice, side.surface.cls.coeffs(), x);
        c.coeffs = std::move(x);
        out.push_back(std::move(c));
    }
    return out;
}

struct Atom {
    size_t cand = 0;
    int mult = 1;
    std::vector<i64> coeffs;
    i64 v = 0, d = 0;
};

std::vector<Atom> make_atoms(const std::vector<Candidate>& cands, i64 bound, int max_mult) {
    std::vector<Atom> atoms;
    for (size_t i = 0; i < cands.size(); ++i) {
        for (int mult = 1; mult <= max_mult; ++mult) {
            Atom a;
            a.cand = i;
            a.mult = mult;
            a.coeffs.reserve(cands[i].coeffs.size());
            bool in_box = true;
            for (i64 c : cands[i].coeffs) {
                i64 s = checked_mul(c, mult);
                if (s < -bound || s > bound) { in_box = false; break; }
                a.coeffs.push_back(s);
            }
            if (!in_box) break;
            a.v = checked_mul(cands[i].v, mult);
            a.d = checked_mul(cands[i].d, mult);
            atoms.push_back(std::move(a));
        }
    }
    return atoms;
}

std::vector<i64> add_vecs(const std::vector<i64>& a, const std::vector<i64>& b) {
    std::vector<i64> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

bool in_box(const std::vector<i64>& a, i64 bound) {
    return std::all_of(a.begin(), a.end(), [&](i64 c) { return c >= -bound && c <= bound; });
}

} // namespace

SplittingEnumeration enumerate_can_splittings(const SumDescriptor& s, i64 coeff_bound, int jobs,
                                              SplittingCaps caps) {
    auto val = validate_sum(s);
    if (!val.ok) {
        std::string msg = "enumerate_can_splittings: invalid sum:";
        for (auto& x : val.violations) msg += " " + x + ";";
        throw std::invalid_argument(msg);
    }
    caps.coeff_bound = coeff_bound;

    SplittingEnumeration out;
    out.caps = caps;

    auto c1 = side_candidates(s.side1, coeff_bound, jobs);
    auto c2 = side_candidates(s.side2, coeff_bound, jobs);
    out.candidates_side1 = c1.size();
    out.candidates_side2 = c2.size();

    auto min_v = [](const std::vector<Candidate>& cs) {
        i64 m = 0;
        for (const auto& c : cs) m = std::min(m, c.v);
        return m;
    };
    if (min_v(c1) >= 0 && min_v(c2) >= 0) {
        // every candidate pairs >= 0 with K + F on both sides, so every
        // nonnegative combination does too and the relation never reaches -1:
        // empty for combinations of arbitrary size
        out.certified_empty = true;
        out.note = "every sphere candidate pairs >= 0 with K + F on both sides";
        return out;
    }

    auto atoms1 = make_atoms(c1, coeff_bound, caps.max_mult);
    auto atoms2 = make_atoms(c2, coeff_bound, caps.max_mult);

    const auto& lat1 = s.side1.model.lattice;
    const auto& lat2 = s.side2.model.lattice;
    std::vector<i64> zero1(static_cast<size_t>(lat1->rank), 0);
    std::vector<i64> zero2(static_cast<size_t>(lat2->rank), 0);

    // raw (A1, A2, d) triples; deduplicated and sorted below
    std::vector<std::tuple<std::vector<i64>, std::vector<i64>, i64>> raw;
    const size_t hard_cap = 200000;
    bool overflowed = false;
    auto emit = [&](const std::vector<i64>& a1, const std::vector<i64>& a2, i64 d) {
        if (raw.size() >= hard_cap) { overflowed = true; return; }
        raw.emplace_back(a1, a2, d);
    };

    // bucket atoms of side 2 by (v, d) for joins
    std::map<std::pair<i64, i64>, std::vector<size_t>> bucket2;
    for (size_t j = 0; j < atoms2.size(); ++j)
        bucket2[{atoms2[j].v, atoms2[j].d}].push_back(j);
    std::map<std::pair<i64, i64>, std::vector<size_t>> bucket1;
    for (size_t j = 0; j < atoms1.size(); ++j)
        bucket1[{atoms1[j].v, atoms1[j].d}].push_back(j);

    // one atom on one side, empty curve on the other (d = 0 forced)
    if (caps.max_atoms >= 1) {
        for (const auto& a : atoms1)
            if (a.v == -1 && a.d == 0) emit(a.coeffs, zero2, 0);
        for (const auto& a : atoms2)
            if (a.v == -1 && a.d == 0) emit(zero1, a.coeffs, 0);
    }
    if (caps.max_atoms >= 2) {
        // one atom on each side: v1 + v2 = -1, d1 = d2 >= 0
        for (const auto& a : atoms1) {
            if (a.d < 0) continue;
            auto it = bucket2.find({-1 - a.v, a.d});
            if (it == bucket2.end()) continue;
            for (size_t j : it->second) emit(a.coeffs, atoms2[j].coeffs, a.d);
        }
        // two atoms on one side (distinct candidates), empty on the other;
        // exactly one of the two has negative pairing, so anchor there
        auto two_same_side = [&](const std::vector<Atom>& atoms,
                                 std::map<std::pair<i64, i64>, std::vector<size_t>>& bucket,
                                 bool side1) {
            for (size_t i = 0; i < atoms.size(); ++i) {
                if (atoms[i].v >= 0) continue;
                auto it = bucket.find({-1 - atoms[i].v, -atoms[i].d});
                if (it == bucket.end()) continue;
                for (size_t j : it->second) {
                    // distinct candidates only: equal ones are higher multiples,
                    // covered by the multiplicity atoms.  Exactly one atom of a
                    // pair summing to -1 is negative, so anchoring there cannot
                    // emit an unordered pair twice.
                    if (atoms[j].cand == atoms[i].cand) continue;
                    auto sum = add_vecs(atoms[i].coeffs, atoms[j].coeffs);
                    if (!in_box(sum, coeff_bound)) continue;
                    if (side1) emit(sum, zero2, 0);
                    else emit(zero1, sum, 0);
                }
            }
        };
        two_same_side(atoms1, bucket1, true);
        two_same_side(atoms2, bucket2, false);
    }

    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (static_cast<int>(raw.size()) > caps.max_results || overflowed) {
        out.truncated = true;
        if (static_cast<int>(raw.size()) > caps.max_results)
            raw.resize(static_cast<size_t>(caps.max_results));
    }
    for (auto& [a1, a2, d] : raw)
        out.splittings.push_back(
            {HomologyClass(lat1, std::move(a1)), HomologyClass(lat2, std::move(a2)), d});
    out.note = "bounded enumeration: atoms <= " + std::to_string(caps.max_atoms) +
               ", multiplicity <= " + std::to_string(caps.max_mult) + ", box " +
               std::to_string(coeff_bound);
    return out;
}

namespace {

// Minimality of a model from its flags/blowup bookkeeping, for the case (ii)
// resolution.  nullopt = not decidable from the asserted data.
std::optional<bool> model_minimal(const ManifoldModel& m, std::string& how) {
    switch (m.kind) {
        case Kind::Rational:
        case Kind::RuledTrivial:
        case Kind::S2xS2:
            how = m.n == 0 ? "built-in minimal model (n = 0)"
                           : "built-in blowup (n = " + std::to_string(m.n) + " > 0)";
            return m.n == 0;
        case Kind::RuledTwisted:
            how = "minimal twisted bundle";
            return true;
        case Kind::General:
            if (m.flags.minimal) {
                how = "asserted minimal flag";
                return true;
            }
            if (m.known_exceptionals) {
                how = m.known_exceptionals->empty()
                          ? "asserted exceptional list is empty"
                          : "asserted exceptional list is nonempty (" +
                                std::to_string(m.known_exceptionals->size()) + " classes)";
                return m.known_exceptionals->empty();
            }
            how = "no minimality assertion available";
            return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

MinimalityDecision decide_minimality(const SumDescriptor& s, i64 degree_bound, int jobs) {
    auto val = validate_sum(s);
    if (!val.ok) {
        std::string msg = "decide_minimality: invalid sum:";
        for (auto& x : val.violations) msg += " " + x + ";";
        throw std::invalid_argument(msg);
    }

    MinimalityDecision dec;
    dec.degree_bound = degree_bound;

    // case (i): an exceptional sphere disjoint from the gluing surface
    const SumSide* sides[2] = {&s.side1, &s.side2};
    for (int i = 0; i < 2; ++i) {
        MeetsAllResult ma = meets_all_exceptional(sides[i]->model, sides[i]->surface,
                                                  degree_bound, jobs);
        for (auto& a : ma.assumptions) dec.assumptions.push_back(a);
        if (ma.verdict == MeetsAllVerdict::no) {
            if (ma.witness_pairing < 0)
                throw std::invalid_argument(
                    "side " + std::to_string(i + 1) + ": surface '" + sides[i]->surface.name +
                    "' pairs negatively (" + std::to_string(ma.witness_pairing) +
                    ") with the exceptional class " + ma.witness->str() +
                    ": positivity of intersections fails, inconsistent input");
            dec.verdict = MinimalityVerdict::not_minimal_case_i;
            dec.witness_side = i + 1;
            dec.witness = ma.witness;
            return dec;
        }
        if (ma.verdict == MeetsAllVerdict::yes_bounded)
            dec.assumptions.push_back("side " + std::to_string(i + 1) +
                                      ": exceptional search bounded by degree " +
                                      std::to_string(degree_bound));
    }

    // case (ii): a ruled surface with the gluing surface as a section
    for (int i = 0; i < 2; ++i) {
        if (!detect_ruled_section(sides[i]->model, sides[i]->surface)) continue;
        dec.verdict = MinimalityVerdict::conditional_case_ii;
        dec.ruled_side = i + 1;
        const ManifoldModel& other = sides[1 - i]->model;
        std::string how;
        dec.resolved_minimal = model_minimal(other, how);
        dec.resolution = "Z minimal iff '" + other.name + "' is minimal: " + how;
        dec.assumptions.push_back(
            "summing with a ruled surface along a section re-glues a neighborhood of the "
            "other surface; exceptional spheres cap off through fiber discs (pairwise sum "
            "construction)");
        return dec;
    }

    // case (iii): both surfaces certify rationally K-nef
    KnefCertificate cert1 = is_rationally_knef(sides[0]->model, sides[0]->surface, degree_bound, jobs);
    KnefCertificate cert2 = is_rationally_knef(sides[1]->model, sides[1]->surface, degree_bound, jobs);
    if (cert1.verdict != KnefVerdict::knef || cert2.verdict != KnefVerdict::knef)
        throw std::logic_error(
            "decide_minimality: case analysis coverage violated: after the case (i)/(ii) "
            "filters both surfaces must certify K-nef, got '" +
            std::string(knef_verdict_name(cert1.verdict)) + "' / '" +
            knef_verdict_name(cert2.verdict) + "'");
    dec.verdict = MinimalityVerdict::minimal_case_iii;
    dec.cert1 = std::move(cert1);
    dec.cert2 = std::move(cert2);
    return dec;
}

LefschetzReport lefschetz_fiber_sum_minimal(const FibrationDescriptor& f1,
                                            const FibrationDescriptor& f2) {
    std::vector<std::string> failures;
    if (f1.fiber_genus != f2.fiber_genus)
        failures.push_back("fiber genera differ (" + std::to_string(f1.fiber_genus) + " vs " +
                           std::to_string(f2.fiber_genus) + ")");
    if (f1.fiber_genus <= 0 || f2.fiber_genus <= 0)
        failures.push_back("fiber genus must be positive");
    if (!f1.relatively_minimal) failures.push_back("first fibration is not relatively minimal");
    if (!f2.relatively_minimal) failures.push_back("second fibration is not relatively minimal");
    if (f1.is_trivial_projection)
        failures.push_back("first fibration is the trivial projection Sigma_g x S^2 -> S^2");
    if (f2.is_trivial_projection)
        failures.push_back("second fibration is the trivial projection Sigma_g x S^2 -> S^2");
    if (!failures.empty()) {
        std::string msg = "lefschetz_fiber_sum_minimal: hypotheses fail:";
        for (auto& f : failures) msg += " " + f + ";";
        throw std::invalid_argument(msg);
    }
    LefschetzReport r;
    r.minimal = true;
    r.reasons.push_back(
        "relative minimality: every (-1)-sphere maps onto the base with positive degree, "
        "so fibers meet it");
    r.reasons.push_back(
        "a ruling with the fiber as a section would identify the fibration with the "
        "trivial projection, which is excluded");
    return r;
}

} // namespace symsum
