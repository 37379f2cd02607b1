#include "symsum/geography.hpp"

#include "symsum/presets.hpp"

#include <sstream>

namespace symsum {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("building block verification failed: " + what);
}

HomologyClass cls(const ManifoldModel& m, std::vector<i64> v) {
    return HomologyClass(m.lattice, std::move(v));
}

BuildingBlock make_p1(i64 degree_bound, int jobs) {
    BuildingBlock b;
    b.name = "P1";
    ManifoldModel m = ManifoldModel::rational(13);
    std::vector<i64> f(14, -1);
    f[0] = 4;
    f[1] = -2;
    HomologyClass F = cls(m, f);
    require(square(F) == 0, "P1 surface square");
    b.surface = make_surface(m, F, 2, true, "F");
    b.chern = chern_numbers(m);
    require(b.chern == Chern{-4, 16}, "P1 Chern pair");
    // F = c1 + [strict transform of a line through the first point],
    // so F meets every exceptional sphere; verified on the enumerated set
    ExceptionalSet es = enumerate_exceptional(m, degree_bound, jobs);
    for (const auto& e : es.classes)
        require(pairing(F, e) >= 1, "P1 surface must meet " + e.str());
    b.notes.push_back("quartic with one double point, blown up at the node and 12 points");
    b.model = std::move(m);
    return b;
}

BuildingBlock make_p2(i64 degree_bound, int jobs) {
    BuildingBlock b;
    b.name = "P2";
    ManifoldModel m = ManifoldModel::rational(12);
    std::vector<i64> f(13, -1);
    f[0] = 6;
    for (int i = 1; i <= 8; ++i) f[static_cast<size_t>(i)] = -2;
    HomologyClass F = cls(m, f);
    require(square(F) == 0, "P2 surface square");
    b.surface = make_surface(m, F, 2, true, "F");
    b.chern = chern_numbers(m);
    require(b.chern == Chern{-3, 15}, "P2 Chern pair");
    // PD[F] - c1 = F + K is the cubic through the eight nodes: it pairs >= 0
    // with every exceptional class, hence F meets them all
    HomologyClass cubic = F + m.K;
    ExceptionalSet es = enumerate_exceptional(m, degree_bound, jobs);
    for (const auto& e : es.classes) {
        require(pairing(cubic, e) >= 0, "P2: (F + K) . " + e.str() + " >= 0");
        require(pairing(F, e) >= 1, "P2 surface must meet " + e.str());
    }
    b.notes.push_back("sextic with eight double points, blown up at the nodes and 4 points");
    b.model = std::move(m);
    return b;
}

BuildingBlock make_q1() {
    BuildingBlock b;
    b.name = "Q1";
    ManifoldModel m = presets::t4_blowup(2);
    // resolved T1 + T2 blown up twice
    std::vector<i64> f(8, 0);
    f[0] = f[1] = 1;
    f[6] = f[7] = -1;
    HomologyClass F = cls(m, f);
    require(square(F) == 0, "Q1 surface square");
    b.surface = make_surface(m, F, 2, true, "F");
    b.chern = chern_numbers(m);
    require(b.chern == Chern{-2, 2}, "Q1 Chern pair");
    require(m.known_exceptionals && m.known_exceptionals->size() == 2,
            "Q1 exceptional set is the two divisors");
    for (const auto& e : *m.known_exceptionals)
        require(pairing(F, e) == 1, "Q1 surface meets " + e.str());
    b.notes.push_back("aspherical minimal model: the two exceptional divisors are the only "
                      "(-1)-sphere classes, and both meet F");
    b.model = std::move(m);
    return b;
}

BuildingBlock make_cp2_8(i64 degree_bound, int jobs) {
    BuildingBlock b;
    b.name = "CP2_8";
    ManifoldModel m = ManifoldModel::rational(8);
    std::vector<i64> f(9, -1);
    f[0] = 3;
    HomologyClass F = cls(m, f);
    require(square(F) == 1, "CP2_8 surface square");
    require(F == m.K * -1, "CP2_8 surface is dual to c1");
    b.surface = make_surface(m, F, 1, true, "F");
    b.chern = chern_numbers(m);
    require(b.chern == Chern{1, 11}, "CP2_8 Chern pair");
    ExceptionalSet es = enumerate_exceptional(m, degree_bound, jobs);
    require(es.complete, "CP2_8 exceptional set is finite and exhausted");
    for (const auto& e : es.classes)
        require(pairing(F, e) == 1, "anticanonical pairing with " + e.str());
    b.model = std::move(m);
    return b;
}

BuildingBlock make_m_g() {
    BuildingBlock b;
    b.name = "M_G";
    ManifoldModel m = presets::m_g_like();
    b.surface = make_surface(m, HomologyClass::basis(m.lattice, 0), 1, true, "T");
    require(square(b.surface->cls) == 0, "M_G torus square");
    b.chern = chern_numbers(m);
    b.is_abstract = true;
    b.notes.push_back("abstract record: spin with prescribed fundamental group; spin forces "
                      "minimality; c2 = 24 chosen as the least spin-admissible positive value");
    b.model = std::move(m);
    return b;
}

BuildingBlock make_q2() {
    BuildingBlock b;
    b.name = "Q2";
    ManifoldModel m = presets::q2_like();
    b.surface = make_surface(m, HomologyClass::basis(m.lattice, 0), 2, true, "F");
    require(square(b.surface->cls) == 0, "Q2 surface square");
    b.chern = chern_numbers(m);
    require(b.chern == Chern{0, 0}, "Q2 Chern pair");
    b.is_abstract = true;
    b.notes.push_back("abstract record: chi = 0 by bundle multiplicativity with signature 0 "
                      "input (derived, flagged)");
    b.model = std::move(m);
    return b;
}

BuildingBlock make_s11(i64 degree_bound, int jobs) {
    BuildingBlock b;
    b.name = "S11";
    ChainReport rep = verify_chain(s11_stages(), degree_bound, jobs);
    require(rep.all_minimal, "S11 chain stages must all be minimal");
    require(rep.stages.size() == 2, "S11 chain has two stages");
    b.chern = rep.final_chern;
    require(noether_check(b.chern.c1_sq, b.chern.c2), "S11 Noether congruence");
    b.is_abstract = true;
    b.notes.push_back("built by two certified-minimal sums; c1^2 fold assumes signature "
                      "additivity across the (-9)/(+9) gluings");
    for (auto& n : rep.notes) b.notes.push_back(n);
    return b;
}

} // namespace

std::vector<BuildingBlock> building_blocks(i64 degree_bound, int jobs) {
    std::vector<BuildingBlock> blocks;
    blocks.push_back(make_m_g());
    blocks.push_back(make_p1(degree_bound, jobs));
    blocks.push_back(make_p2(degree_bound, jobs));
    blocks.push_back(make_q1());
    blocks.push_back(make_q2());
    blocks.push_back(make_s11(degree_bound, jobs));
    blocks.push_back(make_cp2_8(degree_bound, jobs));
    for (const auto& b : blocks)
        require(noether_check(b.chern.c1_sq, b.chern.c2),
                b.name + " fails the Noether congruence");
    return blocks;
}

bool realizable(i64 a, i64 b, i64 r) {
    if (!noether_check(a, b)) return false;
    return a >= 0 && a <= 2 * (b - r);
}

std::vector<std::pair<i64, i64>> enumerate_region(i64 a_lo, i64 a_hi, i64 b_lo, i64 b_hi, i64 r) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 a = a_lo; a <= a_hi; ++a)
        for (i64 b = b_lo; b <= b_hi; ++b)
            if (realizable(a, b, r)) out.emplace_back(a, b);
    return out;
}

ChainReport verify_chain(const std::vector<ChainStage>& stages, i64 degree_bound, int jobs) {
    if (stages.empty()) throw std::invalid_argument("verify_chain: no stages");
    ChainReport rep;
    bool have_fold = false;
    Chern fold{};
    bool prev_euler_positive = false;

    for (size_t k = 0; k < stages.size(); ++k) {
        const ChainStage& st = stages[k];
        auto val = validate_sum(st.sum);
        if (!val.ok) {
            std::string msg = "verify_chain: stage " + std::to_string(k + 1) + " invalid:";
            for (auto& x : val.violations) msg += " " + x + ";";
            throw std::invalid_argument(msg);
        }

        ChainStageReport sr;
        Chern side1 = chern_numbers(st.sum.side1.model);
        if (have_fold) {
            // the supplied accumulated model must match the folded invariants
            Chern expect{fold.c1_sq - st.interstage_blowups, fold.c2 + st.interstage_blowups};
            if (!(side1 == expect))
                throw std::invalid_argument(
                    "verify_chain: stage " + std::to_string(k + 1) +
                    " mismatch: accumulated side asserts (c1^2, c2) = (" +
                    std::to_string(side1.c1_sq) + ", " + std::to_string(side1.c2) +
                    ") but the fold gives (" + std::to_string(expect.c1_sq) + ", " +
                    std::to_string(expect.c2) + ")");
            if (prev_euler_positive)
                sr.assumptions.push_back(
                    "previous stage has c2 > 0: the accumulated sum is not ruled over a "
                    "positive-genus base, so the section alternative cannot trigger");
        }

        sr.decision = decide_minimality(st.sum, degree_bound, jobs);

        Chern side2 = chern_numbers(st.sum.side2.model);
        i64 g = st.sum.genus;
        i64 q = square(st.sum.side1.surface.cls);
        Chern next{checked_add(checked_add(side1.c1_sq, side2.c1_sq), 8 * (g - 1)),
                   checked_add(checked_add(side1.c2, side2.c2), 4 * (g - 1))};
        if (q == 0) {
            // cross-check against the square-zero formula
            Chern direct = sum_chern(st.sum);
            if (!(direct == next))
                throw std::logic_error("verify_chain: fold disagrees with sum_chern");
        } else {
            sr.chern_c1_exact = false;
            sr.assumptions.push_back(
                "c1^2 fold across squares " + std::to_string(q) + "/" + std::to_string(-q) +
                " assumes signature additivity of the sum (c2 fold is exact Euler "
                "additivity)");
        }
        fold = next;
        have_fold = true;
        sr.folded = fold;
        sr.euler_positive = fold.c2 > 0;
        prev_euler_positive = sr.euler_positive;

        bool minimal_here =
            sr.decision.verdict == MinimalityVerdict::minimal_case_iii ||
            (sr.decision.verdict == MinimalityVerdict::conditional_case_ii &&
             sr.decision.resolved_minimal.value_or(false));
        rep.stages.push_back(std::move(sr));
        if (!minimal_here) {
            rep.all_minimal = false;
            rep.final_chern = fold;
            rep.notes.push_back("chain stopped at stage " + std::to_string(k + 1) +
                                ": verdict " +
                                minimality_verdict_name(rep.stages.back().decision.verdict));
            return rep;
        }
    }
    rep.all_minimal = true;
    rep.final_chern = fold;
    for (const auto& sr : rep.stages)
        if (!sr.chern_c1_exact) {
            rep.notes.push_back("final c1^2 assumes signature additivity at the nonzero-square "
                                "stages");
            break;
        }
    return rep;
}

std::vector<ChainStage> s11_stages() {
    std::vector<ChainStage> stages;

    // stage 1: T4 blown up at the intersection point of T1, T2 and at 8 more
    // points of T1, summed with CP2 along (strict transform of T1) = cubic
    ManifoldModel t4 = presets::t4_blowup(9);
    std::vector<i64> f1(15, -1);
    for (int i = 0; i < 6; ++i) f1[static_cast<size_t>(i)] = 0;
    f1[0] = 1; // u1 - E1 - ... - E9
    HomologyClass F1(t4.lattice, f1);
    SumSide s1{t4, make_surface(t4, F1, 1, true, "T1'")};

    ManifoldModel cp2 = ManifoldModel::rational(0);
    SumSide s2{cp2, make_surface(cp2, HomologyClass(cp2.lattice, {3}), 1, true, "cubic")};
    stages.push_back({make_sum(s1, s2), 0});

    // between stages: 8 more blowups on the strict transform of T2 inside
    // the (never materialized) stage-1 sum.  The accumulated side is the
    // asserted working model: t is the class of T2' (square -1 in the sum),
    // p a positive generator, e1..e8 the new divisors.
    std::vector<std::vector<i64>> gram(10, std::vector<i64>(10, 0));
    gram[0][0] = 1;
    for (int i = 1; i < 10; ++i) gram[static_cast<size_t>(i)][static_cast<size_t>(i)] = -1;
    auto lat = IntersectionLattice::create(
        "S11-stage2-acc", gram, {"p", "t", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"});
    std::vector<i64> kv{1, -1, 1, 1, 1, 1, 1, 1, 1, 1};
    std::vector<i64> wv{10, -9, -1, -1, -1, -1, -1, -1, -1, -1};
    ModelFlags flags{false, MinimalModelKind::neither, 3, false};
    ManifoldModel acc = ManifoldModel::general("Z1#8", lat, HomologyClass(lat, kv), 2,
                                               HomologyClass(lat, wv), flags);
    acc.lattice_is_full_h2 = false;
    acc.asserted_chern = Chern{-8, 20};
    std::vector<HomologyClass> exc;
    for (int i = 2; i < 10; ++i) exc.push_back(HomologyClass::basis(lat, i));
    acc.known_exceptionals = std::move(exc);
    acc.note = "stage-1 sum is minimal and has b+ > 1, so the new divisors are the only "
               "exceptional classes";

    std::vector<i64> f2v{0, 1, -1, -1, -1, -1, -1, -1, -1, -1}; // t - e1 - ... - e8
    SumSide s3{acc, make_surface(acc, HomologyClass(lat, f2v), 1, true, "T2'")};
    ManifoldModel cp2b = ManifoldModel::rational(0);
    SumSide s4{cp2b, make_surface(cp2b, HomologyClass(cp2b.lattice, {3}), 1, true, "cubic")};
    stages.push_back({make_sum(s3, s4), 8});

    return stages;
}

std::vector<ChainStage> p1_selfsum_stages() {
    ManifoldModel m = ManifoldModel::rational(13);
    std::vector<i64> f(14, -1);
    f[0] = 4;
    f[1] = -2;
    SumSide a{m, make_surface(m, HomologyClass(m.lattice, f), 2, true, "F")};
    ManifoldModel m2 = ManifoldModel::rational(13);
    SumSide b{m2, make_surface(m2, HomologyClass(m2.lattice, f), 2, true, "F")};
    return {{make_sum(a, b), 0}};
}

std::vector<ChainStage> failure_demo_stages() {
    // accumulated side blown up at a point off the gluing surface: E10 is
    // disjoint from F and witnesses non-minimality of the stage sum
    ManifoldModel m1 = ManifoldModel::rational(10);
    std::vector<i64> f1(11, -1);
    f1[0] = 3;
    f1[10] = 0;
    SumSide a{m1, make_surface(m1, HomologyClass(m1.lattice, f1), 1, true, "F")};
    ManifoldModel m2 = ManifoldModel::rational(9);
    std::vector<i64> f2(10, -1);
    f2[0] = 3;
    SumSide b{m2, make_surface(m2, HomologyClass(m2.lattice, f2), 1, true, "F")};
    return {{make_sum(a, b), 0}};
}

} // namespace symsum
