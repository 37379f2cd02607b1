#include "corpus.hpp"

#include "symsum/presets.hpp"

namespace symsum::corpus {

namespace {

HomologyClass cls(const ManifoldModel& m, std::vector<i64> v) {
    return HomologyClass(m.lattice, std::move(v));
}

// aH - sum of multiplicities over the first k exceptional classes
HomologyClass rational_cls(const ManifoldModel& m, i64 a, std::vector<i64> mults) {
    std::vector<i64> v(static_cast<size_t>(m.lattice->rank), 0);
    v[0] = a;
    for (size_t i = 0; i < mults.size(); ++i) v[i + 1] = -mults[i];
    return HomologyClass(m.lattice, v);
}

KnefFixture fx(std::string name, ManifoldModel m, HomologyClass F, int genus,
               KnefVerdict expected) {
    SurfaceInModel s = make_surface(m, std::move(F), genus);
    return {std::move(name), std::move(m), std::move(s), expected};
}

} // namespace

std::vector<KnefFixture> knef_fixtures() {
    std::vector<KnefFixture> v;
    const auto knef = KnefVerdict::knef;
    const auto exception = KnefVerdict::ruled_section_exception;

    // rational surfaces (light-cone case)
    {
        auto m = ManifoldModel::rational(0);
        v.push_back(fx("cp2-cubic", m, rational_cls(m, 3, {}), 1, knef));
        v.push_back(fx("cp2-quartic", m, rational_cls(m, 4, {}), 3, knef));
        v.push_back(fx("cp2-quintic", m, rational_cls(m, 5, {}), 6, knef));
        v.push_back(fx("cp2-sextic", m, rational_cls(m, 6, {}), 10, knef));
    }
    {
        auto m = ManifoldModel::rational(1);
        v.push_back(fx("cp2x1-cubic", m, rational_cls(m, 3, {1}), 1, knef));
        v.push_back(fx("cp2x1-quartic-node", m, rational_cls(m, 4, {2}), 2, knef));
    }
    {
        auto m = ManifoldModel::rational(2);
        v.push_back(fx("cp2x2-cubic", m, rational_cls(m, 3, {1, 1}), 1, knef));
    }
    {
        auto m = ManifoldModel::rational(3);
        v.push_back(fx("cp2x3-quartic", m, rational_cls(m, 4, {2, 1, 1}), 2, knef));
    }
    {
        auto m = ManifoldModel::rational(5);
        v.push_back(fx("cp2x5-quartic", m, rational_cls(m, 4, {1, 1, 1, 1, 1}), 3, knef));
    }
    {
        auto m = ManifoldModel::rational(6);
        v.push_back(fx("cubic-surface-hyperplane", m, rational_cls(m, 3, {1, 1, 1, 1, 1, 1}), 1,
                       knef));
    }
    {
        auto m = ManifoldModel::rational(8);
        v.push_back(fx("cp2x8-anticanonical", m, rational_cls(m, 3, {1, 1, 1, 1, 1, 1, 1, 1}), 1,
                       knef));
        v.push_back(fx("cp2x8-bianticanonical", m, rational_cls(m, 6, {2, 2, 2, 2, 2, 2, 2, 2}),
                       2, knef));
    }
    {
        auto m = ManifoldModel::rational(9);
        v.push_back(fx("e1-fiber", m, rational_cls(m, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1}), 1, knef));
    }
    {
        auto m = ManifoldModel::rational(12);
        v.push_back(fx("p2-surface", m,
                       rational_cls(m, 6, {2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1}), 2, knef));
    }
    {
        auto m = ManifoldModel::rational(13);
        v.push_back(fx("p1-surface", m,
                       rational_cls(m, 4, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 2, knef));
    }

    // S2xS2 (bidegree case)
    {
        auto m = ManifoldModel::s2xs2();
        auto bidegree = [&](i64 c, i64 d) { return cls(m, {c, d}); };
        v.push_back(fx("s2xs2-22", m, bidegree(2, 2), 1, knef));
        v.push_back(fx("s2xs2-23", m, bidegree(2, 3), 2, knef));
        v.push_back(fx("s2xs2-33", m, bidegree(3, 3), 4, knef));
        v.push_back(fx("s2xs2-24", m, bidegree(2, 4), 3, knef));
        v.push_back(fx("s2xs2-34", m, bidegree(3, 4), 6, knef));
        v.push_back(fx("s2xs2-25", m, bidegree(2, 5), 4, knef));
    }

    // trivial irrational ruled, minimal
    {
        auto m = ManifoldModel::ruled_trivial(1, 0);
        v.push_back(fx("t2xs2-bisection", m, cls(m, {2, 0}), 1, knef));
        v.push_back(fx("t2xs2-bisection-f", m, cls(m, {2, 1}), 2, knef));
        v.push_back(fx("t2xs2-bisection-2f", m, cls(m, {2, 2}), 3, knef));
        v.push_back(fx("t2xs2-trisection", m, cls(m, {3, 1}), 3, knef));
        v.push_back(fx("t2xs2-section", m, cls(m, {1, 0}), 1, exception));
        v.push_back(fx("t2xs2-section-f", m, cls(m, {1, 1}), 1, exception));
    }
    {
        auto m = ManifoldModel::ruled_trivial(2, 0);
        v.push_back(fx("sigma2xs2-bisection", m, cls(m, {2, 0}), 3, knef));
        v.push_back(fx("sigma2xs2-bisection-f", m, cls(m, {2, 1}), 4, knef));
        v.push_back(fx("sigma2xs2-section", m, cls(m, {1, 2}), 2, exception));
    }
    {
        auto m = ManifoldModel::ruled_trivial(3, 0);
        v.push_back(fx("sigma3xs2-bisection-f", m, cls(m, {2, 1}), 6, knef));
        v.push_back(fx("sigma3xs2-section", m, cls(m, {1, 0}), 3, exception));
    }

    // trivial irrational ruled, blown up
    {
        auto m = ManifoldModel::ruled_trivial(1, 1);
        v.push_back(fx("t2xs2x1", m, cls(m, {2, 2, -1}), 3, knef));
    }
    {
        auto m = ManifoldModel::ruled_trivial(1, 2);
        v.push_back(fx("t2xs2x2", m, cls(m, {3, 1, -1, -1}), 3, knef));
    }
    {
        auto m = ManifoldModel::ruled_trivial(2, 1);
        v.push_back(fx("sigma2xs2x1", m, cls(m, {2, 1, -1}), 4, knef));
    }
    {
        auto m = ManifoldModel::ruled_trivial(1, 3);
        v.push_back(fx("t2xs2x3", m, cls(m, {3, 2, -1, -1, -1}), 5, knef));
    }

    // twisted irrational ruled
    {
        auto m = ManifoldModel::ruled_twisted(1, 0);
        v.push_back(fx("twisted1-11", m, cls(m, {1, 1}), 1, knef));
        v.push_back(fx("twisted1-22", m, cls(m, {2, 2}), 1, knef));
        v.push_back(fx("twisted1-21", m, cls(m, {2, 1}), 2, knef));
        v.push_back(fx("twisted1-section", m, cls(m, {1, 0}), 1, exception));
    }
    {
        auto m = ManifoldModel::ruled_twisted(2, 0);
        v.push_back(fx("twisted2-20", m, cls(m, {2, 0}), 4, knef));
        v.push_back(fx("twisted2-section", m, cls(m, {1, 0}), 2, exception));
    }

    // b+ > 1 (trusted nonvanishing)
    {
        auto m = presets::t4_blowup(1);
        std::vector<i64> f(7, 0);
        f[0] = f[1] = 1;
        f[6] = -1;
        v.push_back(fx("t4x1-resolved", m, cls(m, f), 2, knef));
    }
    {
        auto m = presets::t4_blowup(2);
        std::vector<i64> f(8, 0);
        f[0] = f[1] = 1;
        f[6] = f[7] = -1;
        v.push_back(fx("q1-surface", m, cls(m, f), 2, knef));
    }
    {
        auto m = presets::t4_blowup(9);
        std::vector<i64> f(15, 0);
        f[0] = 1;
        for (int i = 6; i < 15; ++i) f[static_cast<size_t>(i)] = -1;
        v.push_back(fx("t4x9-strict-transform", m, cls(m, f), 1, knef));
    }
    {
        auto m = presets::m_g_like();
        v.push_back(fx("m_g-torus", m, HomologyClass::basis(m.lattice, 0), 1, knef));
    }
    {
        auto m = presets::q2_like();
        v.push_back(fx("q2-surface", m, HomologyClass::basis(m.lattice, 0), 2, knef));
    }
    {
        auto m = presets::t2_x_sigma2_like();
        v.push_back(fx("t2xsigma2-section", m, HomologyClass::basis(m.lattice, 1), 2, knef));
    }
    {
        auto m = presets::t4_blowup(5);
        std::vector<i64> f(11, 0);
        f[0] = f[1] = 1;
        for (int i = 6; i < 11; ++i) f[static_cast<size_t>(i)] = -1;
        v.push_back(fx("t4x5-genus2", m, cls(m, f), 2, knef));
    }

    // b+ = 1, minimal model neither rational nor ruled (trusted cone input)
    {
        auto m = presets::elliptic_like(2, "elliptic-2");
        v.push_back(fx("elliptic2-fiber", m, cls(m, {1, 0}), 1, knef));
        v.push_back(fx("elliptic2-fiber-section", m, cls(m, {1, 1}), 3, knef));
        v.push_back(fx("elliptic2-2f-section", m, cls(m, {2, 1}), 4, knef));
    }
    {
        auto m = presets::elliptic_like(4, "elliptic-4");
        v.push_back(fx("elliptic4-fiber", m, cls(m, {1, 0}), 1, knef));
    }
    {
        auto m = presets::elliptic_like(6, "elliptic-6");
        v.push_back(fx("elliptic6-fiber", m, cls(m, {1, 0}), 1, knef));
    }
    {
        auto m = blow_up(presets::elliptic_like(2, "elliptic-2"));
        v.push_back(fx("elliptic2-blowup", m, cls(m, {1, 1, -1}), 3, knef));
    }

    return v;
}

std::vector<SumFixture> sum_fixtures() {
    std::vector<SumFixture> v;

    auto e1_side = []() {
        ManifoldModel m = ManifoldModel::rational(9);
        std::vector<i64> f(10, -1);
        f[0] = 3;
        return SumSide{m, make_surface(m, HomologyClass(m.lattice, f), 1, true, "F")};
    };
    auto p1_side = []() {
        ManifoldModel m = ManifoldModel::rational(13);
        std::vector<i64> f(14, -1);
        f[0] = 4;
        f[1] = -2;
        return SumSide{m, make_surface(m, HomologyClass(m.lattice, f), 2, true, "F")};
    };

    // elliptic-surface self-sum: E(1) # E(1) = E(2)
    v.push_back({"e1-e1", make_sum(e1_side(), e1_side()), MinimalityVerdict::minimal_case_iii});
    // P1 # P1 along the genus-2 surface
    v.push_back({"p1-p1", make_sum(p1_side(), p1_side()), MinimalityVerdict::minimal_case_iii});

    // square +1 against square -1
    {
        ManifoldModel a = ManifoldModel::rational(8);
        std::vector<i64> f(9, -1);
        f[0] = 3;
        SumSide s1{a, make_surface(a, HomologyClass(a.lattice, f), 1, true, "F")};
        ManifoldModel b = blow_up(presets::elliptic_like(2, "elliptic-2"));
        SumSide s2{b, make_surface(b, HomologyClass(b.lattice, {1, 0, -1}), 1, true, "F")};
        v.push_back({"cp2x8-ellblown", make_sum(s1, s2), MinimalityVerdict::minimal_case_iii});
    }

    // S2xS2 bidegree (2,2) against a (-8)-torus in T4#8
    {
        ManifoldModel a = ManifoldModel::s2xs2();
        SumSide s1{a, make_surface(a, HomologyClass(a.lattice, {2, 2}), 1, true, "F")};
        ManifoldModel b = presets::t4_blowup(8);
        std::vector<i64> f(14, 0);
        f[0] = 1;
        for (int i = 6; i < 14; ++i) f[static_cast<size_t>(i)] = -1;
        SumSide s2{b, make_surface(b, HomologyClass(b.lattice, f), 1, true, "F")};
        v.push_back({"s2xs2-t4x8", make_sum(s1, s2), MinimalityVerdict::minimal_case_iii});
    }

    // twisted bundle against a (-3)-surface in T4#5
    {
        ManifoldModel a = ManifoldModel::ruled_twisted(1, 0);
        SumSide s1{a, make_surface(a, HomologyClass(a.lattice, {2, 1}), 2, true, "F")};
        ManifoldModel b = presets::t4_blowup(5);
        std::vector<i64> f(11, 0);
        f[0] = f[1] = 1;
        for (int i = 6; i < 11; ++i) f[static_cast<size_t>(i)] = -1;
        SumSide s2{b, make_surface(b, HomologyClass(b.lattice, f), 2, true, "F")};
        v.push_back({"twisted-t4x5", make_sum(s1, s2), MinimalityVerdict::minimal_case_iii});
    }

    // Q1 # Q2 along the genus-2 surfaces
    {
        ManifoldModel a = presets::t4_blowup(2);
        std::vector<i64> f(8, 0);
        f[0] = f[1] = 1;
        f[6] = f[7] = -1;
        SumSide s1{a, make_surface(a, HomologyClass(a.lattice, f), 2, true, "F")};
        ManifoldModel b = presets::q2_like();
        SumSide s2{b, make_surface(b, HomologyClass::basis(b.lattice, 0), 2, true, "F")};
        v.push_back({"q1-q2", make_sum(s1, s2), MinimalityVerdict::minimal_case_iii});
    }

    // P1 # Q1
    {
        ManifoldModel b = presets::t4_blowup(2);
        std::vector<i64> f(8, 0);
        f[0] = f[1] = 1;
        f[6] = f[7] = -1;
        SumSide s2{b, make_surface(b, HomologyClass(b.lattice, f), 2, true, "F")};
        v.push_back({"p1-q1", make_sum(p1_side(), s2), MinimalityVerdict::minimal_case_iii});
    }

    // ruled section against a non-minimal other side: minimal iff X2 is
    {
        ManifoldModel a = ManifoldModel::ruled_trivial(1, 0);
        SumSide s1{a, make_surface(a, HomologyClass(a.lattice, {1, 0}), 1, true, "F")};
        ManifoldModel b = ManifoldModel::rational(10);
        std::vector<i64> f(11, -1);
        f[0] = 3;
        f[10] = 0;
        SumSide s2{b, make_surface(b, HomologyClass(b.lattice, f), 1, true, "F")};
        v.push_back({"ruled-section-nonminimal", make_sum(s1, s2),
                     MinimalityVerdict::conditional_case_ii, false});
    }
    // ruled section against a minimal other side
    {
        ManifoldModel a = ManifoldModel::ruled_trivial(1, 0);
        SumSide s1{a, make_surface(a, HomologyClass(a.lattice, {1, 0}), 1, true, "F")};
        ManifoldModel b = presets::elliptic_like(2, "elliptic-2");
        SumSide s2{b, make_surface(b, HomologyClass(b.lattice, {1, 0}), 1, true, "F")};
        v.push_back({"ruled-section-minimal", make_sum(s1, s2),
                     MinimalityVerdict::conditional_case_ii, true});
    }

    // blowup at a point off the fiber: disjoint exceptional sphere
    {
        ManifoldModel a = ManifoldModel::rational(10);
        std::vector<i64> f(11, -1);
        f[0] = 3;
        f[10] = 0;
        SumSide s1{a, make_surface(a, HomologyClass(a.lattice, f), 1, true, "F")};
        v.push_back({"case-i-blowup-off-fiber", make_sum(s1, e1_side()),
                     MinimalityVerdict::not_minimal_case_i});
    }

    return v;
}

} // namespace symsum::corpus
