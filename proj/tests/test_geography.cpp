#include "symsum/geography.hpp"
#include "symsum/presets.hpp"

#include <doctest.h>

#include <algorithm>

using namespace symsum;

TEST_CASE("the seven building blocks verify") {
    auto blocks = building_blocks(6);
    REQUIRE(blocks.size() == 7);
    auto find = [&](const std::string& name) -> const BuildingBlock& {
        auto it = std::find_if(blocks.begin(), blocks.end(),
                               [&](const BuildingBlock& b) { return b.name == name; });
        REQUIRE(it != blocks.end());
        return *it;
    };

    const auto& p1 = find("P1");
    CHECK(p1.chern == Chern{-4, 16});
    CHECK(square(p1.surface->cls) == 0);
    CHECK(p1.surface->genus == 2);

    const auto& p2 = find("P2");
    CHECK(p2.chern == Chern{-3, 15});
    CHECK(square(p2.surface->cls) == 0);
    CHECK(p2.surface->genus == 2);

    const auto& q1 = find("Q1");
    CHECK(q1.chern == Chern{-2, 2});
    CHECK(square(q1.surface->cls) == 0);
    CHECK(q1.surface->genus == 2);

    const auto& cp28 = find("CP2_8");
    CHECK(cp28.chern == Chern{1, 11});
    CHECK(square(cp28.surface->cls) == 1);
    CHECK(cp28.surface->genus == 1);

    const auto& mg = find("M_G");
    CHECK(mg.is_abstract);
    CHECK(mg.chern.c1_sq == 0);
    CHECK(mg.chern.c2 > 0);
    CHECK(square(mg.surface->cls) == 0);
    CHECK(mg.surface->genus == 1);

    const auto& q2 = find("Q2");
    CHECK(q2.is_abstract);
    CHECK(q2.chern == Chern{0, 0});
    CHECK(q2.surface->genus == 2);

    const auto& s11 = find("S11");
    CHECK(s11.is_abstract);
    CHECK(s11.chern == Chern{1, 23});

    for (const auto& b : blocks) CHECK(noether_check(b.chern.c1_sq, b.chern.c2));
}

TEST_CASE("realizable predicate") {
    CHECK(realizable(0, 12, 0));
    CHECK(realizable(8, 4, 0));
    CHECK(realizable(16, 8, 0));
    CHECK_FALSE(realizable(25, 11, 0)); // sum 36 but 25 > 22
    CHECK_FALSE(realizable(0, 12, 20)); // 0 <= 2(12 - 20) fails
    CHECK_FALSE(realizable(1, 12, 0));  // congruence fails
    CHECK_FALSE(realizable(-12, 24, 0)); // negative c1^2
}

TEST_CASE("region enumeration") {
    auto pts = enumerate_region(0, 24, 0, 24, 0);
    for (auto& [a, b] : pts) {
        CHECK((a + b) % 12 == 0);
        CHECK(a >= 0);
        CHECK(a <= 2 * b);
    }
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    // frozen on the first run of the enumerator
    auto big = enumerate_region(0, 48, 0, 48, 0);
    CHECK(big.size() == 104);
    // the region is empty when r exceeds every b in the box
    CHECK(enumerate_region(0, 48, 0, 48, 49).empty());
}

TEST_CASE("P1 self-sum chain") {
    auto rep = verify_chain(p1_selfsum_stages(), 6);
    CHECK(rep.all_minimal);
    REQUIRE(rep.stages.size() == 1);
    CHECK(rep.stages[0].decision.verdict == MinimalityVerdict::minimal_case_iii);
    CHECK(rep.final_chern == Chern{0, 36});
    CHECK(rep.stages[0].chern_c1_exact);
}

TEST_CASE("S11 chain: both stages minimal, invariants fold to (1, 23)") {
    auto rep = verify_chain(s11_stages(), 6);
    CHECK(rep.all_minimal);
    REQUIRE(rep.stages.size() == 2);
    CHECK(rep.stages[0].decision.verdict == MinimalityVerdict::minimal_case_iii);
    CHECK(rep.stages[1].decision.verdict == MinimalityVerdict::minimal_case_iii);
    CHECK(rep.stages[0].folded == Chern{0, 12});
    CHECK(rep.final_chern == Chern{1, 23});
    // the gluing squares are -9/+9, so the c1^2 fold consumes signature additivity
    CHECK_FALSE(rep.stages[0].chern_c1_exact);
    CHECK(rep.stages[0].euler_positive);
    CHECK(rep.stages[1].euler_positive);
}

TEST_CASE("chain c2 fold matches the additivity formula") {
    auto rep = verify_chain(s11_stages(), 6);
    // final c2 = sum of block c2 + 4(g-1) per stage + interstage blowups
    i64 expect = 9 + 3 + 4 * 0 + 8 + 3 + 4 * 0;
    CHECK(rep.final_chern.c2 == expect);
}

TEST_CASE("failure chain reports the case (i) witness at its stage") {
    auto rep = verify_chain(failure_demo_stages(), 6);
    CHECK_FALSE(rep.all_minimal);
    REQUIRE(rep.stages.size() == 1);
    CHECK(rep.stages[0].decision.verdict == MinimalityVerdict::not_minimal_case_i);
    REQUIRE(rep.stages[0].decision.witness);
}

TEST_CASE("chain stage mismatch is rejected") {
    auto stages = s11_stages();
    // corrupt the asserted invariants of the accumulated stage-2 side
    stages[1].sum.side1.model.asserted_chern = Chern{0, 12};
    CHECK_THROWS_AS(verify_chain(stages, 6), std::invalid_argument);
}
