#include "symsum/lattice.hpp"
#include "symsum/manifold.hpp"

#include <doctest.h>

#include <random>

using namespace symsum;

namespace {

LatticePtr cp2n(int n) { return ManifoldModel::rational(n).lattice; }

HomologyClass cls(const LatticePtr& lat, std::vector<i64> v) {
    return HomologyClass(lat, std::move(v));
}

} // namespace

TEST_CASE("lattice validation") {
    CHECK_THROWS_AS(IntersectionLattice::create("bad", {{1, 0}, {1, -1}}, {"a", "b"}),
                    std::invalid_argument); // asymmetric
    CHECK_THROWS_AS(IntersectionLattice::create("bad", {{2}}, {"a"}),
                    std::invalid_argument); // det 2
    CHECK_THROWS_AS(IntersectionLattice::create("bad", {{1, 0}, {0, -1}}, {"a", "a"}),
                    std::invalid_argument); // duplicate labels
    auto u = IntersectionLattice::create("U", {{0, 1}, {1, 0}}, {"u", "v"});
    CHECK(u->b_plus == 1);
    CHECK(u->b_minus == 1);
}

TEST_CASE("signature of built-in grams") {
    auto lat = cp2n(5);
    CHECK(lat->b_plus == 1);
    CHECK(lat->b_minus == 5);
    auto ruled = ManifoldModel::ruled_trivial(2, 3).lattice;
    CHECK(ruled->b_plus == 1);
    CHECK(ruled->b_minus == 4);
    auto tw = ManifoldModel::ruled_twisted(2, 0).lattice;
    CHECK(tw->b_plus == 1);
    CHECK(tw->b_minus == 1);
}

TEST_CASE("pairing values") {
    auto lat = cp2n(2);
    auto H = HomologyClass::basis(lat, 0);
    auto E1 = HomologyClass::basis(lat, 1);
    auto E2 = HomologyClass::basis(lat, 2);
    CHECK(pairing(H, H) == 1);
    CHECK(pairing(E1, E2) == 0);
    CHECK(pairing(E1, E1) == -1);
    CHECK(square(H - E1 - E2) == -1);

    auto tw = ManifoldModel::ruled_twisted(1, 0).lattice;
    auto sp = HomologyClass::basis(tw, 0);
    auto sm = HomologyClass::basis(tw, 1);
    CHECK(pairing(sp, sm) == 0);
    CHECK(pairing(sp, sp) == 1);
    CHECK(pairing(sm, sm) == -1);
}

TEST_CASE("pairing rejects lattice mismatch with both names") {
    auto a = cp2n(2);
    auto b = cp2n(3);
    auto x = HomologyClass::basis(a, 0);
    auto y = HomologyClass::basis(b, 0);
    CHECK_THROWS_WITH_AS(pairing(x, y),
                         doctest::Contains("CP2#2"), std::invalid_argument);
    try {
        pairing(x, y);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("CP2#3") != std::string::npos);
    }
}

TEST_CASE("pairing is symmetric and bilinear on random vectors") {
    auto lat = cp2n(6);
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<i64> coeff(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<i64> av(7), bv(7), cv(7);
        for (auto& x : av) x = coeff(rng);
        for (auto& x : bv) x = coeff(rng);
        for (auto& x : cv) x = coeff(rng);
        auto a = cls(lat, av), b = cls(lat, bv), c = cls(lat, cv);
        CHECK(pairing(a, b) == pairing(b, a));
        CHECK(pairing(a + b, c) == pairing(a, c) + pairing(b, c));
        CHECK(pairing(a * 3, b) == 3 * pairing(a, b));
    }
}

TEST_CASE("specific squares") {
    auto l13 = cp2n(13);
    std::vector<i64> f(14, -1);
    f[0] = 4;
    f[1] = -2;
    CHECK(square(cls(l13, f)) == 0);

    auto l8 = cp2n(8);
    std::vector<i64> g(9, -1);
    g[0] = 3;
    CHECK(square(cls(l8, g)) == 1);
}

TEST_CASE("adjunction genus") {
    auto m8 = ManifoldModel::rational(8);
    std::vector<i64> f(9, -1);
    f[0] = 3;
    CHECK(adjunction_genus(m8.K, cls(m8.lattice, f)) == Rat(1));

    auto m13 = ManifoldModel::rational(13);
    std::vector<i64> g(14, -1);
    g[0] = 4;
    g[1] = -2;
    CHECK(adjunction_genus(m13.K, cls(m13.lattice, g)) == Rat(2));

    auto s = ManifoldModel::s2xs2();
    CHECK(adjunction_genus(s.K, s.fiber_class()) == Rat(0));
}

TEST_CASE("non-integer adjunction genus is a valid return") {
    auto u = IntersectionLattice::create("U", {{0, 1}, {1, 0}}, {"u", "v"});
    // K = u is not characteristic: <u, v> = 1 is odd while v^2 = 0
    auto K = HomologyClass::basis(u, 0);
    CHECK_FALSE(is_characteristic(K));
    Rat g = adjunction_genus(K, HomologyClass::basis(u, 1));
    CHECK_FALSE(g.is_integer());
}

TEST_CASE("canonical classes of built-in models are characteristic") {
    CHECK(is_characteristic(ManifoldModel::rational(0).K));
    CHECK(is_characteristic(ManifoldModel::rational(9).K));
    CHECK(is_characteristic(ManifoldModel::ruled_trivial(1, 2).K));
    CHECK(is_characteristic(ManifoldModel::ruled_twisted(3, 0).K));
    CHECK(is_characteristic(ManifoldModel::s2xs2(2).K));
}

TEST_CASE("light cone check: examples") {
    auto l0 = cp2n(0);
    auto H0 = HomologyClass::basis(l0, 0);
    auto r = light_cone_check(H0, H0, H0);
    CHECK(r.hypotheses_hold);
    CHECK(r.pairing == 1);
    CHECK(r.asserted_nonneg);

    auto l1 = cp2n(1);
    auto alpha = cls(l1, {1, -1});
    auto H = HomologyClass::basis(l1, 0);
    auto omega = cls(l1, {3, -1});
    auto r2 = light_cone_check(alpha, H, omega);
    CHECK(r2.hypotheses_hold);
    CHECK(r2.pairing == 1);

    // hypothesis filter: E1 has negative square
    auto E1 = HomologyClass::basis(l1, 1);
    auto r3 = light_cone_check(E1, H, omega);
    CHECK_FALSE(r3.hypotheses_hold);
    CHECK_FALSE(r3.asserted_nonneg);
}

TEST_CASE("light cone check: rejections") {
    // b+ = 2 lattice
    auto lat = IntersectionLattice::create("1,1-diag2", {{1, 0}, {0, 1}}, {"a", "b"});
    auto a = HomologyClass::basis(lat, 0);
    CHECK_THROWS_AS(light_cone_check(a, a, a), std::invalid_argument);

    auto l1 = cp2n(1);
    auto E1 = HomologyClass::basis(l1, 1);
    auto H = HomologyClass::basis(l1, 0);
    CHECK_THROWS_AS(light_cone_check(H, H, E1), std::invalid_argument); // omega^2 <= 0
}

TEST_CASE("light cone property on seeded hypothesis-satisfying pairs") {
    std::mt19937_64 rng(987654321);
    for (int n = 1; n <= 10; ++n) {
        auto lat = cp2n(n);
        std::vector<i64> wv(static_cast<size_t>(n + 1), 0);
        wv[0] = 21; // forward timelike reference with room for coefficients up to 20
        for (int i = 1; i <= n; ++i) wv[static_cast<size_t>(i)] = -1;
        auto omega = cls(lat, wv);
        REQUIRE(square(omega) > 0);
        std::uniform_int_distribution<i64> a0(1, 20);
        auto sample = [&]() {
            // construct alpha with alpha^2 >= 0 by budgeting the negative part
            std::vector<i64> v(static_cast<size_t>(n + 1), 0);
            v[0] = a0(rng);
            i64 budget = v[0] * v[0];
            for (int i = 1; i <= n; ++i) {
                i64 room = static_cast<i64>(std::sqrt(static_cast<double>(budget)));
                if (room == 0) break;
                std::uniform_int_distribution<i64> mi(-std::min<i64>(room, 20),
                                                      std::min<i64>(room, 20));
                i64 m = mi(rng);
                v[static_cast<size_t>(i)] = m;
                budget -= m * m;
            }
            auto alpha = cls(lat, v);
            if (pairing(alpha, omega) < 0) alpha = -alpha;
            return alpha;
        };
        for (int t = 0; t < 100; ++t) {
            auto alpha = sample();
            auto beta = sample();
            auto r = light_cone_check(alpha, beta, omega);
            REQUIRE(r.hypotheses_hold);
            REQUIRE(r.pairing >= 0);
        }
    }
}

TEST_CASE("checked arithmetic overflows abort with a diagnostic") {
    CHECK_THROWS_AS(checked_mul(i64{1} << 62, 4), overflow_error);
    CHECK_THROWS_AS(checked_add(std::numeric_limits<i64>::max(), 1), overflow_error);
}

TEST_CASE("rationals") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
    CHECK(Rat(-4, -2) == Rat(2));
    CHECK(Rat(1, -2).str() == "-1/2");
    CHECK(Rat(7, 2) > Rat(3));
}
