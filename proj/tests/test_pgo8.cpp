#include "doctest.h"
#include "random_poly.hpp"
#include "weylinv/pgo8.hpp"

using namespace weylinv;
using weylinv::testing::Gen;

TEST_CASE("PGO8 model and sublattice") {
    LatticeModel m = pgo8_model();
    CHECK(m.grading_group().factors == IntVec{2, 2});
    CHECK(m.in_tstar({0, 1, 0, 0}));
    CHECK_FALSE(m.in_tstar({1, 0, 0, 0}));
    Lattice sub = pgo8_sublattice();
    CHECK(m.tstar().contains(sub));
    CHECK(sub.contains(IntVec{2, 0, 0, 0}));
    CHECK_FALSE(sub.contains(IntVec{1, 0, 0, 0}));
    // e_2 - e_4 in fundamental-weight coordinates.
    CHECK(sub.contains(IntVec{-1, 1, 1, -1}));
}

TEST_CASE("reduction to (Z/4)[Lambda/Lambda']") {
    LatticeModel m = pgo8_model();
    QuotientRing r(pgo8_sublattice(), 4);
    Weight e1{1, 0, 0, 0}, e2{-1, 1, 0, 0};
    CHECK(r.reduce(m.rho_aug(0)) == r.add(r.monomial(e1, 2), r.monomial(e2, 2)));
    for (std::size_t i = 1; i < 4; ++i) CHECK(r.reduce(m.rho_aug(i)).empty());
}

TEST_CASE("reduction to (Z/16)[Lambda/T*]") {
    LatticeModel m = pgo8_model();
    QuotientRing r(m.tstar(), 16);
    for (std::size_t i : {0, 2, 3}) {
        Weight w = m.fundamental_weight(i);
        CHECK(r.reduce(m.rho_aug(i)) == r.add(r.monomial(w, 8), r.monomial(Weight(4, 0), -8)));
    }
    CHECK(r.reduce(m.rho_aug(1)).empty());
}

TEST_CASE("decompose_invariant reproduces x") {
    LatticeModel m = pgo8_model();
    LaurentPoly x = m.rho(0) * m.rho(2) * m.rho(3) - LaurentPoly::constant(4, 512);
    auto f = decompose_invariant(m, x);
    LaurentPoly back(4);
    for (std::size_t i = 0; i < 4; ++i) back += f[i] * m.rho_aug(i);
    CHECK(back == x);
    CHECK_THROWS_AS(decompose_invariant(m, LaurentPoly::monomial({1, 0, 0, 0}) - LaurentPoly::constant(4, 1)),
                    PreconditionError);
    CHECK_THROWS_AS(decompose_invariant(m, m.rho(0)), PreconditionError);
}

TEST_CASE("parity check examples") {
    LatticeModel m = pgo8_model();
    LaurentPoly zero(4);
    ParityReport z = pgo8_parity_check({zero, zero, zero, zero});
    CHECK(z.in_tstar);
    CHECK(z.claim_holds);
    CHECK(z.x_mod16.empty());

    ParityReport g = pgo8_parity_check({LaurentPoly::monomial({0, 1, 0, 0}), zero, zero, zero});
    CHECK_FALSE(g.in_tstar);
    CHECK(g.claim_holds);

    // rho(w2) * rho_1 is not homogeneous: rho_1 = rho(w1) - 8 mixes two classes.
    ParityReport h = pgo8_parity_check({m.rho(1), zero, zero, zero});
    CHECK_FALSE(h.in_tstar);
    CHECK(h.augmentations[0] == 24);
}

TEST_CASE("parity holds on decompositions of elements of Z[T*]") {
    LatticeModel m = pgo8_model();
    Gen g(16);
    auto rho_bar = [&](const Weight& w) { return m.orbit_poly(w, true); };
    std::vector<LaurentPoly> seeds = {
        rho_bar({0, 1, 0, 0}), rho_bar({2, 0, 0, 0}), rho_bar({0, 0, 2, 0}), rho_bar({1, 0, 1, 1}),
        rho_bar({2, 0, 0, 0}) * rho_bar({0, 1, 0, 0}),
        m.rho(0) * m.rho(2) * m.rho(3) - LaurentPoly::constant(4, 512),
    };
    int checked = 0;
    for (const auto& x : seeds) {
        auto base = decompose_invariant(m, x);
        for (int trial = 0; trial < 4; ++trial) {
            std::array<LaurentPoly, 4> f{base[0], base[1], base[2], base[3]};
            std::size_t i = static_cast<std::size_t>(g.range(0, 3)), j = static_cast<std::size_t>(g.range(0, 3));
            LaurentPoly h = g.poly(4, CoefficientRing::integers(), 3, -1, 1, 3);
            f[i] += h * m.rho_aug(j);
            f[j] -= h * m.rho_aug(i);
            ParityReport r = pgo8_parity_check(f);
            CHECK(r.in_tstar);
            CHECK(r.claim_holds);
            for (const auto& [cls, sum] : r.f1_component_sums) CHECK(divides(2, sum));
            ++checked;
        }
    }
    CHECK(checked == 24);
}

TEST_CASE("sampled tuples land in Z[T*] and satisfy the parity claim") {
    auto tuples = pgo8_sample_tuples(20, 3);
    REQUIRE(tuples.size() == 20);
    for (const auto& f : tuples) {
        ParityReport r = pgo8_parity_check(f);
        CHECK(r.in_tstar);
        CHECK(r.claim_holds);
    }
    CHECK(pgo8_sample_tuples(5, 9) == pgo8_sample_tuples(5, 9));
}
