#include "doctest.h"
#include "random_poly.hpp"
#include "weylinv/laurent.hpp"

using namespace weylinv;
using weylinv::testing::Gen;

namespace {

LaurentPoly P(const std::string& s, std::size_t rank, Int m = 0) {
    return LaurentPoly::parse(s, rank, CoefficientRing(m));
}

}  // namespace

TEST_CASE("arithmetic basics") {
    CHECK(P("x1 + 1", 1) * P("x1^-1", 1) == P("1 + x1^-1", 1));
    LaurentPoly f = P("3 * x1^2 x2 - 7 + x2^-3", 2);
    CHECK((f + (-f)).is_zero());
    CHECK((P("2 * x1", 2, 4) * P("2 * x2", 2, 4)).is_zero());
    CHECK_THROWS_AS(P("x1", 2) + P("x1", 2, 3), RingMismatch);
    CHECK_THROWS_AS(P("x1", 2) * P("x1", 3), RingMismatch);
}

TEST_CASE("text format round trip") {
    LaurentPoly f = P("-3 * x1^2 x2^-1 + 5 + x2", 2);
    CHECK(f.to_string() == "5 + 1 * x2 + -3 * x1^2 x2^-1");
    CHECK(LaurentPoly::parse(f.to_string(), 2) == f);
    CHECK(P("0", 3).is_zero());
    CHECK(P("x1^1", 1) == P("x1", 1));
    CHECK(P("x1^(-2)", 1) == P("x1^-2", 1));
    CHECK_THROWS_AS(P("x3", 2), PreconditionError);
    Gen g(7);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly h = g.poly(3, CoefficientRing(), 6);
        CHECK(LaurentPoly::parse(h.to_string(), 3) == h);
    }
}

TEST_CASE("degrees") {
    auto d = P("3 * x2^2 + x1 x2^-1", 2).degrees(1);
    REQUIRE(d);
    CHECK(d->hdeg == 2);
    CHECK(d->ldeg == -1);
    CHECK(d->wdeg == 3);
    auto c = P("x1^5", 2).degrees(1);
    CHECK(c->hdeg == 0);
    CHECK(c->ldeg == 0);
    CHECK(c->wdeg == 0);
    auto e = P("x2^3 + x2", 2).degrees(1);
    CHECK(e->hdeg == 3);
    CHECK(e->ldeg == 1);
    CHECK(e->wdeg == 2);
    CHECK_FALSE(P("0", 2).degrees(0).has_value());
}

TEST_CASE("is_divisor") {
    CHECK(P("x1 x2 + 1", 2).is_divisor(1));
    CHECK_FALSE(P("2 * x2 + 1", 2).is_divisor(1));
    CHECK_FALSE(P("x1 x2 + x3 x2 + 1", 3).is_divisor(1));
    CHECK_THROWS_AS(P("0", 2).is_divisor(0), PreconditionError);
}

TEST_CASE("bounded_divide examples") {
    LaurentPoly p = P("x1 x2 + 1", 2);
    auto z = bounded_divide(P("0", 2), p, 1, 0);
    CHECK(z.q.is_zero());
    CHECK(z.r.is_zero());
    auto self = bounded_divide(p, p, 1, p.degrees(1)->ldeg);
    CHECK(self.q == P("1", 2));
    CHECK(self.r.is_zero());
    auto ex = bounded_divide(P("x1 x2^2 + x2", 2), p, 1, 0);
    CHECK(ex.q == P("x2", 2));
    CHECK(ex.r.is_zero());
    CHECK_THROWS_AS(bounded_divide(P("x2^-1", 2), p, 1, 0), PreconditionError);
    CHECK_THROWS_AS(bounded_divide(P("x2", 2), P("2 * x2 + 1", 2), 1, 0), PreconditionError);
}

TEST_CASE("bounded_divide property") {
    Gen g(2024);
    std::vector<Int> moduli{0, 2, 3, 4, 8, 16};
    for (int iter = 0; iter < 600; ++iter) {
        std::size_t rank = static_cast<std::size_t>(g.range(1, 4));
        std::size_t axis = static_cast<std::size_t>(g.range(0, static_cast<long>(rank) - 1));
        CoefficientRing ring(g.pick(moduli));
        LaurentPoly p = g.divisor(rank, axis, ring, rank);
        LaurentPoly f = g.poly(rank, ring, 8);
        long d = f.is_zero() ? g.range(-4, 4) : f.degrees(axis)->ldeg - g.range(0, 2);
        auto res = bounded_divide(f, p, axis, d);
        CHECK(p * res.q + res.r == f);
        if (!res.r.is_zero()) {
            auto rd = *res.r.degrees(axis);
            CHECK(rd.ldeg >= d);
            CHECK(rd.hdeg < d + p.degrees(axis)->wdeg);
        }
    }
}

TEST_CASE("homogeneous components") {
    // Rank-2 lattice with T* = even coordinate sum.
    Grading gr{2, {{1, 1}}, {2}};
    LaurentPoly f = P("x1 + x1 x2", 2);
    CHECK(homogeneous_component(f, gr, {1}) == P("x1", 2));
    LaurentPoly t = P("x1 x2 + x1^2 + 3", 2);
    CHECK(homogeneous_component(t, gr, {0}) == t);
    CHECK(homogeneous_component(t, gr, {1}).is_zero());

    Gen g(11);
    Grading g2{3, {{1, 2, 0}, {0, 1, 1}}, {4, 2}};
    auto classes = g2.all_classes();
    for (int iter = 0; iter < 100; ++iter) {
        LaurentPoly a = g.poly(3, CoefficientRing(), 5);
        LaurentPoly b = g.poly(3, CoefficientRing(), 5);
        LaurentPoly sum(3);
        for (const auto& c : classes) sum += homogeneous_component(a, g2, c);
        CHECK(sum == a);
        for (const auto& c : classes) {
            LaurentPoly expect(3);
            for (const auto& ca : classes) {
                for (const auto& cb : classes) {
                    if (g2.add(ca, cb) != c) continue;
                    expect += homogeneous_component(a, g2, ca) * homogeneous_component(b, g2, cb);
                }
            }
            CHECK(homogeneous_component(a * b, g2, c) == expect);
        }
    }
}

TEST_CASE("augmentation and reduction") {
    CHECK(P("x1 + x1^-1 + x2 + x2^-1", 2).augmentation() == 4);
    CHECK(P("x1 + x1^-1 + x2 + x2^-1 - 4", 2).augmentation() == 0);
    CHECK(P("0", 2).augmentation() == 0);
    CHECK(P("4 * x1 + 3", 1).reduce_coefficients(2) == P("1", 1, 2));
    CHECK(P("6 * x1 + 3", 1).reduce_coefficients(3).is_zero());
    CHECK(P("5 * x1 - 7 * x2", 2).reduce_coefficients(3) == P("2 * x1 + 2 * x2", 2, 3));
    CHECK_THROWS_AS(P("x1", 1).reduce_coefficients(1), PreconditionError);

    Gen g(5);
    for (int iter = 0; iter < 200; ++iter) {
        LaurentPoly a = g.poly(3, CoefficientRing(), 5);
        LaurentPoly b = g.poly(3, CoefficientRing(), 5);
        CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
        Int m = g.range(2, 16);
        CHECK((a * b).reduce_coefficients(m) == a.reduce_coefficients(m) * b.reduce_coefficients(m));
        CHECK((a - b).reduce_coefficients(m) == a.reduce_coefficients(m) - b.reduce_coefficients(m));
        LaurentPoly r = a.reduce_coefficients(m);
        CHECK(r.lift().reduce_coefficients(m) == r);
        LaurentPoly lifted = r.lift();
        for (const auto& t : lifted.terms()) {
            CHECK(t.coeff >= 0);
            CHECK(t.coeff < m);
        }
    }
}

TEST_CASE("substitution is a ring map") {
    Gen g(9);
    std::vector<LaurentPoly> img{P("x1 + x2", 2), P("x1^-1 x2", 2)};
    std::vector<LaurentPoly> inv{P("0", 2), P("x1 x2^-1", 2)};
    for (int iter = 0; iter < 50; ++iter) {
        LaurentPoly a = g.poly(2, CoefficientRing(), 4, 0, 3);
        LaurentPoly b = g.poly(2, CoefficientRing(), 4, 0, 3);
        CHECK((a * b).substitute(img, inv) == a.substitute(img, inv) * b.substitute(img, inv));
    }
}
