#include "doctest.h"
#include "random_poly.hpp"
#include "weylinv/syzygy.hpp"

using namespace weylinv;
using weylinv::testing::Gen;

namespace {

LaurentPoly P(const std::string& s, std::size_t rank, Int m = 0) {
    return LaurentPoly::parse(s, rank, CoefficientRing(m));
}

}  // namespace

TEST_CASE("flatness diagnostics") {
    PolyTuple good{P("x1^2 + 3", 2), P("x2 - x1^-1", 2)};
    CHECK(check_flatness(good).flat);
    PolyTuple uses_later{P("x1 + x2", 2), P("x2", 2)};
    FlatnessReport r = check_flatness(uses_later);
    CHECK_FALSE(r.flat);
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].find("entry 1") != std::string::npos);
    PolyTuple not_monic{P("2 * x1 + 1", 1)};
    CHECK_FALSE(check_flatness(not_monic).flat);
    PolyTuple unit_factor{P("x1 * x2^3 + x2^3", 2), P("x2 + 1", 2)};
    CHECK(check_flatness(unit_factor).flat);
}

TEST_CASE("explicit trivialization") {
    // (x2, -x1) is the Koszul syzygy of (x1, x2); any polynomial multiple trivializes.
    PolyTuple t{P("x1 - 1", 2), P("x2 + 1", 2)};
    PolyTuple f{P("x2 + 1", 2) * P("x1^2 + x2^-1", 2), -P("x1 - 1", 2) * P("x1^2 + x2^-1", 2)};
    SyzygyCertificate c = trivialize_syzygy(t, f);
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->second == P("x1^2 + x2^-1", 2));
    CHECK_THROWS_AS(trivialize_syzygy(t, PolyTuple{P("1", 2), P("0", 2)}), PreconditionError);
    CHECK_THROWS_AS(trivialize_syzygy(PolyTuple{P("x1 + x2", 2), P("x2", 2)}, f), PreconditionError);
}

TEST_CASE("trivialization round trip over several rings") {
    Gen g(2024);
    const Int rings[] = {0, 2, 3, 4, 6, 12};
    for (int it = 0; it < 240; ++it) {
        CoefficientRing ring(rings[it % 6]);
        std::size_t rank = static_cast<std::size_t>(g.range(2, 4));
        std::size_t len = static_cast<std::size_t>(g.range(2, static_cast<long>(rank)));
        PolyTuple t = random_flat_tuple(g, len, rank, ring, true);
        REQUIRE(check_flatness(t).flat);
        SyzygyCertificate c0 = random_certificate(g, len, rank, ring);
        PolyTuple f = expand_certificate(c0, t);
        REQUIRE(pairing(f, t).is_zero());
        CAPTURE(it);
        SyzygyCertificate c = trivialize_syzygy(t, f);
        CHECK(expand_certificate(c, t) == f);
    }
}

TEST_CASE("lifting mod 6 round trips") {
    Gen g(99);
    CoefficientRing z6(6);
    for (int it = 0; it < 60; ++it) {
        std::size_t rank = 3;
        PolyTuple tz = random_flat_tuple(g, 3, rank, CoefficientRing(), false);
        PolyTuple t;
        for (const auto& p : tz) t.push_back(p.reduce_coefficients(6));
        PolyTuple f = expand_certificate(random_certificate(g, 3, rank, z6), t);
        SyzygyCertificate c = trivialize_syzygy(t, f);
        SyzygyCertificate lifted = lift_syzygy(c);
        for (const auto& [ij, p] : lifted) {
            CHECK(p.ring().is_integers());
            for (const auto& term : p.terms()) CHECK((term.coeff >= 0 && term.coeff < 6));
        }
        PolyTuple fz = expand_certificate(lifted, tz);
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(fz[i].reduce_coefficients(6) == f[i]);
        CHECK(reduce_certificate(lifted, 6) == c);
    }
}

TEST_CASE("determinant and inverse against elementary factorizations") {
    Gen g(5);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = static_cast<std::size_t>(g.range(1, 4));
        std::size_t rank = 2;
        CoefficientRing ring(it % 2 ? Int(0) : Int(4));
        PolyMatrix a = poly_identity(n, rank, ring);
        PolyMatrix inv = poly_identity(n, rank, ring);
        LaurentPoly det = LaurentPoly::constant(rank, 1, ring);
        for (int step = 0; step < 5; ++step) {
            std::size_t i = static_cast<std::size_t>(g.range(0, static_cast<long>(n) - 1));
            std::size_t j = static_cast<std::size_t>(g.range(0, static_cast<long>(n) - 1));
            if (i == j) {
                // Scale row i by a unit monomial: a <- D a, inv <- inv D^{-1}.
                Exponent e = g.exponent(rank, -1, 1);
                Exponent ne = e;
                for (auto& v : ne) v = -v;
                for (auto& x : a[i]) x = x.shift(e);
                for (auto& row : inv) row[i] = row[i].shift(ne);
                det = det.shift(e);
            } else {
                // Row op: row i += c * row j; inverse column op: col j -= c * col i.
                LaurentPoly c = g.poly(rank, ring, 2, -1, 1, 3);
                for (std::size_t k = 0; k < n; ++k) a[i][k] += c * a[j][k];
                for (std::size_t k = 0; k < n; ++k) inv[k][j] -= inv[k][i] * c;
            }
        }
        CHECK(determinant(a) == det);
        CHECK(unit_inverse(a) == inv);
    }
    PolyMatrix singular{{P("x1", 1), P("1", 1)}, {P("x1^2", 1), P("x1", 1)}};
    CHECK(determinant(singular).is_zero());
    CHECK_THROWS_AS(unit_inverse(singular), PreconditionError);
    PolyMatrix two{{P("2", 1)}};
    CHECK_THROWS_AS(unit_inverse(two), PreconditionError);
    CHECK(is_unit_monomial(P("3 * x1", 1, 4)));
    CHECK_FALSE(is_unit_monomial(P("2 * x1", 1, 4)));
}

TEST_CASE("syzygies through an invertible transform") {
    Gen g(77);
    for (int it = 0; it < 60; ++it) {
        CoefficientRing ring(it % 3 == 0 ? Int(2) : Int(0));
        std::size_t rank = 3, n = 3;
        PolyTuple r = random_flat_tuple(g, n, rank, ring, false);
        PolyMatrix a = poly_identity(n, rank, ring);
        PolyMatrix inv = poly_identity(n, rank, ring);
        for (int step = 0; step < 3; ++step) {
            std::size_t i = static_cast<std::size_t>(g.range(0, 2));
            std::size_t j = (i + static_cast<std::size_t>(g.range(1, 2))) % n;
            // Column op on a (a <- a E) and the matching row op on inv.
            LaurentPoly c = g.poly(rank, ring, 2, -1, 1, 3);
            for (std::size_t k = 0; k < n; ++k) a[k][j] += a[k][i] * c;
            for (std::size_t k = 0; k < n; ++k) inv[i][k] -= c * inv[j][k];
        }
        // q a = r with q = r a^{-1}.
        PolyTuple q = row_times_matrix(r, inv);
        REQUIRE(row_times_matrix(q, a) == r);
        PolyTuple f = expand_certificate(random_certificate(g, n, rank, ring), q);
        SyzygyCertificate c = trivialize_via_transform(q, a, inv, f);
        CHECK(expand_certificate(c, q) == f);
    }
}
