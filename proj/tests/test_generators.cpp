#include "doctest.h"
#include "random_poly.hpp"
#include "weylinv/generators.hpp"
#include "weylinv/spec_parser.hpp"

using namespace weylinv;
using weylinv::testing::Gen;

namespace {

const Generator* find(const GeneratorSet& g, const std::string& name) {
    for (const auto& x : g.gens) {
        if (x.name() == name) return &x;
    }
    return nullptr;
}

Int binom(long n, long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Random element of Z[T*] with small support.
LaurentPoly random_tstar(Gen& g, const LatticeModel& m, int terms) {
    const std::size_t n = m.total_rank();
    LaurentPoly p(n);
    int placed = 0;
    while (placed < terms) {
        Exponent e = g.exponent(n, -2, 2);
        if (!m.in_tstar(Weight(e.begin(), e.end()))) continue;
        p += LaurentPoly::monomial(e, Int(g.range(-3, 3)));
        ++placed;
    }
    return p;
}

PolyTuple combination_tuple(const GeneratorSet& gens, const PolyTuple& coeffs, std::size_t n) {
    PolyTuple f(n, LaurentPoly(n));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) f[i] += coeffs[k] * gens.gens[k].expansion[i];
    }
    return f;
}

PolyTuple rho_tuple(const LatticeModel& m) {
    PolyTuple rho;
    for (std::size_t i = 0; i < m.total_rank(); ++i) rho.push_back(m.rho_aug(i));
    return rho;
}

}  // namespace

TEST_CASE("PGSp(4) chain and generators") {
    LatticeModel m(parse_spec("PGSp(4)"));
    GcdChain c = gcd_chain(m);
    CHECK(c.nprime == 1);
    CHECK(c.order == std::vector<std::size_t>{0, 1});
    CHECK(c.s == IntVec{4});
    CHECK(c.d == IntVec{4});
    CHECK(c.a == std::vector<IntVec>{{1}});
    CHECK(c.rho_tilde[0] == m.rho_aug(0));
    CHECK(degree_one_gcd(m) == 4);

    GeneratorSet g = build_generators(m, c);
    REQUIRE(g.gens.size() == 2);
    CHECK(g.gens[0].name() == "h2_1");
    CHECK(g.gens[0].value == m.rho(0) * m.rho(0) - LaurentPoly::constant(2, 16));
    CHECK(g.gens[1].name() == "h3_2");
    CHECK(g.gens[1].value == m.rho(1) - LaurentPoly::constant(2, 4));
}

TEST_CASE("gcd chain for Sp x Sp over the diagonal center") {
    for (auto [a, b] : {std::pair{1, 1}, {2, 3}, {3, 2}, {2, 2}, {4, 4}}) {
        std::string spec = "(Sp(" + std::to_string(2 * a) + ") x Sp(" + std::to_string(2 * b) + ")) / mu(2)";
        CAPTURE(spec);
        LatticeModel m(parse_spec(spec));
        GcdChain c = gcd_chain(m);
        // Degree-1 weights are the odd-index ones, with |W(omega_i)| = 2^i binom(rank, i).
        IntVec s;
        for (int r : {a, b}) {
            for (int i = 1; i <= r; i += 2) s.push_back(binom(r, i) << i);
        }
        CHECK(c.s == s);
        Int d = 0;
        for (const auto& v : s) d = gcd(d, v);
        CHECK(c.d.front() == d);
        for (std::size_t k = 0; k < c.nprime; ++k) {
            Int sum = 0;
            for (std::size_t j = k; j < c.nprime; ++j) sum += c.a[k][j] * c.s[j];
            CHECK(sum == c.d[k]);
            CHECK(c.rho_tilde[k].coeff(Exponent(m.total_rank(), 0)) == -c.d[k]);
            if (k + 1 < c.nprime) CHECK(divides(c.d[k], c.d[k + 1]));
        }
        CHECK(c.d.back() == c.s.back());
    }
}

TEST_CASE("h1 reproduces the explicit semi-decomposable elements") {
    // (Sp(2m) x Sp(2n)) / mu(2) with m, n <= 2: h1_1 = e^{omega_1} z with
    // z = n/g rho_1 - m/g rho_1'.
    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
        std::string spec = "(Sp(" + std::to_string(2 * a) + ") x Sp(" + std::to_string(2 * b) + ")) / mu(2)";
        CAPTURE(spec);
        LatticeModel m(parse_spec(spec));
        GeneratorSet gs = build_generators(m, gcd_chain(m));
        const Generator* h = find(gs, "h1_1");
        REQUIRE(h);
        std::size_t second = static_cast<std::size_t>(a);
        Int g = gcd(Int(a), Int(b));
        LaurentPoly z = m.rho_aug(0).scale(Int(b) / g) - m.rho_aug(second).scale(Int(a) / g);
        Weight w1 = m.fundamental_weight(0);
        CHECK(h->value == LaurentPoly::monomial(Exponent(w1.begin(), w1.end())) * z);
    }
    // (Spin(5) x Spin(5)) / mu(2): h1_1 = e^{omega_2}(rho(omega_2) - rho(omega_2')).
    LatticeModel m(parse_spec("(Spin(5) x Spin(5)) / mu(2)"));
    GeneratorSet gs = build_generators(m, gcd_chain(m));
    const Generator* h = find(gs, "h1_1");
    REQUIRE(h);
    CHECK(gs.lambda0 == Weight{0, 1, 0, 0});
    CHECK(h->value == LaurentPoly::monomial({0, 1, 0, 0}) * (m.rho(1) - m.rho(3)));
    CHECK(m.in_tstar({0, 1, 0, 1}));
}

TEST_CASE("generator invariants on index-2 groups") {
    for (const char* spec : {"PGSp(4)", "PGSp(6)", "PGL(2)", "SL(4) / mu(2)", "SO(7)", "SO(8)",
                             "(Sp(4) x Sp(4)) / mu(2)", "(Sp(4) x Sp(6)) / mu(2)", "(SL(2) x SL(4)) / mu(2)",
                             "(Spin(5) x Spin(7)) / mu(2)"}) {
        CAPTURE(spec);
        LatticeModel m(parse_spec(spec));
        GeneratorSet gs = build_generators(m, gcd_chain(m));
        PolyTuple rho = rho_tuple(m);
        std::size_t np = gcd_chain(m).nprime;
        CHECK(gs.gens.size() == (np - 1) + np + (m.total_rank() - np));
        for (const auto& g : gs.gens) {
            CAPTURE(g.name());
            CHECK(g.value.augmentation() == 0);
            CHECK(homogeneous_component(g.value, m.grading(), m.grading().zero()) == g.value);
            CHECK(pairing(g.expansion, rho) == g.value);
            // Each generator is W-invariant up to the e^{lambda0} factor of h1.
            LaurentPoly core = g.value;
            if (g.kind == GeneratorKind::H1) {
                Exponent e(gs.lambda0.begin(), gs.lambda0.end());
                for (auto& v : e) v = -v;
                core = core.shift(e);
            }
            for (const auto& t : core.terms()) {
                for (const auto& w : m.weyl_orbit(Weight(t.exp.begin(), t.exp.end()))) {
                    CHECK(core.coeff(Exponent(w.begin(), w.end())) == t.coeff);
                }
            }
        }
    }
    CHECK_THROWS_AS(gcd_chain(LatticeModel(parse_spec("PGL(3)"))), PreconditionError);
    CHECK_THROWS_AS(gcd_chain(LatticeModel(parse_spec("SL(2)"))), PreconditionError);
}

TEST_CASE("single generator round trip") {
    LatticeModel m(parse_spec("PGSp(4)"));
    GcdChain c = gcd_chain(m);
    GeneratorSet gs = build_generators(m, c);
    Reduction r = reduce_to_generators(m, c, gs, gs.gens[0].expansion);
    CHECK(r.coefficients[0] == LaurentPoly::constant(2, 1));
    CHECK(r.coefficients[1].is_zero());
    Reduction z = reduce_to_generators(m, c, gs, PolyTuple(2, LaurentPoly(2)));
    for (const auto& p : z.coefficients) CHECK(p.is_zero());
}

TEST_CASE("random combinations reduce to equal combinations") {
    Gen g(314);
    for (const char* spec : {"PGSp(4)", "(Sp(4) x Sp(4)) / mu(2)", "(SL(2) x SL(2)) / mu(2)", "PGSp(6)"}) {
        CAPTURE(spec);
        LatticeModel m(parse_spec(spec));
        GcdChain c = gcd_chain(m);
        GeneratorSet gs = build_generators(m, c);
        const std::size_t n = m.total_rank();
        PolyTuple rho = rho_tuple(m);
        for (int it = 0; it < 12; ++it) {
            PolyTuple coeffs;
            for (std::size_t k = 0; k < gs.gens.size(); ++k) {
                coeffs.push_back(g.coin() ? random_tstar(g, m, 2) : LaurentPoly(n));
            }
            PolyTuple f = combination_tuple(gs, coeffs, n);
            // Perturb by an integral trivial syzygy so normalization has work to do.
            SyzygyCertificate triv;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (g.coin()) add_to_certificate(triv, i, j, g.poly(n, {}, 2, -1, 1, 3));
                }
            }
            PolyTuple t = expand_certificate(triv, rho);
            for (std::size_t i = 0; i < n; ++i) f[i] += t[i];
            Reduction r = reduce_to_generators(m, c, gs, f);
            CHECK(r.element == expand_combination(gs, coeffs));
            CHECK(expand_combination(gs, r.coefficients) == r.element);
        }
    }
}

TEST_CASE("generator sets for different lambda0 generate the same ideal") {
    LatticeModel m(parse_spec("PGSp(4)"));
    GcdChain c = gcd_chain(m);
    GeneratorSet a = build_generators(m, c);
    GeneratorSet b = build_generators(m, c, Weight{1, 1});
    GeneratorSet e = build_generators(m, c, Weight{-1, 2});
    for (auto [x, y] : {std::pair{&a, &b}, {&b, &a}, {&a, &e}, {&e, &a}}) {
        for (const auto& gen : y->gens) {
            Reduction r = reduce_to_generators(m, c, *x, gen.expansion);
            CHECK(expand_combination(*x, r.coefficients) == gen.value);
        }
    }
    CHECK_THROWS_AS(build_generators(m, c, Weight{0, 1}), PreconditionError);
}

TEST_CASE("reduction refuses groups without flatness data") {
    LatticeModel m(parse_spec("SO(7)"));
    GcdChain c = gcd_chain(m);
    GeneratorSet gs = build_generators(m, c);
    CHECK_THROWS_AS(reduce_to_generators(m, c, gs, gs.gens[0].expansion), PreconditionError);
    LatticeModel p(parse_spec("PGSp(4)"));
    GcdChain pc = gcd_chain(p);
    // rho_1 alone has degree 1.
    PolyTuple f{LaurentPoly::constant(2, 1), LaurentPoly(2)};
    CHECK_THROWS_AS(reduce_to_generators(p, pc, build_generators(p, pc), f), PreconditionError);
}

TEST_CASE("coefficient normalization") {
    Gen g(55);
    for (const char* spec : {"PGSp(4)", "(Sp(4) x Sp(4)) / mu(2)", "PGSp(6)"}) {
        CAPTURE(spec);
        LatticeModel m(parse_spec(spec));
        const std::size_t n = m.total_rank();
        Int d = degree_one_gcd(m);
        NewtonTransform t = newton_transform(m, CoefficientRing(d));
        PolyTuple rho = rho_tuple(m);
        int nontrivial = 0;
        for (int it = 0; it < 10; ++it) {
            SyzygyCertificate triv;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) add_to_certificate(triv, i, j, g.poly(n, {}, 2, -1, 1, 3));
            }
            PolyTuple f = expand_certificate(triv, rho);
            bool needs_work = false;
            for (std::size_t i = 0; i < n; ++i) {
                bool odd = !m.in_tstar(m.fundamental_weight(i));
                LaurentPoly zero = homogeneous_component(f[i], m.grading(), m.grading().zero());
                LaurentPoly part = odd ? zero : f[i] - zero;
                needs_work = needs_work || !part.reduce_coefficients(d).is_zero();
            }
            nontrivial += needs_work;
            PolyTuple out = normalize_coefficients(m, f, t);
            CHECK(pairing(out, rho) == pairing(f, rho));
            for (std::size_t i = 0; i < n; ++i) {
                bool odd = !m.in_tstar(m.fundamental_weight(i));
                LaurentPoly zero = homogeneous_component(out[i], m.grading(), m.grading().zero());
                LaurentPoly part = odd ? zero : out[i] - zero;
                CHECK(part.reduce_coefficients(d).is_zero());
            }
            // Already normalized input comes back unchanged.
            CHECK(normalize_coefficients(m, out, t) == out);
        }
        CHECK(nontrivial > 0);
    }
}
