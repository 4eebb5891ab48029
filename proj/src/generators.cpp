#include "weylinv/generators.hpp"

namespace weylinv {

namespace {

LaurentPoly degree_zero_part(const LatticeModel& m, const LaurentPoly& f) {
    return homogeneous_component(f, m.grading(), m.grading().zero());
}

LaurentPoly divide_or_fail(const LaurentPoly& f, const Int& c, const char* what) {
    for (const auto& t : f.terms()) {
        if (!divides(c, t.coeff)) throw InternalError(std::string(what) + ": not divisible by " + c.get_str());
    }
    return f.divide_exact(c);
}

PolyTuple rho_tuple(const LatticeModel& m) {
    PolyTuple rho;
    for (std::size_t i = 0; i < m.total_rank(); ++i) rho.push_back(m.rho_aug(i));
    return rho;
}

// Bezout coefficients c with sum c_j s_j = gcd(s), then each c_j with j
// before the last reduced modulo s_last / gcd(s_j, s_last).
IntVec bezout(const IntVec& s) {
    std::size_t k = s.size();
    IntVec c(k, 0);
    c[k - 1] = 1;
    Int g = s[k - 1];
    for (std::size_t j = k - 1; j-- > 0;) {
        Int u, v, ng;
        mpz_gcdext(ng.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), s[j].get_mpz_t(), g.get_mpz_t());
        c[j] = u;
        for (std::size_t l = j + 1; l < k; ++l) c[l] *= v;
        g = ng;
    }
    const Int& last = s[k - 1];
    for (std::size_t j = 0; j + 1 < k; ++j) {
        Int gj = gcd(s[j], last);
        Int step = last / gj;
        Int t;
        mpz_fdiv_q(t.get_mpz_t(), Int(2 * c[j] + step).get_mpz_t(), Int(2 * step).get_mpz_t());
        c[j] -= t * step;
        c[k - 1] += t * (s[j] / gj);
    }
    return c;
}

}  // namespace

std::string Generator::name() const {
    const char* k = kind == GeneratorKind::H1 ? "h1_" : kind == GeneratorKind::H2 ? "h2_" : "h3_";
    return k + std::to_string(index);
}

GcdChain gcd_chain(const LatticeModel& m) {
    degree_one_gcd(m);  // validates the index
    GcdChain c;
    const std::size_t n = m.total_rank();
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.in_tstar(m.fundamental_weight(i))) c.order.push_back(i);
    }
    c.nprime = c.order.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m.in_tstar(m.fundamental_weight(i))) c.order.push_back(i);
    }
    for (std::size_t k = 0; k < c.nprime; ++k) c.s.push_back(m.orbit_size(m.fundamental_weight(c.order[k])));

    PolyTuple rho = rho_tuple(m);
    for (std::size_t k = 0; k < c.nprime; ++k) {
        IntVec tail(c.s.begin() + static_cast<long>(k), c.s.end());
        IntVec b = bezout(tail);
        IntVec row(c.nprime, 0);
        Int dk = 0;
        LaurentPoly rt(n);
        for (std::size_t j = k; j < c.nprime; ++j) {
            row[j] = b[j - k];
            dk += row[j] * c.s[j];
            rt += rho[c.order[j]].scale(row[j]);
        }
        Int g = 0;
        for (const auto& v : tail) g = gcd(g, v);
        if (dk != g) throw InternalError("Bezout coefficients do not reproduce the gcd");
        if (rt.coeff(Exponent(n, 0)) != -dk) throw InternalError("constant term of rho_tilde differs from -d_i");
        c.d.push_back(dk);
        c.a.push_back(row);
        c.rho_tilde.push_back(rt);
    }
    for (std::size_t k = 0; k + 1 < c.nprime; ++k) {
        if (!divides(c.d[k], c.d[k + 1])) throw InternalError("gcd chain is not a divisibility chain");
    }
    return c;
}

GeneratorSet build_generators(const LatticeModel& m, const GcdChain& chain, std::optional<Weight> lambda0) {
    const std::size_t n = m.total_rank();
    const std::size_t np = chain.nprime;
    GeneratorSet out;
    out.lambda0 = lambda0 ? *lambda0 : m.fundamental_weight(chain.order[0]);
    if (out.lambda0.size() != n || m.in_tstar(out.lambda0)) {
        throw PreconditionError("lambda0 must be a weight of degree 1");
    }
    LaurentPoly e0 = LaurentPoly::monomial(Exponent(out.lambda0.begin(), out.lambda0.end()));
    PolyTuple rho = rho_tuple(m);
    auto orbit = [&](std::size_t k) { return rho[chain.order[k]] + LaurentPoly::constant(n, chain.s[k]); };
    auto zeros = [&] { return PolyTuple(n, LaurentPoly(n)); };

    for (std::size_t k = 0; k + 1 < np; ++k) {
        Int r = lcm(chain.s[k], chain.d[k + 1]);
        Int u = r / chain.s[k];
        Int v = r / chain.d[k + 1];
        Generator g{GeneratorKind::H1, k + 1, LaurentPoly(n), zeros()};
        LaurentPoly rt = chain.rho_tilde[k + 1] + LaurentPoly::constant(n, chain.d[k + 1]);
        g.value = e0 * (orbit(k).scale(u) - rt.scale(v));
        g.expansion[chain.order[k]] = e0.scale(u);
        for (std::size_t j = k + 1; j < np; ++j) g.expansion[chain.order[j]] -= e0.scale(v * chain.a[k + 1][j]);
        out.gens.push_back(std::move(g));
    }
    LaurentPoly rt1 = chain.rho_tilde[0] + LaurentPoly::constant(n, chain.d[0]);
    for (std::size_t k = 0; k < np; ++k) {
        Generator g{GeneratorKind::H2, k + 1, LaurentPoly(n), zeros()};
        g.value = orbit(k) * rt1 - LaurentPoly::constant(n, chain.d[0] * chain.s[k]);
        for (std::size_t j = 0; j < np; ++j) g.expansion[chain.order[j]] = orbit(k).scale(chain.a[0][j]);
        g.expansion[chain.order[k]] += LaurentPoly::constant(n, chain.d[0]);
        out.gens.push_back(std::move(g));
    }
    for (std::size_t k = np; k < n; ++k) {
        Generator g{GeneratorKind::H3, k + 1, rho[chain.order[k]], zeros()};
        g.expansion[chain.order[k]] = LaurentPoly::constant(n, 1);
        out.gens.push_back(std::move(g));
    }

    for (const auto& g : out.gens) {
        if (degree_zero_part(m, g.value) != g.value) throw InternalError(g.name() + " is not of degree 0");
        if (g.value.augmentation() != 0) throw InternalError(g.name() + " has nonzero augmentation");
        if (pairing(g.expansion, rho) != g.value) throw InternalError(g.name() + " expansion mismatch");
    }
    return out;
}

LaurentPoly expand_combination(const GeneratorSet& gens, const PolyTuple& coefficients) {
    if (coefficients.size() != gens.gens.size()) throw PreconditionError("one coefficient per generator expected");
    LaurentPoly s(gens.gens.front().value.rank());
    for (std::size_t g = 0; g < coefficients.size(); ++g) {
        if (!coefficients[g].is_zero()) s += coefficients[g] * gens.gens[g].value;
    }
    return s;
}

Reduction reduce_to_generators(const LatticeModel& m, const GcdChain& chain, const GeneratorSet& gens,
                               const PolyTuple& f) {
    const std::size_t n = m.total_rank();
    const std::size_t np = chain.nprime;
    if (f.size() != n) throw PreconditionError("coefficient tuple length differs from the rank");
    PolyTuple rho = rho_tuple(m);

    Reduction out;
    out.element = pairing(f, rho);
    out.coefficients.assign(gens.gens.size(), LaurentPoly(n));

    Int d = chain.d[0];
    NewtonTransform reduced = d > 1 ? newton_transform(m, CoefficientRing(d)) : NewtonTransform{};
    PolyTuple g = normalize_coefficients(m, f, reduced);

    auto check = [&](const char* step) {
        if (pairing(g, rho) + expand_combination(gens, out.coefficients) != out.element) {
            throw InternalError(std::string(step) + " broke the running equality");
        }
    };
    auto subtract = [&](std::size_t gen, const LaurentPoly& c, const PolyTuple& expansion) {
        out.coefficients[gen] += c;
        for (std::size_t i = 0; i < n; ++i) {
            if (!expansion[i].is_zero()) g[i] -= c * expansion[i];
        }
    };
    const std::size_t h2 = np - 1;
    const std::size_t h3 = h2 + np;

    // Step 1: clear degree-0 parts of g_i, i <= n', with h2.
    for (std::size_t k = 0; k < np; ++k) {
        std::size_t i = chain.order[k];
        LaurentPoly c = divide_or_fail(degree_zero_part(m, g[i]), d, "step 1");
        if (!c.is_zero()) subtract(h2 + k, c, gens.gens[h2 + k].expansion);
    }
    check("step 1");

    // Step 2: clear degree-1 parts of g_i, i > n', with rho_tilde(omega_1) h3.
    LaurentPoly rt1 = chain.rho_tilde[0] + LaurentPoly::constant(n, d);
    for (std::size_t k = np; k < n; ++k) {
        std::size_t i = chain.order[k];
        LaurentPoly c = divide_or_fail(g[i] - degree_zero_part(m, g[i]), d, "step 2");
        if (c.is_zero()) continue;
        PolyTuple expansion(n, LaurentPoly(n));
        for (std::size_t j = 0; j < np; ++j) expansion[chain.order[j]] = rho[i].scale(chain.a[0][j]);
        expansion[i] += LaurentPoly::constant(n, d);
        out.coefficients[h3 + k - np] += c * rt1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!expansion[j].is_zero()) g[j] -= c * expansion[j];
        }
    }
    check("step 2");

    // Step 3: the remaining g_i, i > n', lie in R[T*].
    for (std::size_t k = np; k < n; ++k) {
        std::size_t i = chain.order[k];
        if (degree_zero_part(m, g[i]) != g[i]) throw InternalError("step 3: coefficient is not of degree 0");
        out.coefficients[h3 + k - np] += g[i];
        g[i] = LaurentPoly(n);
    }
    check("step 3");

    // Step 4: eliminate g_i, i < n', with h1.
    LaurentPoly e0_inv = LaurentPoly::monomial([&] {
        Exponent e(gens.lambda0.begin(), gens.lambda0.end());
        for (auto& v : e) v = -v;
        return e;
    }());
    for (std::size_t k = 0; k + 1 < np; ++k) {
        std::size_t i = chain.order[k];
        if (!degree_zero_part(m, g[i]).is_zero()) throw InternalError("step 4: degree-0 part reappeared");
        Int q = lcm(chain.s[k], chain.d[k + 1]) / chain.s[k];
        LaurentPoly c = divide_or_fail(g[i], q, "step 4") * e0_inv;
        if (!c.is_zero()) subtract(k, c, gens.gens[k].expansion);
        if (!g[i].is_zero()) throw InternalError("step 4: coefficient not cleared");
    }
    check("step 4");
    for (std::size_t i = 0; i < n; ++i) {
        if (!g[i].is_zero()) throw InternalError("reduction left a nonzero coefficient");
    }
    for (const auto& c : out.coefficients) {
        if (degree_zero_part(m, c) != c) throw InternalError("generator coefficient is not of degree 0");
    }
    return out;
}

}  // namespace weylinv
