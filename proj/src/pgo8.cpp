#include "weylinv/pgo8.hpp"

#include "weylinv/random_poly.hpp"
#include "weylinv/spec_parser.hpp"

namespace weylinv {

LatticeModel pgo8_model() { return LatticeModel(parse_spec("PGO(8)")); }

Lattice pgo8_sublattice() {
    // With w1 = e1, w2 = e1 + e2, w3 = (e1 + e2 + e3 - e4)/2, w4 = (e1 + e2 + e3 + e4)/2:
    // 2 x_1 = 2a_1 + 2a_2 + a_3 + a_4 and 2(x_2 + x_3 + x_4) = 2a_2 + a_3 + 3a_4.
    return Lattice::from_congruences(4, {{2, 2, 1, 1}, {0, 2, 1, 3}}, {4, 4});
}

std::vector<LaurentPoly> decompose_invariant(const LatticeModel& m, const LaurentPoly& x) {
    std::size_t n = m.total_rank();
    if (x.rank() != n || !x.ring().is_integers()) throw PreconditionError("x must be over Z on the weight lattice");
    if (x.augmentation() != 0) throw PreconditionError("x must have augmentation 0");

    // Height of w_i in simple-root coordinates; subtracting a positive root lowers it.
    std::vector<Rat> height(n);
    for (std::size_t f = 0; f < m.num_factors(); ++f) {
        const auto& cartan = m.root_system(f).cartan();
        IntMat c;
        for (const auto& row : cartan) c.emplace_back(row.begin(), row.end());
        RatMat inv = rat_inverse(to_rational(c));
        for (std::size_t i = 0; i < inv.size(); ++i) {
            Rat h = 0;
            for (const auto& v : inv[i]) h += v;
            height[m.offset(f) + i] = h;
        }
    }

    std::vector<std::vector<LaurentPoly>> powers(n);
    auto power = [&](std::size_t i, long k) -> const LaurentPoly& {
        auto& p = powers[i];
        if (p.empty()) p.push_back(LaurentPoly::constant(n, 1));
        while (static_cast<long>(p.size()) <= k) p.push_back(p.back() * m.rho(i));
        return p[static_cast<std::size_t>(k)];
    };

    // x = P(rho(w_1), ..., rho(w_n)) by peeling off highest dominant terms.
    std::map<Exponent, Int> poly;
    LaurentPoly rest = x;
    while (!rest.is_zero()) {
        const Term* best = nullptr;
        Rat best_height;
        for (const auto& t : rest.terms()) {
            if (std::any_of(t.exp.begin(), t.exp.end(), [](long a) { return a < 0; })) continue;
            Rat h = 0;
            for (std::size_t i = 0; i < n; ++i) h += height[i] * t.exp[i];
            if (!best || h > best_height) {
                best = &t;
                best_height = h;
            }
        }
        if (!best) throw PreconditionError("x is not W-invariant");
        Exponent a = best->exp;
        Int c = best->coeff;
        LaurentPoly prod = LaurentPoly::constant(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != 0) prod = prod * power(i, a[i]);
        }
        rest -= prod.scale(c);
        poly[a] += c;
    }

    // prod u^a - prod s^a telescopes into multiples of u_i - s_i = rho_i.
    std::vector<Int> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = m.orbit_size(m.fundamental_weight(i));
    std::vector<LaurentPoly> f(n, LaurentPoly(n));
    for (const auto& [a, c] : poly) {
        LaurentPoly prefix = LaurentPoly::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] > 0) {
                Int suffix = 1;
                for (std::size_t j = i + 1; j < n; ++j) {
                    Int sj;
                    mpz_pow_ui(sj.get_mpz_t(), s[j].get_mpz_t(), static_cast<unsigned long>(a[j]));
                    suffix *= sj;
                }
                LaurentPoly mid(n);
                for (long k = 0; k < a[i]; ++k) {
                    Int sk;
                    mpz_pow_ui(sk.get_mpz_t(), s[i].get_mpz_t(), static_cast<unsigned long>(a[i] - 1 - k));
                    mid += power(i, k).scale(sk);
                }
                f[i] += (prefix * mid).scale(suffix);
                prefix = prefix * power(i, a[i]);
            }
        }
    }

    LaurentPoly check(n);
    for (std::size_t i = 0; i < n; ++i) check += f[i] * m.rho_aug(i);
    if (check != x) throw InternalError("decomposition does not reproduce x");
    return f;
}

ParityReport pgo8_parity_check(const std::array<LaurentPoly, 4>& f) {
    LatticeModel m = pgo8_model();
    ParityReport r;
    LaurentPoly x(4);
    for (std::size_t i = 0; i < 4; ++i) {
        if (f[i].rank() != 4 || !f[i].ring().is_integers()) throw PreconditionError("f_i must be over Z in rank 4");
        x += f[i] * m.rho_aug(i);
        r.augmentations[i] = f[i].augmentation();
        r.even[i] = divides(2, r.augmentations[i]);
    }
    r.in_tstar = std::all_of(x.terms().begin(), x.terms().end(), [&](const Term& t) { return m.in_tstar(t.exp); });
    r.claim_holds = !r.in_tstar || (r.even[0] && r.even[2] && r.even[3]);
    for (const auto& t : f[0].terms()) r.f1_component_sums[m.class_of(t.exp)] += t.coeff;
    r.x_mod16 = QuotientRing(m.tstar(), 16).reduce(x);
    return r;
}

std::vector<std::array<LaurentPoly, 4>> pgo8_sample_tuples(std::size_t count, std::uint64_t seed) {
    LatticeModel m = pgo8_model();
    RandomSource g(seed);
    std::vector<std::array<LaurentPoly, 4>> out;
    while (out.size() < count) {
        long parity = g.range(0, 1);
        std::array<long, 4> a{parity, g.range(0, 1), parity, parity};
        if (parity == 0 && g.coin()) a[g.coin() ? 0 : 2] = 2;
        LaurentPoly x = LaurentPoly::constant(4, 1);
        Int aug = 1;
        for (std::size_t i = 0; i < 4; ++i) {
            for (long k = 0; k < a[i]; ++k) {
                x = x * m.rho(i);
                aug *= m.orbit_size(m.fundamental_weight(i));
            }
        }
        x -= LaurentPoly::constant(4, aug);
        if (g.range(0, 2) == 0) {
            Weight w(4);
            do {
                for (auto& v : w) v = g.range(0, 1);
            } while (!m.in_tstar(w));
            x += m.orbit_poly(w, true).scale(Int(g.range(-2, 2)));
        }
        if (x.is_zero()) continue;
        std::vector<LaurentPoly> base = decompose_invariant(m, x);
        std::array<LaurentPoly, 4> f{base[0], base[1], base[2], base[3]};
        auto i = static_cast<std::size_t>(g.range(0, 3)), j = static_cast<std::size_t>(g.range(0, 3));
        LaurentPoly h = g.poly(4, CoefficientRing::integers(), 3, -1, 1, 3);
        f[i] += h * m.rho_aug(j);
        f[j] -= h * m.rho_aug(i);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace weylinv
