#include "weylinv/newton.hpp"

namespace weylinv {

namespace {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// e_0, ..., e_len of the given polynomials.
PolyTuple elementary(const PolyTuple& zs, std::size_t rank) {
    PolyTuple e(zs.size() + 1, LaurentPoly(rank));
    e[0] = LaurentPoly::constant(rank, 1);
    for (std::size_t t = 0; t < zs.size(); ++t) {
        for (std::size_t j = t + 1; j >= 1; --j) e[j] += e[j - 1] * zs[t];
    }
    return e;
}

LaurentPoly complete_homogeneous(const PolyTuple& zs, std::size_t k, std::size_t rank) {
    // h[a] over a growing prefix of zs.
    PolyTuple h(k + 1, LaurentPoly(rank));
    h[0] = LaurentPoly::constant(rank, 1);
    for (const auto& z : zs) {
        for (std::size_t a = 1; a <= k; ++a) h[a] += z * h[a - 1];
    }
    return h[k];
}

std::vector<std::vector<long>> identity_long(std::size_t n) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

NewtonTransform transform_over_z(const SimpleFactor& f) {
    if (f.type != DynkinType::A && f.type != DynkinType::C) {
        throw PreconditionError("no Newton transform for type " + f.label());
    }
    const bool type_a = f.type == DynkinType::A;
    const std::size_t n = static_cast<std::size_t>(f.rank);
    const std::size_t N = type_a ? n + 1 : n;
    const long c = type_a ? 1 : 2;

    NewtonTransform t;
    t.rank = n;
    t.to_flat = identity_long(n);
    t.from_flat = identity_long(n);
    if (!type_a) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = j; i < n; ++i) t.to_flat[j][i] = 1;
            if (j + 1 < n) t.from_flat[j][j + 1] = -1;
        }
    }

    // Images of the y-variables.
    PolyTuple phi;
    for (std::size_t i = 0; i < N; ++i) {
        if (type_a) {
            LaurentPoly p = LaurentPoly::constant(n, 1);
            if (i < n) p = p * LaurentPoly::variable(n, i);
            if (i > 0) p = p * LaurentPoly::variable(n, i - 1, -1);
            phi.push_back(p);
        } else {
            phi.push_back(LaurentPoly::variable(n, i) + LaurentPoly::variable(n, i, -1));
        }
    }
    PolyTuple z;
    for (const auto& p : phi) z.push_back(LaurentPoly::constant(n, c) - p);

    PolyTuple E = elementary(z, n);
    PolyTuple H(N + 1, LaurentPoly(n));
    H[0] = LaurentPoly::constant(n, 1);
    for (std::size_t a = 1; a <= N; ++a) {
        for (std::size_t i = 1; i <= a; ++i) {
            LaurentPoly term = E[i] * H[a - i];
            if (i % 2) {
                H[a] += term;
            } else {
                H[a] -= term;
            }
        }
    }

    RootSystem rs(f);
    for (std::size_t j = 0; j < n; ++j) {
        Weight w(n, 0);
        w[j] = 1;
        std::vector<Term> terms;
        for (const auto& v : rs.orbit(w)) {
            Exponent e(n, 0);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t s = 0; s < n; ++s) e[r] += t.to_flat[r][s] * v[s];
            }
            terms.push_back({e, 1});
        }
        Int size = static_cast<long>(terms.size());
        t.rho.push_back(LaurentPoly::from_terms(n, std::move(terms)) - LaurentPoly::constant(n, size));
    }

    // G_k = h_k(z_1, ..., z_{N+1-k}) = sum_j rho_j A(j, k).
    auto column = [&](std::size_t k) {
        std::size_t m = N + 1 - k;
        PolyTuple tail(z.begin() + static_cast<long>(m), z.end());
        PolyTuple et = elementary(tail, n);
        std::vector<LaurentPoly> coeff_e(k + 1, LaurentPoly(n));
        for (std::size_t i = 1; i <= k; ++i) {
            for (std::size_t j = 0; j + i <= k && j < et.size(); ++j) {
                LaurentPoly term = et[j] * H[k - j - i];
                if ((j + i + 1) % 2 == 0) {
                    coeff_e[i] += term;
                } else {
                    coeff_e[i] -= term;
                }
            }
        }
        PolyTuple col(n, LaurentPoly(n));
        for (std::size_t j = 1; j <= n; ++j) {
            for (std::size_t i = j; i <= k; ++i) {
                Int s = binomial(static_cast<long>(N - j), static_cast<long>(i - j));
                Int cp;
                mpz_ui_pow_ui(cp.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(i - j));
                s *= cp;
                if (j % 2) s = -s;
                col[j - 1] += coeff_e[i].scale(s);
            }
        }
        LaurentPoly g = complete_homogeneous(PolyTuple(z.begin(), z.begin() + static_cast<long>(m)), k, n);
        if (pairing(col, t.rho) != g) throw InternalError("Newton expansion of G_k does not match");
        return std::make_pair(col, g);
    };

    t.A = PolyMatrix(n, std::vector<LaurentPoly>(n, LaurentPoly(n)));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = type_a ? n + 1 - i : n - i;
        auto [col, g] = column(k);
        Degrees d = *g.degrees(i);
        const LaurentPoly lead = g.slice(i, d.hdeg);
        if (lead.size() != 1) throw InternalError("Newton tuple entry is not monic up to sign");
        if (lead.terms().front().coeff == -1) {
            g = -g;
            for (auto& e : col) e = -e;
        }
        for (std::size_t j = 0; j < n; ++j) t.A[j][i] = col[j];
        t.flat.push_back(g);
    }

    if (type_a) {
        // sum_{k=1}^{n+1} G_k x_{n+1-k} = 0 with x_0 = 1.
        LaurentPoly rel(n);
        for (std::size_t k = 1; k <= n + 1; ++k) {
            LaurentPoly g = column(k).second;
            rel += k == n + 1 ? g : g * LaurentPoly::variable(n, n - k);
        }
        if (!rel.is_zero()) throw InternalError("type A relation eliminating the last generator fails");
    }

    t.det = determinant(t.A);
    if (!is_unit_monomial(t.det)) throw InternalError("Newton transform determinant is not a unit monomial");
    t.A_inv = unit_inverse(t.A);
    return t;
}

void reduce_in_place(NewtonTransform& t, const CoefficientRing& ring) {
    t.ring = ring;
    if (ring.is_integers()) return;
    for (auto& p : t.rho) p = p.reduce_coefficients(ring.modulus);
    for (auto& p : t.flat) p = p.reduce_coefficients(ring.modulus);
    t.A = reduce_matrix(t.A, ring.modulus);
    t.A_inv = reduce_matrix(t.A_inv, ring.modulus);
    t.det = t.det.reduce_coefficients(ring.modulus);
}

}  // namespace

NewtonTransform newton_transform(const SimpleFactor& f, CoefficientRing ring) {
    NewtonTransform t = transform_over_z(f);
    reduce_in_place(t, ring);
    return t;
}

bool has_newton_transform(const LatticeModel& m) {
    for (std::size_t f = 0; f < m.num_factors(); ++f) {
        DynkinType ty = m.root_system(f).factor().type;
        if (ty != DynkinType::A && ty != DynkinType::C) return false;
    }
    return true;
}

NewtonTransform newton_transform(const LatticeModel& m, CoefficientRing ring) {
    const std::size_t n = m.total_rank();
    NewtonTransform t;
    t.rank = n;
    t.to_flat.assign(n, std::vector<long>(n, 0));
    t.from_flat.assign(n, std::vector<long>(n, 0));
    t.A = PolyMatrix(n, std::vector<LaurentPoly>(n, LaurentPoly(n)));
    t.A_inv = t.A;
    t.det = LaurentPoly::constant(n, 1);
    for (std::size_t f = 0; f < m.num_factors(); ++f) {
        NewtonTransform b = transform_over_z(m.root_system(f).factor());
        std::size_t off = m.offset(f);
        for (std::size_t i = 0; i < b.rank; ++i) {
            for (std::size_t j = 0; j < b.rank; ++j) {
                t.to_flat[off + i][off + j] = b.to_flat[i][j];
                t.from_flat[off + i][off + j] = b.from_flat[i][j];
                t.A[off + i][off + j] = b.A[i][j].embed(n, off);
                t.A_inv[off + i][off + j] = b.A_inv[i][j].embed(n, off);
            }
            t.rho.push_back(b.rho[i].embed(n, off));
            t.flat.push_back(b.flat[i].embed(n, off));
        }
        t.det = t.det * b.det.embed(n, off);
    }
    reduce_in_place(t, ring);
    return t;
}

SyzygyCertificate trivialize_rho_syzygy(const NewtonTransform& t, const PolyTuple& f) {
    PolyTuple g;
    for (const auto& p : f) g.push_back(t.to_flat_coords(p));
    SyzygyCertificate c = trivialize_via_transform(t.rho, t.A, t.A_inv, g);
    SyzygyCertificate out;
    for (const auto& [ij, p] : c) out.emplace(ij, t.from_flat_coords(p));
    return out;
}

namespace {

void require_index_two(const LatticeModel& m) {
    const FactorGroup& g = m.grading_group();
    if (g.free_rank != 0 || g.factors != IntVec{2}) {
        throw PreconditionError("the character lattice must have index 2 in the weight lattice");
    }
}

LaurentPoly degree_part(const LatticeModel& m, const LaurentPoly& f, bool degree_one) {
    LaurentPoly zero = homogeneous_component(f, m.grading(), m.grading().zero());
    return degree_one ? f - zero : zero;
}

}  // namespace

Int degree_one_gcd(const LatticeModel& m) {
    require_index_two(m);
    Int d = 0;
    for (std::size_t i = 0; i < m.total_rank(); ++i) {
        if (!m.in_tstar(m.fundamental_weight(i))) d = gcd(d, m.orbit_size(m.fundamental_weight(i)));
    }
    return d;
}

PolyTuple normalize_coefficients(const LatticeModel& m, const PolyTuple& f, const NewtonTransform& reduced) {
    const std::size_t n = m.total_rank();
    if (f.size() != n) throw PreconditionError("coefficient tuple length differs from the rank");
    if (!has_newton_transform(m)) {
        throw PreconditionError("generalized flatness is only available for factors of type A and C");
    }
    Int d = degree_one_gcd(m);

    PolyTuple rho;
    for (std::size_t i = 0; i < n; ++i) rho.push_back(m.rho_aug(i));
    LaurentPoly total = pairing(f, rho);
    if (!degree_part(m, total, true).is_zero()) throw PreconditionError("sum f_i rho_i is not of degree 0");
    if (d == 1) return f;
    if (!(reduced.ring == CoefficientRing(d))) throw PreconditionError("transform must be reduced modulo d");

    PolyTuple fbar;
    std::vector<bool> odd(n);
    for (std::size_t i = 0; i < n; ++i) {
        odd[i] = !m.in_tstar(m.fundamental_weight(i));
        fbar.push_back(degree_part(m, f[i], !odd[i]).reduce_coefficients(d));
    }
    bool zero = true;
    for (const auto& p : fbar) zero = zero && p.is_zero();
    if (zero) return f;

    SyzygyCertificate cert = lift_syzygy(trivialize_rho_syzygy(reduced, fbar));
    PolyTuple h = expand_certificate(cert, rho);
    PolyTuple g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = f[i] - h[i];

    if (pairing(g, rho) != total) throw InternalError("normalization changed sum f_i rho_i");
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPoly part = degree_part(m, g[i], !odd[i]);
        for (const auto& t : part.terms()) {
            if (!divides(d, t.coeff)) throw InternalError("normalized coefficient is not divisible by d");
        }
    }
    return g;
}

}  // namespace weylinv
