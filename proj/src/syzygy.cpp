#include "weylinv/syzygy.hpp"

#include <sstream>

namespace weylinv {

namespace {

void require_same_shape(const PolyTuple& t, const PolyTuple& f) {
    if (t.size() != f.size()) throw PreconditionError("tuple lengths differ");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(t[i].ring() == t[0].ring()) || !(f[i].ring() == t[0].ring())) {
            throw RingMismatch("tuple entries live over different coefficient rings");
        }
        if (t[i].rank() != t[0].rank() || f[i].rank() != t[0].rank()) {
            throw PreconditionError("tuple entries have different ranks");
        }
    }
}

// Exponent of the monomial factor carried on axes above i, or nullopt when
// the entry genuinely depends on such an axis.
std::optional<Exponent> upper_monomial(const LaurentPoly& p, std::size_t i) {
    Exponent mu(p.rank(), 0);
    const Exponent& first = p.terms().front().exp;
    for (std::size_t k = i + 1; k < p.rank(); ++k) mu[k] = first[k];
    for (const auto& t : p.terms()) {
        for (std::size_t k = i + 1; k < p.rank(); ++k) {
            if (t.exp[k] != mu[k]) return std::nullopt;
        }
    }
    return mu;
}

Exponent negate(Exponent e) {
    for (auto& v : e) v = -v;
    return e;
}

// Over a domain (Z or Z/p), with t[i] using only axes 0..i and monic in axis i.
void trivialize_domain(const PolyTuple& t, PolyTuple f, std::size_t n, const Exponent& shift,
                       SyzygyCertificate& out) {
    bool all_zero = true;
    for (std::size_t i = 0; i < n; ++i) all_zero = all_zero && f[i].is_zero();
    if (all_zero) return;
    if (n == 1) throw InternalError("nonzero syzygy of a single divisor over a domain");

    const std::size_t axis = n - 1;
    const LaurentPoly& p = t[axis];
    long d = 0;
    bool have = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i].is_zero()) continue;
        long l = f[i].degrees(axis)->ldeg;
        d = have ? std::min(d, l) : l;
        have = true;
    }

    LaurentPoly last = f[axis];
    std::vector<LaurentPoly> rest(axis);
    for (std::size_t i = 0; i < axis; ++i) {
        DivisionResult qr = bounded_divide(f[i], p, axis, d);
        if (!qr.q.is_zero()) add_to_certificate(out, i, axis, qr.q.shift(shift));
        last += qr.q * t[i];
        rest[i] = std::move(qr.r);
    }
    if (!last.is_zero()) throw InternalError("residual last entry after bounded division is nonzero");

    long wdeg = p.degrees(axis)->wdeg;
    for (long k = d; k < d + wdeg; ++k) {
        PolyTuple sl(t.size(), LaurentPoly(p.rank(), p.ring()));
        bool any = false;
        for (std::size_t i = 0; i < axis; ++i) {
            sl[i] = rest[i].slice(axis, k);
            any = any || !sl[i].is_zero();
        }
        if (!any) continue;
        Exponent s = shift;
        s[axis] += k;
        trivialize_domain(t, std::move(sl), axis, s, out);
    }
}

SyzygyCertificate trivialize_normalized(const PolyTuple& t, const PolyTuple& f) {
    const CoefficientRing& ring = t[0].ring();
    SyzygyCertificate out;
    if (ring.is_integers() || prime_factors(ring.modulus).size() == 1) {
        trivialize_domain(t, f, t.size(), Exponent(t[0].rank(), 0), out);
        return out;
    }
    std::vector<Int> primes = prime_factors(ring.modulus);
    Int p = primes.back();
    Int l = exact_div(ring.modulus, p);

    PolyTuple tl, fl;
    for (std::size_t i = 0; i < t.size(); ++i) {
        tl.push_back(t[i].reduce_coefficients(l));
        fl.push_back(f[i].reduce_coefficients(l));
    }
    SyzygyCertificate g = trivialize_normalized(tl, fl);
    for (auto& [ij, c] : g) c = c.lift().in_ring(ring);

    PolyTuple e = expand_certificate(g, t);
    PolyTuple tp, fp;
    CoefficientRing rp(p);
    for (std::size_t i = 0; i < t.size(); ++i) {
        LaurentPoly rem = (f[i] - e[i]).lift();
        std::vector<Term> terms;
        for (const auto& term : rem.terms()) {
            if (!divides(l, term.coeff)) throw InternalError("lifted syzygy residue is not divisible by l");
            terms.push_back({term.exp, exact_div(term.coeff, l)});
        }
        fp.push_back(LaurentPoly::from_terms(rem.rank(), std::move(terms), rp));
        tp.push_back(t[i].reduce_coefficients(p));
    }
    SyzygyCertificate h = trivialize_normalized(tp, fp);
    for (const auto& [ij, c] : h) add_to_certificate(g, ij.first, ij.second, c.lift().scale(l).in_ring(ring));
    return g;
}

}  // namespace

FlatnessReport check_flatness(const PolyTuple& t) {
    FlatnessReport rep;
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::ostringstream why;
        if (t[i].rank() < t.size()) {
            why << "entry " << i + 1 << ": rank " << t[i].rank() << " is smaller than the tuple length";
        } else if (t[i].is_zero()) {
            why << "entry " << i + 1 << ": zero";
        } else if (!upper_monomial(t[i], i)) {
            why << "entry " << i + 1 << ": involves a variable beyond x" << i + 1;
        } else if (!t[i].is_divisor(i)) {
            why << "entry " << i + 1 << ": leading coefficient in x" << i + 1 << " is not a monic monomial";
        }
        if (!why.str().empty()) {
            rep.flat = false;
            rep.diagnostics.push_back(why.str());
        }
    }
    return rep;
}

LaurentPoly pairing(const PolyTuple& f, const PolyTuple& t) {
    if (f.size() != t.size() || t.empty()) throw PreconditionError("pairing needs equal nonempty tuples");
    LaurentPoly s(t[0].rank(), t[0].ring());
    for (std::size_t i = 0; i < t.size(); ++i) s += f[i] * t[i];
    return s;
}

void add_to_certificate(SyzygyCertificate& c, std::size_t i, std::size_t j, const LaurentPoly& g) {
    if (i == j) throw PreconditionError("trivial syzygy needs distinct indices");
    LaurentPoly v = i < j ? g : -g;
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = c.find(key);
    if (it == c.end()) {
        if (!v.is_zero()) c.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
}

PolyTuple expand_certificate(const SyzygyCertificate& c, const PolyTuple& t) {
    if (t.empty()) throw PreconditionError("empty tuple");
    PolyTuple f(t.size(), LaurentPoly(t[0].rank(), t[0].ring()));
    for (const auto& [ij, g] : c) {
        auto [i, j] = ij;
        if (j >= t.size()) throw PreconditionError("certificate index out of range");
        f[i] += g * t[j];
        f[j] -= g * t[i];
    }
    return f;
}

SyzygyCertificate trivialize_syzygy(const PolyTuple& t, const PolyTuple& f) {
    if (t.empty()) throw PreconditionError("empty tuple");
    require_same_shape(t, f);
    FlatnessReport rep = check_flatness(t);
    if (!rep.flat) throw PreconditionError("tuple is not flat: " + rep.diagnostics.front());
    if (!pairing(f, t).is_zero()) throw PreconditionError("input is not a syzygy");

    // Strip the monomial factors on higher axes, solve, and rescale.
    std::vector<Exponent> mu(t.size());
    PolyTuple tn, fn;
    for (std::size_t i = 0; i < t.size(); ++i) {
        mu[i] = *upper_monomial(t[i], i);
        tn.push_back(t[i].shift(negate(mu[i])));
        fn.push_back(f[i].shift(mu[i]));
    }
    SyzygyCertificate c = trivialize_normalized(tn, fn);
    SyzygyCertificate out;
    for (const auto& [ij, g] : c) {
        Exponent s = negate(mu[ij.first]);
        for (std::size_t k = 0; k < s.size(); ++k) s[k] -= mu[ij.second][k];
        add_to_certificate(out, ij.first, ij.second, g.shift(s));
    }
    if (expand_certificate(out, t) != f) throw InternalError("certificate does not reproduce the syzygy");
    return out;
}

SyzygyCertificate lift_syzygy(const SyzygyCertificate& c) {
    SyzygyCertificate out;
    for (const auto& [ij, g] : c) {
        LaurentPoly l = g.lift();
        if (!l.is_zero()) out.emplace(ij, std::move(l));
    }
    return out;
}

SyzygyCertificate reduce_certificate(const SyzygyCertificate& c, const Int& m) {
    SyzygyCertificate out;
    for (const auto& [ij, g] : c) {
        LaurentPoly r = g.reduce_coefficients(m);
        if (!r.is_zero()) out.emplace(ij, std::move(r));
    }
    return out;
}

PolyMatrix poly_identity(std::size_t n, std::size_t rank, const CoefficientRing& ring) {
    PolyMatrix a(n, std::vector<LaurentPoly>(n, LaurentPoly(rank, ring)));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = LaurentPoly::constant(rank, 1, ring);
    return a;
}

PolyTuple row_times_matrix(const PolyTuple& v, const PolyMatrix& a) {
    if (a.size() != v.size() || v.empty()) throw PreconditionError("shape mismatch in row_times_matrix");
    std::size_t cols = a[0].size();
    PolyTuple out(cols, LaurentPoly(v[0].rank(), v[0].ring()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols; ++j) {
            if (!a[i][j].is_zero()) out[j] += v[i] * a[i][j];
        }
    }
    return out;
}

PolyTuple matrix_times_column(const PolyMatrix& a, const PolyTuple& v) {
    if (a.empty() || a[0].size() != v.size()) throw PreconditionError("shape mismatch in matrix_times_column");
    PolyTuple out(a.size(), LaurentPoly(v[0].rank(), v[0].ring()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
        }
    }
    return out;
}

PolyMatrix reduce_matrix(const PolyMatrix& a, const Int& m) {
    PolyMatrix out = a;
    for (auto& row : out) {
        for (auto& e : row) e = e.reduce_coefficients(m);
    }
    return out;
}

namespace {

// Determinant of the rows `rows` (in order) against the columns in `mask`,
// by expansion along the first row with memoization on the column set.
LaurentPoly minor_det(const PolyMatrix& a, const std::vector<std::size_t>& rows, std::size_t depth, unsigned mask,
                      std::vector<std::optional<LaurentPoly>>& memo) {
    const LaurentPoly& proto = a[0][0];
    if (depth == rows.size()) return LaurentPoly::constant(proto.rank(), 1, proto.ring());
    if (memo[mask]) return *memo[mask];
    LaurentPoly s(proto.rank(), proto.ring());
    int sign = 1;
    for (std::size_t j = 0; j < a[0].size(); ++j) {
        if (!(mask & (1u << j))) continue;
        const LaurentPoly& e = a[rows[depth]][j];
        if (!e.is_zero()) {
            LaurentPoly m = e * minor_det(a, rows, depth + 1, mask & ~(1u << j), memo);
            if (sign > 0) {
                s += m;
            } else {
                s -= m;
            }
        }
        sign = -sign;
    }
    memo[mask] = s;
    return s;
}

LaurentPoly det_rows_cols(const PolyMatrix& a, const std::vector<std::size_t>& rows, unsigned mask) {
    std::vector<std::optional<LaurentPoly>> memo(std::size_t(1) << a[0].size());
    return minor_det(a, rows, 0, mask, memo);
}

}  // namespace

LaurentPoly determinant(const PolyMatrix& a) {
    std::size_t n = a.size();
    if (n == 0 || a[0].size() != n) throw PreconditionError("determinant of a non-square matrix");
    if (n > 20) throw PreconditionError("determinant: matrix too large");
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    return det_rows_cols(a, rows, (1u << n) - 1);
}

bool is_unit_monomial(const LaurentPoly& p) {
    if (p.size() != 1) return false;
    const Int& c = p.terms().front().coeff;
    if (p.ring().is_integers()) return c == 1 || c == -1;
    return gcd(c, p.ring().modulus) == 1;
}

PolyMatrix unit_inverse(const PolyMatrix& a) {
    LaurentPoly det = determinant(a);
    if (!is_unit_monomial(det)) throw PreconditionError("matrix determinant is not a unit monomial");
    const Term& t = det.terms().front();
    Int inv;
    if (det.ring().is_integers()) {
        inv = t.coeff;
    } else {
        mpz_invert(inv.get_mpz_t(), t.coeff.get_mpz_t(), det.ring().modulus.get_mpz_t());
    }
    LaurentPoly det_inv = LaurentPoly::monomial(negate(t.exp), inv, det.ring());

    std::size_t n = a.size();
    unsigned full = (1u << n) - 1;
    PolyMatrix out(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> rows;
        for (std::size_t k = 0; k < n; ++k) {
            if (k != i) rows.push_back(k);
        }
        for (std::size_t j = 0; j < n; ++j) {
            // adj(a)[j][i] is the (i, j) cofactor.
            LaurentPoly c = n == 1 ? LaurentPoly::constant(det.rank(), 1, det.ring())
                                   : det_rows_cols(a, rows, full & ~(1u << j));
            if ((i + j) % 2) c = -c;
            out[j][i] = c * det_inv;
        }
    }
    return out;
}

SyzygyCertificate trivialize_via_transform(const PolyTuple& q, const PolyMatrix& A, const PolyMatrix& A_inv,
                                           const PolyTuple& f) {
    require_same_shape(q, f);
    if (!pairing(f, q).is_zero()) throw PreconditionError("input is not a syzygy");
    PolyTuple r = row_times_matrix(q, A);
    PolyTuple g = matrix_times_column(A_inv, f);
    SyzygyCertificate c = trivialize_syzygy(r, g);

    // f = A g = sum c_ij A M_ij A^t q^t, and A M_ij A^t is skew with (a, b)
    // entry A_ai A_bj - A_aj A_bi.
    SyzygyCertificate out;
    std::size_t n = q.size();
    for (const auto& [ij, cij] : c) {
        auto [i, j] = ij;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                LaurentPoly m = A[a][i] * A[b][j] - A[a][j] * A[b][i];
                if (!m.is_zero()) add_to_certificate(out, a, b, cij * m);
            }
        }
    }
    if (expand_certificate(out, q) != f) throw InternalError("transported certificate does not reproduce the syzygy");
    return out;
}

}  // namespace weylinv
