#include "weylinv/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylinv {

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat t(a[0].size(), IntVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    }
    return t;
}

IntMat multiply(const IntMat& a, const IntMat& b) {
    if (a.empty()) return {};
    std::size_t inner = b.size();
    std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMat c(a.size(), IntVec(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

IntVec row_times(const IntVec& v, const IntMat& a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    IntVec out(cols, 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < cols; ++j) out[j] += v[k] * a[k][j];
    }
    return out;
}

namespace {

void axpy_row(IntVec& dst, const Int& c, const IntVec& src) {
    if (c == 0) return;
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += c * src[j];
}

bool is_zero_row(const IntVec& r) {
    return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
}

}  // namespace

IntMat hnf(IntMat a, std::size_t ncols) {
    for (auto& r : a) {
        if (r.size() != ncols) throw std::invalid_argument("hnf: ragged matrix");
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        // Euclid across rows with the smallest entry as pivot keeps entries small.
        while (true) {
            std::size_t piv = a.size();
            for (std::size_t i = row; i < a.size(); ++i) {
                if (a[i][col] != 0 && (piv == a.size() || abs(a[i][col]) < abs(a[piv][col]))) piv = i;
            }
            if (piv == a.size()) break;
            std::swap(a[row], a[piv]);
            bool done = true;
            for (std::size_t i = row + 1; i < a.size(); ++i) {
                if (a[i][col] == 0) continue;
                Int f;
                mpz_tdiv_q(f.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
                axpy_row(a[i], -f, a[row]);
                if (a[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (a[row][col] == 0) continue;
        if (a[row][col] < 0) {
            for (auto& v : a[row]) v = -v;
        }
        for (std::size_t k = 0; k < row; ++k) {
            Int f;
            mpz_fdiv_q(f.get_mpz_t(), a[k][col].get_mpz_t(), a[row][col].get_mpz_t());
            axpy_row(a[k], -f, a[row]);
        }
        ++row;
    }
    a.resize(row);
    return a;
}

IntMat integer_kernel(const IntMat& a, std::size_t cols) {
    std::size_t r = a.size();
    IntMat aug(cols, IntVec(r + cols, 0));
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug[i][j] = a[j][i];
        aug[i][r + i] = 1;
    }
    IntMat h = hnf(std::move(aug), r + cols);
    IntMat out;
    for (auto& row : h) {
        bool lead_zero = true;
        for (std::size_t j = 0; j < r; ++j) {
            if (row[j] != 0) {
                lead_zero = false;
                break;
            }
        }
        if (lead_zero) out.emplace_back(row.begin() + static_cast<long>(r), row.end());
    }
    return out;
}

SmithForm smith(const IntMat& input, std::size_t n) {
    std::size_t m = input.size();
    IntMat a = input;
    SmithForm s{identity_matrix(m), identity_matrix(n), {}};
    auto swap_cols = [&](IntMat& mat, std::size_t i, std::size_t j) {
        for (auto& r : mat) std::swap(r[i], r[j]);
    };
    auto col_axpy = [&](IntMat& mat, std::size_t dst, const Int& c, std::size_t src) {
        for (auto& r : mat) r[dst] += c * r[src];
    };
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (a[i][j] == 0) continue;
                    if (pi == m || abs(a[i][j]) < abs(a[pi][pj])) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == m) break;
            std::swap(a[t], a[pi]);
            std::swap(s.U[t], s.U[pi]);
            swap_cols(a, t, pj);
            swap_cols(s.V, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                axpy_row(a[i], -q, a[t]);
                axpy_row(s.U[i], -q, s.U[t]);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_axpy(a, j, -q, t);
                col_axpy(s.V, j, -q, t);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Enforce divisibility of the trailing block by the pivot.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (!divides(a[t][t], a[i][j])) {
                        axpy_row(a[t], 1, a[i]);
                        axpy_row(s.U[t], 1, s.U[i]);
                        fixed = true;
                        break;
                    }
                }
            }
            if (!fixed) break;
        }
        if (a[t][t] == 0) break;
        if (a[t][t] < 0) {
            for (auto& v : a[t]) v = -v;
            for (auto& v : s.U[t]) v = -v;
        }
    }
    for (std::size_t i = 0; i < std::min(m, n); ++i) s.diagonal.push_back(a[i][i]);
    return s;
}

IntVec smith_diagonal(const IntMat& a, std::size_t ncols) { return smith(a, ncols).diagonal; }

RatMat to_rational(const IntMat& a) {
    RatMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (const auto& v : a[i]) r[i].emplace_back(v);
    }
    return r;
}

RatMat rat_inverse(const RatMat& input) {
    std::size_t n = input.size();
    RatMat a = input;
    RatMat inv(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

RatMat rat_multiply(const RatMat& a, const RatMat& b) {
    if (a.empty()) return {};
    std::size_t cols = b.empty() ? 0 : b[0].size();
    RatMat c(a.size(), RatVec(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

RatMat rat_transpose(const RatMat& a) {
    if (a.empty()) return {};
    RatMat t(a[0].size(), RatVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    }
    return t;
}

Int FactorGroup::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (const auto& f : factors) o *= f;
    return o;
}

std::string FactorGroup::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
        os << (first ? "" : " + ") << "Z/" << f.get_str();
        first = false;
    }
    for (std::size_t i = 0; i < free_rank; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    return os.str();
}

Lattice::Lattice(std::size_t dim, const IntMat& generators) : dim_(dim), basis_(hnf(generators, dim)) {}

Lattice Lattice::full(std::size_t dim) { return Lattice(dim, identity_matrix(dim)); }

Lattice Lattice::from_congruences(std::size_t dim, const IntMat& forms, const IntVec& moduli) {
    if (forms.size() != moduli.size()) throw std::invalid_argument("one modulus per congruence");
    std::size_t r = forms.size();
    IntMat sys(r, IntVec(dim + r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < dim; ++j) sys[i][j] = forms[i][j];
        sys[i][dim + i] = -moduli[i];
    }
    IntMat ker = integer_kernel(sys, dim + r);
    for (auto& v : ker) v.resize(dim);
    return Lattice(dim, ker);
}

IntVec Lattice::coordinates(const IntVec& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector has wrong dimension");
    IntVec rest = v;
    IntVec coords(basis_.size(), 0);
    std::size_t col = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        while (basis_[i][col] == 0) ++col;
        if (!divides(basis_[i][col], rest[col])) throw std::domain_error("vector outside lattice");
        coords[i] = exact_div(rest[col], basis_[i][col]);
        axpy_row(rest, -coords[i], basis_[i]);
    }
    if (!is_zero_row(rest)) throw std::domain_error("vector outside lattice");
    return coords;
}

bool Lattice::contains(const IntVec& v) const {
    try {
        coordinates(v);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

bool Lattice::contains(const Lattice& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const IntVec& v) { return contains(v); });
}

Lattice Lattice::join(const Lattice& other) const {
    IntMat rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return Lattice(dim_, rows);
}

Lattice Lattice::meet(const Lattice& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("lattices of different dimension");
    IntMat stacked = basis_;
    stacked.insert(stacked.end(), other.basis_.begin(), other.basis_.end());
    if (stacked.empty()) return Lattice(dim_, {});
    // (a, b) with a B + b B' = 0 gives a B in both.
    IntMat rows;
    for (const auto& x : integer_kernel(transpose(stacked), stacked.size())) {
        IntVec v(dim_, 0);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            for (std::size_t j = 0; j < dim_; ++j) v[j] += x[i] * basis_[i][j];
        }
        rows.push_back(v);
    }
    return Lattice(dim_, rows);
}

Lattice Lattice::join(const IntVec& v) const {
    if (is_zero_row(v) || contains(v)) return *this;
    IntMat rows = basis_;
    rows.push_back(v);
    return Lattice(dim_, rows);
}

Lattice Lattice::scaled(const Int& c) const {
    IntMat rows = basis_;
    for (auto& r : rows) {
        for (auto& v : r) v *= c;
    }
    return Lattice(dim_, rows);
}

Int Lattice::index() const {
    if (basis_.size() < dim_) return 0;
    Int p = 1;
    std::size_t col = 0;
    for (const auto& r : basis_) {
        while (r[col] == 0) ++col;
        p *= r[col];
    }
    return p;
}

std::string Lattice::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        os << (i ? ", " : "") << '[';
        for (std::size_t j = 0; j < dim_; ++j) os << (j ? ", " : "") << basis_[i][j].get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

FactorGroup factor_group(const Lattice& sub, const Lattice& super) {
    if (sub.dim() != super.dim()) throw std::invalid_argument("lattices live in different spaces");
    IntMat coords;
    for (const auto& v : sub.basis()) {
        try {
            coords.push_back(super.coordinates(v));
        } catch (const std::domain_error&) {
            throw std::domain_error("factor_group: sub is not contained in super");
        }
    }
    FactorGroup g;
    std::size_t l = super.rank();
    if (coords.empty()) {
        g.free_rank = l;
        return g;
    }
    IntVec diag = smith_diagonal(coords, l);
    std::size_t nonzero = 0;
    for (const auto& d : diag) {
        if (d != 0) ++nonzero;
        if (d > 1) g.factors.push_back(d);
    }
    g.free_rank = l - nonzero;
    return g;
}

std::vector<QuotientGenerator> quotient_generators(const Lattice& sub, const Lattice& super) {
    FactorGroup g = factor_group(sub, super);
    const std::size_t l = super.rank();
    IntMat coords;
    for (const auto& v : sub.basis()) coords.push_back(super.coordinates(v));
    IntMat vinv = identity_matrix(l);
    IntVec diag;
    if (!coords.empty()) {
        SmithForm s = smith(coords, l);
        diag = s.diagonal;
        RatMat inv = rat_inverse(to_rational(s.V));
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t j = 0; j < l; ++j) vinv[i][j] = inv[i][j].get_num();
        }
    }
    diag.resize(l, Int(0));

    std::vector<QuotientGenerator> out;
    for (std::size_t i = 0; i < l; ++i) {
        if (diag[i] == 1) continue;
        IntVec x = row_times(vinv[i], super.basis());
        // Reduce against the echelon basis of sub, pivot by pivot.
        for (const auto& row : sub.basis()) {
            std::size_t p = 0;
            while (p < row.size() && row[p] == 0) ++p;
            if (p == row.size()) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), x[p].get_mpz_t(), row[p].get_mpz_t());
            for (std::size_t j = 0; j < x.size(); ++j) x[j] -= q * row[j];
        }
        out.push_back({diag[i], x});
    }
    // Finite factors first, matching factor_group.
    std::stable_partition(out.begin(), out.end(), [](const QuotientGenerator& q) { return q.order != 0; });
    if (out.size() != g.factors.size() + g.free_rank) throw std::logic_error("quotient generators out of sync");
    return out;
}

FiniteQuotient::FiniteQuotient(const Lattice& sub) : dim_(sub.dim()) {
    if (sub.rank() != sub.dim()) throw std::invalid_argument("quotient by a sublattice of infinite index");
    SmithForm s = smith(sub.basis(), dim_);
    V_ = s.V;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (s.diagonal[i] > 1) {
            moduli_.push_back(s.diagonal[i]);
            columns_.push_back(i);
        }
    }
}

IntVec FiniteQuotient::image(const std::vector<long>& x) const {
    IntVec out(columns_.size());
    for (std::size_t k = 0; k < columns_.size(); ++k) {
        Int s = 0;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] != 0) s += V_[i][columns_[k]] * x[i];
        }
        out[k] = mod_floor(s, moduli_[k]);
    }
    return out;
}

Int FiniteQuotient::order() const {
    Int o = 1;
    for (const auto& m : moduli_) o *= m;
    return o;
}

}  // namespace weylinv
