#include "weylinv/tables.hpp"

#include <algorithm>
#include <numeric>

namespace weylinv {

namespace {

Lattice rows_lattice(std::size_t k, const IntMat& rows) { return Lattice(k, rows); }

Lattice diagonal(const std::vector<long>& scales) {
    IntMat rows(scales.size(), IntVec(scales.size(), 0));
    for (std::size_t i = 0; i < scales.size(); ++i) rows[i][i] = scales[i];
    return rows_lattice(scales.size(), rows);
}

Lattice congruence(const std::vector<long>& form, long modulus) {
    IntVec f(form.begin(), form.end());
    return Lattice::from_congruences(form.size(), {f}, {Int(modulus)});
}

FactorGroup group(const std::vector<long>& factors) {
    FactorGroup g;
    for (long f : factors) {
        if (f >= 2) g.factors.push_back(f);
    }
    std::sort(g.factors.begin(), g.factors.end());
    return g;
}

FactorGroup power(long base, long exponent) { return group(std::vector<long>(std::max(exponent, 0L), base)); }

// Invariant factors of a direct sum of cyclic groups.
FactorGroup sum_of_cyclic(const std::vector<long>& orders) {
    IntMat rows;
    std::size_t k = orders.size();
    for (std::size_t i = 0; i < k; ++i) {
        IntVec r(k, 0);
        r[i] = orders[i];
        rows.push_back(r);
    }
    if (k == 0) return {};
    return factor_group(Lattice(k, rows), Lattice::full(k));
}

std::optional<long> prime_of_power(long k) {
    if (k < 2) return std::nullopt;
    long p = 2;
    while (k % p != 0) ++p;
    long r = k;
    while (r % p == 0) r /= p;
    if (r != 1) return std::nullopt;
    return p;
}

bool all_of_type(const GroupSpec& s, DynkinType t) {
    return std::all_of(s.factors.begin(), s.factors.end(), [&](const SimpleFactor& f) { return f.type == t; });
}

bool tstar_equals(const LatticeModel& m, const GroupSpec& candidate) {
    try {
        return LatticeModel(candidate).tstar() == m.tstar();
    } catch (const std::invalid_argument&) {
        return false;
    }
}

GroupSpec diagonal_spec(const std::vector<SimpleFactor>& factors, long k) {
    return {factors, {CenterConstraint{k, std::vector<long>(factors.size(), 1)}}};
}

// Each factor is simply connected or adjoint according to mask bit f.
GroupSpec per_factor_spec(const std::vector<SimpleFactor>& factors, unsigned mask) {
    GroupSpec s{factors, {}};
    for (std::size_t f = 0; f < factors.size(); ++f) {
        if (!((mask >> f) & 1U)) continue;
        const SimpleFactor& sf = factors[f];
        auto add = [&](long modulus, long residue) {
            CenterConstraint c{modulus, std::vector<long>(factors.size(), 0)};
            c.residues[f] = residue;
            s.kernel.push_back(c);
        };
        switch (sf.type) {
            case DynkinType::A: add(sf.rank + 1, 1); break;
            case DynkinType::B:
            case DynkinType::C:
            case DynkinType::E7: add(2, 1); break;
            case DynkinType::E6: add(3, 1); break;
            case DynkinType::D:
                if (sf.rank % 2 == 0) {
                    add(2, 1);
                    add(2, 2);
                } else {
                    add(4, 1);
                }
                break;
        }
    }
    return s;
}

std::optional<unsigned> adjoint_mask(const LatticeModel& m) {
    const auto& factors = m.spec().factors;
    if (factors.size() > 10) return std::nullopt;
    for (unsigned mask = 0; mask < (1U << factors.size()); ++mask) {
        if (tstar_equals(m, per_factor_spec(factors, mask))) return mask;
    }
    return std::nullopt;
}

std::vector<long> ranks(const LatticeModel& m) {
    std::vector<long> r;
    for (const auto& f : m.spec().factors) r.push_back(f.rank);
    return r;
}

ClosedForm named(std::string family) {
    ClosedForm c;
    c.family = std::move(family);
    return c;
}

// Fills the fields of `into` that are still empty.
void merge(ClosedForm& into, const ClosedForm& from) {
    into.family = into.family.empty() ? from.family : into.family + "+" + from.family;
    if (!into.Q) into.Q = from.Q;
    if (!into.Dec) into.Dec = from.Dec;
    if (!into.has_sdec()) {
        into.Sdec = from.Sdec;
        into.sdec_is_q = from.sdec_is_q;
        into.sdec_is_dec = from.sdec_is_dec;
    }
    if (!into.inv_ind) into.inv_ind = from.inv_ind;
    if (!into.inv_sd) into.inv_sd = from.inv_sd;
    if (!into.inv_ind_order) into.inv_ind_order = from.inv_ind_order;
    if (!into.inv_sd_order) into.inv_sd_order = from.inv_sd_order;
}

void type_a(const LatticeModel& m, std::vector<ClosedForm>& out) {
    const auto& factors = m.spec().factors;
    std::size_t r = factors.size();
    std::vector<long> size;
    for (const auto& f : factors) size.push_back(f.rank + 1);
    long g = 0;
    for (long s : size) g = std::gcd(g, s);

    if (m.spec().kernel.empty()) {
        ClosedForm c = named("typeA-products");
        c.Q = c.Dec = c.Sdec = diagonal(std::vector<long>(r, 1));
        out.push_back(c);
        return;
    }

    // Diagonal mu(k), any k dividing every size.
    for (long k = 2; k <= g; ++k) {
        if (g % k != 0 || !tstar_equals(m, diagonal_spec(factors, k))) continue;
        auto p = prime_of_power(k);

        bool all_even = std::all_of(size.begin(), size.end(), [](long s) { return s % 2 == 0; });
        if (k == 2 && all_even && r >= 2) {
            ClosedForm c = named("typeA-mu2");
            bool all4 = std::all_of(size.begin(), size.end(), [](long s) { return (s / 2) % 4 == 0; });
            c.inv_ind = c.inv_sd = power(2, all4 ? static_cast<long>(r) : static_cast<long>(r) - 1);
            c.sdec_is_q = true;
            out.push_back(c);
        }
        if (p && r <= 2) {
            long kk = k;
            long vk = v2(kk);
            ClosedForm c = named("typeA-pair");
            std::vector<long> form;
            for (long s : size) form.push_back((kk - 1) * (s / kk));
            c.Q = congruence(form, 2 * kk);
            if (r == 1) {
                bool doubled = *p == 2 && v2(size[0]) == vk;
                c.Dec = diagonal({doubled ? 2 * kk : kk});
            } else {
                long a = v2(size[0]), b = v2(size[1]);
                if (*p != 2 || std::min(a, b) > vk) c.Dec = diagonal({kk, kk});
                else if (a == vk && b == vk) c.Dec = rows_lattice(2, {{kk, -kk}, {kk, kk}});
                else if (a > vk) c.Dec = diagonal({kk, 2 * kk});
                else c.Dec = diagonal({2 * kk, kk});
            }
            c.sdec_is_q = r == 2;
            out.push_back(c);
        }
        if (p && r >= 2) {
            // (SL_n)^r / mu(p^s) with n = gcd(2, p) p^{2s}.
            long e = *p == 2 ? 2 : 1;
            bool homocyclic = std::all_of(size.begin(), size.end(), [&](long s) { return s == e * k * k; });
            if (homocyclic) {
                ClosedForm c = named("typeA-homocyclic");
                c.Q = congruence(std::vector<long>(r, size[0] / k), e * k);
                c.Dec = diagonal(std::vector<long>(r, k));
                c.sdec_is_q = true;
                c.inv_ind = c.inv_sd = power(k, static_cast<long>(r));
                out.push_back(c);
            }
        }
        if (r == 2) {
            long e = k % 2 == 0 ? 2 : 1;
            if (size[0] == e * k && size[1] == e * k) {
                ClosedForm c = named("typeA-order");
                c.inv_ind_order = c.inv_sd_order = Int(k);
                c.sdec_is_q = true;
                out.push_back(c);
            }
        }
        if (r >= 2) {
            ClosedForm c = named("typeA-diagonal");
            c.sdec_is_q = true;
            out.push_back(c);
        }
    }
}

void type_b(const LatticeModel& m, std::vector<ClosedForm>& out) {
    std::vector<long> n = ranks(m);
    std::size_t r = n.size();
    if (r >= 2 && tstar_equals(m, diagonal_spec(m.spec().factors, 2))) {
        long k2 = std::count(n.begin(), n.end(), 2L);
        ClosedForm c = named(r == 2 ? "typeB-pair" : "typeB-diagonal");
        c.Q = congruence(std::vector<long>(r, 1), 2);
        c.Dec = diagonal(std::vector<long>(r, 2));
        IntMat rows = c.Dec->basis();
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j) {
                if (n[i] != 2 || n[j] != 2) continue;
                IntVec v(r, 0);
                v[i] = 1;
                v[j] = -1;
                rows.push_back(v);
            }
        }
        c.Sdec = rows_lattice(r, rows);
        c.inv_ind = power(2, static_cast<long>(r) - 1);
        c.inv_sd = power(2, k2 - 1);
        out.push_back(c);
        return;
    }
    if (auto mask = adjoint_mask(m)) {
        ClosedForm c = named("typeB-products");
        std::vector<long> q, d;
        long k = 0;
        for (std::size_t f = 0; f < r; ++f) {
            bool so = (*mask >> f) & 1U;
            q.push_back(so ? 2 : 1);
            d.push_back(so || n[f] >= 3 ? 2 : 1);
            if (!so && n[f] >= 3) ++k;
        }
        c.Q = diagonal(q);
        c.Dec = diagonal(d);
        c.sdec_is_dec = true;
        c.inv_ind = power(2, k);
        c.inv_sd = FactorGroup{};
        out.push_back(c);
    }
}

void type_c(const LatticeModel& m, std::vector<ClosedForm>& out) {
    std::vector<long> n = ranks(m);
    std::size_t r = n.size();
    auto zero4 = [](long x) { return x % 4 == 0; };
    if (r >= 2 && tstar_equals(m, diagonal_spec(m.spec().factors, 2))) {
        long z = std::count_if(n.begin(), n.end(), zero4);
        bool all0 = z == static_cast<long>(r), none0 = z == 0;
        ClosedForm c = named(r == 2 ? "typeC-pair" : "typeC-diagonal");
        c.inv_ind = power(2, all0 ? static_cast<long>(r) : static_cast<long>(r) - 1);
        c.inv_sd = power(2, all0 || none0 ? static_cast<long>(r) - 1 : static_cast<long>(r) - 2);
        if (r == 2) {
            long a = n[0], b = n[1];
            c.Q = congruence({a, b}, 4);
            if (a % 2 == 0 && b % 2 == 0) c.Dec = diagonal({2, 2});
            else if (a % 2 == 1 && b % 2 == 1) c.Dec = rows_lattice(2, {{2, 2}, {2, -2}});
            else if (a % 2 == 0) c.Dec = diagonal({2, 4});
            else c.Dec = diagonal({4, 2});
            IntMat rows = c.Dec->basis();
            if (!c.inv_sd->trivial()) {
                long g = std::gcd(a, b);
                rows.push_back({b / g, -a / g});
            }
            c.Sdec = rows_lattice(2, rows);
        }
        out.push_back(c);
        return;
    }
    if (auto mask = adjoint_mask(m)) {
        ClosedForm c = named("typeC-products");
        std::vector<long> q, d;
        long k = 0;
        for (std::size_t f = 0; f < r; ++f) {
            bool pg = (*mask >> f) & 1U;
            q.push_back(pg ? 4 / std::gcd(4L, n[f]) : 1);
            d.push_back(pg ? 4 / std::gcd(2L, n[f]) : 1);
            if (pg && zero4(n[f])) ++k;
        }
        c.Q = diagonal(q);
        c.Dec = diagonal(d);
        c.sdec_is_dec = true;
        c.inv_ind = power(2, k);
        c.inv_sd = FactorGroup{};
        out.push_back(c);
    }
}

void type_d(const LatticeModel& m, std::vector<ClosedForm>& out) {
    std::vector<long> n = ranks(m);
    std::size_t r = n.size();
    if (r == 1 && n[0] == 4 && tstar_equals(m, per_factor_spec(m.spec().factors, 1))) {
        ClosedForm c = named("pgo8");
        c.Dec = diagonal({4});
        c.sdec_is_dec = true;
        c.inv_sd = FactorGroup{};
        out.push_back(c);
        return;
    }
    if (r < 2) return;
    bool all_odd = std::all_of(n.begin(), n.end(), [](long x) { return x % 2 == 1; });
    bool all_even = std::all_of(n.begin(), n.end(), [](long x) { return x % 2 == 0; });
    if (!all_odd && !all_even) return;
    if (all_odd && tstar_equals(m, diagonal_spec(m.spec().factors, 4))) {
        ClosedForm c = named(r == 2 ? "typeD-pair-mu4" : "typeD-diagonal-mu4");
        c.Q = congruence(n, 8);
        IntMat rows;
        for (std::size_t i = 1; i < r; ++i) {
            IntVec v(r, 0);
            v[0] = 4;
            v[i] = -4;
            rows.push_back(v);
        }
        IntVec plus(r, 0);
        plus[0] = plus[1] = 4;
        rows.push_back(plus);
        c.Dec = rows_lattice(r, rows);
        for (std::size_t i = 1; i < r; ++i) {
            long g = std::gcd(n[0], n[i]);
            IntVec v(r, 0);
            v[0] = 2 * (n[i] / g);
            v[i] = -2 * (n[0] / g);
            rows.push_back(v);
        }
        c.Sdec = rows_lattice(r, rows);
        c.inv_ind = power(4, static_cast<long>(r) - 1);
        c.inv_sd = power(2, static_cast<long>(r) - 1);
        out.push_back(c);
        return;
    }
    if (tstar_equals(m, diagonal_spec(m.spec().factors, 2))) {
        ClosedForm c = named(r == 2 ? "typeD-pair-mu2" : "typeD-diagonal-mu2");
        c.Q = congruence(std::vector<long>(r, 1), 2);
        c.Dec = diagonal(std::vector<long>(r, 2));
        c.sdec_is_dec = true;
        c.inv_ind = power(2, static_cast<long>(r) - 1);
        c.inv_sd = FactorGroup{};
        out.push_back(c);
    }
}

void type_e(const LatticeModel& m, std::vector<ClosedForm>& out, bool e6) {
    std::size_t r = m.num_factors();
    long dec = e6 ? 6 : 12, small = e6 ? 2 : 3, center = e6 ? 3 : 4;
    ClosedForm c = named(e6 ? "typeE6" : "typeE7");
    c.Dec = diagonal(std::vector<long>(r, dec));
    c.sdec_is_dec = true;
    c.inv_sd = FactorGroup{};
    const auto& factors = m.spec().factors;
    bool diag = r >= 2 && tstar_equals(m, diagonal_spec(factors, e6 ? 3 : 2));
    if (!diag && e6 && r == 2) diag = tstar_equals(m, GroupSpec{factors, {CenterConstraint{3, {1, 2}}}});
    if (diag) {
        c.Q = congruence(std::vector<long>(r, 1), center);
        std::vector<long> orders(r - 1, dec);
        orders.push_back(small);
        c.inv_ind = sum_of_cyclic(orders);
    } else if (auto mask = adjoint_mask(m)) {
        std::vector<long> orders;
        for (std::size_t f = 0; f < r; ++f) orders.push_back(((*mask >> f) & 1U) ? small : dec);
        c.inv_ind = sum_of_cyclic(orders);
    }
    out.push_back(c);
}

}  // namespace

int v2(long n) {
    int v = 0;
    while (n != 0 && n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

std::optional<ClosedForm> closed_form(const LatticeModel& m) {
    const GroupSpec& s = m.spec();
    std::vector<ClosedForm> found;
    if (m.num_factors() == 1) {
        // Semi-decomposable invariants of a simple group are decomposable.
        ClosedForm c = named("simple");
        c.sdec_is_dec = true;
        found.push_back(c);
    }
    if (all_of_type(s, DynkinType::A)) type_a(m, found);
    else if (all_of_type(s, DynkinType::B)) type_b(m, found);
    else if (all_of_type(s, DynkinType::C)) type_c(m, found);
    else if (all_of_type(s, DynkinType::D)) type_d(m, found);
    else if (all_of_type(s, DynkinType::E6)) type_e(m, found, true);
    else if (all_of_type(s, DynkinType::E7)) type_e(m, found, false);
    if (found.empty()) return std::nullopt;
    ClosedForm c;
    for (const auto& f : found) merge(c, f);
    if (!c.inv_ind && c.Q && c.Dec) c.inv_ind = factor_group(*c.Dec, *c.Q);
    if (!c.inv_sd && c.Dec) {
        if (c.sdec_is_dec) c.inv_sd = FactorGroup{};
        else if (c.Sdec) c.inv_sd = factor_group(*c.Dec, *c.Sdec);
        else if (c.sdec_is_q && c.Q) c.inv_sd = factor_group(*c.Dec, *c.Q);
    }
    return c;
}

const std::vector<std::string>& table_families() {
    static const std::vector<std::string> names = {
        "typeA-pair", "typeA-mu2", "typeA-homocyclic", "typeB-pair", "typeB-diagonal", "typeB-products",
        "typeC-pair", "typeC-diagonal", "typeC-products", "typeD-pair", "typeD-diagonal", "pgo8", "typeE"};
    return names;
}

namespace {

SimpleFactor sl(long n) { return {DynkinType::A, static_cast<int>(n - 1)}; }
SimpleFactor bf(long n) { return {DynkinType::B, static_cast<int>(n)}; }
SimpleFactor cf(long n) { return {DynkinType::C, static_cast<int>(n)}; }
SimpleFactor df(long n) { return {DynkinType::D, static_cast<int>(n)}; }

long total_rank(const std::vector<SimpleFactor>& fs) {
    long t = 0;
    for (const auto& f : fs) t += f.rank;
    return t;
}

// Nondecreasing tuples of `count` values in [lo, hi].
void tuples(long count, long lo, long hi, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (static_cast<long>(cur.size()) == count) {
        out.push_back(cur);
        return;
    }
    for (long v = cur.empty() ? lo : cur.back(); v <= hi; ++v) {
        cur.push_back(v);
        tuples(count, lo, hi, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long>> tuples(long count, long lo, long hi) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    tuples(count, lo, hi, cur, out);
    return out;
}

}  // namespace

std::vector<GroupSpec> table_specs(const std::string& family, int max_rank) {
    std::vector<GroupSpec> out;
    auto keep = [&](const GroupSpec& s) {
        if (total_rank(s.factors) <= max_rank) out.push_back(s);
    };
    if (family == "typeA-pair") {
        for (long a = 2; a <= max_rank + 1; ++a) {
            for (long b = 2; b <= max_rank + 1; ++b) {
                long g = std::gcd(a, b);
                for (long k = 2; k <= g; ++k) {
                    if (g % k == 0 && prime_of_power(k)) keep(diagonal_spec({sl(a), sl(b)}, k));
                }
            }
        }
    } else if (family == "typeA-mu2") {
        for (long r = 1; r <= 3; ++r) {
            for (const auto& t : tuples(r, 1, max_rank)) {
                std::vector<SimpleFactor> fs;
                for (long v : t) fs.push_back(sl(2 * v));
                keep(diagonal_spec(fs, 2));
            }
        }
    } else if (family == "typeA-homocyclic") {
        for (long p : {2L, 3L}) {
            long n = (p == 2 ? 2 : 1) * p * p;
            for (long r = 2; r <= 3; ++r) keep(diagonal_spec(std::vector<SimpleFactor>(r, sl(n)), p));
        }
    } else if (family == "typeB-pair" || family == "typeB-diagonal") {
        long lo = family == "typeB-pair" ? 2 : 3, hi = family == "typeB-pair" ? 2 : 3;
        for (long r = lo; r <= hi; ++r) {
            for (const auto& t : tuples(r, 2, max_rank)) {
                std::vector<SimpleFactor> fs;
                for (long v : t) fs.push_back(bf(v));
                keep(diagonal_spec(fs, 2));
            }
        }
    } else if (family == "typeB-products" || family == "typeC-products") {
        bool b = family == "typeB-products";
        for (long r = 1; r <= 2; ++r) {
            for (const auto& t : tuples(r, b ? 2 : 1, max_rank)) {
                std::vector<SimpleFactor> fs;
                for (long v : t) fs.push_back(b ? bf(v) : cf(v));
                for (unsigned mask = 0; mask < (1U << r); ++mask) keep(per_factor_spec(fs, mask));
            }
        }
    } else if (family == "typeC-pair" || family == "typeC-diagonal") {
        long lo = family == "typeC-pair" ? 2 : 3, hi = family == "typeC-pair" ? 2 : 3;
        for (long r = lo; r <= hi; ++r) {
            for (const auto& t : tuples(r, 1, max_rank)) {
                std::vector<SimpleFactor> fs;
                for (long v : t) fs.push_back(cf(v));
                keep(diagonal_spec(fs, 2));
            }
        }
    } else if (family == "typeD-pair" || family == "typeD-diagonal") {
        long lo = family == "typeD-pair" ? 2 : 3, hi = family == "typeD-pair" ? 2 : 3;
        for (long r = lo; r <= hi; ++r) {
            for (const auto& t : tuples(r, 4, max_rank)) {
                bool odd = t[0] % 2 == 1;
                if (!std::all_of(t.begin(), t.end(), [&](long v) { return (v % 2 == 1) == odd; })) continue;
                std::vector<SimpleFactor> fs;
                for (long v : t) fs.push_back(df(v));
                keep(diagonal_spec(fs, 2));
                if (odd) keep(diagonal_spec(fs, 4));
            }
        }
    } else if (family == "pgo8") {
        keep(per_factor_spec({df(4)}, 1));
    } else if (family == "typeE") {
        SimpleFactor e6{DynkinType::E6, 6}, e7{DynkinType::E7, 7};
        keep(diagonal_spec({e6, e6}, 3));
        keep(GroupSpec{{e6, e6}, {CenterConstraint{3, {1, 2}}}});
        keep(diagonal_spec({e7, e7}, 2));
        for (unsigned mask = 0; mask < 2; ++mask) {
            keep(per_factor_spec({e6}, mask));
            keep(per_factor_spec({e7}, mask));
        }
    } else {
        throw std::invalid_argument("unknown table family '" + family + "'");
    }
    return out;
}

}  // namespace weylinv
