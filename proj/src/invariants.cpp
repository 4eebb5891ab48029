#include "weylinv/invariants.hpp"

#include "weylinv/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace weylinv {

namespace {

Int rat_to_int(const Rat& r, const char* what) {
    if (r.get_den() != 1) throw InternalError(std::string(what) + ": " + r.get_str() + " is not an integer");
    return r.get_num();
}

Lattice span(std::size_t dim, const IntMat& rows) {
    IntMat nz;
    for (const auto& r : rows) {
        for (const auto& v : r) {
            if (v != 0) {
                nz.push_back(r);
                break;
            }
        }
    }
    return Lattice(dim, nz);
}

}  // namespace

TruncatedForm& TruncatedForm::operator+=(const TruncatedForm& o) {
    if (o.rank() != rank()) throw PreconditionError("truncated forms of different rank");
    c0 += o.c0;
    for (std::size_t i = 0; i < rank(); ++i) {
        c1[i] += o.c1[i];
        for (std::size_t j = i; j < rank(); ++j) quad[i][j] += o.quad[i][j];
    }
    return *this;
}

TruncatedForm operator*(const TruncatedForm& a, const TruncatedForm& b) {
    if (a.rank() != b.rank()) throw PreconditionError("truncated forms of different rank");
    std::size_t n = a.rank();
    TruncatedForm r(n);
    r.c0 = a.c0 * b.c0;
    for (std::size_t i = 0; i < n; ++i) {
        r.c1[i] = a.c0 * b.c1[i] + b.c0 * a.c1[i];
        for (std::size_t j = i; j < n; ++j) {
            Int cross = i == j ? Int(a.c1[i] * b.c1[i]) : Int(a.c1[i] * b.c1[j] + a.c1[j] * b.c1[i]);
            r.quad[i][j] = a.c0 * b.quad[i][j] + b.c0 * a.quad[i][j] + cross;
        }
    }
    return r;
}

TruncatedForm TruncatedForm::scale(const Int& c) const {
    TruncatedForm r = *this;
    r.c0 *= c;
    for (std::size_t i = 0; i < rank(); ++i) {
        r.c1[i] *= c;
        for (std::size_t j = i; j < rank(); ++j) r.quad[i][j] *= c;
    }
    return r;
}

TruncatedForm truncated_exp(const Weight& a) {
    std::size_t n = a.size();
    TruncatedForm r(n);
    r.c0 = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        r.c1[i] = a[i];
        r.quad[i][i] = Int(a[i]) * (a[i] + 1) / 2;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[j] != 0) r.quad[i][j] = Int(a[i]) * a[j];
        }
    }
    return r;
}

TruncatedForm truncated_image(const LaurentPoly& f) {
    if (!f.ring().is_integers()) throw PreconditionError("c2 is defined over Z");
    std::size_t n = f.rank();
    TruncatedForm r(n);
    for (const auto& t : f.terms()) {
        const Exponent& a = t.exp;
        r.c0 += t.coeff;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            r.c1[i] += t.coeff * a[i];
            r.quad[i][i] += t.coeff * (Int(a[i]) * (a[i] + 1) / 2);
            for (std::size_t j = i + 1; j < n; ++j) {
                if (a[j] != 0) r.quad[i][j] += t.coeff * (Int(a[i]) * a[j]);
            }
        }
    }
    return r;
}

IntMat killing_quad(const LatticeModel& m, const KillingVector& d) {
    if (d.size() != m.num_factors()) throw PreconditionError("one Killing coordinate per factor expected");
    std::size_t n = m.total_rank();
    IntMat q(n, IntVec(n, 0));
    for (std::size_t f = 0; f < m.num_factors(); ++f) {
        const RatMat& phi = m.root_system(f).killing();
        std::size_t o = m.offset(f);
        for (std::size_t i = 0; i < phi.size(); ++i) {
            for (std::size_t j = i; j < phi.size(); ++j) {
                Rat c = (i == j ? phi[i][j] : 2 * phi[i][j]) * d[f];
                q[o + i][o + j] = rat_to_int(c, "Killing monomial");
            }
        }
    }
    return q;
}

KillingVector killing_coordinates(const LatticeModel& m, const IntMat& quad) {
    KillingVector d(m.num_factors());
    for (std::size_t f = 0; f < m.num_factors(); ++f) {
        std::size_t o = m.offset(f);
        Rat c = Rat(quad[o][o]) / m.root_system(f).killing()[0][0];
        c.canonicalize();
        d[f] = rat_to_int(c, "Killing coordinate");
    }
    if (killing_quad(m, d) != quad) throw InternalError("quadratic form is not a combination of Killing forms");
    return d;
}

KillingVector c2(const LatticeModel& m, const LaurentPoly& f) {
    return killing_coordinates(m, truncated_image(f).quad);
}

KillingVector c2_orbit(const LatticeModel& m, const Weight& lambda, bool cross_check) {
    if (lambda.size() != m.total_rank()) throw PreconditionError("weight has the wrong rank");
    if (!m.in_tstar(lambda)) throw PreconditionError("c2_orbit needs a weight of T*");
    std::size_t k = m.num_factors();
    IntVec s(k), t(k);
    for (std::size_t f = 0; f < k; ++f) {
        const RootSystem& r = m.root_system(f);
        Weight w = r.dominant(m.factor_part(lambda, f));
        s[f] = r.orbit_size(w);
        Rat tf = r.dual_norm(w) * s[f] / r.rank();
        tf.canonicalize();
        t[f] = rat_to_int(tf, "orbit norm");
    }
    KillingVector d(k);
    for (std::size_t f = 0; f < k; ++f) {
        Int v = t[f];
        for (std::size_t g = 0; g < k; ++g) {
            if (g != f) v *= s[g];
        }
        if (!divides(2, v)) throw InternalError("odd orbit sum of squares");
        d[f] = -v / 2;
    }
    if (cross_check) {
        KillingVector other = c2(m, m.orbit_poly(lambda, true));
        KillingVector neg(k);
        for (std::size_t f = 0; f < k; ++f) neg[f] = -d[f];
        if (other != d && other != neg) throw InternalError("orbit formula and truncated image disagree");
    }
    return d;
}

std::string to_string(Exactness e) { return e == Exactness::Exact ? "exact" : "lower-bound"; }

Lattice q_lattice_in_basis(const LatticeModel& m, const IntMat& basis) {
    std::size_t n = m.total_rank();
    if (basis.size() != n || !(Lattice(n, basis) == m.tstar())) {
        throw PreconditionError("rows do not form a basis of T*");
    }
    RatMat inv = rat_inverse(to_rational(basis));
    std::size_t k = m.num_factors();
    // r[f][j][l]: coefficient of x_j x_l contributed by q_f, before symmetrizing.
    std::vector<RatMat> r(k, RatMat(n, RatVec(n, 0)));
    for (std::size_t f = 0; f < k; ++f) {
        const RatMat& phi = m.root_system(f).killing();
        std::size_t o = m.offset(f);
        std::size_t rf = phi.size();
        for (std::size_t j = 0; j < n; ++j) {
            RatVec left(rf);
            for (std::size_t b = 0; b < rf; ++b) {
                for (std::size_t a = 0; a < rf; ++a) left[b] += inv[o + a][j] * phi[a][b];
            }
            for (std::size_t l = j; l < n; ++l) {
                Rat v = 0;
                for (std::size_t b = 0; b < rf; ++b) v += left[b] * inv[o + b][l];
                r[f][j][l] = j == l ? v : 2 * v;
            }
        }
    }
    IntMat forms;
    IntVec moduli;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = j; l < n; ++l) {
            Int den = 1;
            for (std::size_t f = 0; f < k; ++f) {
                r[f][j][l].canonicalize();
                den = lcm(den, r[f][j][l].get_den());
            }
            if (den == 1) continue;
            IntVec form(k);
            for (std::size_t f = 0; f < k; ++f) form[f] = rat_to_int(r[f][j][l] * den, "scaled condition");
            forms.push_back(form);
            moduli.push_back(den);
        }
    }
    return Lattice::from_congruences(k, forms, moduli);
}

InvariantLattice compute_Q(const LatticeModel& m) {
    return {q_lattice_in_basis(m, m.tstar().basis()), Exactness::Exact, "congruences"};
}

std::size_t worker_threads() {
    if (const char* env = std::getenv("WEYL_INV_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

// Rows of an echelon basis, extended only when a new vector falls outside.
struct EchelonSpan {
    IntMat rows;

    bool contains(Int x, Int y) const {
        for (const auto& r : rows) {
            Int& v = r[0] != 0 ? x : y;
            const Int& p = r[0] != 0 ? r[0] : r[1];
            if (!mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) return false;
            Int q = v / p;
            x -= q * r[0];
            y -= q * r[1];
        }
        return x == 0 && y == 0;
    }
    void add(const Int& x, const Int& y) {
        if (contains(x, y)) return;
        IntMat all = rows;
        all.push_back({x, y});
        rows = Lattice(2, all).basis();
    }
};

using FactorSpans = std::map<Grading::Class, IntMat>;

// Class -> basis of the span of (orbit size, t) over the dominant box [0,h]^rank
// of one factor, where t = |W lambda| * dual_norm(lambda) / rank.
FactorSpans factor_spans(const RootSystem& r, const std::vector<std::vector<long>>& contrib,
                         const std::vector<long>& moduli, int h) {
    std::size_t rf = static_cast<std::size_t>(r.rank());
    std::size_t nm = moduli.size();
    const RatMat& kinv = r.killing_inverse();
    Int den = 1;
    for (const auto& row : kinv) {
        for (const auto& v : row) den = lcm(den, Int(v.get_den()));
    }
    std::vector<std::vector<long>> kint(rf, std::vector<long>(rf));
    for (std::size_t i = 0; i < rf; ++i) {
        for (std::size_t j = 0; j < rf; ++j) kint[i][j] = rat_to_int(kinv[i][j] * den, "scaled norm").get_si();
    }
    Int scale = den * r.rank();

    using Spans = std::map<std::vector<long>, EchelonSpan>;
    // Worker b takes the slices with top coordinate = b mod step and walks the
    // remaining coordinates with an odometer, updating the norm incrementally.
    auto work = [&](long b, long step, Spans& spans) {
        std::map<std::uint64_t, Int> orbit_by_mask;
        std::size_t top = rf - 1;
        for (long a = b; a <= h; a += step) {
            Weight w(rf, 0);
            w[top] = a;
            std::vector<long> kw(rf), cls(nm);
            for (std::size_t j = 0; j < rf; ++j) kw[j] = a * kint[j][top];
            for (std::size_t c = 0; c < nm; ++c) cls[c] = a * contrib[top][c] % moduli[c];
            long norm = a * a * kint[top][top];  // den * dual_norm(w)
            std::uint64_t mask = a != 0 ? std::uint64_t{1} << top : 0;  // bit i set when w[i] != 0
            EchelonSpan* last = nullptr;
            std::vector<long> last_cls;
            while (true) {
                auto [it, fresh] = orbit_by_mask.try_emplace(mask);
                if (fresh) it->second = r.orbit_size(w);
                const Int& s = it->second;
                Int t = s * norm;
                if (!mpz_divisible_p(t.get_mpz_t(), scale.get_mpz_t())) throw InternalError("orbit norm is not an integer");
                t /= scale;
                if (!last || cls != last_cls) {
                    last = &spans[cls];
                    last_cls = cls;
                }
                last->add(s, t);

                std::size_t i = 0;
                while (i < top && w[i] == h) {
                    norm += -2L * h * kw[i] + static_cast<long>(h) * h * kint[i][i];
                    for (std::size_t j = 0; j < rf; ++j) kw[j] -= h * kint[j][i];
                    for (std::size_t c = 0; c < nm; ++c) cls[c] = ((cls[c] - h * contrib[i][c]) % moduli[c] + moduli[c]) % moduli[c];
                    w[i] = 0;
                    mask &= ~(std::uint64_t{1} << i);
                    ++i;
                }
                if (i == top) break;
                norm += 2 * kw[i] + kint[i][i];
                for (std::size_t j = 0; j < rf; ++j) kw[j] += kint[j][i];
                for (std::size_t c = 0; c < nm; ++c) cls[c] = (cls[c] + contrib[i][c]) % moduli[c];
                ++w[i];
                mask |= std::uint64_t{1} << i;
            }
        }
    };
    long step = static_cast<long>(std::min<std::size_t>(worker_threads(), static_cast<std::size_t>(h) + 1));
    std::vector<Spans> parts(static_cast<std::size_t>(step));
    std::vector<std::exception_ptr> errors(parts.size());
    std::vector<std::thread> pool;
    auto guarded = [&](long b) {
        try {
            work(b, step, parts[static_cast<std::size_t>(b)]);
        } catch (...) {
            errors[static_cast<std::size_t>(b)] = std::current_exception();
        }
    };
    for (long b = 1; b < step; ++b) pool.emplace_back(guarded, b);
    guarded(0);
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Spans spans = std::move(parts[0]);
    for (std::size_t b = 1; b < parts.size(); ++b) {
        for (const auto& [c, sp] : parts[b]) {
            for (const auto& row : sp.rows) spans[c].add(row[0], row[1]);
        }
    }
    FactorSpans out;
    for (const auto& [c, sp] : spans) {
        Grading::Class key(c.begin(), c.end());
        out[key] = sp.rows;
    }
    return out;
}

}  // namespace

Lattice dec_at_height(const LatticeModel& m, int h) {
    if (h < 1) throw PreconditionError("height must be at least 1");
    std::size_t k = m.num_factors();
    const Grading& grading = m.grading();
    std::vector<long> moduli;
    for (const auto& q : grading.moduli) moduli.push_back(q.get_si());

    // Identical factors with identical class contributions share one enumeration.
    std::map<std::pair<std::pair<int, int>, std::vector<std::vector<long>>>, FactorSpans> cache;
    std::vector<FactorSpans> spans(k);
    for (std::size_t f = 0; f < k; ++f) {
        const RootSystem& r = m.root_system(f);
        std::size_t rf = static_cast<std::size_t>(r.rank());
        if (rf >= 64) throw PreconditionError("factor rank too large for enumeration");
        std::vector<std::vector<long>> contrib(rf, std::vector<long>(moduli.size()));
        for (std::size_t i = 0; i < rf; ++i) {
            for (std::size_t c = 0; c < moduli.size(); ++c) {
                contrib[i][c] = mod_floor(grading.forms[c][m.offset(f) + i], grading.moduli[c]).get_si();
            }
        }
        auto key = std::make_pair(std::make_pair(static_cast<int>(r.factor().type), r.rank()), contrib);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, factor_spans(r, contrib, moduli, h)).first;
        spans[f] = it->second;
    }

    IntMat gens;
    std::vector<const IntVec*> chosen(k);
    auto recurse = [&](auto&& self, std::size_t f, const Grading::Class& cls) -> void {
        if (f == k) {
            if (!grading.is_zero(cls)) return;
            IntVec v(k);
            for (std::size_t a = 0; a < k; ++a) {
                Int x = (*chosen[a])[1];
                for (std::size_t b = 0; b < k; ++b) {
                    if (b != a) x *= (*chosen[b])[0];
                }
                v[a] = x;
            }
            gens.push_back(std::move(v));
            return;
        }
        for (const auto& [c, basis] : spans[f]) {
            Grading::Class next = grading.add(cls, c);
            for (const auto& row : basis) {
                chosen[f] = &row;
                self(self, f + 1, next);
            }
        }
    };
    recurse(recurse, 0, grading.zero());

    Lattice doubled = span(k, gens);
    IntMat half;
    for (const auto& row : doubled.basis()) {
        IntVec v(k);
        for (std::size_t f = 0; f < k; ++f) {
            if (!divides(2, row[f])) throw InternalError("orbit sums of squares are not even");
            v[f] = -row[f] / 2;
        }
        half.push_back(v);
    }
    return span(k, half);
}

InvariantLattice compute_Dec(const LatticeModel& m, DecMode mode, DecOptions opt) {
    if (opt.height < 1 || opt.window < 1) throw PreconditionError("height and window must be positive");
    std::optional<ClosedForm> cf = closed_form(m);
    bool table = cf && cf->Dec;
    if (mode == DecMode::Table && table) return {*cf->Dec, Exactness::Exact, "table:" + cf->family};

    Lattice cur;
    int h = 1, unchanged = 0;
    for (; h <= opt.height; ++h) {
        Lattice next = dec_at_height(m, h);
        unchanged = h > 1 && next == cur ? unchanged + 1 : 0;
        cur = std::move(next);
        if (unchanged >= opt.window) break;
    }
    h = std::min(h, opt.height);
    std::string src = "enumerate(h=" + std::to_string(h) + ")";
    if (mode == DecMode::Enumerate || !table) {
        if (mode != DecMode::Enumerate) src += ", no table";
        return {cur, Exactness::LowerBound, src};
    }
    if (!(cur == *cf->Dec)) {
        throw VerificationError("Dec disagreement for " + cf->family + ": enumerate " + cur.to_string() +
                                " vs table " + cf->Dec->to_string());
    }
    return {cur, Exactness::Exact, src + "+table:" + cf->family};
}

bool generators_mode_applies(const LatticeModel& m) {
    return has_newton_transform(m) && m.grading_group() == FactorGroup{{Int(2)}, 0};
}

std::vector<ExplicitElement> explicit_elements(const LatticeModel& m) {
    std::vector<ExplicitElement> out;
    std::size_t n = m.total_rank();
    auto e = [&](std::size_t i) { return LaurentPoly::monomial(m.fundamental_weight(i)); };
    for (std::size_t f = 0; f < m.num_factors(); ++f) {
        for (std::size_t g = f + 1; g < m.num_factors(); ++g) {
            const SimpleFactor& a = m.spec().factors[f];
            const SimpleFactor& b = m.spec().factors[g];
            std::string where = " on factors " + std::to_string(f + 1) + "," + std::to_string(g + 1);
            LaurentPoly y(n);
            std::string name;
            if (a.type == DynkinType::B && b.type == DynkinType::B && a.rank == 2 && b.rank == 2) {
                std::size_t i = m.offset(f) + 1, j = m.offset(g) + 1;
                y = e(i) * (m.rho_aug(i) - m.rho_aug(j));
                name = "e^{w2}(rho(w2) - rho(w2'))" + where;
            } else if (a.type == b.type && (a.type == DynkinType::C || a.type == DynkinType::D)) {
                Int gg = gcd(Int(a.rank), Int(b.rank));
                Int u = b.rank / gg, v = a.rank / gg;
                std::size_t i = m.offset(f), j = m.offset(g);
                y = e(i) * (m.rho_aug(i).scale(u) - m.rho_aug(j).scale(v));
                name = "e^{w1}(" + u.get_str() + " rho(w1) - " + v.get_str() + " rho(w1'))" + where;
            } else {
                continue;
            }
            if (homogeneous_component(y, m.grading(), m.grading().zero()) != y) continue;
            out.push_back({name, y});
        }
    }
    return out;
}

namespace {

InvariantLattice sdec_generators(const LatticeModel& m, const InvariantLattice& dec, std::uint64_t seed) {
    if (!generators_mode_applies(m)) {
        throw PreconditionError("generators mode needs index 2 and only type A and C factors");
    }
    GcdChain chain = gcd_chain(m);
    GeneratorSet gens = build_generators(m, chain);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(-2, 2);
    const IntMat& tb = m.tstar().basis();
    std::size_t n = m.total_rank();

    IntMat rows = dec.lattice.basis();
    for (const auto& g : gens.gens) {
        TruncatedForm t = truncated_image(g.value);
        if (t.c0 != 0 || t.c1 != IntVec(n, 0)) throw InternalError(g.name() + " has a nonzero image below degree 2");
        rows.push_back(killing_coordinates(m, t.quad));
        // c2(a h) = aug(a) c2(h) for a in Z[T*].
        for (int trial = 0; trial < 2; ++trial) {
            LaurentPoly a(n);
            for (int term = 0; term < 3; ++term) {
                Exponent mu(n, 0);
                for (const auto& row : tb) {
                    long c = small(rng);
                    for (std::size_t i = 0; i < n; ++i) mu[i] += c * to_long(row[i]);
                }
                a += LaurentPoly::monomial(mu, Int(small(rng)));
            }
            if ((truncated_image(a * g.value).quad) != t.scale(a.augmentation()).quad) {
                throw InternalError("c2 of a multiple of " + g.name() + " is not the augmentation multiple");
            }
        }
    }
    return {span(m.num_factors(), rows), Exactness::Exact, "generators"};
}

InvariantLattice sdec_elements(const LatticeModel& m, const InvariantLattice& dec) {
    IntMat rows = dec.lattice.basis();
    std::size_t n = m.total_rank();
    for (const auto& el : explicit_elements(m)) {
        TruncatedForm t = truncated_image(el.value);
        if (t.c0 != 0 || t.c1 != IntVec(n, 0)) throw InternalError(el.name + " has a nonzero image below degree 2");
        rows.push_back(killing_coordinates(m, t.quad));
    }
    return {span(m.num_factors(), rows), Exactness::LowerBound, "elements"};
}

std::optional<InvariantLattice> sdec_table(const LatticeModel& m, const InvariantLattice& dec) {
    std::optional<ClosedForm> cf = closed_form(m);
    if (!cf || !cf->has_sdec()) return std::nullopt;
    std::string src = "table:" + cf->family;
    if (cf->Sdec) return InvariantLattice{*cf->Sdec, Exactness::Exact, src};
    if (cf->sdec_is_q) return InvariantLattice{compute_Q(m).lattice, Exactness::Exact, src};
    return InvariantLattice{dec.lattice, dec.exactness, src};
}

}  // namespace

Lattice sdec_upper_bound(const LatticeModel& m) {
    std::size_t n = m.total_rank(), k = m.num_factors();
    const Grading& grading = m.grading();
    std::vector<Grading::Class> classes = grading.all_classes();
    std::map<Grading::Class, std::size_t> index;
    for (std::size_t b = 0; b < classes.size(); ++b) index[classes[b]] = b;
    std::size_t a = classes.size();

    // Unknowns g_i[b]; equations: the image of sum_i g_i rho_i in Z[Lambda/T*] vanishes.
    IntMat eq(a, IntVec(n * a, 0));
    IntMat values;
    for (std::size_t i = 0; i < n; ++i) {
        Weight w = m.fundamental_weight(i);
        Int s = m.orbit_size(w);
        Grading::Class ci = m.class_of(w);
        for (std::size_t b = 0; b < a; ++b) {
            eq[index.at(grading.add(classes[b], ci))][i * a + b] += s;
            eq[b][i * a + b] -= s;
        }
        values.push_back(c2(m, m.rho_aug(i)));
    }
    IntMat rows;
    for (const auto& v : integer_kernel(eq, n * a)) {
        IntVec d(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            Int aug = 0;
            for (std::size_t b = 0; b < a; ++b) aug += v[i * a + b];
            for (std::size_t f = 0; f < k; ++f) d[f] += aug * values[i][f];
        }
        rows.push_back(d);
    }
    return span(k, rows).meet(compute_Q(m).lattice);
}

InvariantLattice compute_Sdec(const LatticeModel& m, SdecMode mode, const InvariantLattice& dec, std::uint64_t seed) {
    switch (mode) {
        case SdecMode::Generators: return sdec_generators(m, dec, seed);
        case SdecMode::Elements: return sdec_elements(m, dec);
        case SdecMode::Table: {
            auto t = sdec_table(m, dec);
            if (!t) throw PreconditionError("no closed form for Sdec of this group");
            return *t;
        }
        case SdecMode::Auto: break;
    }
    InvariantLattice lower =
        generators_mode_applies(m) ? sdec_generators(m, dec, seed) : sdec_elements(m, dec);
    Lattice upper = sdec_upper_bound(m);
    if (!upper.contains(lower.lattice)) throw InternalError("Sdec lower bound exceeds the upper bound");
    if (lower.lattice == upper) return {upper, Exactness::Exact, lower.source + "=upper"};
    if (auto t = sdec_table(m, dec)) {
        if (t->lattice.contains(lower.lattice) && upper.contains(t->lattice)) return *t;
        lower.source += ", table outside bounds";
    }
    return lower;
}

InvariantReport compute_invariants(const LatticeModel& m, DecMode dec_mode, SdecMode sdec_mode, DecOptions opt) {
    InvariantReport r;
    r.Q = compute_Q(m);
    r.Dec = compute_Dec(m, dec_mode, opt);
    r.Sdec = compute_Sdec(m, sdec_mode, r.Dec);
    switch (sdec_mode) {
        case SdecMode::Generators: r.sdec_mode = "generators"; break;
        case SdecMode::Elements: r.sdec_mode = "elements"; break;
        case SdecMode::Table: r.sdec_mode = "table"; break;
        case SdecMode::Auto: r.sdec_mode = "auto"; break;
    }
    if (!r.Sdec.lattice.contains(r.Dec.lattice)) throw VerificationError("Dec is not contained in Sdec");
    if (!r.Q.lattice.contains(r.Sdec.lattice)) throw VerificationError("Sdec is not contained in Q");
    r.inv_ind = factor_group(r.Dec.lattice, r.Q.lattice);
    r.inv_sd = factor_group(r.Dec.lattice, r.Sdec.lattice);
    return r;
}

QuotientRing::QuotientRing(const Lattice& sub, Int modulus)
    : quotient_([&] {
          if (sub.rank() != sub.dim()) throw PreconditionError("sublattice of infinite index");
          return FiniteQuotient(sub);
      }()),
      modulus_(std::move(modulus)) {
    if (modulus_ < 0 || modulus_ == 1) throw PreconditionError("coefficient modulus must be 0 or at least 2");
}

void QuotientRing::normalize(Element& e) const {
    for (auto it = e.begin(); it != e.end();) {
        if (modulus_ != 0) it->second = mod_floor(it->second, modulus_);
        it = it->second == 0 ? e.erase(it) : std::next(it);
    }
}

QuotientRing::Element QuotientRing::reduce(const LaurentPoly& f) const {
    if (!f.ring().is_integers()) throw PreconditionError("reduction starts from Z coefficients");
    Element e;
    for (const auto& t : f.terms()) e[class_of(t.exp)] += t.coeff;
    normalize(e);
    return e;
}

QuotientRing::Element QuotientRing::add(const Element& a, const Element& b) const {
    Element e = a;
    for (const auto& [k, v] : b) e[k] += v;
    normalize(e);
    return e;
}

QuotientRing::Element QuotientRing::multiply(const Element& a, const Element& b) const {
    Element e;
    const IntVec& mods = moduli();
    for (const auto& [ka, va] : a) {
        for (const auto& [kb, vb] : b) {
            IntVec k(mods.size());
            for (std::size_t i = 0; i < mods.size(); ++i) k[i] = mod_floor(ka[i] + kb[i], mods[i]);
            e[k] += va * vb;
        }
    }
    normalize(e);
    return e;
}

QuotientRing::Element QuotientRing::monomial(const Weight& w, const Int& c) const {
    Element e{{class_of(w), c}};
    normalize(e);
    return e;
}

std::string QuotientRing::to_string(const Element& e) const {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : e) {
        os << (first ? "" : " + ") << v.get_str() << "*[";
        for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i].get_str();
        os << "]";
        first = false;
    }
    return os.str();
}

}  // namespace weylinv
