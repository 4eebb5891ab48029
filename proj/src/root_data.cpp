#include "weylinv/root_data.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace weylinv {

namespace {

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (long v : w) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
        return h;
    }
};

void validate(const SimpleFactor& f) {
    int n = f.rank;
    bool ok = true;
    switch (f.type) {
        case DynkinType::A: ok = n >= 1; break;
        case DynkinType::B: ok = n >= 2; break;
        case DynkinType::C: ok = n >= 1; break;
        case DynkinType::D: ok = n >= 4; break;
        case DynkinType::E6: ok = n == 6; break;
        case DynkinType::E7: ok = n == 7; break;
    }
    if (!ok) throw std::invalid_argument("rank out of range for " + f.label());
}

std::vector<std::pair<int, int>> edges(const SimpleFactor& f) {
    std::vector<std::pair<int, int>> e;
    int n = f.rank;
    switch (f.type) {
        case DynkinType::A:
        case DynkinType::B:
        case DynkinType::C:
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            break;
        case DynkinType::D:
            for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(n - 3, n - 1);
            break;
        case DynkinType::E6:
        case DynkinType::E7:
            e = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}};
            if (f.type == DynkinType::E7) e.emplace_back(5, 6);
            break;
    }
    return e;
}

Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

std::string dynkin_name(DynkinType t) {
    switch (t) {
        case DynkinType::A: return "A";
        case DynkinType::B: return "B";
        case DynkinType::C: return "C";
        case DynkinType::D: return "D";
        case DynkinType::E6: return "E6";
        case DynkinType::E7: return "E7";
    }
    return "?";
}

std::string SimpleFactor::label() const {
    if (type == DynkinType::E6 || type == DynkinType::E7) return dynkin_name(type);
    return dynkin_name(type) + std::to_string(rank);
}

Int weyl_group_order(const SimpleFactor& f) {
    long n = f.rank;
    switch (f.type) {
        case DynkinType::A: return factorial(n + 1);
        case DynkinType::B:
        case DynkinType::C: return (Int(1) << static_cast<mp_bitcnt_t>(n)) * factorial(n);
        case DynkinType::D: return (Int(1) << static_cast<mp_bitcnt_t>(n - 1)) * factorial(n);
        case DynkinType::E6: return 51840;
        case DynkinType::E7: return 2903040;
    }
    return 0;
}

std::vector<CenterCharacter> center_characters(const SimpleFactor& f) {
    int n = f.rank;
    std::vector<long> form(static_cast<std::size_t>(n), 0);
    switch (f.type) {
        case DynkinType::A:
            for (int i = 0; i < n; ++i) form[i] = i + 1;
            return {{form, n + 1}};
        case DynkinType::B:
            form[n - 1] = 1;
            return {{form, 2}};
        case DynkinType::C:
            for (int i = 0; i < n; i += 2) form[i] = 1;
            return {{form, 2}};
        case DynkinType::D: {
            std::vector<long> odd(static_cast<std::size_t>(n), 0);
            for (int i = 0; i + 2 < n; i += 2) odd[i] = 1;
            if (n % 2 == 1) {
                for (int i = 0; i < n; ++i) form[i] = 2 * odd[i];
                form[n - 2] = 1;
                form[n - 1] = 3;
                return {{form, 4}};
            }
            std::vector<long> chi1(static_cast<std::size_t>(n), 0), chi2 = odd;
            chi1[n - 2] = 1;
            chi1[n - 1] = 1;
            chi2[n - 1] = 1;
            return {{chi1, 2}, {chi2, 2}};
        }
        case DynkinType::E6:
            return {{{1, 0, -1, 0, 1, -1}, 3}};
        case DynkinType::E7:
            return {{{0, 1, 0, 0, 1, 0, 1}, 2}};
    }
    return {};
}

RootSystem::RootSystem(SimpleFactor f) : factor_(f) {
    validate(f);
    std::size_t n = static_cast<std::size_t>(f.rank);
    cartan_.assign(n, std::vector<long>(n, 0));
    killing_.assign(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        cartan_[i][i] = 2;
        killing_[i][i] = 1;
    }
    for (auto [i, j] : edges(f)) {
        cartan_[i][j] = cartan_[j][i] = -1;
        killing_[i][j] = killing_[j][i] = Rat(-1, 2);
    }
    if (f.type == DynkinType::B) {
        // alpha_n short.
        cartan_[n - 2][n - 1] = -2;
        killing_[n - 1][n - 1] = 2;
        killing_[n - 2][n - 1] = killing_[n - 1][n - 2] = -1;
    } else if (f.type == DynkinType::C && n >= 2) {
        // alpha_n long.
        cartan_[n - 1][n - 2] = -2;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            killing_[i][i] = 2;
            killing_[i][i + 1] = killing_[i + 1][i] = -1;
        }
    }
    killing_inv_ = rat_inverse(killing_);
}

Int RootSystem::weyl_order() const { return weyl_group_order(factor_); }

void RootSystem::reflect(Weight& w, int node) const {
    long a = w[static_cast<std::size_t>(node)];
    if (a == 0) return;
    const auto& row = cartan_[static_cast<std::size_t>(node)];
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= a * row[j];
}

bool RootSystem::is_dominant(const Weight& w) const {
    return std::all_of(w.begin(), w.end(), [](long v) { return v >= 0; });
}

Weight RootSystem::dominant(Weight w) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank(); ++i) {
            if (w[static_cast<std::size_t>(i)] < 0) {
                reflect(w, i);
                changed = true;
            }
        }
    }
    return w;
}

std::vector<Weight> RootSystem::orbit(const Weight& w) const {
    std::unordered_set<Weight, WeightHash> seen{w};
    std::vector<Weight> out{w};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int i = 0; i < rank(); ++i) {
            if (out[k][static_cast<std::size_t>(i)] == 0) continue;
            Weight v = out[k];
            reflect(v, i);
            if (seen.insert(v).second) out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int RootSystem::orbit_size(const Weight& w) const {
    std::size_t n = w.size();
    std::vector<int> comp(n, -1);
    Int stab = 1;
    for (std::size_t s = 0; s < n; ++s) {
        if (w[s] != 0 || comp[s] >= 0) continue;
        // Collect the connected component of zero nodes containing s.
        std::vector<std::size_t> nodes{s};
        comp[s] = static_cast<int>(s);
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j != nodes[k] && cartan_[nodes[k]][j] != 0 && w[j] == 0 && comp[j] < 0) {
                    comp[j] = static_cast<int>(s);
                    nodes.push_back(j);
                }
            }
        }
        long k = static_cast<long>(nodes.size());
        bool doubled = false;
        std::size_t branch = n;
        for (auto a : nodes) {
            int deg = 0;
            for (auto b : nodes) {
                if (a == b || cartan_[a][b] == 0) continue;
                ++deg;
                if (cartan_[a][b] * cartan_[b][a] == 2) doubled = true;
            }
            if (deg == 3) branch = a;
        }
        SimpleFactor t{DynkinType::A, static_cast<int>(k)};
        if (doubled) {
            t.type = DynkinType::B;
        } else if (branch < n) {
            std::vector<long> arms;
            for (auto b : nodes) {
                if (b == branch || cartan_[branch][b] == 0) continue;
                // Walk the arm away from the branch node.
                long len = 1;
                std::size_t prev = branch, cur = b;
                while (true) {
                    std::size_t next = n;
                    for (auto c : nodes) {
                        if (c != prev && c != cur && cartan_[cur][c] != 0) next = c;
                    }
                    if (next == n) break;
                    prev = cur;
                    cur = next;
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms[1] == 1) t.type = DynkinType::D;
            else if (arms[2] == 2) t.type = DynkinType::E6;
            else t.type = DynkinType::E7;
            if (t.type == DynkinType::E6) t.rank = 6;
            if (t.type == DynkinType::E7) t.rank = 7;
        }
        stab *= weyl_group_order(t);
    }
    return exact_div(weyl_order(), stab);
}

Rat RootSystem::dual_norm(const Weight& w) const {
    Rat s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (w[j] != 0) s += killing_inv_[i][j] * w[i] * w[j];
        }
    }
    return s;
}

LatticeModel::LatticeModel(GroupSpec spec) : spec_(std::move(spec)) {
    if (spec_.factors.empty()) throw std::invalid_argument("group has no factors");
    for (const auto& f : spec_.factors) {
        offsets_.push_back(total_rank_);
        roots_.emplace_back(f);
        total_rank_ += static_cast<std::size_t>(f.rank);
    }
    for (const auto& c : spec_.kernel) {
        if (c.modulus < 1) throw std::invalid_argument("center modulus must be positive");
        if (c.residues.size() != roots_.size()) throw std::invalid_argument("one residue per factor required");
        IntVec form(total_rank_, 0);
        for (std::size_t f = 0; f < roots_.size(); ++f) {
            long r = c.residues[f];
            if (r == 0) continue;
            auto chars = center_characters(spec_.factors[f]);
            std::vector<long> local(static_cast<std::size_t>(spec_.factors[f].rank), 0);
            if (chars.size() == 1) {
                if ((r * chars[0].modulus) % c.modulus != 0) {
                    throw std::invalid_argument("residue " + std::to_string(r) + " on " + spec_.factors[f].label() +
                                                " is not a character of mu(" + std::to_string(c.modulus) + ")");
                }
                for (std::size_t j = 0; j < local.size(); ++j) local[j] = r * chars[0].form[j];
            } else {
                if (r < 0 || r > 3 || 2 % c.modulus != 0) {
                    throw std::invalid_argument("invalid center code " + std::to_string(r) + " on " +
                                                spec_.factors[f].label() + " for mu(" +
                                                std::to_string(c.modulus) + ")");
                }
                for (std::size_t j = 0; j < local.size(); ++j) {
                    local[j] = (r & 1) * chars[0].form[j] + ((r >> 1) & 1) * chars[1].form[j];
                }
            }
            for (std::size_t j = 0; j < local.size(); ++j) form[offsets_[f] + j] += local[j];
        }
        if (c.modulus == 1) continue;
        forms_.push_back(form);
        moduli_.push_back(c.modulus);
    }
    tstar_ = Lattice::from_congruences(total_rank_, forms_, moduli_);
    grading_ = Grading{total_rank_, forms_, moduli_};
    grading_group_ = factor_group(tstar_, Lattice::full(total_rank_));
}

Weight LatticeModel::fundamental_weight(std::size_t i) const {
    Weight w(total_rank_, 0);
    w.at(i) = 1;
    return w;
}

std::pair<std::size_t, int> LatticeModel::locate(std::size_t i) const {
    for (std::size_t f = roots_.size(); f-- > 0;) {
        if (i >= offsets_[f]) return {f, static_cast<int>(i - offsets_[f])};
    }
    throw std::out_of_range("coordinate index");
}

Weight LatticeModel::factor_part(const Weight& w, std::size_t f) const {
    auto b = w.begin() + static_cast<long>(offsets_[f]);
    return Weight(b, b + roots_[f].rank());
}

std::vector<Weight> LatticeModel::weyl_orbit(const Weight& w) const {
    std::vector<Weight> out{Weight()};
    for (std::size_t f = 0; f < roots_.size(); ++f) {
        auto local = roots_[f].orbit(factor_part(w, f));
        std::vector<Weight> next;
        next.reserve(out.size() * local.size());
        for (const auto& a : out) {
            for (const auto& b : local) {
                Weight c = a;
                c.insert(c.end(), b.begin(), b.end());
                next.push_back(std::move(c));
            }
        }
        out = std::move(next);
    }
    return out;
}

Int LatticeModel::orbit_size(const Weight& w) const {
    Int s = 1;
    for (std::size_t f = 0; f < roots_.size(); ++f) {
        s *= roots_[f].orbit_size(roots_[f].dominant(factor_part(w, f)));
    }
    return s;
}

LaurentPoly LatticeModel::orbit_poly(const Weight& w, bool augmented, CoefficientRing ring) const {
    auto orbit = weyl_orbit(w);
    std::vector<Term> terms;
    terms.reserve(orbit.size() + 1);
    for (auto& v : orbit) terms.push_back({std::move(v), 1});
    if (augmented) terms.push_back({Weight(total_rank_, 0), -Int(static_cast<unsigned long>(terms.size()))});
    return LaurentPoly::from_terms(total_rank_, std::move(terms), std::move(ring));
}

LaurentPoly LatticeModel::rho(std::size_t i, CoefficientRing ring) const {
    return orbit_poly(fundamental_weight(i), false, std::move(ring));
}

LaurentPoly LatticeModel::rho_aug(std::size_t i, CoefficientRing ring) const {
    return orbit_poly(fundamental_weight(i), true, std::move(ring));
}

}  // namespace weylinv
