#include "weylinv/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace weylinv {

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; ++p) {
        while (divides(p, n)) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

CoefficientRing::CoefficientRing(Int m) : modulus(std::move(m)) {
    if (modulus != 0 && modulus < 2) throw PreconditionError("coefficient modulus must be 0 or >= 2");
}

namespace {

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (long v : e) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

bool term_less(const Term& a, const Term& b) { return a.exp < b.exp; }

void check_compatible(const LaurentPoly& a, const LaurentPoly& b) {
    if (!(a.ring() == b.ring())) throw RingMismatch("coefficient rings differ");
    if (a.rank() != b.rank()) throw RingMismatch("ambient ranks differ");
}

}  // namespace

LaurentPoly::LaurentPoly(std::size_t rank, CoefficientRing ring) : rank_(rank), ring_(std::move(ring)) {}

LaurentPoly LaurentPoly::constant(std::size_t rank, const Int& c, CoefficientRing ring) {
    LaurentPoly p(rank, std::move(ring));
    Int v = p.ring_.canonical(c);
    if (v != 0) p.terms_.push_back({Exponent(rank, 0), v});
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Int& c, CoefficientRing ring) {
    LaurentPoly p(e.size(), std::move(ring));
    Int v = p.ring_.canonical(c);
    if (v != 0) p.terms_.push_back({e, v});
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t rank, std::size_t axis, long power, CoefficientRing ring) {
    Exponent e(rank, 0);
    e.at(axis) = power;
    return monomial(e, 1, std::move(ring));
}

LaurentPoly LaurentPoly::from_terms(std::size_t rank, std::vector<Term> terms, CoefficientRing ring) {
    LaurentPoly p(rank, std::move(ring));
    for (const auto& t : terms) {
        if (t.exp.size() != rank) throw RingMismatch("term exponent has wrong length");
    }
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

void LaurentPoly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_less);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exp == t.exp) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : out) {
        t.coeff = ring_.canonical(t.coeff);
        if (t.coeff != 0) terms_.push_back(std::move(t));
    }
}

Int LaurentPoly::coeff(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e, 0}, term_less);
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = ring_.canonical(-t.coeff);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(*this, o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].exp < terms_[i].exp) {
            out.push_back(o.terms_[j++]);
        } else {
            Int c = ring_.canonical(terms_[i].coeff + o.terms_[j].coeff);
            if (c != 0) out.push_back({std::move(terms_[i].exp), c});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_compatible(a, b);
    LaurentPoly p(a.rank_, a.ring_);
    if (a.is_zero() || b.is_zero()) return p;
    std::unordered_map<Exponent, Int, ExponentHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    Exponent e(a.rank_);
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = s.exp[k] + t.exp[k];
            acc[e] += s.coeff * t.coeff;
        }
    }
    p.terms_.reserve(acc.size());
    for (auto& [ex, c] : acc) p.terms_.push_back({ex, std::move(c)});
    p.canonicalize();
    return p;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (rank_ != o.rank_ || !(ring_ == o.ring_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::scale(const Int& c) const {
    LaurentPoly p(rank_, ring_);
    for (const auto& t : terms_) {
        Int v = ring_.canonical(t.coeff * c);
        if (v != 0) p.terms_.push_back({t.exp, v});
    }
    return p;
}

LaurentPoly LaurentPoly::shift(const Exponent& e) const {
    if (e.size() != rank_) throw RingMismatch("shift exponent has wrong length");
    LaurentPoly p = *this;
    for (auto& t : p.terms_) {
        for (std::size_t k = 0; k < rank_; ++k) t.exp[k] += e[k];
    }
    // Translation preserves lexicographic order.
    return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = constant(rank_, 1, ring_);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::divide_exact(const Int& c) const {
    if (!ring_.is_integers()) throw PreconditionError("divide_exact needs integer coefficients");
    LaurentPoly p = *this;
    for (auto& t : p.terms_) {
        if (!divides(c, t.coeff)) throw PreconditionError("coefficient not divisible by " + c.get_str());
        t.coeff = exact_div(t.coeff, c);
    }
    return p;
}

std::optional<Degrees> LaurentPoly::degrees(std::size_t axis) const {
    if (axis >= rank_) throw PreconditionError("axis out of range");
    if (terms_.empty()) return std::nullopt;
    long hi = terms_.front().exp[axis];
    long lo = hi;
    for (const auto& t : terms_) {
        hi = std::max(hi, t.exp[axis]);
        lo = std::min(lo, t.exp[axis]);
    }
    return Degrees{hi, lo, hi - lo};
}

bool LaurentPoly::is_divisor(std::size_t axis) const {
    auto deg = degrees(axis);
    if (!deg) throw PreconditionError("is_divisor on the zero polynomial");
    const Term* lead = nullptr;
    for (const auto& t : terms_) {
        if (t.exp[axis] != deg->hdeg) continue;
        if (lead) return false;
        lead = &t;
    }
    return lead->coeff == 1;
}

LaurentPoly LaurentPoly::slice(std::size_t axis, long k) const {
    LaurentPoly p(rank_, ring_);
    for (const auto& t : terms_) {
        if (t.exp[axis] != k) continue;
        Term s = t;
        s.exp[axis] = 0;
        p.terms_.push_back(std::move(s));
    }
    // Zeroing one coordinate of equal values keeps the order.
    return p;
}

bool LaurentPoly::only_uses_axes_below(std::size_t first_axis) const {
    for (const auto& t : terms_) {
        for (std::size_t k = first_axis; k < rank_; ++k) {
            if (t.exp[k] != 0) return false;
        }
    }
    return true;
}

Int LaurentPoly::augmentation() const {
    Int s = 0;
    for (const auto& t : terms_) s += t.coeff;
    return ring_.canonical(s);
}

LaurentPoly LaurentPoly::reduce_coefficients(const Int& m) const {
    if (m < 2) throw PreconditionError("reduction modulus must be >= 2");
    if (!ring_.is_integers() && !divides(m, ring_.modulus)) {
        throw RingMismatch("cannot reduce Z/" + ring_.modulus.get_str() + " modulo " + m.get_str());
    }
    return in_ring(CoefficientRing(m));
}

LaurentPoly LaurentPoly::lift() const { return in_ring(CoefficientRing()); }

LaurentPoly LaurentPoly::in_ring(const CoefficientRing& r) const {
    LaurentPoly p(rank_, r);
    for (const auto& t : terms_) {
        Int v = r.canonical(t.coeff);
        if (v != 0) p.terms_.push_back({t.exp, v});
    }
    return p;
}

LaurentPoly LaurentPoly::map_exponents(const std::vector<std::vector<long>>& M, std::size_t out_rank) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponent e(out_rank, 0);
        for (std::size_t i = 0; i < out_rank; ++i) {
            for (std::size_t j = 0; j < rank_; ++j) e[i] += M[i][j] * t.exp[j];
        }
        out.push_back({std::move(e), t.coeff});
    }
    return from_terms(out_rank, std::move(out), ring_);
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images,
                                    const std::vector<LaurentPoly>& inverse_images) const {
    if (images.size() != rank_) throw RingMismatch("substitution needs one image per variable");
    if (images.empty()) return *this;
    std::size_t out_rank = images.front().rank();
    LaurentPoly result(out_rank, ring_);
    for (const auto& t : terms_) {
        LaurentPoly m = constant(out_rank, t.coeff, ring_);
        for (std::size_t i = 0; i < rank_; ++i) {
            long a = t.exp[i];
            if (a > 0) m = m * images[i].pow(static_cast<unsigned>(a));
            if (a < 0) m = m * inverse_images.at(i).pow(static_cast<unsigned>(-a));
        }
        result += m;
    }
    return result;
}

LaurentPoly LaurentPoly::embed(std::size_t new_rank, std::size_t offset) const {
    if (offset + rank_ > new_rank) throw RingMismatch("embedding does not fit");
    LaurentPoly p(new_rank, ring_);
    for (const auto& t : terms_) {
        Exponent e(new_rank, 0);
        std::copy(t.exp.begin(), t.exp.end(), e.begin() + static_cast<long>(offset));
        p.terms_.push_back({std::move(e), t.coeff});
    }
    return p;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff.get_str();
        bool star = false;
        for (std::size_t k = 0; k < rank_; ++k) {
            if (t.exp[k] == 0) continue;
            os << (star ? " " : " * ");
            star = true;
            os << 'x' << (k + 1);
            if (t.exp[k] != 1) os << '^' << t.exp[k];
        }
    }
    return os.str();
}

namespace {

class PolyParser {
  public:
    PolyParser(const std::string& s, std::size_t rank) : s_(s), rank_(rank) {}

    std::vector<Term> parse() {
        std::vector<Term> terms;
        skip();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            bool signed_term = false;
            while (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -sign;
                signed_term = true;
                ++pos_;
                skip();
            }
            if (!signed_term && !first) fail("expected '+' or '-'");
            first = false;
            terms.push_back(term(sign));
            skip();
        }
        return terms;
    }

  private:
    Term term(int sign) {
        Term t{Exponent(rank_, 0), Int(sign)};
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff *= integer();
            any = true;
            skip();
        }
        while (!at_end() && (peek() == '*' || peek() == 'x')) {
            if (peek() == '*') {
                ++pos_;
                skip();
            }
            if (peek() != 'x') fail("expected variable");
            ++pos_;
            Int idx = integer();
            if (idx < 1 || idx > static_cast<long>(rank_)) fail("variable index out of range");
            long e = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                skip();
                bool paren = peek() == '(';
                if (paren) ++pos_;
                int esign = 1;
                if (peek() == '-') {
                    esign = -1;
                    ++pos_;
                }
                e = esign * to_long(integer());
                if (paren) {
                    if (peek() != ')') fail("expected ')'");
                    ++pos_;
                }
            }
            t.exp[to_long(idx) - 1] += e;
            any = true;
            skip();
        }
        if (!any) fail("expected a term");
        return t;
    }

    Int integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Int(s_.substr(start, pos_ - start));
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    [[noreturn]] void fail(const std::string& why) const {
        throw PreconditionError("polynomial parse error at " + std::to_string(pos_) + ": " + why);
    }

    const std::string& s_;
    std::size_t rank_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, std::size_t rank, CoefficientRing ring) {
    return from_terms(rank, PolyParser(text, rank).parse(), std::move(ring));
}

DivisionResult bounded_divide(const LaurentPoly& f, const LaurentPoly& p, std::size_t axis, long d) {
    if (!(f.ring() == p.ring()) || f.rank() != p.rank()) throw RingMismatch("division operands differ");
    if (p.is_zero() || !p.is_divisor(axis)) throw PreconditionError("divisor is not monic in the axis");
    DivisionResult out{LaurentPoly(f.rank(), f.ring()), LaurentPoly(f.rank(), f.ring())};
    if (f.is_zero()) return out;
    if (f.degrees(axis)->ldeg < d) throw PreconditionError("dividend lies below the division bound");

    Degrees pd = *p.degrees(axis);
    LaurentPoly lead = p.slice(axis, pd.hdeg);
    Exponent lead_inv = lead.terms().front().exp;
    for (auto& v : lead_inv) v = -v;

    LaurentPoly rem = f;
    while (!rem.is_zero()) {
        long m = rem.degrees(axis)->hdeg;
        if (m < d + pd.wdeg) break;
        Exponent s = lead_inv;
        s[axis] = m - pd.hdeg;
        LaurentPoly q0 = rem.slice(axis, m).shift(s);
        rem -= q0 * p;
        out.q += q0;
    }
    out.r = std::move(rem);
    return out;
}

Grading::Class Grading::class_of(const Exponent& e) const {
    Class c(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < rank; ++j) {
            if (e[j] != 0) s += forms[i][j] * e[j];
        }
        c[i] = mod_floor(s, moduli[i]);
    }
    return c;
}

Grading::Class Grading::add(const Class& a, const Class& b) const {
    Class c(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) c[i] = mod_floor(a[i] + b[i], moduli[i]);
    return c;
}

bool Grading::is_zero(const Class& c) const {
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
}

std::vector<Grading::Class> Grading::all_classes() const {
    std::vector<Class> out{zero()};
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        std::vector<Class> next;
        for (const auto& c : out) {
            for (Int v = 0; v < moduli[i]; ++v) {
                Class d = c;
                d[i] = v;
                next.push_back(std::move(d));
            }
        }
        out = std::move(next);
    }
    return out;
}

LaurentPoly homogeneous_component(const LaurentPoly& f, const Grading& g, const Grading::Class& c) {
    if (g.rank != f.rank()) throw RingMismatch("grading rank differs from polynomial rank");
    std::vector<Term> keep;
    for (const auto& t : f.terms()) {
        if (g.class_of(t.exp) == c) keep.push_back(t);
    }
    return LaurentPoly::from_terms(f.rank(), std::move(keep), f.ring());
}

}  // namespace weylinv
