#include "weylinv/spec_parser.hpp"

#include <cctype>
#include <sstream>

namespace weylinv {

namespace {

struct ParsedFactor {
    SimpleFactor factor;
    std::vector<long> own_kernel;  // residues of alias constraints on this factor
    std::vector<long> own_moduli;
};

class SpecParser {
  public:
    explicit SpecParser(const std::string& s) : s_(s) {}

    GroupSpec parse() {
        std::vector<ParsedFactor> parsed;
        skip();
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++pos_;
        }
        parsed.push_back(factor());
        skip();
        while (peek() == 'x' || peek() == 'X' || peek() == '*') {
            ++pos_;
            parsed.push_back(factor());
            skip();
        }
        if (paren) expect(')');

        GroupSpec spec;
        std::size_t n = parsed.size();
        for (const auto& p : parsed) spec.factors.push_back(p.factor);
        for (std::size_t f = 0; f < n; ++f) {
            for (std::size_t k = 0; k < parsed[f].own_moduli.size(); ++k) {
                CenterConstraint c{parsed[f].own_moduli[k], std::vector<long>(n, 0)};
                c.residues[f] = parsed[f].own_kernel[k];
                spec.kernel.push_back(c);
            }
        }
        skip();
        while (peek() == '/') {
            ++pos_;
            spec.kernel.push_back(center(n));
            skip();
        }
        if (pos_ != s_.size()) fail("unexpected trailing input");
        try {
            LatticeModel check(spec);
        } catch (const std::invalid_argument& e) {
            throw SpecSyntaxError(e.what(), pos_);
        }
        return spec;
    }

  private:
    ParsedFactor factor() {
        skip();
        std::size_t start = pos_;
        std::string name;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) name += s_[pos_++];
        ParsedFactor p;
        if (name == "E6" || name == "E7") {
            p.factor = {name == "E6" ? DynkinType::E6 : DynkinType::E7, name == "E6" ? 6 : 7};
            return p;
        }
        skip();
        expect('(');
        long n = number();
        expect(')');
        auto need_even = [&] {
            if (n % 2 != 0) fail_at(name + " needs an even argument", start);
        };
        if (name == "SL" || name == "PGL") {
            if (n < 2) fail_at("SL(n) needs n >= 2", start);
            p.factor = {DynkinType::A, static_cast<int>(n - 1)};
            if (name == "PGL") add(p, n, 1);
        } else if (name == "Sp" || name == "PGSp") {
            need_even();
            if (n < 2) fail_at("Sp(2n) needs n >= 1", start);
            p.factor = {DynkinType::C, static_cast<int>(n / 2)};
            if (name == "PGSp") add(p, 2, 1);
        } else if (name == "Spin" || name == "SO" || name == "PGO" || name == "HSpin") {
            if (n % 2 == 1) {
                if (name == "PGO" || name == "HSpin") fail_at(name + " needs an even argument", start);
                if (n < 5) fail_at("Spin(2n+1) needs n >= 2", start);
                p.factor = {DynkinType::B, static_cast<int>(n / 2)};
                if (name == "SO") add(p, 2, 1);
            } else {
                if (n < 8) fail_at("Spin(2n) needs n >= 4", start);
                int m = static_cast<int>(n / 2);
                p.factor = {DynkinType::D, m};
                if (name == "SO") add(p, 2, 1);
                if (name == "HSpin") {
                    if (m % 2 != 0) fail_at("HSpin(2n) needs n even", start);
                    add(p, 2, 3);
                }
                if (name == "PGO") {
                    if (m % 2 == 0) {
                        add(p, 2, 1);
                        add(p, 2, 2);
                    } else {
                        add(p, 4, 1);
                    }
                }
            }
        } else {
            fail_at("unknown factor '" + name + "'", start);
        }
        return p;
    }

    static void add(ParsedFactor& p, long modulus, long residue) {
        p.own_moduli.push_back(modulus);
        p.own_kernel.push_back(residue);
    }

    CenterConstraint center(std::size_t nfactors) {
        skip();
        std::size_t start = pos_;
        std::string name;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) name += s_[pos_++];
        if (name != "mu") fail_at("expected mu(k)", start);
        expect('(');
        long k = number();
        expect(')');
        if (k < 1) fail_at("mu(k) needs k >= 1", start);
        CenterConstraint c{k, std::vector<long>(nfactors, 1)};
        skip();
        if (peek() == '[') {
            ++pos_;
            skip();
            if (s_.compare(pos_, 4, "diag") == 0) {
                pos_ += 4;
                expect(']');
                return c;
            }
            c.residues.clear();
            c.residues.push_back(signed_number());
            skip();
            while (peek() == ',') {
                ++pos_;
                c.residues.push_back(signed_number());
                skip();
            }
            expect(']');
            if (c.residues.size() != nfactors) fail_at("residue tuple length differs from factor count", start);
        }
        return c;
    }

    long number() {
        skip();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::stol(s_.substr(start, pos_ - start));
    }

    long signed_number() {
        skip();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        long v = number();
        return neg ? -v : v;
    }

    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    [[noreturn]] void fail(const std::string& why) const { throw SpecSyntaxError(why, pos_); }
    [[noreturn]] void fail_at(const std::string& why, std::size_t at) const { throw SpecSyntaxError(why, at); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string factor_text(const SimpleFactor& f) {
    switch (f.type) {
        case DynkinType::A: return "SL(" + std::to_string(f.rank + 1) + ")";
        case DynkinType::B: return "Spin(" + std::to_string(2 * f.rank + 1) + ")";
        case DynkinType::C: return "Sp(" + std::to_string(2 * f.rank) + ")";
        case DynkinType::D: return "Spin(" + std::to_string(2 * f.rank) + ")";
        case DynkinType::E6: return "E6";
        case DynkinType::E7: return "E7";
    }
    return "?";
}

}  // namespace

GroupSpec parse_spec(const std::string& text) { return SpecParser(text).parse(); }

std::string format_spec(const GroupSpec& spec) {
    std::ostringstream os;
    bool many = spec.factors.size() > 1;
    if (many) os << '(';
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        os << (i ? " x " : "") << factor_text(spec.factors[i]);
    }
    if (many) os << ')';
    for (const auto& c : spec.kernel) {
        os << " / mu(" << c.modulus << ")[";
        for (std::size_t i = 0; i < c.residues.size(); ++i) os << (i ? "," : "") << c.residues[i];
        os << ']';
    }
    return os.str();
}

}  // namespace weylinv
