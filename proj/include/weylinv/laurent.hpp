// Laurent polynomials over Z and Z/m on a free abelian group of rank n.
//
// Axes are 0-based in the C++ API; the text format names them x1..xn.
#pragma once

#include "weylinv/bigint.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylinv {

class RingMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// modulus 0 is Z, m >= 2 is Z/m.
struct CoefficientRing {
    Int modulus = 0;

    CoefficientRing() = default;
    explicit CoefficientRing(Int m);

    static CoefficientRing integers() { return CoefficientRing(); }
    static CoefficientRing mod(Int m) { return CoefficientRing(std::move(m)); }

    bool is_integers() const { return modulus == 0; }
    Int canonical(const Int& c) const { return modulus == 0 ? c : mod_floor(c, modulus); }
    bool operator==(const CoefficientRing& o) const { return modulus == o.modulus; }
};

struct Term {
    Exponent exp;
    Int coeff;
};

struct Degrees {
    long hdeg;
    long ldeg;
    long wdeg;
};

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t rank, CoefficientRing ring = {});

    static LaurentPoly constant(std::size_t rank, const Int& c, CoefficientRing ring = {});
    static LaurentPoly monomial(const Exponent& e, const Int& c = 1, CoefficientRing ring = {});
    // x_axis (or its inverse when power is negative) in the given rank.
    static LaurentPoly variable(std::size_t rank, std::size_t axis, long power = 1,
                                CoefficientRing ring = {});
    // Builds from arbitrary terms; merges duplicates and drops zeros.
    static LaurentPoly from_terms(std::size_t rank, std::vector<Term> terms, CoefficientRing ring = {});

    std::size_t rank() const { return rank_; }
    const CoefficientRing& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Exponent& e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly scale(const Int& c) const;
    LaurentPoly shift(const Exponent& e) const;
    LaurentPoly pow(unsigned k) const;

    // Divides every coefficient by c; throws unless all are divisible (over Z).
    LaurentPoly divide_exact(const Int& c) const;

    std::optional<Degrees> degrees(std::size_t axis) const;
    bool is_divisor(std::size_t axis) const;
    // Coefficient of x_axis^k as a polynomial with x_axis exponent zeroed.
    LaurentPoly slice(std::size_t axis, long k) const;
    // True when no term uses an axis >= first_axis.
    bool only_uses_axes_below(std::size_t first_axis) const;

    Int augmentation() const;
    LaurentPoly reduce_coefficients(const Int& m) const;
    // Canonical lift to Z with coefficients in [0, m).
    LaurentPoly lift() const;
    // Same terms viewed in another ring, coefficients re-canonicalized.
    LaurentPoly in_ring(const CoefficientRing& r) const;

    // Exponent e becomes M * e; M has out_rank rows and rank() columns.
    LaurentPoly map_exponents(const std::vector<std::vector<long>>& M, std::size_t out_rank) const;
    // Ring map sending x_i to images[i]; images[i] must be a unit when negative powers occur,
    // so inverse_images[i] supplies x_i^{-1}.
    LaurentPoly substitute(const std::vector<LaurentPoly>& images,
                           const std::vector<LaurentPoly>& inverse_images) const;
    // Embeds into a larger rank at the given offset.
    LaurentPoly embed(std::size_t new_rank, std::size_t offset) const;

    std::string to_string() const;
    static LaurentPoly parse(const std::string& text, std::size_t rank, CoefficientRing ring = {});

  private:
    void canonicalize();

    std::size_t rank_ = 0;
    CoefficientRing ring_;
    std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

struct DivisionResult {
    LaurentPoly q;
    LaurentPoly r;
};

// Division of f by the divisor p along axis, bounded below by d.
// Guarantees f == p*q + r with r == 0 or d <= ldeg(r), hdeg(r) < d + wdeg(p).
DivisionResult bounded_divide(const LaurentPoly& f, const LaurentPoly& p, std::size_t axis, long d);

// A homomorphism from Z^n to a finite abelian group, given by integer
// linear forms reduced modulo their own moduli.
struct Grading {
    std::size_t rank = 0;
    std::vector<std::vector<Int>> forms;
    std::vector<Int> moduli;

    using Class = std::vector<Int>;

    Class class_of(const Exponent& e) const;
    Class zero() const { return Class(moduli.size(), Int(0)); }
    Class add(const Class& a, const Class& b) const;
    bool is_zero(const Class& c) const;
    // Every class of the product of cyclic groups Z/moduli[i].
    std::vector<Class> all_classes() const;
};

LaurentPoly homogeneous_component(const LaurentPoly& f, const Grading& g, const Grading::Class& c);

}  // namespace weylinv
