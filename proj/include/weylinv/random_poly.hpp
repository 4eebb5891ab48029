// Seeded random Laurent polynomials for fuzzing and property tests.
#pragma once

#include "weylinv/syzygy.hpp"

#include <random>

namespace weylinv {

class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return range(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))];
    }

    Exponent exponent(std::size_t rank, long lo, long hi) {
        Exponent e(rank);
        for (auto& v : e) v = range(lo, hi);
        return e;
    }

    // Up to max_terms terms with exponents in [lo, hi] on the first `used` axes.
    LaurentPoly poly(std::size_t rank, const CoefficientRing& ring, int max_terms, long lo = -4, long hi = 4,
                     long cmax = 5, std::size_t used = SIZE_MAX) {
        if (used > rank) used = rank;
        std::vector<Term> terms;
        int n = static_cast<int>(range(0, max_terms));
        for (int i = 0; i < n; ++i) {
            Exponent e(rank, 0);
            for (std::size_t k = 0; k < used; ++k) e[k] = range(lo, hi);
            terms.push_back({e, Int(range(-cmax, cmax))});
        }
        return LaurentPoly::from_terms(rank, std::move(terms), ring);
    }

    // A divisor along axis: monic monomial leading slice plus lower terms.
    LaurentPoly divisor(std::size_t rank, std::size_t axis, const CoefficientRing& ring, std::size_t used) {
        long top = range(-2, 3);
        Exponent lead(rank, 0);
        for (std::size_t k = 0; k < used; ++k) lead[k] = range(-2, 2);
        lead[axis] = top;
        LaurentPoly p = LaurentPoly::monomial(lead, 1, ring);
        int extra = static_cast<int>(range(0, 4));
        for (int i = 0; i < extra; ++i) {
            Exponent e(rank, 0);
            for (std::size_t k = 0; k < used; ++k) e[k] = range(-2, 2);
            e[axis] = top - range(1, 3);
            p += LaurentPoly::monomial(e, Int(range(-5, 5)), ring);
        }
        return p;
    }

  private:
    std::mt19937_64 rng_;
};

// Entry i is a divisor along axis i using only axes <= i; with upper_units
// some entries are shifted by a monomial in the later axes.
inline PolyTuple random_flat_tuple(RandomSource& g, std::size_t len, std::size_t rank, const CoefficientRing& ring,
                                   bool upper_units) {
    PolyTuple t;
    for (std::size_t i = 0; i < len; ++i) {
        LaurentPoly p = g.divisor(rank, i, ring, i);
        if (upper_units && g.coin()) {
            Exponent mu(rank, 0);
            for (std::size_t k = i + 1; k < rank; ++k) mu[k] = g.range(-2, 2);
            p = p.shift(mu);
        }
        t.push_back(p);
    }
    return t;
}

inline SyzygyCertificate random_certificate(RandomSource& g, std::size_t len, std::size_t rank,
                                            const CoefficientRing& ring, long lo = -2, long hi = 2) {
    SyzygyCertificate c;
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
            if (g.coin()) add_to_certificate(c, i, j, g.poly(rank, ring, 3, lo, hi, 4));
        }
    }
    return c;
}

}  // namespace weylinv
