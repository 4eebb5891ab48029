// Generators of the ideal of W-invariant augmentation elements lying in
// R[T*], for character lattices of index 2, and the reduction expressing an
// element sum f_i rho_i of degree 0 through them.
#pragma once

#include "weylinv/newton.hpp"

#include <string>

namespace weylinv {

struct GcdChain {
    // order[k] is the model index of the k-th fundamental weight after moving
    // the n' degree-1 weights to the front.
    std::vector<std::size_t> order;
    std::size_t nprime = 0;
    IntVec s;                   // s_k = |W(omega_order[k])|, k < n'
    IntVec d;                   // d_k = gcd(s_k, ..., s_{n'-1})
    std::vector<IntVec> a;      // a[k][j], k <= j < n': d_k = sum_j a[k][j] s_j
    PolyTuple rho_tilde;        // sum_j a[k][j] rho_{order[j]}
};

GcdChain gcd_chain(const LatticeModel& m);

enum class GeneratorKind { H1, H2, H3 };

struct Generator {
    GeneratorKind kind;
    std::size_t index;       // 1-based position in the reordered list
    LaurentPoly value;
    PolyTuple expansion;     // value = sum_i expansion[i] rho_i in model order

    std::string name() const;  // "h1_1", "h2_2", ...
};

struct GeneratorSet {
    Weight lambda0;
    std::vector<Generator> gens;  // all h1, then h2, then h3
};

// lambda0 defaults to the first degree-1 fundamental weight.
GeneratorSet build_generators(const LatticeModel& m, const GcdChain& chain, std::optional<Weight> lambda0 = {});

struct Reduction {
    PolyTuple coefficients;  // one per generator, each in R[T*]
    LaurentPoly element;     // sum f_i rho_i
};

// Expresses sum f_i rho_i through the generators; each step is checked against
// the running total.
Reduction reduce_to_generators(const LatticeModel& m, const GcdChain& chain, const GeneratorSet& gens,
                               const PolyTuple& f);

LaurentPoly expand_combination(const GeneratorSet& gens, const PolyTuple& coefficients);

}  // namespace weylinv
