// Integer lattices: Hermite and Smith normal forms, kernels, quotients.
#pragma once

#include "weylinv/bigint.hpp"

#include <string>
#include <vector>

namespace weylinv {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

IntMat identity_matrix(std::size_t n);
IntMat transpose(const IntMat& a);
IntMat multiply(const IntMat& a, const IntMat& b);
IntVec row_times(const IntVec& v, const IntMat& a);

// Row Hermite normal form: nonzero rows only, positive pivots, entries
// above each pivot reduced into [0, pivot).
IntMat hnf(IntMat rows, std::size_t ncols);

// Basis (as rows) of {x in Z^cols : a * x = 0}.
IntMat integer_kernel(const IntMat& a, std::size_t cols);

struct SmithForm {
    IntMat U;  // m x m unimodular
    IntMat V;  // n x n unimodular
    IntVec diagonal;  // min(m, n) entries, each dividing the next
};

// U * a * V is diagonal.
SmithForm smith(const IntMat& a, std::size_t ncols);
IntVec smith_diagonal(const IntMat& a, std::size_t ncols);

RatMat to_rational(const IntMat& a);
RatMat rat_inverse(const RatMat& a);
RatMat rat_multiply(const RatMat& a, const RatMat& b);
RatMat rat_transpose(const RatMat& a);

struct FactorGroup {
    IntVec factors;  // invariant factors >= 2, each dividing the next
    std::size_t free_rank = 0;

    bool trivial() const { return factors.empty() && free_rank == 0; }
    Int order() const;  // 0 when infinite
    std::string to_string() const;
    bool operator==(const FactorGroup& o) const { return factors == o.factors && free_rank == o.free_rank; }
};

class Lattice {
  public:
    Lattice() = default;
    explicit Lattice(std::size_t dim) : dim_(dim) {}
    Lattice(std::size_t dim, const IntMat& generators);

    static Lattice full(std::size_t dim);
    // {x : forms[i] . x = 0 mod moduli[i]}.
    static Lattice from_congruences(std::size_t dim, const IntMat& forms, const IntVec& moduli);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const IntMat& basis() const { return basis_; }

    bool contains(const IntVec& v) const;
    bool contains(const Lattice& other) const;
    // Integer coordinates of v against basis(); throws when v is outside.
    IntVec coordinates(const IntVec& v) const;

    Lattice join(const Lattice& other) const;
    Lattice join(const IntVec& v) const;
    Lattice meet(const Lattice& other) const;
    Lattice scaled(const Int& c) const;
    // Index in Z^dim; 0 when rank < dim.
    Int index() const;

    bool operator==(const Lattice& o) const { return dim_ == o.dim_ && basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }
    std::string to_string() const;

  private:
    std::size_t dim_ = 0;
    IntMat basis_;
};

// super / sub; throws when sub is not contained in super.
FactorGroup factor_group(const Lattice& sub, const Lattice& super);

// Cyclic generators of super / sub matching the invariant factors of
// factor_group, in ambient coordinates and reduced modulo sub; free
// generators come last with order 0.
struct QuotientGenerator {
    Int order;
    IntVec element;
};
std::vector<QuotientGenerator> quotient_generators(const Lattice& sub, const Lattice& super);

// A finite quotient Z^n / L with L of full rank, with explicit coordinates
// x -> (x V) mod diagonal, trivial factors dropped.
class FiniteQuotient {
  public:
    explicit FiniteQuotient(const Lattice& sub);
    const IntVec& moduli() const { return moduli_; }
    IntVec image(const std::vector<long>& x) const;
    Int order() const;

  private:
    std::size_t dim_;
    IntVec moduli_;
    std::vector<std::size_t> columns_;
    IntMat V_;
};

}  // namespace weylinv
