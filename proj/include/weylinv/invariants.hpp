// Degree-3 invariant groups: the characteristic map c2, the Killing basis of
// W-invariant quadratic forms, and the lattices Q, Dec, Sdec inside it.
//
// Quadratic forms are stored as monomial coefficient tables over the
// fundamental weights: quad[i][j] for i <= j is the coefficient of w_i w_j.
#pragma once

#include "weylinv/generators.hpp"

#include <map>
#include <stdexcept>

namespace weylinv {

class VerificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An element of S^{<=2}(T*_sc); products drop everything of degree >= 3.
struct TruncatedForm {
    Int c0 = 0;
    IntVec c1;
    IntMat quad;

    explicit TruncatedForm(std::size_t n = 0) : c1(n, 0), quad(n, IntVec(n, 0)) {}
    std::size_t rank() const { return c1.size(); }

    TruncatedForm& operator+=(const TruncatedForm& o);
    friend TruncatedForm operator+(TruncatedForm a, const TruncatedForm& b) { return a += b; }
    friend TruncatedForm operator*(const TruncatedForm& a, const TruncatedForm& b);
    TruncatedForm scale(const Int& c) const;
    bool operator==(const TruncatedForm& o) const { return c0 == o.c0 && c1 == o.c1 && quad == o.quad; }
};

// Image of e^lambda: prod_i (1 + a_i w_i + a_i (a_i + 1)/2 w_i^2), truncated.
TruncatedForm truncated_exp(const Weight& lambda);
// Additive extension of truncated_exp; f must be over Z.
TruncatedForm truncated_image(const LaurentPoly& f);

// d with sum d_f q_f, one coordinate per simple factor.
using KillingVector = IntVec;

IntMat killing_quad(const LatticeModel& m, const KillingVector& d);
// Throws InternalError unless quad is an integral combination of the q_f.
KillingVector killing_coordinates(const LatticeModel& m, const IntMat& quad);
// Degree-2 part of f in Killing coordinates.
KillingVector c2(const LatticeModel& m, const LaurentPoly& f);

// c2(rho(lambda)) = -1/2 sum over the orbit of chi^2, from per-factor orbit
// sizes and norms. With cross_check the truncated image of the augmented
// orbit sum is also computed and must agree up to one global sign.
KillingVector c2_orbit(const LatticeModel& m, const Weight& lambda, bool cross_check = false);

enum class Exactness { Exact, LowerBound };
std::string to_string(Exactness e);

struct InvariantLattice {
    Lattice lattice;
    Exactness exactness = Exactness::Exact;
    std::string source;
};

// Q(G) from integrality of sum d_f q_f in the HNF basis of T*.
InvariantLattice compute_Q(const LatticeModel& m);
// Same computation in an arbitrary Z-basis (rows) of T*.
Lattice q_lattice_in_basis(const LatticeModel& m, const IntMat& tstar_basis);

// Parallelism cap: WEYL_INV_THREADS if set to a positive integer, else the
// hardware concurrency.
std::size_t worker_threads();

enum class DecMode { Enumerate, Table, Both };

struct DecOptions {
    int height = 4;  // cap on the dominant box [0, height]^rank
    int window = 2;  // stop once this many consecutive increments add nothing
};

// Lattice spanned by c2_orbit(lambda) over dominant lambda in T* with
// coordinates in [0, h]. Uses that the value only depends on per-factor
// (orbit size, norm) pairs, so factors are enumerated separately.
Lattice dec_at_height(const LatticeModel& m, int h);
InvariantLattice compute_Dec(const LatticeModel& m, DecMode mode = DecMode::Both, DecOptions opt = {});

enum class SdecMode { Generators, Elements, Table, Auto };

bool generators_mode_applies(const LatticeModel& m);

struct ExplicitElement {
    std::string name;
    LaurentPoly value;  // lies in Z[T*] and is W-invariant of augmentation 0
};
// Elements e^{w_2}(rho(w_2) - rho(w_2')) for pairs of B2 factors and
// e^{w_1}((n/g) rho(w_1) - (m/g) rho(w_1')) for pairs of C or D factors,
// kept when they lie in Z[T*].
std::vector<ExplicitElement> explicit_elements(const LatticeModel& m);

// Upper bound for Sdec: sum_i aug(g_i) c2(rho_i) over all tuples with
// sum_i g_i rho_i vanishing in Z[Lambda/T*], a necessary condition for
// lying in Z[T*], intersected with Q.
Lattice sdec_upper_bound(const LatticeModel& m);

// Auto takes generators (or elements) as a lower bound, and is exact when it
// meets sdec_upper_bound; otherwise a closed form between the bounds is used.
InvariantLattice compute_Sdec(const LatticeModel& m, SdecMode mode, const InvariantLattice& dec,
                              std::uint64_t seed = 1);

struct InvariantReport {
    InvariantLattice Q;
    InvariantLattice Dec;
    InvariantLattice Sdec;
    std::string sdec_mode;
    FactorGroup inv_ind;
    FactorGroup inv_sd;
};

// Full pipeline; verifies Dec <= Sdec <= Q and throws VerificationError otherwise.
InvariantReport compute_invariants(const LatticeModel& m, DecMode dec_mode = DecMode::Both,
                                   SdecMode sdec_mode = SdecMode::Auto, DecOptions opt = {});

// (Z/modulus)[Lambda / sub] for a finite-index sublattice; modulus 0 keeps Z.
class QuotientRing {
  public:
    using Element = std::map<IntVec, Int>;

    QuotientRing(const Lattice& sub, Int modulus);
    const IntVec& moduli() const { return quotient_.moduli(); }
    const Int& modulus() const { return modulus_; }

    IntVec class_of(const Weight& w) const { return quotient_.image(w); }
    Element reduce(const LaurentPoly& f) const;
    Element multiply(const Element& a, const Element& b) const;
    Element add(const Element& a, const Element& b) const;
    Element monomial(const Weight& w, const Int& c = 1) const;
    std::string to_string(const Element& e) const;

  private:
    void normalize(Element& e) const;

    FiniteQuotient quotient_;
    Int modulus_;
};

}  // namespace weylinv
