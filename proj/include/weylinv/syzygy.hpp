// Syzygies of flat tuples: trivialization, lifting, and the transport of
// certificates through an invertible transform matrix.
#pragma once

#include "weylinv/laurent.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylinv {

class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

using PolyTuple = std::vector<LaurentPoly>;
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// (i, j) with i < j maps to g_ij; the syzygy is sum g_ij S_ij where S_ij has
// t_j in slot i and -t_i in slot j.
using SyzygyCertificate = std::map<std::pair<std::size_t, std::size_t>, LaurentPoly>;

struct FlatnessReport {
    bool flat = true;
    std::vector<std::string> diagnostics;  // one line per failing entry
};

FlatnessReport check_flatness(const PolyTuple& t);

LaurentPoly pairing(const PolyTuple& f, const PolyTuple& t);
PolyTuple expand_certificate(const SyzygyCertificate& c, const PolyTuple& t);
void add_to_certificate(SyzygyCertificate& c, std::size_t i, std::size_t j, const LaurentPoly& g);

// Certificate of a syzygy f of the flat tuple t. Composite moduli are peeled
// one prime at a time, smallest primes first.
SyzygyCertificate trivialize_syzygy(const PolyTuple& t, const PolyTuple& f);

// Lift to Z with coefficients in [0, d).
SyzygyCertificate lift_syzygy(const SyzygyCertificate& c);
SyzygyCertificate reduce_certificate(const SyzygyCertificate& c, const Int& m);

// Matrix helpers over R[Lambda].
PolyMatrix poly_identity(std::size_t n, std::size_t rank, const CoefficientRing& ring);
PolyTuple row_times_matrix(const PolyTuple& v, const PolyMatrix& a);
PolyTuple matrix_times_column(const PolyMatrix& a, const PolyTuple& v);
PolyMatrix reduce_matrix(const PolyMatrix& a, const Int& m);
LaurentPoly determinant(const PolyMatrix& a);
// Inverse of a matrix whose determinant is +-1 times a monomial.
PolyMatrix unit_inverse(const PolyMatrix& a);
bool is_unit_monomial(const LaurentPoly& p);

// Syzygies of q where q A is flat: solves through r = q A and transports the
// certificate back by A M_ij A^t.
SyzygyCertificate trivialize_via_transform(const PolyTuple& q, const PolyMatrix& A, const PolyMatrix& A_inv,
                                           const PolyTuple& f);

}  // namespace weylinv
