// Newton-relation transforms for types A and C: a matrix A over Z[Lambda]
// with invertible determinant such that (rho_1, ..., rho_n) A is flat.
//
// Type A uses x_i = e^{omega_i}. Type C uses x_i = e^{e_i}, where
// omega_j = e_1 + ... + e_j.
#pragma once

#include "weylinv/root_data.hpp"
#include "weylinv/syzygy.hpp"

namespace weylinv {

struct NewtonTransform {
    std::size_t rank = 0;
    CoefficientRing ring;
    // Exponent maps between fundamental-weight and flat coordinates.
    std::vector<std::vector<long>> to_flat;
    std::vector<std::vector<long>> from_flat;
    PolyTuple rho;   // rho_i in flat coordinates
    PolyTuple flat;  // rho * A
    PolyMatrix A;
    PolyMatrix A_inv;
    LaurentPoly det;

    LaurentPoly to_flat_coords(const LaurentPoly& p) const { return p.map_exponents(to_flat, rank); }
    LaurentPoly from_flat_coords(const LaurentPoly& p) const { return p.map_exponents(from_flat, rank); }
};

NewtonTransform newton_transform(const SimpleFactor& f, CoefficientRing ring = {});
// Block-diagonal transform over every factor; each must be of type A or C.
NewtonTransform newton_transform(const LatticeModel& m, CoefficientRing ring = {});
bool has_newton_transform(const LatticeModel& m);

// Certificate for a syzygy of (rho_1, ..., rho_n) given and returned in
// fundamental-weight coordinates.
SyzygyCertificate trivialize_rho_syzygy(const NewtonTransform& t, const PolyTuple& f);

// gcd of |W(omega_i)| over the degree-1 fundamental weights of an index-2 model.
Int degree_one_gcd(const LatticeModel& m);

// Given sum f_i rho_i of degree 0, returns g with the same sum and
// (g_i mod d) having no component of degree 1 - |i|. `reduced` is the
// transform over Z/d; it is ignored when d = 1.
PolyTuple normalize_coefficients(const LatticeModel& m, const PolyTuple& f, const NewtonTransform& reduced);

}  // namespace weylinv
