// The adjoint group of type D4: decompositions x = sum f_i rho_i of
// W-invariant elements and the parity statements on the f_i.
#pragma once

#include "weylinv/invariants.hpp"

#include <array>

namespace weylinv {

// Spin(8) modulo its full center; T* is the root lattice.
LatticeModel pgo8_model();

// Lambda' = {x in Lambda : x_1 even, x_2 + x_3 + x_4 even} in orthogonal
// coordinates, returned in fundamental-weight coordinates.
Lattice pgo8_sublattice();

// Writes a W-invariant x of augmentation 0 as sum_i f_i rho_i with
// rho_i = rho(w_i) - |W w_i|. Throws PreconditionError when x is not
// W-invariant or has nonzero augmentation.
std::vector<LaurentPoly> decompose_invariant(const LatticeModel& m, const LaurentPoly& x);

struct ParityReport {
    bool in_tstar = false;
    std::array<Int, 4> augmentations{};
    std::array<bool, 4> even{};
    // Holds unless x lies in Z[T*] and some augmentation of f_1, f_3, f_4 is odd.
    bool claim_holds = true;
    // Coefficient sums of the components of f_1 over the classes of Lambda/T*.
    std::map<Grading::Class, Int> f1_component_sums;
    // x in (Z/16)[Lambda/T*].
    QuotientRing::Element x_mod16;
};

ParityReport pgo8_parity_check(const std::array<LaurentPoly, 4>& f);

// Tuples whose combination lies in Z[T*]: x = prod rho(w_i)^{a_i} minus its
// augmentation with the a_i of w_1, w_3, w_4 of equal parity, plus an
// occasional augmented orbit sum of a dominant weight of T*; decomposed and
// then moved by a random trivial syzygy.
std::vector<std::array<LaurentPoly, 4>> pgo8_sample_tuples(std::size_t count, std::uint64_t seed);

}  // namespace weylinv
