// Root data for products of simple factors of types A, B, C, D, E6, E7.
//
// Weights are integer vectors over the concatenated fundamental-weight
// bases of the factors. Node numbering is Bourbaki's throughout; for E6 the
// edges are 1-3, 2-4, 3-4, 4-5, 5-6 and E7 adds 6-7.
#pragma once

#include "weylinv/laurent.hpp"
#include "weylinv/lattice.hpp"

#include <string>
#include <vector>

namespace weylinv {

enum class DynkinType { A, B, C, D, E6, E7 };

using Weight = std::vector<long>;

struct SimpleFactor {
    DynkinType type = DynkinType::A;
    int rank = 1;

    bool operator==(const SimpleFactor& o) const { return type == o.type && rank == o.rank; }
    std::string label() const;  // "A3", "E6", ...
};

// A character of the center of one factor, as a linear form on its
// fundamental-weight coordinates taken modulo `modulus`.
struct CenterCharacter {
    std::vector<long> form;
    long modulus;
};

// Characters generating the center's character group. A single cyclic
// character for every type except D of even rank, which has two of order 2.
std::vector<CenterCharacter> center_characters(const SimpleFactor& f);

// One defining congruence of T*: sum over factors of residue_f applied to
// the factor's center characters vanishes modulo `modulus`. For D of even
// rank the residue is a code: 1 -> chi1, 2 -> chi2, 3 -> chi1 + chi2.
struct CenterConstraint {
    long modulus = 1;
    std::vector<long> residues;

    bool operator==(const CenterConstraint& o) const { return modulus == o.modulus && residues == o.residues; }
};

struct GroupSpec {
    std::vector<SimpleFactor> factors;
    std::vector<CenterConstraint> kernel;

    bool operator==(const GroupSpec& o) const { return factors == o.factors && kernel == o.kernel; }
};

class RootSystem {
  public:
    explicit RootSystem(SimpleFactor f);

    const SimpleFactor& factor() const { return factor_; }
    int rank() const { return factor_.rank; }
    // cartan()[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in the weight basis.
    const std::vector<std::vector<long>>& cartan() const { return cartan_; }
    // Normalized Killing form: q = sum_{i,j} killing()[i][j] w_i w_j.
    const RatMat& killing() const { return killing_; }
    const RatMat& killing_inverse() const { return killing_inv_; }
    Int weyl_order() const;

    void reflect(Weight& w, int node) const;
    bool is_dominant(const Weight& w) const;
    Weight dominant(Weight w) const;
    std::vector<Weight> orbit(const Weight& w) const;
    // |W(w)| for dominant w from the stabilizer's Dynkin type.
    Int orbit_size(const Weight& dominant_weight) const;
    // lambda^T killing^{-1} lambda.
    Rat dual_norm(const Weight& w) const;

  private:
    SimpleFactor factor_;
    std::vector<std::vector<long>> cartan_;
    RatMat killing_;
    RatMat killing_inv_;
};

Int weyl_group_order(const SimpleFactor& f);

class LatticeModel {
  public:
    explicit LatticeModel(GroupSpec spec);

    const GroupSpec& spec() const { return spec_; }
    std::size_t total_rank() const { return total_rank_; }
    std::size_t num_factors() const { return roots_.size(); }
    const RootSystem& root_system(std::size_t f) const { return roots_[f]; }
    std::size_t offset(std::size_t f) const { return offsets_[f]; }

    // T* as congruences on the concatenated coordinates.
    const IntMat& congruence_forms() const { return forms_; }
    const IntVec& congruence_moduli() const { return moduli_; }
    const Lattice& tstar() const { return tstar_; }
    const Grading& grading() const { return grading_; }
    // Invariant factors of the quotient by T*.
    const FactorGroup& grading_group() const { return grading_group_; }

    Grading::Class class_of(const Weight& w) const { return grading_.class_of(w); }
    bool in_tstar(const Weight& w) const { return grading_.is_zero(class_of(w)); }

    Weight fundamental_weight(std::size_t global_index) const;
    // (factor, node) for a global coordinate index.
    std::pair<std::size_t, int> locate(std::size_t global_index) const;

    Weight factor_part(const Weight& w, std::size_t f) const;
    std::vector<Weight> weyl_orbit(const Weight& w) const;
    Int orbit_size(const Weight& w) const;
    LaurentPoly orbit_poly(const Weight& w, bool augmented, CoefficientRing ring = {}) const;

    // rho(omega_i) and rho_i = rho(omega_i) - |W(omega_i)| for every coordinate.
    LaurentPoly rho(std::size_t i, CoefficientRing ring = {}) const;
    LaurentPoly rho_aug(std::size_t i, CoefficientRing ring = {}) const;

  private:
    GroupSpec spec_;
    std::vector<RootSystem> roots_;
    std::vector<std::size_t> offsets_;
    std::size_t total_rank_ = 0;
    IntMat forms_;
    IntVec moduli_;
    Lattice tstar_;
    Grading grading_;
    FactorGroup grading_group_;
};

std::string dynkin_name(DynkinType t);

}  // namespace weylinv
