// Closed forms for Q, Dec, Sdec and the factor groups on the families of
// groups where they are known: products of simply connected groups of one
// type modulo diagonal or per-factor central subgroups.
//
// A family is recognized from the factors and the character lattice T*, so
// equivalent kernel encodings select the same entry.
#pragma once

#include "weylinv/root_data.hpp"

#include <optional>
#include <string>

namespace weylinv {

struct ClosedForm {
    std::string family;
    std::optional<Lattice> Q;
    std::optional<Lattice> Dec;
    std::optional<Lattice> Sdec;
    bool sdec_is_q = false;
    bool sdec_is_dec = false;
    std::optional<FactorGroup> inv_ind;
    std::optional<FactorGroup> inv_sd;
    // Only the orders are known for some families.
    std::optional<Int> inv_ind_order;
    std::optional<Int> inv_sd_order;

    bool has_sdec() const { return Sdec.has_value() || sdec_is_q || sdec_is_dec; }
};

std::optional<ClosedForm> closed_form(const LatticeModel& m);

// Family names accepted by table_specs.
const std::vector<std::string>& table_families();
// Member specs of a family, with total rank at most max_rank where the family
// is parametrized by ranks.
std::vector<GroupSpec> table_specs(const std::string& family, int max_rank);

// 2-adic valuation; v2(0) is not used.
int v2(long n);

}  // namespace weylinv
