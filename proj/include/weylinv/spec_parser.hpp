// Group spec grammar:
//
//   spec    := product ( "/" center )*
//   product := factor ( "x" factor )*      optionally parenthesized
//   factor  := SL(n) | Spin(n) | Sp(2n) | E6 | E7
//            | PGL(n) | PGSp(2n) | SO(n) | PGO(2n) | HSpin(2n)
//   center  := mu(k) [ "[" ( "diag" | residue ( "," residue )* ) "]" ]
//
// A center without residues is the diagonal one. Adjoint and special forms
// expand into per-factor kernel constraints.
#pragma once

#include "weylinv/root_data.hpp"

#include <stdexcept>
#include <string>

namespace weylinv {

class SpecSyntaxError : public std::invalid_argument {
  public:
    SpecSyntaxError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

GroupSpec parse_spec(const std::string& text);
// Canonical text; parse_spec(format_spec(s)) == s.
std::string format_spec(const GroupSpec& spec);

}  // namespace weylinv
