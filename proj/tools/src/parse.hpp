#pragma once

#include "s4e/obstructions.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace s4e::cli {

// 1-based position of the offending character.
struct ParseError : std::invalid_argument {
  int line;
  int column;
  ParseError(const std::string &msg, int line, int column);
};

// M(g; (a,b) (a,b) ...)   Seifert data; g < 0 means -g crosscaps
// TB[a,b;c,d]             torus bundle with that monodromy
// NU[a,b;c,d]             union of two mapping cylinders glued by phi
// LS(+(p,q) # -(p,q) ...) connected sum of signed lens spaces; LS() = S^3
// SB(g; e)                circle bundle with Euler number e (g < 0: crosscaps)
ManifoldDescription parse_manifold(const std::string &text);
std::string print_manifold(const ManifoldDescription &m);

// lw(u/m)                 rank one form l(x, x) = u/m
// E0(k), E1(k)            the even forms on (Z/2^k)^2
// sum(x, y, ...), neg(x)
// form(d1,d2,... | a11,a12,...; a21,...)  explicit matrix of values in Q/Z
LinkingPairing parse_pairing(const std::string &text);
// Explicit form(...) literal.
std::string print_pairing(const LinkingPairing &l);

using Input = std::variant<ManifoldDescription, LinkingPairing>;
// Manifold or pairing, told apart by the leading keyword.
Input parse_input(const std::string &text);

} // namespace s4e::cli
