#pragma once

#include "s4e/pairing.hpp"
#include "s4e/seifert.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace s4e {

enum class EpsilonMode { Zero, NonZero };
std::string to_string(EpsilonMode m);

struct RealizationResult {
  SeifertData data;
  EpsilonMode epsilon_mode = EpsilonMode::Zero;
  bool verified = false;
  IsoMethod verification_method = IsoMethod::Invariants;
  std::size_t candidates = 0; // data sets tried before the verified one
  std::vector<std::string> transcript;
};

// Why a pairing is not the torsion linking pairing of any M(0; S) with the
// requested kind of Euler number. Conditions on the homogeneous 2-primary
// components, listed by decreasing exponent.
enum class Clause {
  None,
  SeveralEvenComponents,     // two or more even components
  EvenComponentNotMaximal,   // eps = 0: the even component is not the top one
  EvenComponentTooLow,       // eps != 0: even component third or lower
  EvenSecondOverNonCyclic,   // eps != 0: even second component, top not cyclic
};
std::string to_string(Clause c);

struct InadmissiblePairing : std::invalid_argument {
  Clause clause;
  InadmissiblePairing(Clause c, const std::string &what)
      : std::invalid_argument(what), clause(c) {}
};

struct TwoComponent {
  int exponent = 0; // component lives on (Z/2^exponent)^rank
  int rank = 0;
  bool even = false;
};
// Homogeneous 2-primary components, largest exponent first. Parity of each
// component is an isometry invariant.
std::vector<TwoComponent> two_components(const LinkingPairing &l);

Clause admissibility(const LinkingPairing &l, EpsilonMode mode);

// What the 2-adic cone point data predicts about the even component:
// `top_count` is the number of even cone orders of maximal 2-adic valuation.
// An even component exists iff top_count >= 3, and then its exponent is the
// 2-part of the largest cone order. With top_count = 2 and eps != 0,
// alpha_1 alpha_2 eps is divisible by 4 alpha_3 2-adically.
struct EvenComponentPrediction {
  int top_count = 0;
  bool even_component = false;
  int even_exponent = 0;
  bool divisibility_applies = false;
  bool divisibility_holds = false;
};
EvenComponentPrediction predict_even_component(const SeifertData &s);

// Recomputes the torsion linking pairing of `s` and compares it with `l`.
bool verify_realization(const SeifertData &s, const LinkingPairing &l,
                        IsoMethod *method = nullptr);

// Odd order, eps = 0, every cone order an odd prime power.
RealizationResult realize_odd_e0(const LinkingPairing &l);
// Odd order, eps = 1/alpha for the extra cone point alpha.
RealizationResult realize_odd_general(const LinkingPairing &l);
// l on (Z/2^k)^rho; cone orders powers of 2.
RealizationResult realize_two_homogeneous(const LinkingPairing &l, EpsilonMode mode);
// Any finite abelian group; throw InadmissiblePairing when the 2-primary
// conditions fail.
RealizationResult realize_general_e0(const LinkingPairing &l);
RealizationResult realize_general(const LinkingPairing &l);

} // namespace s4e
