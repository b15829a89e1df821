#include "support/catalogue.hpp"

namespace s4e::testing {

std::vector<Named> restrained_embedders() {
  const auto E = Status::Embeds;
  return {
      {"S3", SphereBundle{0, 1}, E},
      {"S3/Q(8)", SphereBundle{-1, 2}, E},
      {"Poincare sphere", make_seifert(0, {{2, 1}, {3, 1}, {5, 1}, {1, -1}}),
       Status::DoesNotEmbed},
      {"S2xS1", SphereBundle{0, 0}, E},
      {"3-torus", TorusBundle{1, 0, 0, 1}, E},
      {"half-turn flat", TorusBundle{-1, 0, 0, -1}, E},
      {"torus bundle (-1,4;0,-1)", TorusBundle{-1, 4, 0, -1}, E},
      {"Heisenberg", TorusBundle{1, 1, 0, 1}, E},
      {"Nil M(0;(3,1),(3,1),(3,-1))", make_seifert(0, {{3, 1}, {3, 1}, {3, -1}}), E},
      {"M_{2,0}", gluing_mn(2, 0), E},
      {"M_{2,2}", gluing_mn(2, 2), E},
      {"M_{2,-2}", gluing_mn(2, -2), E},
      {"M_{2,-4}", gluing_mn(2, -4), E},
  };
}

std::vector<Named> restrained_near_misses() {
  const auto N = Status::DoesNotEmbed;
  auto lens = [](std::vector<LensSummand> s) { return LensSum{std::move(s)}; };
  return {
      {"S3/Q(16)", SphereBundle{-1, 4}, N},
      {"bundle c=1 e=6", SphereBundle{-1, 6}, N},
      {"bundle g=1 e=2", SphereBundle{1, 2}, N},
      {"bundle c=2 e=2", SphereBundle{-2, 2}, N},
      {"Hantzsche-Wendt", make_seifert(-1, {{2, 1}, {2, -1}}), N},
      {"M(0;(3,1),(3,1),(3,1))", make_seifert(0, {{3, 1}, {3, 1}, {3, 1}}), N},
      {"Nil b=2 over Klein bottle", TorusBundle{-1, 2, 0, -1}, N},
      {"Nil b=-2 over Klein bottle", TorusBundle{-1, -2, 0, -1}, N},
      {"Nil b=2", TorusBundle{1, 2, 0, 1}, N},
      {"quarter-turn flat", TorusBundle{0, -1, 1, 0}, N},
      {"sixth-turn flat", TorusBundle{1, -1, 1, 0}, N},
      {"Sol (2,1;1,1)", TorusBundle{2, 1, 1, 1}, N},
      {"M_{2,4}", gluing_mn(2, 4), N},
      {"M_{2,-6}", gluing_mn(2, -6), N},
      {"M_{6,0}", gluing_mn(6, 0), N},
      {"M_{0,0}", gluing_mn(0, 0), N},
      {"M_{4,0}", gluing_mn(4, 0), N},
      {"union c=2", GluingMatrix{1, 0, 2, 1}, N},
      {"RP3#RP3", lens({{2, 1, 1}, {2, 1, 1}}), N},
      {"L(3,1)#L(3,1)", lens({{3, 1, 1}, {3, 1, 1}}), N},
  };
}

} // namespace s4e::testing
