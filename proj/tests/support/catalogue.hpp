#pragma once

#include "s4e/obstructions.hpp"

#include <string>
#include <vector>

namespace s4e::testing {

struct Named {
  std::string name;
  ManifoldDescription m;
  // expected smooth status where it differs from the locally flat one
  Status smooth;
};

// Closed 3-manifolds with restrained fundamental group that embed in S^4.
std::vector<Named> restrained_embedders();

// Close relatives that do not embed (locally flat or smooth).
std::vector<Named> restrained_near_misses();

} // namespace s4e::testing
