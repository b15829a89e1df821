#pragma once

#include "s4e/pairing.hpp"
#include "s4e/seifert.hpp"

#include <optional>

namespace s4e {

// Configuration the closed-form generator formulas do not cover.
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Symmetric values on a generating set subject to the rows of `relations`
// (columns = generators).
struct GeneratedPairing {
  IntMatrix relations;
  std::vector<std::vector<Rat>> values;

  // Every relation pairs integrally with every generator; throws PairingError.
  void check_compatible() const;
  // Pairing on the torsion of the presented group, in the SNF basis.
  LinkingPairing reduce() const;
};

// p-primary part of the torsion linking pairing for an orientable base.
// `bezout_n` overrides the least non-negative n with m a_2 + n b_2 = 1.
LinkingPairing pairing_orientable(const SeifertData &s, const Int &p,
                                  std::optional<Int> bezout_n = std::nullopt);

GeneratedPairing nonorientable_generated(const SeifertData &s);
LinkingPairing pairing_nonorientable(const SeifertData &s);

// Full torsion linking pairing (orthogonal sum over primes for an
// orientable base).
LinkingPairing torsion_pairing(const SeifertData &s);

struct GluingMatrix {
  Int a, b, c, d;
  void validate() const; // det = 1
  std::string to_string() const;
  bool operator==(const GluingMatrix &) const = default;
};

// phi = (m, mn - 1; 1, n)
GluingMatrix gluing_mn(const Int &m, const Int &n);

FiniteAbelianGroup union_homology(const GluingMatrix &phi);
bool union_pairing_hyperbolic(const GluingMatrix &phi);

} // namespace s4e
