#pragma once

#include "s4e/arith.hpp"
#include "s4e/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace s4e {

struct PairingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// 2-adic comparison that the invariants cannot settle and the oracle bound
// forbids brute force.
struct Undecided : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr long kDefaultOracleBound = 256;

// Symmetric Q/Z-valued form on generators e_i of the declared orders.
struct LinkingPairing {
  std::vector<Int> orders;
  std::vector<std::vector<ResidueQZ>> matrix;

  std::size_t size() const { return orders.size(); }
  const ResidueQZ &operator()(std::size_t i, std::size_t j) const {
    return matrix[i][j];
  }
  // l(x, y) for coefficient vectors over the generators
  ResidueQZ value(const std::vector<Int> &x, const std::vector<Int> &y) const;
  FiniteAbelianGroup group() const;
  Int order() const;
  bool operator==(const LinkingPairing &o) const = default;
  std::string to_string() const;
};

LinkingPairing make_pairing(std::vector<Int> orders,
                            const std::vector<std::vector<Rat>> &values);
LinkingPairing pairing_lw(const Rat &w);
LinkingPairing pairing_e(int k, int variant);
LinkingPairing orthogonal_sum(const LinkingPairing &a, const LinkingPairing &b);
LinkingPairing negate(const LinkingPairing &l);
// Drops order-1 generators.
LinkingPairing prune(const LinkingPairing &l);
// Pairing restricted to new generators (coefficient vectors over the old
// ones) with the given orders.
LinkingPairing transport(const LinkingPairing &l,
                         const std::vector<std::vector<Int>> &gens,
                         const std::vector<Int> &orders);

// Symmetry and order compatibility; throws PairingError.
void check_well_defined(const LinkingPairing &l);
bool is_nonsingular(const LinkingPairing &l);
// check_well_defined plus nonsingularity.
void validate(const LinkingPairing &l);

std::vector<std::pair<Int, LinkingPairing>>
primary_decompose(const LinkingPairing &l);

struct HomogeneousBlock {
  Int prime;
  int exponent = 0; // block lives on (Z/p^exponent)^rank
  LinkingPairing pairing;
};

// Orthogonal splitting of a p-primary pairing into homogeneous blocks of
// strictly decreasing exponent.
std::vector<HomogeneousBlock> homogeneous_split(const LinkingPairing &l,
                                                const Int &p);

enum class Parity { NotApplicable, Even, Odd };
enum class TwoAdicClass { NotApplicable, Hyperbolic, EvenNonHyperbolic, OddDiagonal };

struct PairingInvariants {
  Int prime;
  int exponent = 0;
  int rank = 0;
  Parity parity = Parity::NotApplicable;
  int det_class = 0; // odd p: +1 square, -1 nonsquare
  TwoAdicClass two_adic = TwoAdicClass::NotApplicable;
  int e1_count = 0;                  // even 2-blocks: copies of E_1 split off
  std::vector<ResidueQZ> diagonal;   // odd 2-blocks: diagonalization
};

PairingInvariants invariants(const HomogeneousBlock &b);
// Square class of det(p^k L) for a homogeneous odd-p block.
int det_class(const LinkingPairing &block, const Int &p, int k);
// Hyperbolicity of an even form whose off-diagonal entries are all odd, from
// t = number of diagonal entries divisible by 4.
bool even_form_hyperbolic_by_count(int t, int rho);

bool is_hyperbolic(const LinkingPairing &l);

enum class IsoMethod { Invariants, Oracle };
bool are_isomorphic(const LinkingPairing &a, const LinkingPairing &b,
                    long oracle_bound = kDefaultOracleBound,
                    IsoMethod *method = nullptr);

bool oracle_is_hyperbolic(const LinkingPairing &l,
                          long bound = kDefaultOracleBound);
bool oracle_isomorphic(const LinkingPairing &a, const LinkingPairing &b,
                       long bound = kDefaultOracleBound);

// Parity of a pairing restricted to its 2-primary part: true iff
// 2^{k-1} l(x,x) = 0 for every x with 2^k x = 0, for all k.
bool is_even_2primary(const LinkingPairing &l);

} // namespace s4e
