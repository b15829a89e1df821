#pragma once

#include "s4e/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace s4e {

// Coefficient field: Q when p == 0, otherwise F_p.
struct Field {
  Int p = 0;
  bool rational() const { return p == 0; }
  std::string to_string() const;
};

struct BettiProfile {
  Field field;
  int beta1 = 0;
  int beta2 = 0;
  // false when the action on H_2 had to be taken block diagonal without a
  // natural splitting (p = 2 with a Z/2 summand that is not all of A/2A)
  bool exact = true;
};

// A = Z/d_1 + ... + Z/d_n (d_i = 0 for Z) with commuting automorphisms.
// Column j of each action is the image of the j-th generator.
struct SemidirectGroup {
  std::vector<Int> orders;
  std::vector<IntMatrix> actions; // one for A x| Z, two for A x| Z^2

  // Well defined on A, invertible, and (for two actions) commuting.
  // Throws std::invalid_argument.
  void validate() const;
  int extension_rank() const { return static_cast<int>(actions.size()); }
  bool finite_base() const;
  std::string to_string() const;
};

// Z/m x|_n Z, the automorphism x -> n x.
SemidirectGroup cyclic_semidirect(const Int &m, const Int &n);

// H_2(A; Z) = A ^ A.
FiniteAbelianGroup h2_abelian(const FiniteAbelianGroup &a);

// Betti numbers of A itself over Q or F_p.
BettiProfile betti_abelian(const FiniteAbelianGroup &a, const Field &f);

// (psi - I)^k = 0 on A for some k.
bool is_unipotent(const std::vector<Int> &orders, const IntMatrix &psi);
// Nilpotency of A x| Z^r: every action unipotent.
bool is_nilpotent(const SemidirectGroup &g);

// Betti numbers of A x|_psi Z from the Wang sequence:
// beta1 = 1 + dim Cok(H_1(psi) - I), beta2 = dim Cok(H_2(psi) - I) + dim Ker(H_1(psi) - I).
BettiProfile wang_betti(const SemidirectGroup &g, const Field &f);

// H_2(A x|_psi Z; Z) when the Wang sequence determines it: A free, or
// A ^ A = 0. Throws std::invalid_argument otherwise.
FiniteAbelianGroup wang_h2_integral(const SemidirectGroup &g);

// Abelianization Z + Cok(psi - I).
FiniteAbelianGroup semidirect_abelianization(const SemidirectGroup &g);

struct BalanceReport {
  bool balanced = false;
  bool nilpotent = false;
  std::vector<BettiProfile> fields; // Q first, then the primes that can differ
  // finite base, nilpotent and balanced: the base is cyclic of order m and
  // m divides a power of n - 1
  bool cyclic_classification_holds = true;
};
// beta2 <= beta1 over Q and over F_p for every prime where the F_p Betti
// numbers can differ from the rational ones.
BalanceReport homologically_balanced(const SemidirectGroup &g);

// Primes that need checking beyond Q.
std::vector<Int> balance_primes(const SemidirectGroup &g);

// Homology of Z^2 with coefficients in F_p^n, x and y acting by commuting
// matrices, from the complex 0 -> A -> A^2 -> A -> 0.
struct Z2ModuleHomology {
  int b0 = 0, b1 = 0, b2 = 0;
};
Z2ModuleHomology z2_module_homology(const Int &p, const IntMatrix &x, const IntMatrix &y);

// rank of m over F_p
int rank_mod_p(const IntMatrix &m, const Int &p);

// Torsion-free nilpotent groups, described by parameters.
struct NilpotentCandidate {
  int hirsch = 0;
  bool abelian = true;
  Int q = 0;          // h = 3, non-abelian: [x, y] = z^q
  bool omega = false; // h = 4: [t,[t,[t,u]]] = [u,[t,u]] = 1
};
enum class BalancedClass { Z, Z2, Z3, Gamma, Omega, NotInCatalogue };
std::string to_string(BalancedClass c);
// Catalogue of torsion-free nilpotent groups with balanced presentations.
BalancedClass classify_balanced_torsionfree(const NilpotentCandidate &c);

// Gamma_q = Z^2 x| Z with action (1, q; 0, 1).
SemidirectGroup gamma_q(const Int &q);

} // namespace s4e
