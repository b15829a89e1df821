#pragma once

#include "s4e/arith.hpp"
#include "s4e/matrix.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace s4e {

struct SeifertError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SeifertPair {
  Int alpha;
  Int beta;
  bool operator==(const SeifertPair &) const = default;
};

// base >= 0: orientable base of genus `base`; base = -c < 0: c crosscaps.
struct SeifertData {
  int base = 0;
  std::vector<SeifertPair> pairs;

  bool orientable_base() const { return base >= 0; }
  int crosscaps() const { return base < 0 ? -base : 0; }
  // gcd(alpha, beta) = 1 and alpha >= 1; throws SeifertError.
  void validate() const;
  std::string to_string() const;
  bool operator==(const SeifertData &) const = default;
};

SeifertData make_seifert(int base, std::vector<std::pair<long, long>> pairs);

Rat euler_number(const SeifertData &s);

// Strict pairs (0 < beta < alpha) in descending (alpha, beta) order, plus a
// trailing (1, -e) when e != 0.
SeifertData normalize(const SeifertData &s);

// Equivalence moves.
SeifertData add_trivial_pair(const SeifertData &s, std::size_t position);
SeifertData delete_trivial_pair(const SeifertData &s, std::size_t index);
// beta_i += c_i alpha_i with sum c_i = 0
SeifertData shift_pairs(const SeifertData &s, const std::vector<Int> &c);
SeifertData permute_pairs(const SeifertData &s,
                          const std::vector<std::size_t> &perm);

// Same base, negated betas (the other orientation).
SeifertData reverse_orientation(const SeifertData &s);

// (r+1)x(r+1) relation matrix for an orientable base: first row
// (0,1,...,1), row i = beta_i in column 0 and alpha_i on the diagonal.
IntMatrix orientable_relation_matrix(const SeifertData &s);

FiniteAbelianGroup first_homology(const SeifertData &s);
// Torsion of H_1 for a non-orientable base from the closed-form cyclic
// decomposition.
FiniteAbelianGroup nonorientable_torsion(const SeifertData &s);

bool torsion_is_direct_double(const SeifertData &s);
bool is_skew_symmetric(const SeifertData &s);

struct SpecialClass {
  bool homology_sphere = false;
  bool homology_handle = false;
  bool q_homology_sphere = false;
};
SpecialClass classify_special(const SeifertData &s);

SeifertData fibre_sum(const SeifertData &a, const SeifertData &b);
// Appends (alpha_i, beta_i), (alpha_i, -beta_i) for the 1-based index i.
SeifertData expansion(const SeifertData &s, std::size_t index);

// Strict data M(0; (a_i, b_i)..., (1, -e)) with |eps| prod a_i = 1 for
// pairwise coprime a_i > 1. The b_i are forced by b_i (P/a_i) = -1 mod a_i,
// so e = 1/P + sum b_i/a_i is determined by the a_i; it is at most k - 1
// and reaches k - 1 for (2,3), (2,3,5), (3,5) but not for (2,3,5,7).
SeifertData homology_sphere_data(const std::vector<Int> &alphas);

} // namespace s4e
