#pragma once

#include "s4e/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace s4e {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : r_(rows), c_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Int &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Int &operator()(std::size_t i, std::size_t j) const {
    return a_[i * c_ + j];
  }

  IntMatrix operator*(const IntMatrix &o) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix &o) const = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Int &k);
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const Int &k);

  std::string to_string() const;

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix &m);

struct SnfResult {
  std::vector<Int> diagonal; // length min(rows, cols), d_1 | d_2 | ..., zeros last
  IntMatrix left, right;     // left * m * right is diagonal
  IntMatrix right_inverse;
  Int determinant_abs;       // |det m| for square m, 0 otherwise
};

SnfResult smith_normal_form(const IntMatrix &m);

class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  // Arbitrary cyclic orders (0 = infinite cyclic, 1 ignored), normalized to
  // invariant factors.
  static FiniteAbelianGroup from_orders(const std::vector<Int> &orders,
                                        int extra_free = 0);

  const std::vector<Int> &divisors() const { return d_; }
  int free_rank() const { return free_; }
  Int torsion_order() const;
  Int exponent() const;
  bool is_finite() const { return free_ == 0; }
  bool torsion_trivial() const { return d_.empty(); }
  // dim of (torsion)/p(torsion) over F_p
  int p_rank(const Int &p) const;
  FiniteAbelianGroup torsion() const { return from_orders(d_); }
  // Primary decomposition: for each prime, the elementary divisors.
  std::vector<std::pair<Int, std::vector<Int>>> primary_parts() const;

  bool operator==(const FiniteAbelianGroup &o) const = default;
  std::string to_string() const;

private:
  std::vector<Int> d_;
  int free_ = 0;
};

// Z^cols modulo the row span of `relations`.
FiniteAbelianGroup cokernel(const IntMatrix &relations);
FiniteAbelianGroup localize_group(const FiniteAbelianGroup &g, const Int &p);
// Torsion part isomorphic to A + A for some A.
bool is_direct_double(const FiniteAbelianGroup &g);

} // namespace s4e
