#include "s4e/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace s4e {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  a_.reserve(r_ * c_);
  for (auto &row : rows) {
    if (row.size() != c_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : row)
      a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
  if (c_ != o.r_)
    throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix p(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Int &x = (*this)(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        p(i, j) += x * o(k, j);
    }
  return p;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j)
    return;
  for (std::size_t k = 0; k < c_; ++k)
    std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j)
    return;
  for (std::size_t k = 0; k < r_; ++k)
    std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int &k) {
  for (std::size_t c = 0; c < c_; ++c)
    (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int &k) {
  for (std::size_t r = 0; r < r_; ++r)
    (*this)(r, i) += k * (*this)(r, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < c_; ++j)
      os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Int determinant(const IntMatrix &m0) {
  if (m0.rows() != m0.cols())
    throw std::invalid_argument("determinant: non-square matrix");
  std::size_t n = m0.rows();
  if (n == 0)
    return 1;
  IntMatrix m = m0;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0)
        ++s;
      if (s == n)
        return 0;
      m.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/*{{{ Smith normal form */
SnfResult smith_normal_form(const IntMatrix &m) {
  const std::size_t R = m.rows(), C = m.cols(), n = std::min(R, C);
  IntMatrix a = m, L = IntMatrix::identity(R), V = IntMatrix::identity(C),
            Vi = IntMatrix::identity(C);

  auto row_op = [&](std::size_t i, std::size_t j, const Int &k) {
    a.add_row(i, j, k);
    L.add_row(i, j, k);
  };
  // col_i += k col_j ; inverse: row_j -= k row_i
  auto col_op = [&](std::size_t i, std::size_t j, const Int &k) {
    a.add_col(i, j, k);
    V.add_col(i, j, k);
    Vi.add_row(j, i, -k);
  };

  std::size_t t = 0;
  for (; t < n; ++t) {
    for (;;) {
      // smallest |entry|, ties by lowest row then column
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) {
          if (a(i, j) == 0)
            continue;
          if (pi == R || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == R)
        goto done;
      a.swap_rows(t, pi);
      L.swap_rows(t, pi);
      a.swap_cols(t, pj);
      V.swap_cols(t, pj);
      Vi.swap_rows(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0)
          continue;
        Int q = a(i, t) / a(t, t);
        row_op(i, t, -q);
        if (a(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0)
          continue;
        Int q = a(t, j) / a(t, t);
        col_op(j, t, -q);
        if (a(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            row_op(t, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < C; ++j)
        a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < R; ++j)
        L(t, j) = -L(t, j);
    }
  }
done:
  SnfResult res;
  res.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    res.diagonal[i] = a(i, i);
  res.left = std::move(L);
  res.right = std::move(V);
  res.right_inverse = std::move(Vi);
  res.determinant_abs = 0;
  if (R == C) {
    Int d = 1;
    for (auto &x : res.diagonal)
      d *= x;
    res.determinant_abs = d;
  }
  return res;
}
/*}}}*/

/*{{{ finite abelian groups */
FiniteAbelianGroup FiniteAbelianGroup::from_orders(const std::vector<Int> &orders,
                                                   int extra_free) {
  FiniteAbelianGroup g;
  g.free_ = extra_free;
  std::map<Int, std::vector<Int>> by_prime;
  for (const Int &o0 : orders) {
    Int o = abs(o0);
    if (o == 0) {
      ++g.free_;
      continue;
    }
    if (o == 1)
      continue;
    for (auto &[p, e] : factor(o))
      by_prime[p].push_back(pow(p, e));
  }
  std::size_t len = 0;
  for (auto &[p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  // d_len is the product of the largest prime powers, etc.
  g.d_.assign(len, Int(1));
  for (auto &[p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i)
      g.d_[len - 1 - i] *= v[i];
  return g;
}

Int FiniteAbelianGroup::torsion_order() const {
  Int o = 1;
  for (auto &d : d_)
    o *= d;
  return o;
}

Int FiniteAbelianGroup::exponent() const { return d_.empty() ? Int(1) : d_.back(); }

int FiniteAbelianGroup::p_rank(const Int &p) const {
  int r = 0;
  for (auto &d : d_)
    if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
      ++r;
  return r;
}

std::vector<std::pair<Int, std::vector<Int>>>
FiniteAbelianGroup::primary_parts() const {
  std::vector<std::pair<Int, std::vector<Int>>> res;
  if (d_.empty())
    return res;
  for (const Int &p : prime_divisors(exponent())) {
    std::vector<Int> v;
    for (auto &d : d_) {
      Int q = p_part(d, p);
      if (q > 1)
        v.push_back(q);
    }
    res.emplace_back(p, std::move(v));
  }
  return res;
}

std::string FiniteAbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_ > 0) {
    os << "Z";
    if (free_ > 1)
      os << "^" << free_;
    first = false;
  }
  for (auto &d : d_) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (first)
    os << "0";
  return os.str();
}
/*}}}*/

FiniteAbelianGroup cokernel(const IntMatrix &relations) {
  SnfResult s = smith_normal_form(relations);
  std::vector<Int> orders;
  int nonzero = 0;
  for (auto &d : s.diagonal)
    if (d != 0) {
      ++nonzero;
      orders.push_back(d);
    }
  return FiniteAbelianGroup::from_orders(orders,
                                         int(relations.cols()) - nonzero);
}

FiniteAbelianGroup localize_group(const FiniteAbelianGroup &g, const Int &p) {
  std::vector<Int> orders;
  for (auto &d : g.divisors())
    orders.push_back(p_part(d, p));
  return FiniteAbelianGroup::from_orders(orders);
}

bool is_direct_double(const FiniteAbelianGroup &g) {
  const auto &d = g.divisors();
  if (d.size() % 2)
    return false;
  for (std::size_t i = 0; i < d.size(); i += 2)
    if (d[i] != d[i + 1])
      return false;
  return true;
}

} // namespace s4e
