#include "support/oracles.hpp"

namespace s4e::testing {

IntMatrix nonorientable_presentation(const SeifertData &s) {
  const std::size_t r = s.pairs.size(), c = s.crosscaps();
  IntMatrix m(r + 2, 1 + r + c);
  m(0, 0) = 2;
  for (std::size_t i = 0; i < r; ++i) {
    m(1 + i, 0) = s.pairs[i].beta;
    m(1 + i, 1 + i) = s.pairs[i].alpha;
    m(r + 1, 1 + i) = 1;
  }
  for (std::size_t j = 0; j < c; ++j) m(r + 1, 1 + r + j) = 2;
  return m;
}

} // namespace s4e::testing

namespace s4e::testing {

IntMatrix plumbing_matrix(const SeifertData &s0) {
  SeifertData s = normalize(s0);
  Int b = 0;
  std::vector<std::vector<Int>> arms;
  for (const auto &[a, be] : s.pairs) {
    if (a == 1) {
      b += be;
      continue;
    }
    std::vector<Int> chain;
    Int x = a, y = be;
    while (y != 0) {
      Int k = (x + y - 1) / y; // ceil
      chain.push_back(k);
      Int ny = k * y - x;
      x = y;
      y = ny;
    }
    arms.push_back(chain);
  }
  std::size_t n = 1;
  for (const auto &c : arms) n += c.size();
  IntMatrix q(n, n);
  q(0, 0) = b;
  std::size_t at = 1;
  for (const auto &c : arms) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      q(at + j, at + j) = -c[j];
      std::size_t prev = j == 0 ? 0 : at + j - 1;
      q(at + j, prev) = q(prev, at + j) = 1;
    }
    at += c.size();
  }
  return q;
}

LinkingPairing plumbing_pairing(const IntMatrix &q, int sign) {
  const std::size_t n = q.rows();
  auto snf = smith_normal_form(q);
  // rational solve of Q z = x through L Q R = D
  auto solve = [&](const std::vector<Int> &x) {
    std::vector<Rat> lx(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lx[i] += snf.left(i, j) * x[j];
    std::vector<Rat> w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (snf.diagonal[i] != 0) w[i] = lx[i] / snf.diagonal[i];
    std::vector<Rat> z(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) z[i] += snf.right(i, j) * w[j];
    return z;
  };
  std::vector<std::vector<Int>> gens;
  std::vector<Int> orders;
  for (std::size_t i = 0; i < n; ++i) {
    const Int &d = snf.diagonal[i];
    if (d == 0 || d == 1) continue;
    std::vector<Int> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = snf.right_inverse(i, j);
    gens.push_back(v);
    orders.push_back(d);
  }
  std::vector<std::vector<Rat>> vals(gens.size(), std::vector<Rat>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto z = solve(gens[i]);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Rat s = 0;
      for (std::size_t t = 0; t < n; ++t) s += z[t] * gens[j][t];
      vals[i][j] = sign * s;
    }
  }
  return make_pairing(orders, vals);
}

LinkingPairing primary_part(const LinkingPairing &l, const Int &p) {
  for (auto &[q, part] : primary_decompose(l))
    if (q == p) return part;
  return {};
}

} // namespace s4e::testing
