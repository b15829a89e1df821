#include "s4e/nilpotent.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace s4e {

std::string Field::to_string() const { return rational() ? "Q" : "F" + p.get_str(); }

namespace {

// Entry reduced into the generator's cyclic group.
Int reduce(const Int &x, const Int &order) { return order == 0 ? x : mod(x, order); }

std::vector<Int> apply(const IntMatrix &m, const std::vector<Int> &v,
                       const std::vector<Int> &orders) {
  std::vector<Int> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m(i, j) * v[j];
    out[i] = reduce(out[i], orders[i]);
  }
  return out;
}

IntMatrix minus_identity(const IntMatrix &m) {
  IntMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) -= 1;
  return r;
}

IntMatrix submatrix(const IntMatrix &m, const std::vector<std::size_t> &idx) {
  IntMatrix r(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) r(a, b) = m(idx[a], idx[b]);
  return r;
}

// Action on the exterior square, basis e_i ^ e_j (i < j) in lexicographic order.
IntMatrix exterior_square(const IntMatrix &m) {
  std::size_t n = m.rows();
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) basis.push_back({i, j});
  IntMatrix r(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto [i, j] = basis[col];
    for (std::size_t row = 0; row < basis.size(); ++row) {
      auto [k, l] = basis[row];
      r(row, col) = m(k, i) * m(l, j) - m(l, i) * m(k, j);
    }
  }
  return r;
}

// Action on the symmetric square, basis e_i e_j (i <= j).
IntMatrix symmetric_square(const IntMatrix &m) {
  std::size_t n = m.rows();
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) basis.push_back({i, j});
  IntMatrix r(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto [i, j] = basis[col];
    // (sum_k m_ki e_k)(sum_l m_lj e_l)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        auto key = std::minmax(k, l);
        std::size_t row = std::find(basis.begin(), basis.end(),
                                    std::pair<std::size_t, std::size_t>(key.first, key.second)) -
                          basis.begin();
        r(row, col) += m(k, i) * m(l, j);
      }
  }
  return r;
}

IntMatrix block_diagonal(const IntMatrix &a, const IntMatrix &b) {
  IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

int rank_rational(const IntMatrix &m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto snf = smith_normal_form(m);
  return static_cast<int>(std::count_if(snf.diagonal.begin(), snf.diagonal.end(),
                                        [](const Int &d) { return d != 0; }));
}

int rank_over(const IntMatrix &m, const Field &f) {
  return f.rational() ? rank_rational(m) : rank_mod_p(m, f.p);
}

// Relations presenting A: rows d_i e_i for finite generators.
IntMatrix order_relations(const std::vector<Int> &orders) {
  std::size_t n = orders.size();
  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = orders[i];
  return r;
}

IntMatrix stack(const IntMatrix &a, const IntMatrix &b) {
  IntMatrix r(a.rows() + b.rows(), std::max(a.cols(), b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

// Mod-p action on A[p] in the basis (d_i / p) e_i, p | d_i.
IntMatrix torsion_action(const IntMatrix &psi, const std::vector<Int> &orders, const Int &p) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0 && orders[i] % p == 0) idx.push_back(i);
  IntMatrix r(idx.size(), idx.size());
  for (std::size_t b = 0; b < idx.size(); ++b) {
    std::size_t j = idx[b];
    Int lift = orders[j] / p;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      std::size_t i = idx[a];
      Int x = mod(psi(i, j) * lift, orders[i]);
      Int unit = orders[i] / p;
      if (x % unit != 0) throw std::logic_error("action does not preserve p-torsion");
      r(a, b) = mod(x / unit, p);
    }
  }
  return r;
}

void require_rank_one(const SemidirectGroup &g) {
  if (g.extension_rank() != 1)
    throw std::invalid_argument("needs a semidirect product with quotient Z");
}

} // namespace

int rank_mod_p(const IntMatrix &m, const Int &p) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(m(i, j), p);
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    Int inv = inv_mod(a[row][col], p);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      Int f = mod(a[i][col] * inv, p);
      for (std::size_t j = col; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[row][j], p);
    }
    ++row;
    ++rank;
  }
  return rank;
}

void SemidirectGroup::validate() const {
  std::size_t n = orders.size();
  if (actions.empty() || actions.size() > 2)
    throw std::invalid_argument("one or two actions expected");
  for (const auto &d : orders)
    if (d < 0) throw std::invalid_argument("generator orders must be >= 0");
  for (const auto &psi : actions) {
    if (psi.rows() != n || psi.cols() != n)
      throw std::invalid_argument("action matrix has the wrong size");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (reduce(orders[j] * psi(i, j), orders[i]) != 0)
          throw std::invalid_argument("action is not well defined on the base");
    if (n == 0) continue;
    // surjective, hence an automorphism of a finitely generated abelian group
    IntMatrix images(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) images(j, i) = psi(i, j);
    auto c = cokernel(stack(images, order_relations(orders)));
    if (!c.divisors().empty() || c.free_rank() != 0)
      throw std::invalid_argument("action is not invertible on the base");
  }
  if (actions.size() == 2) {
    IntMatrix ab = actions[0] * actions[1], ba = actions[1] * actions[0];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reduce(ab(i, j) - ba(i, j), orders[i]) != 0)
          throw std::invalid_argument("actions do not commute");
  }
}

bool SemidirectGroup::finite_base() const {
  return std::none_of(orders.begin(), orders.end(), [](const Int &d) { return d == 0; });
}

std::string SemidirectGroup::to_string() const {
  std::ostringstream os;
  os << FiniteAbelianGroup::from_orders(orders).to_string() << " x| Z";
  if (actions.size() == 2) os << "^2";
  for (const auto &a : actions) os << " " << a.to_string();
  return os.str();
}

SemidirectGroup cyclic_semidirect(const Int &m, const Int &n) {
  SemidirectGroup g{{m}, {IntMatrix(1, 1)}};
  g.actions[0](0, 0) = m == 0 ? n : mod(n, m);
  g.validate();
  return g;
}

SemidirectGroup gamma_q(const Int &q) {
  IntMatrix psi = IntMatrix::identity(2);
  psi(0, 1) = q;
  return SemidirectGroup{{0, 0}, {psi}};
}

FiniteAbelianGroup h2_abelian(const FiniteAbelianGroup &a) {
  const auto &d = a.divisors();
  int g = a.free_rank();
  std::vector<Int> out;
  for (int k = 0; k < g; ++k) out.insert(out.end(), d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) out.push_back(gcd(d[i], d[j]));
  return FiniteAbelianGroup::from_orders(out, g * (g - 1) / 2);
}

BettiProfile betti_abelian(const FiniteAbelianGroup &a, const Field &f) {
  BettiProfile b{f};
  int t = f.rational() ? 0 : a.p_rank(f.p);
  b.beta1 = a.free_rank() + t;
  b.beta2 = b.beta1 * (b.beta1 - 1) / 2 + t;
  return b;
}

bool is_unipotent(const std::vector<Int> &orders, const IntMatrix &psi) {
  IntMatrix n = minus_identity(psi);
  // length of a composition-type series of A bounds the nilpotency index
  std::size_t steps = 1;
  for (const auto &d : orders) {
    if (d == 0) {
      ++steps;
      continue;
    }
    for (auto &[p, e] : factor(d)) steps += e;
  }
  for (std::size_t j = 0; j < orders.size(); ++j) {
    std::vector<Int> v(orders.size(), 0);
    v[j] = 1;
    for (std::size_t s = 0; s < steps; ++s) v = apply(n, v, orders);
    if (std::any_of(v.begin(), v.end(), [](const Int &x) { return x != 0; })) return false;
  }
  return true;
}

bool is_nilpotent(const SemidirectGroup &g) {
  return std::all_of(g.actions.begin(), g.actions.end(),
                     [&](const IntMatrix &a) { return is_unipotent(g.orders, a); });
}

BettiProfile wang_betti(const SemidirectGroup &g, const Field &f) {
  g.validate();
  require_rank_one(g);
  const IntMatrix &psi = g.actions[0];
  BettiProfile out{f};
  std::vector<std::size_t> h1;
  for (std::size_t i = 0; i < g.orders.size(); ++i)
    if (g.orders[i] == 0 || (!f.rational() && g.orders[i] % f.p == 0)) h1.push_back(i);
  IntMatrix m1 = submatrix(psi, h1);
  IntMatrix m2;
  if (f.rational()) {
    m2 = exterior_square(m1);
  } else {
    bool has_z2 = false, all_z2 = true;
    for (std::size_t i : h1) {
      bool z2 = g.orders[i] != 0 && valuation(g.orders[i], 2) == 1;
      has_z2 = has_z2 || z2;
      all_z2 = all_z2 && z2;
    }
    if (f.p == 2 && has_z2 && all_z2) {
      // elementary abelian mod 2: H^2 is the symmetric square of H^1
      m2 = symmetric_square(m1);
    } else {
      m2 = block_diagonal(exterior_square(m1), torsion_action(psi, g.orders, f.p));
      out.exact = !(f.p == 2 && has_z2);
    }
  }
  int n1 = static_cast<int>(m1.rows()), n2 = static_cast<int>(m2.rows());
  int c1 = n1 - (n1 ? rank_over(minus_identity(m1), f) : 0);
  int c2 = n2 - (n2 ? rank_over(minus_identity(m2), f) : 0);
  out.beta1 = 1 + c1;
  out.beta2 = c2 + c1;
  return out;
}

FiniteAbelianGroup wang_h2_integral(const SemidirectGroup &g) {
  g.validate();
  require_rank_one(g);
  const IntMatrix &psi = g.actions[0];
  std::size_t n = g.orders.size();
  if (std::all_of(g.orders.begin(), g.orders.end(), [](const Int &d) { return d == 0; })) {
    // Cok(psi^psi - I) + Ker(psi - I); the kernel is free so the sequence splits
    IntMatrix w = minus_identity(exterior_square(psi));
    FiniteAbelianGroup cok = w.rows() ? cokernel(w.transpose()) : FiniteAbelianGroup{};
    int ker = static_cast<int>(n) - rank_rational(minus_identity(psi));
    return FiniteAbelianGroup::from_orders(cok.divisors(), cok.free_rank() + ker);
  }
  if (n == 1) {
    const Int &m = g.orders[0];
    Int k = psi(0, 0) - 1;
    if (m == 0) return FiniteAbelianGroup::from_orders({}, k == 0 ? 1 : 0);
    return FiniteAbelianGroup::from_orders({gcd(k, m)});
  }
  throw std::invalid_argument("integral H_2 needs a free or cyclic base");
}

FiniteAbelianGroup semidirect_abelianization(const SemidirectGroup &g) {
  g.validate();
  if (g.orders.empty()) return FiniteAbelianGroup::from_orders({}, g.extension_rank());
  IntMatrix rel = order_relations(g.orders);
  for (const auto &psi : g.actions) rel = stack(rel, minus_identity(psi).transpose());
  auto c = cokernel(rel);
  return FiniteAbelianGroup::from_orders(c.divisors(), c.free_rank() + g.extension_rank());
}

std::vector<Int> balance_primes(const SemidirectGroup &g) {
  require_rank_one(g);
  std::set<Int> primes;
  auto add = [&](const Int &x) {
    if (x != 0)
      for (const auto &p : prime_divisors(abs(x))) primes.insert(p);
  };
  for (const auto &d : g.orders) add(d);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < g.orders.size(); ++i)
    if (g.orders[i] == 0) free.push_back(i);
  if (!free.empty()) {
    IntMatrix m = submatrix(g.actions[0], free);
    auto snf = smith_normal_form(minus_identity(m));
    for (const auto &x : snf.diagonal) add(x);
    IntMatrix w = minus_identity(exterior_square(m));
    if (w.rows()) {
      auto snf2 = smith_normal_form(w);
      for (const auto &x : snf2.diagonal) add(x);
    }
  }
  auto ab = semidirect_abelianization(g);
  for (const auto &d : ab.divisors()) add(d);
  return {primes.begin(), primes.end()};
}

BalanceReport homologically_balanced(const SemidirectGroup &g) {
  g.validate();
  require_rank_one(g);
  BalanceReport r;
  r.nilpotent = is_nilpotent(g);
  r.fields.push_back(wang_betti(g, Field{0}));
  for (const auto &p : balance_primes(g)) r.fields.push_back(wang_betti(g, Field{p}));
  r.balanced = std::all_of(r.fields.begin(), r.fields.end(),
                           [](const BettiProfile &b) { return b.beta2 <= b.beta1; });
  if (g.finite_base() && r.nilpotent && r.balanced)
    r.cyclic_classification_holds = FiniteAbelianGroup::from_orders(g.orders).divisors().size() <= 1;
  return r;
}

Z2ModuleHomology z2_module_homology(const Int &p, const IntMatrix &x, const IntMatrix &y) {
  std::size_t n = x.rows();
  if (x.cols() != n || y.rows() != n || y.cols() != n)
    throw std::invalid_argument("module actions must be square of equal size");
  IntMatrix xi = minus_identity(x), yi = minus_identity(y);
  IntMatrix xy = x * y, yx = y * x;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mod(xy(i, j) - yx(i, j), p) != 0)
        throw std::invalid_argument("module actions do not commute mod p");
  // d1: A^2 -> A, (a, b) -> (x - 1) a + (y - 1) b
  IntMatrix d1(n, 2 * n);
  // d2: A -> A^2, c -> ((y - 1) c, (1 - x) c)
  IntMatrix d2(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d1(i, j) = xi(i, j);
      d1(i, n + j) = yi(i, j);
      d2(i, j) = yi(i, j);
      d2(n + i, j) = -xi(i, j);
    }
  int r1 = rank_mod_p(d1, p), r2 = rank_mod_p(d2, p);
  int dim = static_cast<int>(n);
  return {dim - r1, 2 * dim - r1 - r2, dim - r2};
}

std::string to_string(BalancedClass c) {
  switch (c) {
  case BalancedClass::Z: return "Z";
  case BalancedClass::Z2: return "Z^2";
  case BalancedClass::Z3: return "Z^3";
  case BalancedClass::Gamma: return "Gamma_q";
  case BalancedClass::Omega: return "Omega";
  case BalancedClass::NotInCatalogue: return "not-in-catalogue";
  }
  return "?";
}

BalancedClass classify_balanced_torsionfree(const NilpotentCandidate &c) {
  if (c.abelian) {
    switch (c.hirsch) {
    case 1: return BalancedClass::Z;
    case 2: return BalancedClass::Z2;
    case 3: return BalancedClass::Z3;
    default: return BalancedClass::NotInCatalogue;
    }
  }
  if (c.hirsch == 3 && c.q >= 1) return BalancedClass::Gamma;
  if (c.hirsch == 4 && c.omega) return BalancedClass::Omega;
  return BalancedClass::NotInCatalogue;
}

} // namespace s4e
