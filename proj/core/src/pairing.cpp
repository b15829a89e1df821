#include "s4e/pairing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace s4e {

namespace {

Int exponent_of(const std::vector<Int> &orders) {
  Int e = 1;
  for (const auto &o : orders) e = lcm(e, o);
  return e;
}

// Integer Gram matrix scale * l(e_i, e_j) reduced mod m.
IntMatrix scaled(const LinkingPairing &l, const Int &scale, const Int &m) {
  IntMatrix a(l.size(), l.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) {
      Rat v = l(i, j).value() * scale;
      if (v.get_den() != 1)
        throw PairingError("pairing entry not of denominator dividing " +
                           s4e::to_string(scale));
      a(i, j) = mod(v.get_num(), m);
    }
  return a;
}

// Inverse of a square matrix modulo p^k; throws if singular mod p.
IntMatrix inverse_mod(IntMatrix a, const Int &p, const Int &m) {
  const std::size_t n = a.rows();
  IntMatrix inv = IntMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (mod(a(r, c), p) != 0) {
        piv = r;
        break;
      }
    if (piv == n) throw PairingError("singular block");
    a.swap_rows(c, piv);
    inv.swap_rows(c, piv);
    Int u = inv_mod(a(c, c), m);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = mod(a(c, j) * u, m);
      inv(c, j) = mod(inv(c, j) * u, m);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Int f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = mod(a(r, j) - f * a(c, j), m);
        inv(r, j) = mod(inv(r, j) - f * inv(c, j), m);
      }
    }
  }
  return inv;
}

std::vector<std::vector<Int>> unit_vectors(std::size_t n) {
  std::vector<std::vector<Int>> v(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;
  return v;
}

} // namespace

ResidueQZ LinkingPairing::value(const std::vector<Int> &x,
                                const std::vector<Int> &y) const {
  Rat s = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < size(); ++j)
      if (y[j] != 0) s += matrix[i][j].value() * x[i] * y[j];
  }
  return ResidueQZ(s);
}

FiniteAbelianGroup LinkingPairing::group() const {
  return FiniteAbelianGroup::from_orders(orders);
}

Int LinkingPairing::order() const {
  Int n = 1;
  for (const auto &o : orders) n *= o;
  return n;
}

std::string LinkingPairing::to_string() const {
  std::ostringstream os;
  os << "orders=[";
  for (std::size_t i = 0; i < size(); ++i)
    os << (i ? "," : "") << orders[i].get_str();
  os << "] rows=[";
  for (std::size_t i = 0; i < size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < size(); ++j)
      os << (j ? "," : "") << s4e::to_string(matrix[i][j]);
    os << "]";
  }
  os << "]";
  return os.str();
}

LinkingPairing make_pairing(std::vector<Int> orders,
                            const std::vector<std::vector<Rat>> &values) {
  LinkingPairing l;
  l.orders = std::move(orders);
  if (values.size() != l.orders.size())
    throw PairingError("matrix size does not match number of orders");
  for (const auto &row : values) {
    if (row.size() != l.orders.size())
      throw PairingError("pairing matrix is not square");
    std::vector<ResidueQZ> r;
    for (const auto &v : row) r.emplace_back(v);
    l.matrix.push_back(std::move(r));
  }
  return l;
}

LinkingPairing pairing_lw(const Rat &w) {
  Rat q = w;
  q.canonicalize();
  LinkingPairing l;
  if (q.get_den() == 1) return l;
  l.orders = {q.get_den()};
  l.matrix = {{ResidueQZ(q)}};
  return l;
}

LinkingPairing pairing_e(int k, int variant) {
  if (k < 1) throw PairingError("E pairing needs exponent >= 1");
  if (variant == 1 && k < 2) throw PairingError("E_1^k needs k >= 2");
  if (variant != 0 && variant != 1) throw PairingError("variant must be 0 or 1");
  Int q = pow(Int(2), k);
  Rat off = make_rat(1, q);
  Rat d = variant ? make_rat(2, q) : Rat(0);
  return make_pairing({q, q}, {{d, off}, {off, d}});
}

LinkingPairing orthogonal_sum(const LinkingPairing &a, const LinkingPairing &b) {
  LinkingPairing l;
  l.orders = a.orders;
  l.orders.insert(l.orders.end(), b.orders.begin(), b.orders.end());
  const std::size_t n = l.orders.size();
  l.matrix.assign(n, std::vector<ResidueQZ>(n));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) l.matrix[i][j] = a(i, j);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      l.matrix[a.size() + i][a.size() + j] = b(i, j);
  return l;
}

LinkingPairing negate(const LinkingPairing &l) {
  LinkingPairing r = l;
  for (auto &row : r.matrix)
    for (auto &v : row) v = -v;
  return r;
}

LinkingPairing prune(const LinkingPairing &l) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.orders[i] != 1) keep.push_back(i);
  LinkingPairing r;
  for (auto i : keep) {
    r.orders.push_back(l.orders[i]);
    std::vector<ResidueQZ> row;
    for (auto j : keep) row.push_back(l(i, j));
    r.matrix.push_back(std::move(row));
  }
  return r;
}

LinkingPairing transport(const LinkingPairing &l,
                         const std::vector<std::vector<Int>> &gens,
                         const std::vector<Int> &orders) {
  LinkingPairing r;
  r.orders = orders;
  r.matrix.assign(gens.size(), std::vector<ResidueQZ>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      r.matrix[i][j] = r.matrix[j][i] = l.value(gens[i], gens[j]);
  return r;
}

void check_well_defined(const LinkingPairing &l) {
  if (l.matrix.size() != l.size())
    throw PairingError("matrix size does not match number of orders");
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l.orders[i] < 1) throw PairingError("generator orders must be >= 1");
    if (l.matrix[i].size() != l.size())
      throw PairingError("pairing matrix is not square");
  }
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (!(l(i, j) == l(j, i))) throw PairingError("pairing is not symmetric");
      if (!(l(i, j) * l.orders[i]).is_zero())
        throw PairingError("entry (" + std::to_string(i) + "," +
                           std::to_string(j) +
                           ") incompatible with generator order");
    }
}

bool is_nonsingular(const LinkingPairing &l) {
  LinkingPairing p = prune(l);
  if (p.size() == 0) return true;
  Int n = exponent_of(p.orders);
  IntMatrix a = scaled(p, n, n);
  auto snf = smith_normal_form(a);
  Int image = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Int d = i < snf.diagonal.size() ? snf.diagonal[i] : Int(0);
    image *= n / gcd(d, n);
  }
  return image == p.order();
}

void validate(const LinkingPairing &l) {
  check_well_defined(l);
  if (!is_nonsingular(l)) throw PairingError("pairing is singular");
}

std::vector<std::pair<Int, LinkingPairing>>
primary_decompose(const LinkingPairing &l) {
  validate(l);
  std::vector<std::pair<Int, LinkingPairing>> out;
  for (const auto &p : prime_divisors(l.order())) {
    std::vector<std::vector<Int>> gens;
    std::vector<Int> ords;
    for (std::size_t i = 0; i < l.size(); ++i) {
      Int pp = p_part(l.orders[i], p);
      if (pp == 1) continue;
      std::vector<Int> v(l.size(), 0);
      v[i] = l.orders[i] / pp;
      gens.push_back(std::move(v));
      ords.push_back(pp);
    }
    out.emplace_back(p, transport(l, gens, ords));
  }
  return out;
}

std::vector<HomogeneousBlock> homogeneous_split(const LinkingPairing &l,
                                                const Int &p) {
  LinkingPairing base = prune(l);
  for (const auto &o : base.orders)
    if (p_part(o, p) != o) throw PairingError("pairing is not p-primary");
  struct Gen {
    std::vector<Int> v;
    int k;
  };
  std::vector<Gen> gens;
  auto basis = unit_vectors(base.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    gens.push_back({basis[i], valuation(base.orders[i], p)});

  std::vector<HomogeneousBlock> out;
  while (!gens.empty()) {
    int kmax = 0;
    for (const auto &g : gens) kmax = std::max(kmax, g.k);
    std::vector<Gen> top, rest;
    for (auto &g : gens) (g.k == kmax ? top : rest).push_back(std::move(g));
    Int q = pow(p, kmax);
    const std::size_t n = top.size();
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat v = base.value(top[i].v, top[j].v).value() * q;
        a(i, j) = mod(v.get_num(), q);
      }
    IntMatrix ainv = inverse_mod(a, p, q);
    for (auto &y : rest) {
      std::vector<Int> b(n);
      for (std::size_t i = 0; i < n; ++i) {
        Rat v = base.value(top[i].v, y.v).value() * q;
        b[i] = mod(v.get_num(), q);
      }
      for (std::size_t i = 0; i < n; ++i) {
        Int c = 0;
        for (std::size_t j = 0; j < n; ++j) c += ainv(i, j) * b[j];
        c = mod(c, q);
        if (c == 0) continue;
        for (std::size_t t = 0; t < base.size(); ++t)
          y.v[t] = mod(y.v[t] - c * top[i].v[t], base.orders[t]);
      }
    }
    std::vector<std::vector<Int>> vs;
    for (auto &g : top) vs.push_back(g.v);
    out.push_back({p, kmax, transport(base, vs, std::vector<Int>(n, q))});
    gens = std::move(rest);
  }
  return out;
}

int det_class(const LinkingPairing &block, const Int &p, int k) {
  Int q = pow(p, k);
  Int d = mod(determinant(scaled(block, q, q)), p);
  if (d == 0) throw PairingError("singular block");
  return legendre(d, p);
}

namespace {

// Diagonalizes an odd symmetric matrix over Z/2^k (entries already reduced);
// returns the diagonal entries (odd units mod 2^k).
std::vector<Int> diagonalize_odd(IntMatrix g, const Int &q) {
  std::vector<Int> diag;
  auto complement = [&](const IntMatrix &m, std::size_t i) {
    Int ainv = inv_mod(m(i, i), q);
    IntMatrix r(m.rows() - 1, m.rows() - 1);
    std::size_t ri = 0;
    for (std::size_t s = 0; s < m.rows(); ++s) {
      if (s == i) continue;
      std::size_t rj = 0;
      for (std::size_t t = 0; t < m.rows(); ++t) {
        if (t == i) continue;
        r(ri, rj) = mod(m(s, t) - m(s, i) * ainv * m(i, t), q);
        ++rj;
      }
      ++ri;
    }
    return r;
  };
  while (g.rows() > 0) {
    std::size_t i = g.rows();
    for (std::size_t s = 0; s < g.rows(); ++s)
      if (mod(g(s, s), 2) == 1) {
        i = s;
        break;
      }
    if (i < g.rows()) {
      diag.push_back(g(i, i));
      g = complement(g, i);
      continue;
    }
    // Even remainder: fold the last split odd vector e back in and split off
    // e + f_1 instead, which has odd norm and leaves an odd complement.
    if (diag.empty()) throw PairingError("even form passed to odd diagonalization");
    Int a = diag.back();
    diag.pop_back();
    const std::size_t n = g.rows() + 1;
    // basis order: v = e + f_1, e, f_1.., with Gram matrix of (e, f) = a ⊕ g
    IntMatrix m(n, n);
    for (std::size_t s = 0; s < g.rows(); ++s)
      for (std::size_t t = 0; t < g.rows(); ++t) m(s + 1, t + 1) = g(s, t);
    m(0, 0) = a; // position 0 is e for now
    // replace f_1 (index 1) by e + f_1 and move it to the front
    IntMatrix p = IntMatrix::identity(n);
    p(0, 1) = 1;
    IntMatrix mm = p.transpose() * m * p;
    mm.swap_rows(0, 1);
    mm.swap_cols(0, 1);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) mm(s, t) = mod(mm(s, t), q);
    g = mm;
  }
  return diag;
}

// Number of E_1 blocks in a splitting of an even form over Z/2^k, k >= 2.
int count_e1(IntMatrix g, const Int &q) {
  int e1 = 0;
  while (g.rows() > 0) {
    std::size_t i = g.rows(), j = g.rows();
    for (std::size_t s = 0; s < g.rows() && i == g.rows(); ++s)
      for (std::size_t t = s + 1; t < g.rows(); ++t)
        if (mod(g(s, t), 2) == 1) {
          i = s;
          j = t;
          break;
        }
    if (i == g.rows()) throw PairingError("singular even block");
    Int a = g(i, i), b = g(i, j), c = g(j, j);
    if (mod((a / 2) * (c / 2), 2) == 1) ++e1;
    Int det = mod(a * c - b * b, q);
    Int dinv = inv_mod(det, q);
    // B^{-1} = dinv * [[c, -b], [-b, a]]
    const std::size_t n = g.rows();
    IntMatrix r(n - 2, n - 2);
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < n; ++s)
      if (s != i && s != j) idx.push_back(s);
    for (std::size_t s = 0; s < idx.size(); ++s)
      for (std::size_t t = 0; t < idx.size(); ++t) {
        Int xs = g(idx[s], i), ys = g(idx[s], j);
        Int xt = g(idx[t], i), yt = g(idx[t], j);
        Int corr = dinv * (xs * (c * xt - b * yt) + ys * (-b * xt + a * yt));
        r(s, t) = mod(g(idx[s], idx[t]) - corr, q);
      }
    g = r;
  }
  return e1;
}

} // namespace

PairingInvariants invariants(const HomogeneousBlock &b) {
  PairingInvariants inv;
  inv.prime = b.prime;
  inv.exponent = b.exponent;
  inv.rank = static_cast<int>(b.pairing.size());
  Int q = pow(b.prime, b.exponent);
  for (const auto &o : b.pairing.orders)
    if (o != q) throw PairingError("block is not homogeneous");
  if (inv.rank == 0) return inv;
  IntMatrix g = scaled(b.pairing, q, q);
  if (b.prime != 2) {
    inv.det_class = det_class(b.pairing, b.prime, b.exponent);
    return inv;
  }
  bool odd = false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (mod(g(i, i), 2) == 1) odd = true;
  inv.parity = odd ? Parity::Odd : Parity::Even;
  if (odd) {
    inv.two_adic = TwoAdicClass::OddDiagonal;
    for (const auto &d : diagonalize_odd(g, q)) inv.diagonal.emplace_back(make_rat(d, q));
    return inv;
  }
  if (inv.rank % 2 != 0) throw PairingError("singular even block");
  inv.e1_count = b.exponent == 1 ? 0 : count_e1(g, q);
  inv.two_adic = inv.e1_count % 2 == 0 ? TwoAdicClass::Hyperbolic
                                       : TwoAdicClass::EvenNonHyperbolic;
  return inv;
}

bool even_form_hyperbolic_by_count(int t, int rho) {
  // t = number of diagonal entries 2^k l(e_i,e_i) divisible by 4
  int tm = ((t % 4) + 4) % 4, rm = ((rho % 4) + 4) % 4;
  if (rm == 0) return tm == 0 || tm == 3;
  if (rm == 2) return tm == 0 || tm == 1;
  throw PairingError("even form of odd rank");
}

namespace {

bool block_hyperbolic(const HomogeneousBlock &b) {
  auto inv = invariants(b);
  if (inv.rank == 0) return true;
  if (b.prime != 2) {
    if (inv.rank % 2 != 0) return false;
    Int sign = (inv.rank / 2) % 2 == 0 ? 1 : -1;
    return inv.det_class == legendre(mod(sign, b.prime), b.prime);
  }
  return inv.two_adic == TwoAdicClass::Hyperbolic;
}

// Comparable per-block key; equal keys imply isometric blocks.
std::vector<long> block_key(const PairingInvariants &inv) {
  std::vector<long> key{inv.exponent, inv.rank};
  if (inv.prime != 2) {
    key.push_back(inv.det_class);
    return key;
  }
  if (inv.parity == Parity::Even) {
    key.push_back(0);
    key.push_back(inv.exponent == 1 ? 0 : inv.e1_count % 2);
    return key;
  }
  key.push_back(1);
  if (inv.exponent == 1) return key;
  long det8 = 1, odd8 = 0;
  for (const auto &d : inv.diagonal) {
    long a = mod(d.num(), 8).get_si();
    if (inv.exponent == 2) a = a % 4; // only a mod 4 is defined
    det8 = det8 * a % 8;
    odd8 = (odd8 + a) % 8;
  }
  if (inv.exponent >= 3) {
    key.push_back(det8);
    key.push_back(odd8);
  } else {
    // a -> a + 4 sends (det, oddity) to (5 det, oddity + 4)
    bool bit_odd = odd8 >= 4;
    bool bit_det = det8 == 5 || det8 == 7;
    key.push_back(odd8 % 4);
    key.push_back(bit_odd != bit_det);
  }
  return key;
}

} // namespace

bool is_hyperbolic(const LinkingPairing &l) {
  for (const auto &[p, part] : primary_decompose(l))
    for (const auto &b : homogeneous_split(part, p))
      if (!block_hyperbolic(b)) return false;
  return true;
}

bool is_even_2primary(const LinkingPairing &l) {
  for (const auto &[p, part] : primary_decompose(l)) {
    if (p != 2) continue;
    for (const auto &b : homogeneous_split(part, p))
      if (invariants(b).parity == Parity::Odd) return false;
  }
  return true;
}

bool are_isomorphic(const LinkingPairing &a, const LinkingPairing &b,
                    long oracle_bound, IsoMethod *method) {
  if (method) *method = IsoMethod::Invariants;
  validate(a);
  validate(b);
  if (!(a.group() == b.group())) return false;
  auto pa = primary_decompose(a), pb = primary_decompose(b);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const Int &p = pa[i].first;
    auto ba = homogeneous_split(pa[i].second, p);
    auto bb = homogeneous_split(pb[i].second, p);
    bool same = ba.size() == bb.size();
    for (std::size_t j = 0; same && j < ba.size(); ++j)
      same = block_key(invariants(ba[j])) == block_key(invariants(bb[j]));
    if (same) continue;
    // odd-p keys are complete, and a single homogeneous 2-block is too
    if (p != 2 || ba.size() == 1) return false;
    if (pa[i].second.order() > oracle_bound)
      throw Undecided("2-adic comparison of order " +
                      pa[i].second.order().get_str() + " above oracle bound " +
                      std::to_string(oracle_bound));
    if (method) *method = IsoMethod::Oracle;
    if (!oracle_isomorphic(pa[i].second, pb[i].second, oracle_bound))
      return false;
  }
  return true;
}

namespace {

// Explicit element table for a pairing on a small group.
struct Enumerated {
  std::vector<long> orders;
  long n = 1;
  long e = 1; // exponent; values stored as e * l(x, y) mod e
  std::vector<std::vector<long>> gram;
  std::vector<std::vector<long>> coords;

  explicit Enumerated(const LinkingPairing &l, long common_exp = 0) {
    LinkingPairing p = prune(l);
    for (const auto &o : p.orders) {
      orders.push_back(o.get_si());
      n *= orders.back();
    }
    Int ex = common_exp ? Int(common_exp) : exponent_of(p.orders);
    e = ex.get_si();
    IntMatrix g = scaled(p, ex, ex);
    gram.assign(p.size(), std::vector<long>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) gram[i][j] = g(i, j).get_si();
    coords.resize(n);
    for (long x = 0; x < n; ++x) {
      long r = x;
      for (auto o : orders) {
        coords[x].push_back(r % o);
        r /= o;
      }
    }
  }
  long index(const std::vector<long> &c) const {
    long x = 0, m = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      x += (((c[i] % orders[i]) + orders[i]) % orders[i]) * m;
      m *= orders[i];
    }
    return x;
  }
  long add(long a, long b) const {
    std::vector<long> c(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
      c[i] = coords[a][i] + coords[b][i];
    return index(c);
  }
  long pair(long a, long b) const {
    long s = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (!coords[a][i]) continue;
      for (std::size_t j = 0; j < orders.size(); ++j)
        s = (s + coords[a][i] * coords[b][j] % e * gram[i][j]) % e;
    }
    return s;
  }
  long order_of(long a) const {
    long o = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      long c = coords[a][i];
      if (c) {
        long oi = orders[i] / std::gcd(c, orders[i]);
        o = std::lcm(o, oi);
      }
    }
    return o;
  }
};

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits &b, long i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set_bit(Bits &b, long i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }

} // namespace

bool oracle_is_hyperbolic(const LinkingPairing &l, long bound) {
  validate(l);
  if (l.order() > bound)
    throw BoundExceeded("group order " + l.order().get_str() +
                        " above oracle bound " + std::to_string(bound));
  Enumerated g(l);
  if (g.n == 1) return true;
  long m = 1;
  while (m * m < g.n) ++m;
  if (m * m != g.n) return false;
  const std::size_t words = (g.n + 63) / 64;

  std::vector<long> isotropic;
  for (long x = 1; x < g.n; ++x)
    if (g.pair(x, x) == 0) isotropic.push_back(x);

  struct Sub {
    Bits bits;
    std::vector<long> elems;
  };
  std::set<Bits> seen;
  std::vector<Sub> stack, lagrangians;
  Sub zero{Bits(words, 0), {0}};
  set_bit(zero.bits, 0);
  stack.push_back(zero);
  seen.insert(zero.bits);
  while (!stack.empty()) {
    Sub h = std::move(stack.back());
    stack.pop_back();
    if (static_cast<long>(h.elems.size()) == m) {
      lagrangians.push_back(std::move(h));
      continue;
    }
    for (long x : isotropic) {
      if (test_bit(h.bits, x)) continue;
      bool orth = true;
      for (long y : h.elems)
        if (g.pair(x, y) != 0) {
          orth = false;
          break;
        }
      if (!orth) continue;
      Sub nh{h.bits, h.elems};
      long jx = x;
      while (!test_bit(h.bits, jx)) {
        for (long y : h.elems) {
          long z = g.add(y, jx);
          if (!test_bit(nh.bits, z)) {
            set_bit(nh.bits, z);
            nh.elems.push_back(z);
          }
        }
        jx = g.add(jx, x);
      }
      if (static_cast<long>(nh.elems.size()) > m) continue;
      if (seen.insert(nh.bits).second) stack.push_back(std::move(nh));
    }
  }
  for (std::size_t i = 0; i < lagrangians.size(); ++i)
    for (std::size_t j = i; j < lagrangians.size(); ++j) {
      bool meet = false;
      for (std::size_t w = 0; w < words && !meet; ++w) {
        std::uint64_t both = lagrangians[i].bits[w] & lagrangians[j].bits[w];
        if (w == 0) both &= ~std::uint64_t(1);
        meet = both != 0;
      }
      if (!meet) return true;
    }
  return false;
}

bool oracle_isomorphic(const LinkingPairing &a, const LinkingPairing &b,
                       long bound) {
  validate(a);
  validate(b);
  if (a.order() > bound || b.order() > bound)
    throw BoundExceeded("group order above oracle bound " +
                        std::to_string(bound));
  if (!(a.group() == b.group())) return false;
  long e = exponent_of(prune(a).orders).get_si();
  Enumerated ga(a, e), gb(b, e);
  const std::size_t r = ga.orders.size();
  if (r == 0) return true;
  std::vector<std::vector<long>> by_order(r);
  for (std::size_t i = 0; i < r; ++i)
    for (long x = 0; x < gb.n; ++x)
      if (gb.order_of(x) == ga.orders[i]) by_order[i].push_back(x);
  std::vector<long> img(r);
  auto search = [&](auto &&self, std::size_t i) -> bool {
    if (i == r) return true;
    for (long x : by_order[i]) {
      bool ok = gb.pair(x, x) == ga.gram[i][i];
      for (std::size_t j = 0; ok && j < i; ++j)
        ok = gb.pair(x, img[j]) == ga.gram[i][j];
      if (!ok) continue;
      img[i] = x;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  return search(search, 0);
}

} // namespace s4e
