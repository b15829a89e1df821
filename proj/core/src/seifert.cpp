#include "s4e/seifert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace s4e {

void SeifertData::validate() const {
  for (const auto &[a, b] : pairs) {
    if (a < 1)
      throw SeifertError("cone order must be >= 1, got " + a.get_str());
    if (gcd(a, b) != 1)
      throw SeifertError("pair (" + a.get_str() + "," + b.get_str() +
                         ") is not coprime");
  }
}

std::string SeifertData::to_string() const {
  std::ostringstream os;
  os << "M(" << base << ";";
  for (const auto &[a, b] : pairs) os << " (" << a.get_str() << "," << b.get_str() << ")";
  os << ")";
  return os.str();
}

SeifertData make_seifert(int base, std::vector<std::pair<long, long>> pairs) {
  SeifertData s;
  s.base = base;
  for (auto [a, b] : pairs) s.pairs.push_back({Int(a), Int(b)});
  s.validate();
  return s;
}

Rat euler_number(const SeifertData &s) {
  Rat e = 0;
  for (const auto &[a, b] : s.pairs) e -= make_rat(b, a);
  return e;
}

SeifertData normalize(const SeifertData &s) {
  s.validate();
  SeifertData r;
  r.base = s.base;
  Int shift = 0; // accumulated sum of floor(beta/alpha) moved to (1, .)
  for (const auto &[a, b] : s.pairs) {
    Int c = fdiv(b, a);
    shift += c;
    if (a > 1) r.pairs.push_back({a, b - c * a});
  }
  std::sort(r.pairs.begin(), r.pairs.end(), [](const auto &x, const auto &y) {
    return x.alpha != y.alpha ? x.alpha > y.alpha : x.beta > y.beta;
  });
  if (shift != 0) r.pairs.push_back({1, shift});
  return r;
}

SeifertData add_trivial_pair(const SeifertData &s, std::size_t position) {
  SeifertData r = s;
  position = std::min(position, r.pairs.size());
  r.pairs.insert(r.pairs.begin() + position, SeifertPair{1, 0});
  return r;
}

SeifertData delete_trivial_pair(const SeifertData &s, std::size_t index) {
  if (index >= s.pairs.size() || !(s.pairs[index] == SeifertPair{1, 0}))
    throw SeifertError("only a (1,0) pair can be deleted");
  SeifertData r = s;
  r.pairs.erase(r.pairs.begin() + index);
  return r;
}

SeifertData shift_pairs(const SeifertData &s, const std::vector<Int> &c) {
  if (c.size() != s.pairs.size()) throw SeifertError("shift vector size mismatch");
  Int total = 0;
  for (const auto &x : c) total += x;
  if (total != 0) throw SeifertError("shifts must sum to zero");
  SeifertData r = s;
  for (std::size_t i = 0; i < c.size(); ++i) r.pairs[i].beta += c[i] * r.pairs[i].alpha;
  return r;
}

SeifertData permute_pairs(const SeifertData &s,
                          const std::vector<std::size_t> &perm) {
  if (perm.size() != s.pairs.size()) throw SeifertError("permutation size mismatch");
  SeifertData r = s;
  for (std::size_t i = 0; i < perm.size(); ++i) r.pairs[i] = s.pairs.at(perm[i]);
  return r;
}

SeifertData reverse_orientation(const SeifertData &s) {
  SeifertData r = s;
  for (auto &p : r.pairs) p.beta = -p.beta;
  return r;
}

IntMatrix orientable_relation_matrix(const SeifertData &s) {
  const std::size_t r = s.pairs.size();
  IntMatrix a(r + 1, r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    a(0, i + 1) = 1;
    a(i + 1, 0) = s.pairs[i].beta;
    a(i + 1, i + 1) = s.pairs[i].alpha;
  }
  return a;
}

FiniteAbelianGroup nonorientable_torsion(const SeifertData &s) {
  std::vector<SeifertPair> ps = s.pairs;
  while (ps.size() < 2) ps.push_back({1, 0});
  std::stable_sort(ps.begin(), ps.end(), [](const auto &x, const auto &y) {
    int tx = valuation(x.alpha, 2), ty = valuation(y.alpha, 2);
    if (tx != ty) return tx > ty;
    if (x.alpha != y.alpha) return x.alpha > y.alpha;
    return x.beta > y.beta;
  });
  int t1 = valuation(ps[0].alpha, 2);
  Int parity = 0;
  if (t1 != 0) {
    for (const auto &p : ps)
      if (valuation(p.alpha, 2) == t1) ++parity;
  } else {
    for (const auto &p : ps) parity += p.beta;
  }
  std::vector<Int> orders;
  if (mod(parity, 2) == 0) {
    orders.push_back(2 * ps[0].alpha);
    orders.push_back(2 * ps[1].alpha);
  } else {
    orders.push_back(4 * ps[0].alpha);
    orders.push_back(ps[1].alpha);
  }
  for (std::size_t i = 2; i < ps.size(); ++i) orders.push_back(ps[i].alpha);
  return FiniteAbelianGroup::from_orders(orders);
}

FiniteAbelianGroup first_homology(const SeifertData &s) {
  s.validate();
  if (s.orientable_base()) {
    auto g = cokernel(orientable_relation_matrix(s));
    return FiniteAbelianGroup::from_orders(g.divisors(), g.free_rank() + 2 * s.base);
  }
  auto t = nonorientable_torsion(s);
  return FiniteAbelianGroup::from_orders(t.divisors(), s.crosscaps() - 1);
}

bool torsion_is_direct_double(const SeifertData &s) {
  return is_direct_double(first_homology(s));
}

bool is_skew_symmetric(const SeifertData &s) {
  s.validate();
  if (euler_number(s) != 0) return false;
  std::map<std::pair<Int, Int>, long> count;
  for (const auto &[a, b] : s.pairs)
    if (a > 1) ++count[{a, mod(b, a)}];
  for (const auto &[key, n] : count) {
    const auto &[a, b] = key;
    Int partner = a - b;
    if (partner == b) {
      if (n % 2) return false;
      continue;
    }
    auto it = count.find({a, partner});
    if (it == count.end() || it->second != n) return false;
  }
  return true;
}

SpecialClass classify_special(const SeifertData &s) {
  SpecialClass c;
  Rat eps = euler_number(s);
  Int prod = 1;
  for (const auto &p : s.pairs) prod *= p.alpha;
  c.homology_sphere = s.base == 0 && abs(eps * prod) == 1;
  if (s.base == 0 && eps == 0) {
    bool coprime = true;
    const auto &ps = s.pairs;
    for (std::size_t i = 0; i < ps.size() && coprime; ++i)
      for (std::size_t j = i + 1; j < ps.size() && coprime; ++j)
        for (std::size_t k = j + 1; k < ps.size() && coprime; ++k)
          coprime = gcd(gcd(ps[i].alpha, ps[j].alpha), ps[k].alpha) == 1;
    c.homology_handle = coprime;
  }
  c.q_homology_sphere = first_homology(s).free_rank() == 0;
  return c;
}

SeifertData fibre_sum(const SeifertData &a, const SeifertData &b) {
  SeifertData r;
  int k = a.base, kp = b.base;
  if ((k >= 0 && kp >= 0) || (k <= 0 && kp <= 0))
    r.base = k + kp;
  else if (k > 0)
    r.base = kp - 2 * k; // genus-k surface # c crosscaps has 2k + c crosscaps
  else
    r.base = k - 2 * kp;
  r.pairs = a.pairs;
  r.pairs.insert(r.pairs.end(), b.pairs.begin(), b.pairs.end());
  return r;
}

SeifertData expansion(const SeifertData &s, std::size_t index) {
  if (index < 1 || index > s.pairs.size())
    throw SeifertError("expansion index out of range");
  SeifertData r = s;
  const auto p = s.pairs[index - 1];
  r.pairs.push_back(p);
  r.pairs.push_back({p.alpha, -p.beta});
  return r;
}

SeifertData homology_sphere_data(const std::vector<Int> &alphas) {
  if (alphas.size() < 2) throw SeifertError("need at least two cone orders");
  Int prod = 1;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] <= 1) throw SeifertError("cone orders must exceed 1");
    for (std::size_t j = 0; j < i; ++j)
      if (gcd(alphas[i], alphas[j]) != 1)
        throw SeifertError("cone orders must be pairwise coprime");
    prod *= alphas[i];
  }
  // beta_i (P / a_i) = -1 mod a_i determines each beta_i in (0, a_i)
  SeifertData s;
  Rat total = make_rat(1, prod);
  for (const auto &a : alphas) {
    Int b = mod(-inv_mod(prod / a, a), a);
    s.pairs.push_back({a, b});
    total += make_rat(b, a);
  }
  if (total.get_den() != 1)
    throw SeifertError("homology sphere identity failed: sum = " + s4e::to_string(total));
  s.pairs.push_back({1, -total.get_num()});
  return s;
}

} // namespace s4e
