#include "s4e/realization.hpp"

#include "s4e/seifert_pairing.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace s4e {

std::string to_string(EpsilonMode m) { return m == EpsilonMode::Zero ? "zero" : "nonzero"; }

std::string to_string(Clause c) {
  switch (c) {
  case Clause::None: return "none";
  case Clause::SeveralEvenComponents: return "several-even-components";
  case Clause::EvenComponentNotMaximal: return "even-component-not-maximal";
  case Clause::EvenComponentTooLow: return "even-component-too-low";
  case Clause::EvenSecondOverNonCyclic: return "even-second-over-noncyclic";
  }
  return "?";
}

namespace {

const char *clause_text(Clause c) {
  switch (c) {
  case Clause::SeveralEvenComponents:
    return "more than one homogeneous 2-primary component is even; all but one "
           "must be diagonalizable";
  case Clause::EvenComponentNotMaximal:
    return "with eps = 0 the only even 2-primary component must have the "
           "maximal exponent";
  case Clause::EvenComponentTooLow:
    return "with eps != 0 an even 2-primary component must be one of the two "
           "of largest exponent";
  case Clause::EvenSecondOverNonCyclic:
    return "with eps != 0 an even component below the top one needs a cyclic "
           "top component";
  default: return "";
  }
}

LinkingPairing part_at(const LinkingPairing &l, const Int &p) {
  for (auto &[q, part] : primary_decompose(l))
    if (q == p) return part;
  return {};
}

std::vector<HomogeneousBlock> blocks_of(const LinkingPairing &part, const Int &p) {
  if (part.size() == 0) return {};
  auto bs = homogeneous_split(part, p);
  std::sort(bs.begin(), bs.end(),
            [](const auto &a, const auto &b) { return a.exponent > b.exponent; });
  return bs;
}

int rank_of(const HomogeneousBlock &b) { return static_cast<int>(b.pairing.size()); }

Int nonsquare(const Int &p) {
  for (Int x = 2;; ++x)
    if (legendre(x, p) < 0) return x;
}

Int exponent_of(const LinkingPairing &l) {
  Int e = 1;
  for (const auto &o : l.orders) e = lcm(e, o);
  return e;
}

// Cone point with a searched numerator.
struct Slot {
  Int alpha;
  std::vector<Int> betas; // tried in order
};

// M(0; (alpha1, beta1), slots...) with beta1 fixed by the target Euler
// number: beta1 = -alpha1 (eps + sum beta_i / alpha_i).
struct Shape {
  std::string name;
  Int alpha1;
  std::vector<Slot> slots;
  std::vector<Rat> eps;
};

struct Searcher {
  const LinkingPairing &target;
  RealizationResult &out;
  std::size_t limit = 60000;

  bool attempt(const SeifertData &s) {
    ++out.candidates;
    IsoMethod m = IsoMethod::Invariants;
    if (!verify_realization(s, target, &m)) return false;
    out.data = s;
    out.verified = true;
    out.verification_method = m;
    return true;
  }

  bool run(const Shape &sh) {
    std::size_t n = sh.slots.size();
    for (const auto &slot : sh.slots)
      if (slot.betas.empty()) return false;
    for (const auto &eps : sh.eps) {
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        if (out.candidates >= limit) return false;
        Rat sum = eps;
        SeifertData s;
        s.pairs.push_back({sh.alpha1, 0});
        for (std::size_t i = 0; i < n; ++i) {
          const Int &b = sh.slots[i].betas[idx[i]];
          sum += make_rat(b, sh.slots[i].alpha);
          s.pairs.push_back({sh.slots[i].alpha, b});
        }
        Rat b1 = -Rat(sh.alpha1) * sum;
        if (b1.get_den() == 1 && gcd(b1.get_num(), sh.alpha1) == 1) {
          s.pairs[0].beta = b1.get_num();
          if (attempt(s)) {
            std::ostringstream os;
            os << sh.name << ": matched with eps = " << to_string(eps) << " after "
               << out.candidates << " candidate(s)";
            out.transcript.push_back(os.str());
            return true;
          }
        }
        std::size_t i = n;
        while (i > 0) {
          --i;
          if (++idx[i] < sh.slots[i].betas.size()) break;
          idx[i] = 0;
          if (i == 0) {
            i = n + 1;
            break;
          }
        }
        if (n == 0 || i == n + 1) break;
      }
    }
    return false;
  }
};

void finish(RealizationResult &r, const std::string &what) {
  if (!r.verified)
    throw std::logic_error("no verified construction found for " + what);
  r.transcript.push_back(std::string("verified by ") +
                         (r.verification_method == IsoMethod::Oracle ? "oracle" : "invariants"));
}

SeifertData concat(const SeifertData &a, const SeifertData &b) {
  SeifertData s = a;
  s.pairs.insert(s.pairs.end(), b.pairs.begin(), b.pairs.end());
  return s;
}

// ---------------------------------------------------------------------------
// odd primes

std::vector<Int> small_units(const Int &p, std::size_t count) {
  std::vector<Int> out;
  for (long x = 1; out.size() < count; ++x)
    for (long v : {x, -x})
      if (mod(Int(v), p) != 0 && out.size() < count) out.push_back(v);
  return out;
}

// m numerators, all p-units, summing to 0 with product in the square class c.
std::optional<std::vector<Int>> balanced_units(const Int &p, std::size_t m, int c) {
  if (m < 2) return std::nullopt;
  auto cls = [&](const std::vector<Int> &v) {
    Int prod = 1;
    for (const auto &x : v) prod = mod(prod * x, p);
    return legendre(prod, p);
  };
  std::size_t head = m % 2 ? 3 : (m >= 4 ? 4 : 2);
  auto units = small_units(p, 8);
  std::vector<Int> v(m);
  for (std::size_t i = head; i < m; ++i) v[i] = (i - head) % 2 ? -1 : 1;
  std::vector<std::size_t> idx(head - 1, 0);
  while (true) {
    Int s = 0;
    for (std::size_t i = 0; i + 1 < head; ++i) s += (v[i] = units[idx[i]]);
    v[head - 1] = -s;
    if (mod(v[head - 1], p) != 0 && cls(v) == c) return v;
    std::size_t i = idx.size();
    while (i > 0 && ++idx[i - 1] == units.size()) idx[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

// p-primary part with eps = 0 and cone orders powers of p.
SeifertData odd_e0_part(const LinkingPairing &part, const Int &p, RealizationResult &out) {
  auto bs = blocks_of(part, p);
  int k1 = bs[0].exponent;
  Int pk = pow(p, k1);
  std::size_t m1 = rank_of(bs[0]) + 2;
  Int xi = nonsquare(p);
  RealizationResult local;
  Searcher search{part, local};
  // lower blocks: numerators 1 except the last, which sets the block class
  std::size_t lower = bs.size() - 1;
  for (unsigned long mask = 0; mask < (1ul << (lower + 1)); ++mask) {
    int top_class = mask & 1ul ? -1 : 1;
    auto top = balanced_units(p, m1, top_class);
    if (!top) continue;
    Shape sh{"balanced numerators at p=" + p.get_str(), pk, {}, {Rat(0)}};
    for (std::size_t i = 1; i < m1; ++i) sh.slots.push_back({pk, {(*top)[i]}});
    for (std::size_t j = 1; j < bs.size(); ++j) {
      Int a = pow(p, bs[j].exponent);
      int r = rank_of(bs[j]);
      for (int i = 0; i < r; ++i) {
        Int b = (i + 1 == r && (mask >> j) & 1ul) ? xi : Int(1);
        sh.slots.push_back({a, {b}});
      }
    }
    if (search.run(sh)) break;
  }
  if (!local.verified && p == 3 && bs.size() == 1 && rank_of(bs[0]) == 2) {
    // Sum zero forces the class here; raise two cone orders by one power.
    Int hi = pk * 3;
    Shape sh{"raised pair at p=3", hi, {{hi, {5, 1, -1, 2, -2, 4}}, {pk, {-1, 1}}, {pk, {-1, 1}}},
             {Rat(0)}};
    search.run(sh);
  }
  if (!local.verified) {
    Shape sh{"numerator search at p=" + p.get_str(), pk, {}, {Rat(0)}};
    for (std::size_t i = 1; i < m1; ++i) sh.slots.push_back({pk, small_units(p, 4)});
    for (std::size_t j = 1; j < bs.size(); ++j)
      for (int i = 0; i < rank_of(bs[j]); ++i)
        sh.slots.push_back({pow(p, bs[j].exponent), small_units(p, 4)});
    search.run(sh);
  }
  out.candidates += local.candidates;
  out.transcript.insert(out.transcript.end(), local.transcript.begin(), local.transcript.end());
  if (!local.verified)
    throw std::logic_error("no eps = 0 construction at p = " + p.get_str());
  return local.data;
}

// Diagonal numerators b_i over a_i = p^{k_i}, descending, for an odd-p part:
// 1 everywhere except the last entry of each block, which carries its class.
// The first numerator gets the sign (-1)^{rho_1 + 1}. Alternatives after the
// stated value absorb the orientation convention of the pairing.
std::vector<Slot> odd_slots(const LinkingPairing &part, const Int &p) {
  std::vector<Slot> out;
  Int xi = nonsquare(p);
  auto bs = blocks_of(part, p);
  for (const auto &b : bs) {
    int r = rank_of(b);
    int cls = det_class(b.pairing, p, b.exponent);
    for (int i = 0; i < r; ++i) {
      bool last = i + 1 == r;
      Int v = last && cls < 0 ? xi : Int(1);
      out.push_back({pow(p, b.exponent), {v}});
      if (last) out.back().betas.push_back(v * xi);
    }
  }
  Int b1 = out[0].betas[0];
  if (rank_of(bs[0]) % 2 == 0) b1 = -b1;
  auto &first = out[0].betas;
  first = {b1, -b1};
  if (rank_of(bs[0]) == 1) first.insert(first.end(), {b1 * xi, -b1 * xi});
  return out;
}

// ---------------------------------------------------------------------------
// 2-primary shapes

std::vector<Int> odd_residues(const std::optional<Int> &first = std::nullopt) {
  std::vector<Int> v;
  if (first) v.push_back(*first);
  for (long x : {1, 3, 5, 7})
    if (!first || mod(*first - x, 8) != 0) v.push_back(x);
  return v;
}

std::vector<Int> two_diagonal(const HomogeneousBlock &b) {
  std::vector<Int> out;
  auto inv = invariants(b);
  Int q = pow(Int(2), b.exponent);
  for (const auto &d : inv.diagonal) out.push_back(d.num() * (q / d.den()));
  return out;
}

// (-1)^i numerators for i = 3..r, with the variants that add one E_1.
std::vector<std::vector<Int>> even_patterns(int rho) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> hyp, var;
  for (int i = 3; i <= rho + 2; ++i) hyp.push_back(i % 2 ? -1 : 1);
  out.push_back(hyp);
  var = hyp;
  if (rho % 4 == 2) {
    var[0] = 1;
  } else if (rho >= 4) {
    var[0] = var[1] = var[2] = 1;
  }
  out.push_back(var);
  return out;
}

struct TwoShape {
  std::string name;
  Int alpha1;
  std::vector<Slot> slots;
  Rat d; // eps = b / d for odd b
};

void lower_slots(std::vector<Slot> &slots, const std::vector<HomogeneousBlock> &bs,
                 std::size_t from) {
  for (std::size_t j = from; j < bs.size(); ++j) {
    Int a = pow(Int(2), bs[j].exponent);
    for (const auto &b : two_diagonal(bs[j])) slots.push_back({a, odd_residues(b)});
  }
}

std::vector<TwoShape> two_shapes(const std::vector<HomogeneousBlock> &bs, EpsilonMode mode) {
  std::vector<TwoShape> out;
  int k1 = bs[0].exponent;
  Int q1 = pow(Int(2), k1);
  bool even1 = invariants(bs[0]).parity == Parity::Even;
  int rho1 = rank_of(bs[0]);
  if (mode == EpsilonMode::Zero) {
    if (even1) {
      for (const auto &pat : even_patterns(rho1)) {
        TwoShape sh{"even top, eps = 0", q1, {{q1, {1}}}, Rat(0)};
        for (const auto &b : pat) sh.slots.push_back({q1, odd_residues(b)});
        lower_slots(sh.slots, bs, 1);
        out.push_back(sh);
      }
    } else {
      Int a = q1 * 4;
      TwoShape sh{"odd top, eps = 0", a, {{a, {1}}}, Rat(0)};
      for (const auto &b : two_diagonal(bs[0])) sh.slots.push_back({q1, odd_residues(3 * b)});
      lower_slots(sh.slots, bs, 1);
      out.push_back(sh);
    }
    return out;
  }
  bool even2 = bs.size() > 1 && invariants(bs[1]).parity == Parity::Even;
  if (even1) {
    for (const auto &pat : even_patterns(rho1)) {
      TwoShape sh{"even top", q1, {{q1, {1}}}, Rat(q1)};
      for (std::size_t i = 0; i + 1 < pat.size(); ++i)
        sh.slots.push_back({q1, odd_residues(pat[i])});
      lower_slots(sh.slots, bs, 1);
      out.push_back(sh);
    }
  } else if (even2) {
    int k2 = bs[1].exponent;
    Int q2 = pow(Int(2), k2);
    for (const auto &pat : even_patterns(rank_of(bs[1]))) {
      TwoShape sh{"cyclic top over an even component", q2, {{q2, {1}}},
                  make_rat(pow(Int(2), 2 * k2), q1)};
      for (const auto &b : pat) sh.slots.push_back({q2, odd_residues(b)});
      lower_slots(sh.slots, bs, 2);
      out.push_back(sh);
    }
  } else {
    for (int extra : {1, 2}) {
      Int a = q1 * pow(Int(2), extra);
      TwoShape sh{"odd components", a, {}, Rat(a)};
      lower_slots(sh.slots, bs, 0);
      if (!sh.slots.empty()) sh.slots[0].betas = odd_residues(1);
      out.push_back(sh);
    }
  }
  return out;
}

// eps = b / (d E Pi) with b odd, or with b the inverse of an odd m carried
// by one extra cone point of order m; the numerator of eps then cancels the
// odd torsion that point would add.
std::vector<Shape> nonzero_shapes(const TwoShape &ts, const Int &E, const Int &Pi,
                                  const std::vector<Slot> &odd) {
  std::vector<Shape> out;
  for (long m : {1, 3, 5, 7}) {
    if (gcd(Int(m), Pi) != 1) continue;
    Shape sh{ts.name, ts.alpha1 * E * Pi, odd, {}};
    if (m > 1) {
      sh.name += " and a cone point of order " + std::to_string(m);
      Slot extra{m, {}};
      for (long b = 1; b < m; ++b) extra.betas.push_back(b);
      sh.slots.push_back(extra);
    }
    sh.slots.insert(sh.slots.end(), ts.slots.begin(), ts.slots.end());
    for (long b : {1, -1, 3, -3}) sh.eps.push_back(Rat(b) / (ts.d * E * Pi * m));
    out.push_back(sh);
  }
  return out;
}

// Homogeneous constructions, tried before the generic shapes.
std::vector<SeifertData> homogeneous_presets(const HomogeneousBlock &b, EpsilonMode mode) {
  std::vector<SeifertData> out;
  int k = b.exponent;
  Int q = pow(Int(2), k);
  int rho = rank_of(b);
  auto inv = invariants(b);
  if (inv.parity == Parity::Even) {
    int r = mode == EpsilonMode::Zero ? rho + 2 : rho + 1;
    std::vector<Int> hyp(r), var;
    for (int i = 1; i <= r; ++i) hyp[i - 1] = i % 2 ? -1 : 1;
    var = hyp;
    if (rho % 4 == 2) {
      var[0] = -3, var[1] = 1, var[2] = 1;
    } else if (r >= 5) {
      var[0] = -5;
      for (int i = 1; i <= 4; ++i) var[i] = 1;
    }
    bool hyperbolic = inv.two_adic == TwoAdicClass::Hyperbolic;
    for (const auto *v : hyperbolic ? std::vector{&hyp, &var} : std::vector{&var, &hyp}) {
      SeifertData s;
      for (const auto &x : *v) s.pairs.push_back({q, x});
      out.push_back(s);
    }
    return out;
  }
  auto bs = two_diagonal(b);
  if (mode == EpsilonMode::Zero) {
    SeifertData s;
    Int sum = 0;
    s.pairs.push_back({4 * q, 0});
    s.pairs.push_back({4 * q, 1});
    for (const auto &x : bs) {
      s.pairs.push_back({q, 3 * x});
      sum += 3 * x;
    }
    s.pairs[0].beta = -1 - 4 * sum;
    out.push_back(s);
    return out;
  }
  // eps != 0
  auto with3 = bs;
  for (auto &x : with3) x = mod(x, 8);
  auto it = std::find_if(with3.begin(), with3.end(), [](const Int &x) { return x == 3 || x == 5; });
  if (it != with3.end()) {
    bool flip = *it == 5;
    std::vector<Int> v = bs;
    std::iter_swap(v.begin(), v.begin() + (it - with3.begin()));
    if (flip)
      for (auto &x : v) x = -x;
    for (int shift : {1, 0}) {
      SeifertData s;
      s.pairs.push_back({4 * q, 0});
      s.pairs.push_back({q, 1});
      Int sum = 1;
      for (std::size_t i = shift; i < v.size(); ++i) {
        s.pairs.push_back({q, 4 - v[i]});
        sum += 4 - v[i];
      }
      if (s.pairs.size() != static_cast<std::size_t>(rho) + 1) continue;
      s.pairs[0].beta = 1 - 4 * sum;
      if (flip)
        for (auto &pr : s.pairs) pr.beta = -pr.beta;
      out.push_back(s);
    }
  } else if (rho == 1) {
    out.push_back(SeifertData{0, {{2 * q, 1}, {q, bs[0]}}});
  } else if (rho == 2) {
    out.push_back(SeifertData{0, {{2 * q, 1}, {q, bs[0]}, {q, bs[1]}}});
  }
  return out;
}

} // namespace

std::vector<TwoComponent> two_components(const LinkingPairing &l) {
  std::vector<TwoComponent> out;
  for (const auto &b : blocks_of(part_at(l, 2), 2))
    out.push_back({b.exponent, rank_of(b), invariants(b).parity == Parity::Even});
  return out;
}

Clause admissibility(const LinkingPairing &l, EpsilonMode mode) {
  auto cs = two_components(l);
  long even = std::count_if(cs.begin(), cs.end(), [](const auto &c) { return c.even; });
  if (even == 0) return Clause::None;
  if (even > 1) return Clause::SeveralEvenComponents;
  std::size_t at = std::find_if(cs.begin(), cs.end(), [](const auto &c) { return c.even; }) -
                   cs.begin();
  if (mode == EpsilonMode::Zero) return at == 0 ? Clause::None : Clause::EvenComponentNotMaximal;
  if (at >= 2) return Clause::EvenComponentTooLow;
  if (at == 1 && cs[0].rank != 1) return Clause::EvenSecondOverNonCyclic;
  return Clause::None;
}

EvenComponentPrediction predict_even_component(const SeifertData &s) {
  EvenComponentPrediction out;
  std::vector<int> v;
  for (const auto &p : s.pairs)
    if (p.alpha % 2 == 0) v.push_back(valuation(p.alpha, 2));
  std::sort(v.rbegin(), v.rend());
  if (v.empty()) return out;
  out.top_count = static_cast<int>(std::count(v.begin(), v.end(), v[0]));
  out.even_component = out.top_count >= 3;
  out.even_exponent = out.even_component ? v[0] : 0;
  Rat eps = euler_number(s);
  if (out.top_count == 2 && eps != 0) {
    out.divisibility_applies = true;
    int third = v.size() > 2 ? v[2] : 0;
    out.divisibility_holds = 2 * v[0] + valuation(eps, 2) >= 2 + third;
  }
  return out;
}

bool verify_realization(const SeifertData &s, const LinkingPairing &l, IsoMethod *method) {
  LinkingPairing m;
  try {
    m = torsion_pairing(s);
  } catch (const Unsupported &) {
    return false;
  } catch (const PairingError &) {
    return false;
  }
  if (!(prune(m).group() == prune(l).group())) return false;
  try {
    return are_isomorphic(prune(m), prune(l), kDefaultOracleBound, method);
  } catch (const Undecided &) {
    return false;
  } catch (const BoundExceeded &) {
    return false;
  }
}

RealizationResult realize_odd_e0(const LinkingPairing &l) {
  validate(l);
  if (l.order() % 2 == 0) throw std::invalid_argument("realize_odd_e0 needs odd order");
  RealizationResult r;
  r.epsilon_mode = EpsilonMode::Zero;
  SeifertData s;
  for (const auto &[p, part] : primary_decompose(l)) s = concat(s, odd_e0_part(part, p, r));
  IsoMethod m = IsoMethod::Invariants;
  r.verified = verify_realization(s, l, &m);
  r.verification_method = m;
  r.data = s;
  r.transcript.push_back("concatenated prime parts, eps = 0");
  finish(r, l.to_string());
  return r;
}

RealizationResult realize_odd_general(const LinkingPairing &l) {
  validate(l);
  if (l.order() % 2 == 0) throw std::invalid_argument("realize_odd_general needs odd order");
  RealizationResult r;
  r.epsilon_mode = EpsilonMode::NonZero;
  Searcher search{l, r};
  Int e = exponent_of(l);
  Int prod = 1;
  std::vector<Slot> slots;
  for (const auto &[p, part] : primary_decompose(l)) {
    prod *= p;
    auto ps = odd_slots(part, p);
    slots.insert(slots.end(), ps.begin(), ps.end());
  }
  Int abar = e * prod;
  if (!slots.empty())
    search.run(Shape{"extra cone point of order " + abar.get_str(), abar, slots,
                     {make_rat(1, abar)}});
  if (l.size() == 0 || prune(l).size() == 0) {
    r.data = SeifertData{0, {{1, -1}}};
    r.verified = true;
    r.transcript.push_back("trivial pairing: S3");
  }
  finish(r, l.to_string());
  return r;
}

RealizationResult realize_two_homogeneous(const LinkingPairing &l, EpsilonMode mode) {
  validate(l);
  auto bs = blocks_of(prune(l), 2);
  if (bs.size() != 1 || part_at(l, 2).order() != prune(l).order())
    throw std::invalid_argument("realize_two_homogeneous needs a homogeneous 2-primary pairing");
  RealizationResult r;
  r.epsilon_mode = mode;
  Searcher search{l, r};
  for (const auto &s : homogeneous_presets(bs[0], mode)) {
    Rat eps = euler_number(s);
    if ((mode == EpsilonMode::Zero) != (eps == 0)) continue;
    if (search.attempt(s)) {
      r.transcript.push_back("homogeneous construction " + s.to_string());
      break;
    }
  }
  if (!r.verified)
    for (const auto &ts : two_shapes(bs, mode)) {
      std::vector<Shape> shapes{Shape{ts.name, ts.alpha1, ts.slots, {Rat(0)}}};
      if (mode == EpsilonMode::NonZero) shapes = nonzero_shapes(ts, 1, 1, {});
      if (std::any_of(shapes.begin(), shapes.end(), [&](const Shape &sh) { return search.run(sh); }))
        break;
    }
  finish(r, l.to_string());
  return r;
}

namespace {

void reject(const LinkingPairing &l, EpsilonMode mode) {
  Clause c = admissibility(l, mode);
  if (c != Clause::None)
    throw InadmissiblePairing(c, std::string("not realizable with eps ") +
                                     (mode == EpsilonMode::Zero ? "= 0" : "!= 0") + ": " +
                                     clause_text(c));
}

} // namespace

RealizationResult realize_general_e0(const LinkingPairing &l) {
  validate(l);
  reject(l, EpsilonMode::Zero);
  RealizationResult r;
  r.epsilon_mode = EpsilonMode::Zero;
  LinkingPairing two = part_at(l, 2), odd;
  for (const auto &[p, part] : primary_decompose(l))
    if (p != 2) odd = orthogonal_sum(odd, part);
  SeifertData s;
  if (odd.size() > 0) {
    auto ro = realize_odd_e0(odd);
    s = ro.data;
    r.candidates += ro.candidates;
    for (const auto &line : ro.transcript) r.transcript.push_back("odd part: " + line);
  }
  if (two.size() > 0) {
    auto bs = blocks_of(two, 2);
    RealizationResult rt;
    if (bs.size() == 1) {
      rt = realize_two_homogeneous(two, EpsilonMode::Zero);
    } else {
      rt.epsilon_mode = EpsilonMode::Zero;
      Searcher search{two, rt};
      for (const auto &ts : two_shapes(bs, EpsilonMode::Zero))
        if (search.run(Shape{ts.name, ts.alpha1, ts.slots, {Rat(0)}})) break;
      finish(rt, two.to_string());
    }
    s = concat(s, rt.data);
    r.candidates += rt.candidates;
    for (const auto &line : rt.transcript) r.transcript.push_back("2-part: " + line);
  }
  IsoMethod m = IsoMethod::Invariants;
  r.data = s;
  r.verified = verify_realization(s, l, &m);
  r.verification_method = m;
  finish(r, l.to_string());
  return r;
}

RealizationResult realize_general(const LinkingPairing &l) {
  validate(l);
  reject(l, EpsilonMode::NonZero);
  LinkingPairing two = part_at(l, 2);
  if (two.size() == 0) return realize_odd_general(l);
  auto bs = blocks_of(two, 2);
  bool pure = two.order() == prune(l).order();
  if (pure && bs.size() == 1) return realize_two_homogeneous(l, EpsilonMode::NonZero);

  RealizationResult r;
  r.epsilon_mode = EpsilonMode::NonZero;
  Searcher search{l, r};
  // odd primes share the top 2-power cone point
  Int E = 1, Pi = 1;
  std::vector<Slot> odd;
  for (const auto &[p, part] : primary_decompose(l)) {
    if (p == 2) continue;
    E *= exponent_of(part);
    Pi *= p;
    auto ps = odd_slots(part, p);
    odd.insert(odd.end(), ps.begin(), ps.end());
  }
  for (const auto &ts : two_shapes(bs, EpsilonMode::NonZero)) {
    auto shapes = nonzero_shapes(ts, E, Pi, odd);
    if (std::any_of(shapes.begin(), shapes.end(), [&](const Shape &sh) { return search.run(sh); }))
      break;
  }
  finish(r, l.to_string());
  return r;
}

} // namespace s4e
