#include "s4e/obstructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace s4e {

// ---------------------------------------------------------------------------
// descriptions

void TorusBundle::validate() const {
  if (a * d - b * c != 1)
    throw std::invalid_argument("monodromy must have determinant 1: " + to_string());
}

std::string TorusBundle::to_string() const {
  std::ostringstream os;
  os << "(" << a << "," << b << ";" << c << "," << d << ")";
  return os.str();
}

void LensSum::validate() const {
  for (const auto &s : summands) {
    if (s.p < 2) throw std::invalid_argument("lens space needs p >= 2");
    if (gcd(s.p, s.q) != 1) throw std::invalid_argument("lens space needs gcd(p,q) = 1");
    if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("lens sign must be +-1");
  }
}

std::string LensSum::to_string() const {
  if (summands.empty()) return "S3";
  std::ostringstream os;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) os << " # ";
    if (summands[i].sign < 0) os << "-";
    os << "L(" << summands[i].p << "," << summands[i].q << ")";
  }
  return os.str();
}

std::string SphereBundle::to_string() const {
  std::ostringstream os;
  os << "bundle(" << (base >= 0 ? "g=" : "c=") << (base >= 0 ? base : -base)
     << ", e=" << e << ")";
  return os.str();
}

std::string describe(const ManifoldDescription &m) {
  return std::visit(
      [](const auto &x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GluingMatrix>)
          return "union" + x.to_string();
        else if constexpr (std::is_same_v<T, TorusBundle>)
          return "torus-bundle" + x.to_string();
        else
          return x.to_string();
      },
      m);
}

std::string to_string(Status s) {
  switch (s) {
  case Status::Embeds: return "Embeds";
  case Status::DoesNotEmbed: return "DoesNotEmbed";
  default: return "Unknown";
  }
}

std::string to_string(Category c) {
  return c == Category::LocallyFlat ? "LocallyFlat" : "Smooth";
}

std::string to_string(CriterionKind k) {
  return k == CriterionKind::Necessary ? "necessary" : "sufficient";
}

std::string to_string(Outcome o) {
  switch (o) {
  case Outcome::Passed: return "passed";
  case Outcome::Failed: return "failed";
  default: return "skipped";
  }
}

// ---------------------------------------------------------------------------
// verdict assembly

namespace {

CriterionResult necessary(std::string id, std::string citation, Category scope,
                          bool ok, std::string detail = {}) {
  return {std::move(id), std::move(citation), CriterionKind::Necessary, scope,
          ok ? Outcome::Passed : Outcome::Failed, std::move(detail)};
}

CriterionResult sufficient(std::string id, std::string citation, Category scope,
                           bool applies, std::string detail = {}) {
  return {std::move(id), std::move(citation), CriterionKind::Sufficient, scope,
          applies ? Outcome::Passed : Outcome::Skipped, std::move(detail)};
}

CriterionResult skipped(std::string id, std::string citation, CriterionKind kind,
                        Category scope, std::string why) {
  return {std::move(id), std::move(citation), kind, scope, Outcome::Skipped,
          std::move(why)};
}

bool binds(const CriterionResult &r, Category asked) {
  if (r.kind == CriterionKind::Necessary)
    return r.outcome == Outcome::Failed &&
           (r.scope == Category::LocallyFlat || asked == Category::Smooth);
  return r.outcome == Outcome::Passed &&
         (r.scope == Category::Smooth || asked == Category::LocallyFlat);
}

} // namespace

EmbeddingVerdict assemble_verdict(std::vector<CriterionResult> reasons,
                                  Category category) {
  std::stable_sort(reasons.begin(), reasons.end(),
                   [](const auto &x, const auto &y) { return x.id < y.id; });
  bool no = false, yes = false;
  for (const auto &r : reasons) {
    if (!binds(r, category)) continue;
    (r.kind == CriterionKind::Necessary ? no : yes) = true;
  }
  if (no && yes) {
    std::string msg = "contradictory criteria:";
    for (const auto &r : reasons)
      if (binds(r, category)) msg += " " + r.id;
    throw std::logic_error(msg);
  }
  EmbeddingVerdict v;
  v.category = category;
  v.status = no ? Status::DoesNotEmbed : yes ? Status::Embeds : Status::Unknown;
  v.reasons = std::move(reasons);
  return v;
}

// ---------------------------------------------------------------------------
// strict form and partitions

StrictForm strict_form(const SeifertData &s) {
  SeifertData n = normalize(s);
  StrictForm f;
  f.base = n.base;
  for (const auto &p : n.pairs) {
    if (p.alpha == 1)
      f.e -= p.beta;
    else
      f.pairs.push_back(p);
  }
  f.eps = euler_number(s);
  return f;
}

namespace {

Int alpha_lcm(const std::vector<SeifertPair> &ps) {
  Int l = 1;
  for (const auto &p : ps) l = lcm(l, p.alpha);
  return l;
}

// All partitions into at most `max_classes` classes with class sums <= 1;
// `visit` gets canonical labels and sums and returns false to stop.
void for_each_bounded_partition(
    const std::vector<SeifertPair> &ps, std::size_t max_classes,
    const std::function<bool(const std::vector<int> &, const std::vector<Rat> &)> &visit) {
  std::vector<Rat> w;
  for (const auto &p : ps) w.push_back(make_rat(p.beta, p.alpha));
  std::vector<int> label(ps.size());
  std::vector<Rat> sums;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == ps.size()) {
      if (!visit(label, sums)) stop = true;
      return;
    }
    for (std::size_t c = 0; c <= sums.size() && !stop; ++c) {
      if (c == sums.size()) {
        if (sums.size() == max_classes) break;
        sums.push_back(w[i]);
        label[i] = static_cast<int>(c);
        rec(i + 1);
        sums.pop_back();
      } else if (sums[c] + w[i] <= 1) {
        sums[c] += w[i];
        label[i] = static_cast<int>(c);
        rec(i + 1);
        sums[c] -= w[i];
      }
    }
  };
  rec(0);
}

std::size_t capped_classes(const Int &e, std::size_t k) {
  if (e <= 0) return 0;
  return e >= Int(static_cast<long>(k)) ? k : static_cast<std::size_t>(e.get_ui());
}

} // namespace

std::vector<std::vector<int>>
deficit_partitions(const std::vector<SeifertPair> &strict, const Int &e,
                   std::size_t limit) {
  std::vector<std::vector<int>> out;
  if (e <= 0 || e > Int(static_cast<long>(strict.size()))) return out;
  std::size_t n = static_cast<std::size_t>(e.get_ui());
  Rat deficit_sum = 1 - make_rat(1, alpha_lcm(strict));
  for_each_bounded_partition(strict, n, [&](const auto &label, const auto &sums) {
    if (sums.size() != n) return true;
    int deficit = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (sums[c] == 1) continue;
      if (sums[c] != deficit_sum || deficit >= 0) return true;
      deficit = static_cast<int>(c);
    }
    if (deficit < 0) return true;
    // relabel: deficit class first, the rest in order of first appearance
    std::vector<int> relabel(n, -1);
    relabel[deficit] = 0;
    int next = 1;
    std::vector<int> p(label.size());
    for (std::size_t i = 0; i < label.size(); ++i) {
      if (relabel[label[i]] < 0) relabel[label[i]] = next++;
      p[i] = relabel[label[i]];
    }
    out.push_back(std::move(p));
    return out.size() < limit;
  });
  return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
partition_witness(const std::vector<SeifertPair> &strict, const Int &e) {
  auto parts = deficit_partitions(strict, e);
  if (parts.empty()) return std::nullopt;
  std::size_t n = static_cast<std::size_t>(e.get_ui());
  std::size_t k = strict.size();
  auto separated = [&](const std::vector<int> &p, const std::vector<int> &q) {
    for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
      // is the union of the q-classes in `mask` a union of p-classes?
      std::vector<int> state(n, -1); // per p-class: 1 inside, 0 outside
      bool is_union = true;
      for (std::size_t i = 0; i < k && is_union; ++i) {
        int in = (mask >> q[i]) & 1ul;
        if (state[p[i]] < 0)
          state[p[i]] = in;
        else if (state[p[i]] != in)
          is_union = false;
      }
      if (is_union) return false;
    }
    return true;
  };
  for (const auto &p : parts)
    for (const auto &q : parts)
      if (separated(p, q)) return std::make_pair(p, q);
  return std::nullopt;
}

PartitionLemmaReport partition_lemma_check(const std::vector<SeifertPair> &strict,
                                           const Int &e) {
  PartitionLemmaReport rep;
  Int l = alpha_lcm(strict);
  Rat total = 0;
  for (const auto &p : strict) total += make_rat(p.beta, p.alpha);
  rep.eps_is_inverse_lcm = Rat(e) - total == make_rat(1, l);
  std::size_t cap = capped_classes(e, strict.size());
  for_each_bounded_partition(strict, cap, [&](const auto &, const auto &sums) {
    ++rep.partitions;
    std::size_t short_classes = 0;
    Rat deficit = 0;
    for (const auto &s : sums)
      if (s < 1) {
        ++short_classes;
        deficit = 1 - s;
      }
    if (Int(static_cast<long>(sums.size())) != e || short_classes != 1 ||
        deficit != make_rat(1, l))
      ++rep.violations;
    return true;
  });
  return rep;
}

// ---------------------------------------------------------------------------
// shapes for k = 2e - 1 and k = 2e

std::string to_string(ImShape s) {
  switch (s) {
  case ImShape::OddMatch: return "odd-match";
  case ImShape::OddMismatch: return "odd-mismatch";
  case ImShape::EvenShape1: return "even-shape-1";
  case ImShape::EvenShape2: return "even-shape-2";
  case ImShape::EvenNone: return "even-none";
  default: return "not-applicable";
  }
}

std::string ImShapeResult::to_string() const {
  std::ostringstream os;
  os << s4e::to_string(shape);
  if (shape == ImShape::OddMatch) os << " alpha=" << alpha;
  if (shape == ImShape::EvenShape1 || shape == ImShape::EvenShape2)
    os << " p=" << p << " q=" << q << " r=" << r << " s=" << s << " x=" << x
       << " y=" << y << " z=" << z;
  return os.str();
}

namespace {

using PairKey = std::pair<Int, Int>;

std::vector<PairKey> sorted_keys(const std::vector<SeifertPair> &ps) {
  std::vector<PairKey> v;
  for (const auto &p : ps) v.emplace_back(p.alpha, p.beta);
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

ImShapeResult im_shape_check(const std::vector<SeifertPair> &strict, const Int &e) {
  ImShapeResult res;
  long k = static_cast<long>(strict.size());
  if (e <= 0 || k == 0) return res;
  if (Int(k) == 2 * e - 1) {
    Int a = strict[0].alpha;
    long top = 0, one = 0;
    bool same = true;
    for (const auto &p : strict) {
      if (p.alpha != a) same = false;
      if (p.beta == a - 1) ++top;
      else if (p.beta == 1) ++one;
    }
    bool ok = same && (a == 2 ? true : Int(top) == e && Int(one) == e - 1);
    res.shape = ok ? ImShape::OddMatch : ImShape::OddMismatch;
    if (ok) res.alpha = a;
    return res;
  }
  if (Int(k) != 2 * e) return res;
  long n = e.get_si() + 1; // x + y + z
  auto target = sorted_keys(strict);
  std::map<Int, std::vector<Int>> betas;
  for (const auto &p : strict) betas[p.alpha].push_back(p.beta);
  std::optional<ImShapeResult> best;
  for (const auto &[p, qs] : betas)
    for (const auto &q : qs)
      for (const auto &[r, ss] : betas)
        for (const auto &s : ss) {
          if (p * s + q * r + 1 != p * r) continue;
          for (long x = 1; x < n; ++x)
            for (long y = 1; x + y <= n; ++y) {
              long z = n - x - y;
              std::vector<SeifertPair> cand;
              for (long i = 0; i < x; ++i) cand.push_back({p, q});
              for (long i = 0; i < y; ++i) cand.push_back({r, s});
              for (long i = 0; i + 1 < x; ++i) cand.push_back({p, p - q});
              for (long i = 0; i + 1 < y; ++i) cand.push_back({r, r - s});
              for (long i = 0; i < z; ++i) {
                cand.push_back({p * r, 1});
                cand.push_back({p * r, p * r - 1});
              }
              if (sorted_keys(cand) != target) continue;
              ImShapeResult w;
              w.shape = z == 0 ? ImShape::EvenShape1 : ImShape::EvenShape2;
              w.p = p, w.q = q, w.r = r, w.s = s;
              w.x = static_cast<int>(x), w.y = static_cast<int>(y), w.z = static_cast<int>(z);
              if (w.shape == ImShape::EvenShape1) return w;
              if (!best) best = w;
            }
        }
  if (best) return *best;
  res.shape = ImShape::EvenNone;
  return res;
}

// ---------------------------------------------------------------------------
// torus bundles

namespace {

using M2 = std::array<Int, 4>; // a b c d

M2 mul(const M2 &x, const M2 &y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

M2 inverse_unimodular(const M2 &x) {
  Int det = x[0] * x[3] - x[1] * x[2];
  return {x[3] * det, -x[1] * det, -x[2] * det, x[0] * det};
}

} // namespace

TorusNormalForm torus_normal_form(const TorusBundle &t) {
  t.validate();
  TorusNormalForm nf;
  Int tr = t.a + t.d;
  M2 A{t.a, t.b, t.c, t.d};
  if (tr != 2 && tr != -2) return nf;
  int sgn = tr > 0 ? 1 : -1;
  // N = A - sgn I is nilpotent of rank <= 1
  Int n0 = t.a - sgn, n1 = t.b, n2 = t.c, n3 = t.d - sgn;
  Int g = gcd(gcd(n0, n1), gcd(n2, n3));
  if (g == 0) {
    nf.kind = 0;
    nf.b = 0;
    return nf;
  }
  // primitive kernel vector v of N, completed to a basis (v, w)
  Int v0, v1;
  if (n0 != 0 || n1 != 0) {
    Int h = gcd(n0, n1);
    v0 = -n1 / h;
    v1 = n0 / h;
  } else {
    Int h = gcd(n2, n3);
    v0 = -n3 / h;
    v1 = n2 / h;
  }
  auto [gg, x, y] = ext_gcd(v0, v1); // x v0 + y v1 = 1
  (void)gg;
  M2 P{v0, -y, v1, x}; // det = v0 x + y v1 = 1
  M2 B = mul(inverse_unimodular(P), mul(A, P));
  nf.kind = sgn;
  nf.b = B[1];
  nf.conjugator = P;
  if (B[2] != 0 || B[0] != sgn || B[3] != sgn)
    throw std::logic_error("torus normal form failed for " + t.to_string());
  return nf;
}

FiniteAbelianGroup torus_bundle_homology(const TorusBundle &t) {
  t.validate();
  IntMatrix m(2, 2);
  m(0, 0) = t.a - 1;
  m(0, 1) = t.c;
  m(1, 0) = t.b;
  m(1, 1) = t.d - 1;
  auto g = cokernel(m);
  return FiniteAbelianGroup::from_orders(g.divisors(), g.free_rank() + 1);
}

// ---------------------------------------------------------------------------
// lens sums

namespace {

// orientation-preserving class of sign * L(p, q): q reduced, and q ~ q^{-1}
Int lens_class(const LensSummand &s) {
  Int q = mod(s.sign * s.q, s.p);
  Int qi = inv_mod(q, s.p);
  return std::min(q, qi);
}

} // namespace

bool lens_sum_pairs_as_double(const LensSum &l) {
  l.validate();
  // multiset of classes; L pairs with the class of -L
  std::map<std::pair<Int, Int>, long> count;
  for (const auto &s : l.summands) ++count[{s.p, lens_class(s)}];
  for (const auto &[key, c] : count) {
    LensSummand neg{key.first, key.second, -1};
    std::pair<Int, Int> partner{key.first, lens_class(neg)};
    if (partner == key) {
      if (c % 2) return false;
    } else {
      auto it = count.find(partner);
      if (it == count.end() || it->second != c) return false;
    }
  }
  return true;
}

LinkingPairing lens_sum_pairing(const LensSum &l) {
  l.validate();
  LinkingPairing out;
  for (const auto &s : l.summands)
    out = orthogonal_sum(out, pairing_lw(make_rat(s.sign * s.q, s.p)));
  return out;
}

// ---------------------------------------------------------------------------
// criteria

namespace {

const char *kDirectDouble = "torsion of H_1 is a direct double (Alexander duality)";
const char *kHyperbolic = "torsion linking pairing is hyperbolic (Kawauchi-Kojima)";
const char *kSelfLinking =
    "elements of order 2^k have 2^(k-1) l(x,x) = 0 (Kawauchi-Kojima)";

std::vector<int> chi_values(int beta) {
  std::vector<int> v;
  for (int b1 = beta; b1 >= 0; --b1) {
    int chi = 1 + beta - 2 * b1;
    if (chi <= 1) v.push_back(chi);
  }
  return v;
}

CriterionResult self_linking(const LinkingPairing &l) {
  const char *id = "self-linking-2-power";
  LinkingPairing two;
  for (auto &[p, part] : primary_decompose(l))
    if (p == 2) two = part;
  Int total = two.order();
  if (total > (1 << 14)) {
    bool ok = is_even_2primary(two);
    return necessary(id, kSelfLinking, Category::LocallyFlat, ok,
                     "checked on a basis (2-part too large to enumerate)");
  }
  std::size_t n = two.size();
  std::vector<Int> x(n, 0);
  while (true) {
    Int ord = 1;
    for (std::size_t i = 0; i < n; ++i) ord = lcm(ord, two.orders[i] / gcd(x[i], two.orders[i]));
    if (ord > 1) {
      ResidueQZ v = two.value(x, x) * (ord / 2);
      if (!v.is_zero()) {
        std::ostringstream os;
        os << "fails on an element of order " << ord;
        return necessary(id, kSelfLinking, Category::LocallyFlat, false, os.str());
      }
    }
    std::size_t i = 0;
    while (i < n && ++x[i] == two.orders[i]) x[i++] = 0;
    if (i == n) break;
  }
  std::ostringstream os;
  os << "all " << total << " elements of the 2-part";
  return necessary(id, kSelfLinking, Category::LocallyFlat, true, os.str());
}

void add_torsion_criteria(std::vector<CriterionResult> &out, const FiniteAbelianGroup &h,
                          const std::function<LinkingPairing()> &pairing) {
  out.push_back(necessary("torsion-direct-double", kDirectDouble, Category::LocallyFlat,
                          is_direct_double(h), "H_1 = " + h.to_string()));
  {
    std::ostringstream os;
    os << "beta_1 = " << h.free_rank() << ", chi(X) in {";
    auto v = chi_values(h.free_rank());
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    out.push_back(necessary("euler-characteristic",
                            "complementary regions have chi(X) + chi(Y) = 2 and "
                            "1 - beta <= chi(X) <= 1 + beta",
                            Category::LocallyFlat, true, os.str()));
  }
  if (!pairing) {
    out.push_back(skipped("linking-hyperbolic", kHyperbolic, CriterionKind::Necessary,
                          Category::LocallyFlat, "no pairing model for this description"));
    out.push_back(skipped("self-linking-2-power", kSelfLinking, CriterionKind::Necessary,
                          Category::LocallyFlat, "no pairing model for this description"));
    return;
  }
  LinkingPairing l;
  try {
    l = pairing();
  } catch (const Unsupported &err) {
    out.push_back(skipped("linking-hyperbolic", kHyperbolic, CriterionKind::Necessary,
                          Category::LocallyFlat, err.what()));
    out.push_back(skipped("self-linking-2-power", kSelfLinking, CriterionKind::Necessary,
                          Category::LocallyFlat, err.what()));
    return;
  }
  out.push_back(necessary("linking-hyperbolic", kHyperbolic, Category::LocallyFlat,
                          is_hyperbolic(l), "pairing on " + l.group().to_string()));
  out.push_back(self_linking(l));
}

bool all_alpha_odd(const std::vector<SeifertPair> &ps) {
  return std::all_of(ps.begin(), ps.end(),
                     [](const auto &p) { return p.alpha % 2 != 0; });
}

// ----- bundles

bool bundle_rule(int base, const Int &e) {
  if (base >= 0) return e == 0 || e == 1 || e == -1;
  Int c = -base;
  return e >= -2 * c && e <= 2 * c && mod(e - 2 * c, 4) == 0;
}

const char *kBundleRule =
    "circle bundle over an orientable surface embeds iff e in {0,+-1}; over c "
    "crosscaps iff e in {-2c, 4-2c, ..., 2c} (boundaries of regular "
    "neighbourhoods of surfaces, Massey)";

void bundle_criteria(std::vector<CriterionResult> &out, int base, const Int &e,
                     bool battery) {
  SeifertData s;
  s.base = base;
  if (e != 0) s.pairs.push_back({1, -e});
  if (battery) {
    auto h = first_homology(s);
    add_torsion_criteria(out, h, [&] {
      return base >= 0 ? torsion_pairing(s) : pairing_nonorientable(s);
    });
  }
  bool ok = bundle_rule(base, e);
  out.push_back(necessary("bundle-euler-range", kBundleRule, Category::LocallyFlat, ok));
  out.push_back(sufficient("bundle-embeds", kBundleRule, Category::Smooth, ok));
}

// ----- unions of mapping cylinders and torus bundles

const char *kRestrained =
    "a torus bundle embeds iff its monodromy is conjugate to I, -I, (1,1;0,1) "
    "or (-1,4;0,-1) (classification of embeddable solvable 3-manifolds)";
const char *kUnionList =
    "a union N u_phi N with c != 0 embeds iff it is M_{m,n} with (m,n) in "
    "{(2,0),(2,2),(2,-2),(2,-4)} up to swap and sign";

void torus_criteria(std::vector<CriterionResult> &out, const TorusBundle &t, bool battery) {
  if (battery)
    add_torsion_criteria(out, torus_bundle_homology(t), nullptr);
  auto nf = torus_normal_form(t);
  bool ok = false;
  std::ostringstream os;
  switch (nf.kind) {
  case 0:
    ok = true;
    os << (t.a == 1 ? "identity" : "minus identity");
    break;
  case 1:
    ok = abs(nf.b) == 1;
    os << "conjugate to (1," << nf.b << ";0,1)";
    break;
  case -1:
    ok = abs(nf.b) == 4;
    os << "conjugate to (-1," << nf.b << ";0,-1)";
    break;
  default:
    os << "trace " << (t.a + t.d) << " (not parabolic)";
  }
  if (nf.kind == 1 || nf.kind == -1)
    os << " via P=(" << nf.conjugator[0] << "," << nf.conjugator[1] << ";"
       << nf.conjugator[2] << "," << nf.conjugator[3] << ")";
  out.push_back(necessary("restrained-classification", kRestrained, Category::LocallyFlat,
                          ok, os.str()));
  out.push_back(sufficient("restrained-list", kRestrained, Category::Smooth, ok, os.str()));
}

void union_criteria(std::vector<CriterionResult> &out, const GluingMatrix &phi0,
                    bool battery) {
  phi0.validate();
  GluingMatrix phi = phi0;
  if (phi.c < 0) phi = {-phi.a, -phi.b, -phi.c, -phi.d};
  if (phi.c == 0) {
    // circle bundle over the Klein bottle with Euler number b
    if (phi.a < 0) phi = {-phi.a, -phi.b, -phi.c, -phi.d};
    TorusBundle t{-1, phi.b, 0, -1};
    out.push_back(necessary("union-hyperbolic",
                            "c = 0: linking pairing hyperbolic iff 4 | b",
                            Category::LocallyFlat, union_pairing_hyperbolic(phi0)));
    torus_criteria(out, t, battery);
    return;
  }
  if (battery) {
    auto h = union_homology(phi0);
    add_torsion_criteria(out, h, nullptr);
  }
  bool hyp = union_pairing_hyperbolic(phi0);
  out.push_back(necessary("union-hyperbolic",
                          "c != 0: linking pairing hyperbolic iff b odd, c = +-1, a "
                          "and d even and not both divisible by 4",
                          Category::LocallyFlat, hyp));
  if (!hyp) return;
  // M_{m,n} with m = 2 mod 4 after a swap
  Int m = phi.a, n = phi.d;
  if (mod(m, 4) != 2) std::swap(m, n);
  bool m_ok = m == 2 || m == -2;
  out.push_back(necessary("union-m-mod-4",
                          "M_{m,n} with m = 2 mod 4 embeds only if m = +-2 "
                          "(Z/2-index theorem on a double cover)",
                          Category::LocallyFlat, m_ok));
  bool n_ok = true;
  std::string detail;
  if (mod(n, 4) == 2) {
    n_ok = n == 2 || n == -2;
    detail = "n = 2 mod 4 as well";
  } else {
    Int sum = m + n;
    n_ok = sum == 2 || sum == -2;
    detail = "n = 0 mod 4 forces m + n = +-2";
  }
  out.push_back(necessary("union-n-constraint",
                          "M_{m,n} with n = 0 mod 4 embeds only if m + n = +-2; with "
                          "n = 2 mod 4 only if n = +-2",
                          Category::LocallyFlat, n_ok, detail));
  std::ostringstream os;
  os << "M_{" << phi.a << "," << phi.d << "}";
  out.push_back(sufficient("union-list", kUnionList, Category::Smooth, m_ok && n_ok, os.str()));
}

// ----- Seifert data

const char *kSkewOdd =
    "skew-symmetric data with odd cone orders embeds smoothly (fibre sums of "
    "twist-spun lens space fibres, genus stabilization)";

bool is_p22(const StrictForm &f) {
  return f.base == -1 && f.pairs.size() == 2 && f.pairs[0] == SeifertPair{2, 1} &&
         f.pairs[1] == SeifertPair{2, 1};
}

void seifert_orientable_criteria(std::vector<CriterionResult> &out, const SeifertData &s,
                                 bool battery) {
  StrictForm f = strict_form(s);
  if (f.pairs.empty()) {
    bundle_criteria(out, f.base, f.eps.get_num(), battery);
    return;
  }
  auto h = first_homology(s);
  if (battery) add_torsion_criteria(out, h, [&] { return torsion_pairing(s); });

  auto special = classify_special(s);
  out.push_back(sufficient("homology-sphere",
                           "every integral homology 3-sphere embeds locally flatly "
                           "(Freedman)",
                           Category::LocallyFlat, special.homology_sphere));

  bool skew = is_skew_symmetric(s);
  bool odd = all_alpha_odd(f.pairs);
  if (f.eps == 0) {
    out.push_back(necessary("donald-skew-symmetric",
                            "eps = 0 over an orientable base: a smooth embedding "
                            "forces skew-symmetric data (Donald)",
                            Category::Smooth, skew));
    if (f.base == 0 && odd)
      out.push_back(necessary("skew-symmetry-decisive",
                              "g = 0, eps = 0, odd cone orders: embeds iff the data is "
                              "skew-symmetric (neutral Blanchfield pairing)",
                              Category::LocallyFlat, skew));
    long even = std::count_if(f.pairs.begin(), f.pairs.end(),
                              [](const auto &p) { return p.alpha % 2 == 0; });
    out.push_back(sufficient("skew-symmetric-construction", kSkewOdd, Category::Smooth,
                             skew && odd));
    out.push_back(sufficient("skew-one-even-pair",
                             "skew-symmetric data with one pair of even cone orders "
                             "embeds smoothly (Issa-McCoy)",
                             Category::Smooth, skew && even == 2));
    return;
  }

  // eps != 0: orient so that eps > 0
  SeifertData pos = f.eps > 0 ? s : reverse_orientation(s);
  StrictForm g = strict_form(pos);
  Int e = g.e;
  long k = static_cast<long>(g.pairs.size());
  std::ostringstream ke;
  ke << "k = " << k << ", e = " << e << (f.eps > 0 ? "" : " (reversed orientation)");

  if (k > 1)
    out.push_back(necessary("im-cone-bound",
                            "eps > 0 strict data with k > 1 cone points: e <= k - 1 "
                            "(direct-double torsion)",
                            Category::LocallyFlat, e <= k - 1, ke.str()));
  bool dd = is_direct_double(h);
  if (!dd) {
    out.push_back(skipped("im-partition-lemma",
                          "direct-double torsion: class deficits of partitions",
                          CriterionKind::Necessary, Category::LocallyFlat,
                          "torsion is not a direct double"));
  } else if (static_cast<std::size_t>(k) > kPartitionCap) {
    out.push_back(skipped("im-partition-lemma",
                          "direct-double torsion: class deficits of partitions",
                          CriterionKind::Necessary, Category::LocallyFlat,
                          "too many cone points to enumerate"));
  } else {
    auto rep = partition_lemma_check(g.pairs, e);
    std::ostringstream os;
    os << rep.partitions << " partitions, " << rep.violations << " violations";
    out.push_back(necessary("im-partition-lemma",
                            "direct-double torsion: eps = 1/lcm(alpha), and every "
                            "partition into n <= e classes of sum <= 1 has n = e with a "
                            "single deficit class of deficit 1/lcm(alpha)",
                            Category::LocallyFlat,
                            rep.violations == 0 && rep.eps_is_inverse_lcm, os.str()));
  }

  out.push_back(necessary("im-2e-bound", "smooth embedding forces 2e <= k + 1 (Issa-McCoy)",
                          Category::Smooth, 2 * e <= k + 1, ke.str()));
  if (f.base == 0) {
    int b1 = h.free_rank() + h.p_rank(2);
    std::ostringstream os;
    os << "beta_1(M;F_2) = " << b1 << ", e = " << e;
    out.push_back(necessary("im-f2-betti",
                            "g = 0 smooth embedding forces beta_1(M;F_2) <= 2e (Issa-McCoy)",
                            Category::Smooth, Int(b1) <= 2 * e, os.str()));
  }
  if (static_cast<std::size_t>(k) > kPartitionCap) {
    out.push_back(skipped("im-partitionable",
                          "smooth embedding forces partitionable data (Issa-McCoy)",
                          CriterionKind::Necessary, Category::Smooth,
                          "too many cone points to enumerate"));
  } else {
    bool part = dd && partition_witness(g.pairs, e).has_value();
    out.push_back(necessary("im-partitionable",
                            "smooth embedding forces partitionable data (Issa-McCoy)",
                            Category::Smooth, part));
  }
  auto shape = im_shape_check(g.pairs, e);
  if (shape.shape == ImShape::OddMatch || shape.shape == ImShape::OddMismatch) {
    bool ok = shape.shape == ImShape::OddMatch;
    const char *cite = "k = 2e - 1: embeds smoothly iff S' = {e(a,a-1), (e-1)(a,1)} "
                       "(Issa-McCoy)";
    out.push_back(necessary("im-odd-shape", cite, Category::Smooth, ok, shape.to_string()));
    out.push_back(sufficient("im-odd-shape-embeds", cite, Category::Smooth, ok,
                             shape.to_string()));
  } else if (shape.shape != ImShape::NotApplicable) {
    const char *cite = "k = 2e: smooth embedding forces one of two shapes built from "
                       "ps + qr + 1 = pr; the first shape embeds (Issa-McCoy)";
    out.push_back(necessary("im-even-shape", cite, Category::Smooth,
                            shape.shape != ImShape::EvenNone, shape.to_string()));
    out.push_back(sufficient("im-even-shape-embeds", cite, Category::Smooth,
                             shape.shape == ImShape::EvenShape1, shape.to_string()));
  }
}

const char *kPairedOdd =
    "paired odd data over c crosscaps embeds iff -2c <= eps <= 2c and eps = 2c "
    "mod 4, and then smoothly";

void seifert_nonorientable_criteria(std::vector<CriterionResult> &out,
                                    const SeifertData &s, bool battery) {
  StrictForm f = strict_form(s);
  int c = s.crosscaps();
  if (f.pairs.empty()) {
    bundle_criteria(out, f.base, f.eps.get_num(), battery);
    return;
  }
  if (battery) {
    auto h = first_homology(s);
    add_torsion_criteria(out, h, [&] { return pairing_nonorientable(s); });
  }
  // 2-adic homogeneity / eta
  {
    int t = -1;
    bool same = true, all_odd = true;
    Int eta = 0;
    for (const auto &p : s.pairs) {
      eta += p.alpha * p.beta;
      int v = valuation(p.alpha, 2);
      if (v == 0) continue;
      all_odd = false;
      if (t < 0) t = v;
      if (v != t) same = false;
    }
    bool ok = same && (!all_odd || mod(eta - 2 * c, 4) == 0);
    std::ostringstream os;
    if (all_odd)
      os << "eta = " << eta << ", 2c = " << 2 * c;
    else
      os << "even cone orders " << (same ? "share" : "differ in") << " 2-adic valuation";
    out.push_back(necessary("nonorientable-2adic",
                            "hyperbolic pairing over a non-orientable base: even cone "
                            "orders share their 2-adic valuation, and with all orders "
                            "odd eta = sum alpha beta = 2c mod 4",
                            Category::LocallyFlat, ok, os.str()));
  }
  if (is_paired_odd(s)) {
    Int e = f.eps.get_num();
    bool ok = f.eps.get_den() == 1 && e >= -2 * c && e <= 2 * c && mod(e - 2 * c, 4) == 0;
    std::ostringstream os;
    os << "eps = " << f.eps << ", c = " << c;
    out.push_back(necessary("paired-odd-euler", kPairedOdd, Category::LocallyFlat, ok,
                            os.str()));
    out.push_back(sufficient("paired-odd-embeds", kPairedOdd, Category::Smooth, ok,
                             os.str()));
  }
  if (is_p22(f)) {
    // Seifert over P(2,2) with Euler number n is the union M_{0,n}
    auto sub = std::vector<CriterionResult>{};
    union_criteria(sub, gluing_mn(0, f.eps.get_num()), false);
    for (auto &r : sub) {
      r.detail = "as M_{0," + to_string(f.eps) + "}" + (r.detail.empty() ? "" : ": " + r.detail);
      out.push_back(std::move(r));
    }
  }
}

std::vector<CriterionResult> criteria(const ManifoldDescription &m, bool battery) {
  std::vector<CriterionResult> out;
  std::visit(
      [&](const auto &x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SeifertData>) {
          x.validate();
          if (x.orientable_base())
            seifert_orientable_criteria(out, x, battery);
          else
            seifert_nonorientable_criteria(out, x, battery);
        } else if constexpr (std::is_same_v<T, TorusBundle>) {
          torus_criteria(out, x, battery);
        } else if constexpr (std::is_same_v<T, GluingMatrix>) {
          union_criteria(out, x, battery);
        } else if constexpr (std::is_same_v<T, LensSum>) {
          x.validate();
          Int order = 1;
          std::vector<Int> orders;
          for (const auto &sm : x.summands) orders.push_back(sm.p);
          auto h = FiniteAbelianGroup::from_orders(orders);
          if (battery) add_torsion_criteria(out, h, [&] { return lens_sum_pairing(x); });
          bool odd = std::all_of(x.summands.begin(), x.summands.end(),
                                 [](const auto &sm) { return sm.p % 2 != 0; });
          bool pairs = lens_sum_pairs_as_double(x);
          const char *cite = "a sum of lens spaces embeds smoothly iff every p_i is odd "
                             "and the sum is N # -N (Donald)";
          out.push_back(necessary("donald-lens-sum", cite, Category::Smooth, odd && pairs,
                                  std::string(odd ? "" : "even p_i; ") +
                                      (pairs ? "pairs as N # -N" : "no N # -N pairing")));
          out.push_back(sufficient("lens-double",
                                   "L(p,q) # -L(p,q) with p odd embeds smoothly (punctured "
                                   "lens space as a twist-spin fibre)",
                                   Category::Smooth, odd && pairs));
          (void)order;
        } else {
          bundle_criteria(out, x.base, x.e, battery);
        }
      },
      m);
  return out;
}

} // namespace

bool is_paired_odd(const SeifertData &s) {
  if (s.orientable_base()) return false;
  StrictForm f = strict_form(s);
  std::map<std::pair<Int, Int>, long> count;
  for (const auto &p : f.pairs) {
    if (p.alpha % 2 == 0) return false;
    ++count[{p.alpha, p.beta}];
  }
  for (const auto &[key, c] : count) {
    auto it = count.find({key.first, key.first - key.second});
    if (it == count.end() || it->second != c) return false;
  }
  return true;
}

std::vector<CriterionResult> necessary_battery(const ManifoldDescription &m) {
  auto all = criteria(m, true);
  std::vector<CriterionResult> out;
  for (auto &r : all)
    if (r.kind == CriterionKind::Necessary) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto &x, const auto &y) { return x.id < y.id; });
  return out;
}

EmbeddingVerdict verdict(const ManifoldDescription &m, Category category) {
  return assemble_verdict(criteria(m, true), category);
}

EmbeddingVerdict verdict_seifert_orientable_e0(const SeifertData &s, Category category) {
  s.validate();
  StrictForm f = strict_form(s);
  if (f.base != 0 || f.eps != 0 || !all_alpha_odd(f.pairs))
    throw std::invalid_argument("needs g = 0, eps = 0 and odd cone orders");
  std::vector<CriterionResult> out;
  bool skew = is_skew_symmetric(s);
  out.push_back(necessary("skew-symmetry-decisive",
                          "g = 0, eps = 0, odd cone orders: embeds iff the data is "
                          "skew-symmetric (neutral Blanchfield pairing)",
                          Category::LocallyFlat, skew));
  out.push_back(sufficient("skew-symmetric-construction", kSkewOdd, Category::Smooth, skew));
  return assemble_verdict(std::move(out), category);
}

EmbeddingVerdict verdict_bundle(int base, const Int &e, Category category) {
  std::vector<CriterionResult> out;
  bundle_criteria(out, base, e, false);
  return assemble_verdict(std::move(out), category);
}

EmbeddingVerdict verdict_nonorientable_paired(const SeifertData &s, Category category) {
  s.validate();
  if (!is_paired_odd(s)) throw std::invalid_argument("needs paired odd data over a non-orientable base");
  std::vector<CriterionResult> out;
  seifert_nonorientable_criteria(out, s, false);
  return assemble_verdict(std::move(out), category);
}

EmbeddingVerdict verdict_union_phi(const GluingMatrix &phi, Category category) {
  std::vector<CriterionResult> out;
  union_criteria(out, phi, false);
  return assemble_verdict(std::move(out), category);
}

EmbeddingVerdict verdict_torus_bundle(const TorusBundle &a, Category category) {
  std::vector<CriterionResult> out;
  torus_criteria(out, a, false);
  return assemble_verdict(std::move(out), category);
}

EmbeddingVerdict verdict_lens_sum(const LensSum &l, Category category) {
  return assemble_verdict(criteria(l, true), category);
}

ComplementConstraints abelian_nilpotent_constraints(int beta) {
  if (beta < 0) throw std::invalid_argument("beta must be non-negative");
  ComplementConstraints c;
  c.beta = beta;
  c.euler_characteristics = chi_values(beta);
  c.abelian_possible = beta <= 4 || beta == 6;
  if (c.abelian_possible) {
    if (beta == 0)
      c.abelian_shape = "Z/n";
    else if (beta == 2)
      c.abelian_shape = "Z + Z/n";
    else
      c.abelian_shape = "Z^" + std::to_string((beta + 1) / 2);
  }
  c.nilpotent_possible = beta == 1 || beta == 3 || beta == 0 || beta == 2 || beta == 4 ||
                         beta == 6;
  switch (beta) {
  case 1: c.nilpotent_shape = "pi_X = Z, pi_Y = 1; X aspherical, chi(X) = 0"; break;
  case 3: c.nilpotent_shape = "pi_X = Z^2, pi_Y = Z; X aspherical, chi(X) = 0"; break;
  case 6: c.nilpotent_shape = "pi_X = pi_Y = Z^3; chi(X) = chi(Y) = 1"; break;
  case 0:
  case 2:
  case 4:
    c.nilpotent_shape = "chi(X) = chi(Y) = 1; pi_X, pi_Y 3-generated and homologically balanced";
    break;
  default: break;
  }
  return c;
}

} // namespace s4e
