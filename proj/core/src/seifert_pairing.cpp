#include "s4e/seifert_pairing.hpp"

#include <algorithm>

namespace s4e {

namespace {

ResidueQZ local(const Rat &v, const Int &p) { return ResidueQZ(v).p_component(p); }

Int p_power(const Int &p, int v) { return v <= 0 ? Int(1) : pow(p, v); }

} // namespace

void GeneratedPairing::check_compatible() const {
  const std::size_t n = relations.cols();
  if (values.size() != n) throw PairingError("generated pairing size mismatch");
  for (std::size_t r = 0; r < relations.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = 0;
      for (std::size_t i = 0; i < n; ++i) s += relations(r, i) * values[i][j];
      if (s.get_den() != 1)
        throw PairingError("relation " + std::to_string(r) +
                           " does not pair integrally with generator " +
                           std::to_string(j));
    }
}

LinkingPairing GeneratedPairing::reduce() const {
  check_compatible();
  const std::size_t n = relations.cols();
  auto snf = smith_normal_form(relations);
  LinkingPairing gen;
  gen.orders.assign(n, Int(0));
  gen.matrix.assign(n, std::vector<ResidueQZ>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gen.matrix[i][j] = ResidueQZ(values[i][j]);
  std::vector<std::vector<Int>> gens;
  std::vector<Int> orders;
  for (std::size_t i = 0; i < n; ++i) {
    Int d = i < snf.diagonal.size() ? snf.diagonal[i] : Int(0);
    if (d == 0 || d == 1) continue;
    std::vector<Int> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = snf.right_inverse(i, j);
    gens.push_back(std::move(v));
    orders.push_back(d);
  }
  LinkingPairing l = transport(gen, gens, orders);
  validate(l);
  return l;
}

LinkingPairing pairing_orientable(const SeifertData &s, const Int &p,
                                  std::optional<Int> bezout_n) {
  s.validate();
  if (!s.orientable_base()) throw SeifertError("orientable base required");
  std::vector<SeifertPair> ps = s.pairs;
  while (ps.size() < 2) ps.push_back({1, 0});
  std::stable_sort(ps.begin(), ps.end(), [&](const auto &x, const auto &y) {
    int vx = valuation(x.alpha, p), vy = valuation(y.alpha, p);
    if (vx != vy) return vx > vy;
    if (x.alpha != y.alpha) return x.alpha > y.alpha;
    return x.beta > y.beta;
  });
  const Rat eps = euler_number(s);
  const Int &a1 = ps[0].alpha, &a2 = ps[1].alpha, &b2 = ps[1].beta;
  Int n;
  if (bezout_n) {
    n = *bezout_n;
    if (mod(1 - n * b2, a2) != 0) throw SeifertError("not a Bezout coefficient");
  } else {
    n = a2 == 1 ? Int(0) : mod(inv_mod(b2, a2), a2);
  }

  struct Gen {
    int kind; // 0 = q'_i, 1 = s
    std::size_t i;
    Int order;
  };
  std::vector<Gen> gens;
  for (std::size_t i = 2; i < ps.size(); ++i) {
    Int o = p_power(p, valuation(ps[i].alpha, p));
    if (o != 1) gens.push_back({0, i, o});
  }
  if (eps != 0) {
    Rat so = a1 * a2 * eps;
    int v = valuation(so, p);
    if (v < 0)
      throw Unsupported("order of s is not p-integral for " + s.to_string());
    Int o = p_power(p, v);
    if (o != 1) gens.push_back({1, 0, o});
  }

  auto value = [&](const Gen &x, const Gen &y) -> Rat {
    if (x.kind == 1 && y.kind == 1)
      return -(a1 + n * a1 * a2 * eps) / (a1 * a2 * a2 * eps);
    if (x.kind == 1 || y.kind == 1) {
      const auto &q = ps[x.kind == 0 ? x.i : y.i];
      return make_rat(q.beta, q.alpha);
    }
    const auto &qi = ps[x.i], &qj = ps[y.i];
    if (x.i == y.i)
      return Rat(-b2 * qi.beta * (qi.alpha * b2 + a2 * qi.beta)) /
             Rat(qi.alpha * qi.alpha);
    return Rat(-b2 * qi.beta * qj.beta * a2) / Rat(qi.alpha * qj.alpha);
  };

  LinkingPairing l;
  for (const auto &g : gens) {
    l.orders.push_back(g.order);
    std::vector<ResidueQZ> row;
    for (const auto &h : gens) row.push_back(local(value(g, h), p));
    l.matrix.push_back(std::move(row));
  }
  try {
    validate(l);
  } catch (const PairingError &e) {
    throw Unsupported(std::string("generator formulas fail for ") +
                      s.to_string() + " at p=" + p.get_str() + ": " + e.what());
  }
  return l;
}

GeneratedPairing nonorientable_generated(const SeifertData &s) {
  s.validate();
  if (s.orientable_base()) throw SeifertError("non-orientable base required");
  const std::size_t r = s.pairs.size();
  const std::size_t h = r, a = r + 1, n = r + 2;
  const Rat eps = euler_number(s);
  GeneratedPairing g;
  g.values.assign(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < r; ++i) {
    const auto &[al, be] = s.pairs[i];
    g.values[i][i] = make_rat(be, al);
    g.values[a][i] = g.values[i][a] = -make_rat(be, 2 * al);
  }
  g.values[a][h] = g.values[h][a] = make_rat(1, 2);
  g.values[a][a] = (2 * s.crosscaps() - eps) / 4;

  g.relations = IntMatrix(r + 2, n);
  for (std::size_t i = 0; i < r; ++i) {
    g.relations(i, i) = s.pairs[i].alpha;
    g.relations(i, h) = s.pairs[i].beta;
    g.relations(r + 1, i) = 1;
  }
  g.relations(r, h) = 2;
  g.relations(r + 1, a) = 2;
  return g;
}

LinkingPairing pairing_nonorientable(const SeifertData &s) {
  return nonorientable_generated(s).reduce();
}

LinkingPairing torsion_pairing(const SeifertData &s) {
  if (!s.orientable_base()) return pairing_nonorientable(s);
  auto tors = first_homology(s).torsion_order();
  LinkingPairing l;
  for (const auto &p : prime_divisors(tors))
    l = orthogonal_sum(l, pairing_orientable(s, p));
  return l;
}

void GluingMatrix::validate() const {
  if (a * d - b * c != 1)
    throw std::invalid_argument("gluing matrix must have determinant 1, got " +
                                Int(a * d - b * c).get_str());
}

std::string GluingMatrix::to_string() const {
  return "[" + a.get_str() + "," + b.get_str() + ";" + c.get_str() + "," +
         d.get_str() + "]";
}

GluingMatrix gluing_mn(const Int &m, const Int &n) {
  return GluingMatrix{m, m * n - 1, 1, n};
}

FiniteAbelianGroup union_homology(const GluingMatrix &phi) {
  phi.validate();
  // generators x1, y1, x2, y2
  IntMatrix r(4, 4);
  r(0, 1) = 2;
  r(1, 3) = 2;
  r(2, 0) = 2 * phi.a;
  r(2, 1) = phi.b;
  r(2, 2) = -2;
  r(3, 0) = 2 * phi.c;
  r(3, 1) = phi.d;
  r(3, 3) = -1;
  return cokernel(r);
}

bool union_pairing_hyperbolic(const GluingMatrix &phi) {
  phi.validate();
  if (phi.c == 0) return mod(phi.b, 4) == 0;
  // -I on the boundary torus extends over the mapping cylinder, so phi and
  // -phi give the same union; normalize to c > 0.
  GluingMatrix f = phi.c < 0 ? GluingMatrix{-phi.a, -phi.b, -phi.c, -phi.d} : phi;
  if (f.c != 1 || mod(f.b, 2) == 0) return false;
  if (mod(f.a, 2) != 0 || mod(f.d, 2) != 0) return false;
  return !(mod(f.a, 4) == 0 && mod(f.d, 4) == 0);
}

} // namespace s4e
