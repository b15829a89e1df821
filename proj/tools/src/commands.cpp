#include "commands.hpp"

#include "s4e/realization.hpp"

#include <sstream>

namespace s4e::cli {

using json = nlohmann::ordered_json;

json json_int(const Int &n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

json json_group(const FiniteAbelianGroup &g) {
  json d = json::array();
  for (const auto &x : g.divisors()) d.push_back(json_int(x));
  return json{{"free_rank", g.free_rank()}, {"divisors", d}};
}

int combine_exit(int a, int b) {
  auto rank = [](int c) { return c == kInputError ? 3 : c == kSelftestFailed ? 2 : c == kUnknownDueToBound ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

std::string render(const Report &r, bool as_json) {
  if (as_json) return r.json.dump();
  return r.text;
}

namespace {

SeifertData bundle_data(const SphereBundle &b) {
  SeifertData s;
  s.base = b.base;
  if (b.e != 0) s.pairs.push_back({1, -b.e});
  return s;
}

std::string category_name(Category c) {
  return c == Category::LocallyFlat ? "topological" : "smooth";
}

std::string parity_name(Parity p) {
  switch (p) {
  case Parity::Even: return "even";
  case Parity::Odd: return "odd";
  default: return "n/a";
  }
}

std::string two_adic_name(TwoAdicClass c) {
  switch (c) {
  case TwoAdicClass::Hyperbolic: return "hyperbolic";
  case TwoAdicClass::EvenNonHyperbolic: return "even-nonhyperbolic";
  case TwoAdicClass::OddDiagonal: return "odd-diagonal";
  default: return "n/a";
  }
}

Report input_error(const std::string &msg, const std::string &input) {
  Report r;
  r.exit_code = kInputError;
  r.text = "error: " + msg + "\n";
  r.json = json{{"input", input}, {"error", msg}};
  return r;
}

Report parse_error(const ParseError &e, const std::string &input) {
  Report r = input_error(e.what(), input);
  r.json["line"] = e.line;
  r.json["column"] = e.column;
  return r;
}

// ---------------------------------------------------------------------------

Report homology(const ManifoldDescription &m) {
  auto h = homology_of(m);
  Report r;
  r.json = json_group(h);
  r.text = "H_1(" + print_manifold(m) + ") = " + h.to_string() + "\n";
  return r;
}

// Torsion linking pairing when a closed form is available.
std::optional<LinkingPairing> pairing_of(const ManifoldDescription &m) {
  if (auto s = std::get_if<SeifertData>(&m))
    return s->orientable_base() ? torsion_pairing(*s) : pairing_nonorientable(*s);
  if (auto b = std::get_if<SphereBundle>(&m)) {
    auto s = bundle_data(*b);
    return s.orientable_base() ? torsion_pairing(s) : pairing_nonorientable(s);
  }
  if (auto l = std::get_if<LensSum>(&m)) return lens_sum_pairing(*l);
  return std::nullopt;
}

json describe_blocks(const LinkingPairing &l) {
  json primes = json::array();
  for (const auto &[p, part] : primary_decompose(l)) {
    json blocks = json::array();
    for (const auto &b : homogeneous_split(part, p)) {
      auto inv = invariants(b);
      json jb{{"exponent", inv.exponent}, {"rank", inv.rank}};
      if (p == 2) {
        jb["parity"] = parity_name(inv.parity);
        jb["two_adic"] = two_adic_name(inv.two_adic);
      } else {
        jb["det_class"] = inv.det_class;
      }
      blocks.push_back(jb);
    }
    primes.push_back(json{{"prime", json_int(p)}, {"blocks", blocks}});
  }
  return primes;
}

Report pairing_report(const Input &in, const std::string &input, const Options &opt) {
  Report r;
  std::ostringstream os;
  json j{{"input", input}};
  std::optional<LinkingPairing> l;
  if (auto m = std::get_if<ManifoldDescription>(&in)) {
    auto h = homology_of(*m);
    j["group"] = json_group(h.torsion());
    os << "torsion of H_1: " << h.torsion().to_string() << "\n";
    l = pairing_of(*m);
    if (!l) {
      j["form"] = nullptr;
      if (auto phi = std::get_if<GluingMatrix>(m)) {
        bool hyp = union_pairing_hyperbolic(*phi);
        j["hyperbolic"] = hyp;
        os << "hyperbolic: " << (hyp ? "yes" : "no") << "\n";
      } else {
        j["hyperbolic"] = nullptr;
        os << "no closed-form pairing for this description\n";
      }
    }
  } else {
    l = std::get<LinkingPairing>(in);
    j["group"] = json_group(l->group());
    os << "group: " << l->group().to_string() << "\n";
  }
  if (l) {
    bool hyp = is_hyperbolic(*l);
    j["form"] = print_pairing(*l);
    j["primes"] = describe_blocks(*l);
    j["hyperbolic"] = hyp;
    j["even_2primary"] = is_even_2primary(*l);
    os << "form: " << print_pairing(*l) << "\n";
    os << "hyperbolic: " << (hyp ? "yes" : "no") << "\n";
    if (l->order() <= opt.oracle_bound) {
      bool o = oracle_is_hyperbolic(*l, opt.oracle_bound);
      j["oracle_hyperbolic"] = o;
      os << "oracle hyperbolic: " << (o ? "yes" : "no") << "\n";
    } else {
      j["oracle_hyperbolic"] = nullptr;
      os << "oracle hyperbolic: skipped, order above --oracle-bound\n";
    }
  }
  if (!opt.against.empty()) {
    auto other_in = parse_input(opt.against);
    std::optional<LinkingPairing> other;
    if (auto m = std::get_if<ManifoldDescription>(&other_in))
      other = pairing_of(*m);
    else
      other = std::get<LinkingPairing>(other_in);
    if (!l || !other) throw std::invalid_argument("--against needs two computable pairings");
    j["against"] = print_pairing(*other);
    try {
      IsoMethod method;
      bool iso = are_isomorphic(*l, *other, opt.oracle_bound, &method);
      j["isomorphic"] = iso;
      j["method"] = method == IsoMethod::Oracle ? "oracle" : "invariants";
      os << "isomorphic to " << print_pairing(*other) << ": " << (iso ? "yes" : "no") << "\n";
    } catch (const Undecided &e) {
      j["isomorphic"] = nullptr;
      j["reason"] = e.what();
      r.exit_code = kUnknownDueToBound;
      os << "isomorphism: unknown (" << e.what() << ")\n";
    }
  }
  r.json = j;
  r.text = os.str();
  return r;
}

json verdict_json(const EmbeddingVerdict &v) {
  json reasons = json::array();
  for (const auto &c : v.reasons)
    reasons.push_back(json{{"id", c.id},
                           {"citation", c.citation},
                           {"passed", c.passed()},
                           {"kind", to_string(c.kind)},
                           {"scope", category_name(c.scope)},
                           {"outcome", to_string(c.outcome)},
                           {"detail", c.detail}});
  return json{{"status", to_string(v.status)},
              {"category", category_name(v.category)},
              {"reasons", reasons}};
}

std::string verdict_text(const EmbeddingVerdict &v) {
  std::ostringstream os;
  os << to_string(v.status) << " [" << category_name(v.category) << "]\n";
  for (const auto &c : v.reasons) {
    os << "  " << to_string(c.kind) << " " << to_string(c.outcome) << " " << c.id << ": "
       << c.citation;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

Report verdict_report(const ManifoldDescription &m, const std::string &input, const Options &opt) {
  std::vector<Category> cats;
  if (opt.category != CategoryFilter::Smooth) cats.push_back(Category::LocallyFlat);
  if (opt.category != CategoryFilter::Topological) cats.push_back(Category::Smooth);
  Report r;
  std::ostringstream os;
  os << print_manifold(m) << "\n";
  json vs = json::array();
  for (auto c : cats) {
    auto v = verdict(m, c);
    vs.push_back(verdict_json(v));
    os << verdict_text(v);
  }
  r.json = cats.size() == 1 ? vs[0] : json{{"verdicts", vs}};
  if (auto t = std::get_if<TorusBundle>(&m)) {
    auto nf = torus_normal_form(*t);
    if (nf.kind != 2) {
      TorusBundle n{nf.kind == -1 ? -1 : 1, nf.kind == 0 ? 0 : nf.b, 0, nf.kind == -1 ? -1 : 1};
      if (nf.kind == 0) n = *t; // +-I is its own normal form
      auto p = find_conjugator(*t, n, opt.conj_bound);
      json cj{{"normal_form", n.to_string()}, {"bound", opt.conj_bound}, {"found", p.has_value()}};
      os << "conjugacy check: normal form " << n.to_string();
      if (p) {
        cj["conjugator"] = {(*p)[0], (*p)[1], (*p)[2], (*p)[3]};
        os << " via (" << (*p)[0] << "," << (*p)[1] << ";" << (*p)[2] << "," << (*p)[3] << ")\n";
      } else {
        os << ", no conjugator with entries within " << opt.conj_bound << "\n";
      }
      r.json["conjugacy_check"] = cj;
    }
  }
  r.text = os.str();
  return r;
}

Report realize_report(const LinkingPairing &l, const std::string &input, const Options &opt) {
  Report r;
  json j{{"input", input}};
  std::ostringstream os;
  EpsilonMode mode = opt.realize_mode == RealizeMode::NonZero ? EpsilonMode::NonZero
                                                               : EpsilonMode::Zero;
  if (opt.realize_mode == RealizeMode::Auto && admissibility(l, EpsilonMode::Zero) != Clause::None)
    mode = EpsilonMode::NonZero;
  j["epsilon_mode"] = to_string(mode);
  try {
    auto res = mode == EpsilonMode::Zero ? realize_general_e0(l) : realize_general(l);
    j["status"] = "realized";
    j["data"] = print_manifold(res.data);
    j["euler_number"] = to_string(euler_number(res.data));
    j["candidates"] = res.candidates;
    j["transcript"] = res.transcript;
    os << "realized by " << print_manifold(res.data) << "  (eps = "
       << to_string(euler_number(res.data)) << ")\n";
    for (const auto &line : res.transcript) os << "  " << line << "\n";
    // recompute independently of the search, under the requested bound
    try {
      IsoMethod method;
      bool ok = are_isomorphic(prune(torsion_pairing(res.data)), prune(l), opt.oracle_bound, &method);
      j["verified"] = ok;
      j["method"] = method == IsoMethod::Oracle ? "oracle" : "invariants";
      os << "verification: " << (ok ? "pairing recomputed and isomorphic" : "MISMATCH") << " ("
         << j["method"].get<std::string>() << ")\n";
    } catch (const Undecided &e) {
      j["verified"] = nullptr;
      j["reason"] = e.what();
      r.exit_code = kUnknownDueToBound;
      os << "verification: unknown (" << e.what() << ")\n";
    }
  } catch (const InadmissiblePairing &e) {
    j["status"] = "inadmissible";
    j["clause"] = to_string(e.clause);
    j["reason"] = e.what();
    os << "not realizable with " << to_string(mode) << " Euler number: " << e.what() << "\n";
  }
  r.json = j;
  r.text = os.str();
  return r;
}

std::vector<Int> int_list(const std::string &s, const std::string &flag) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception &) {
      throw std::invalid_argument(flag + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw std::invalid_argument(flag + " needs at least one integer");
  return out;
}

json betti_json(const BettiProfile &b) {
  return json{{"field", b.field.to_string()}, {"beta1", b.beta1}, {"beta2", b.beta2}, {"exact", b.exact}};
}

} // namespace

FiniteAbelianGroup homology_of(const ManifoldDescription &m) {
  return std::visit(
      [](const auto &x) -> FiniteAbelianGroup {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SeifertData>)
          return first_homology(x);
        else if constexpr (std::is_same_v<T, TorusBundle>)
          return torus_bundle_homology(x);
        else if constexpr (std::is_same_v<T, GluingMatrix>)
          return union_homology(x);
        else if constexpr (std::is_same_v<T, LensSum>) {
          std::vector<Int> orders;
          for (const auto &s : x.summands) orders.push_back(s.p);
          return FiniteAbelianGroup::from_orders(orders);
        } else
          return first_homology(bundle_data(x));
      },
      m);
}

std::optional<std::array<long, 4>> find_conjugator(const TorusBundle &a, const TorusBundle &n,
                                                   long bound) {
  if (!a.a.fits_slong_p() || !a.b.fits_slong_p() || !a.c.fits_slong_p() || !a.d.fits_slong_p() ||
      !n.a.fits_slong_p() || !n.b.fits_slong_p() || !n.c.fits_slong_p() || !n.d.fits_slong_p())
    return std::nullopt;
  long A[4] = {a.a.get_si(), a.b.get_si(), a.c.get_si(), a.d.get_si()};
  long N[4] = {n.a.get_si(), n.b.get_si(), n.c.get_si(), n.d.get_si()};
  // A P = P N, P = (p, q; r, s), det P = +-1; smallest entries first
  for (long h = 0; h <= bound; ++h)
    for (long p = -h; p <= h; ++p)
      for (long q = -h; q <= h; ++q)
        for (long r = -h; r <= h; ++r)
          for (long s = -h; s <= h; ++s) {
            if (std::max({std::labs(p), std::labs(q), std::labs(r), std::labs(s)}) != h) continue;
            long det = p * s - q * r;
            if (det != 1 && det != -1) continue;
            if (A[0] * p + A[1] * r != p * N[0] + q * N[2]) continue;
            if (A[0] * q + A[1] * s != p * N[1] + q * N[3]) continue;
            if (A[2] * p + A[3] * r != r * N[0] + s * N[2]) continue;
            if (A[2] * q + A[3] * s != r * N[1] + s * N[3]) continue;
            return std::array<long, 4>{p, q, r, s};
          }
  return std::nullopt;
}

Report run_input(Subcommand cmd, const std::string &input, const Options &opt) {
  try {
    switch (cmd) {
    case Subcommand::Homology:
      return homology(parse_manifold(input));
    case Subcommand::Pairing:
      return pairing_report(parse_input(input), input, opt);
    case Subcommand::Verdict:
      return verdict_report(parse_manifold(input), input, opt);
    case Subcommand::Realize:
      return realize_report(parse_pairing(input), input, opt);
    default:
      return input_error("subcommand takes no input literal", input);
    }
  } catch (const ParseError &e) {
    return parse_error(e, input);
  } catch (const BoundExceeded &e) {
    Report r = input_error(e.what(), input);
    r.exit_code = kUnknownDueToBound;
    r.text = std::string("unknown: ") + e.what() + "\n";
    return r;
  } catch (const Undecided &e) {
    Report r = input_error(e.what(), input);
    r.exit_code = kUnknownDueToBound;
    r.text = std::string("unknown: ") + e.what() + "\n";
    return r;
  } catch (const std::exception &e) {
    return input_error(e.what(), input);
  }
}

Report run_nilpotent(const Options &opt) {
  try {
    if (opt.semidirect.empty() == opt.abelian.empty())
      return input_error("nilpotent needs exactly one of --semidirect m,n and --abelian d1,...", "");
    std::optional<Field> field;
    if (!opt.field.empty()) {
      if (opt.field == "Q" || opt.field == "0") {
        field = Field{0};
      } else {
        auto p = int_list(opt.field, "--field");
        if (p.size() != 1 || !is_prime(p[0]))
          return input_error("--field takes Q or a prime", opt.field);
        field = Field{p[0]};
      }
    }
    Report r;
    json j;
    std::ostringstream os;
    if (!opt.semidirect.empty()) {
      auto mn = int_list(opt.semidirect, "--semidirect");
      if (mn.size() != 2) return input_error("--semidirect takes m,n", opt.semidirect);
      auto g = cyclic_semidirect(mn[0], mn[1]);
      j["group"] = g.to_string();
      j["nilpotent"] = is_nilpotent(g);
      j["abelianization"] = json_group(semidirect_abelianization(g));
      os << "G = " << g.to_string() << "\n";
      os << "nilpotent: " << (is_nilpotent(g) ? "yes" : "no") << "\n";
      os << "G^ab = " << semidirect_abelianization(g).to_string() << "\n";
      try {
        auto h2 = wang_h2_integral(g);
        j["h2"] = json_group(h2);
        os << "H_2(G) = " << h2.to_string() << "\n";
      } catch (const std::invalid_argument &) {
        j["h2"] = nullptr;
      }
      if (field) {
        auto b = wang_betti(g, *field);
        j["fields"] = json::array({betti_json(b)});
        j["balanced"] = b.beta2 <= b.beta1;
        os << "over " << field->to_string() << ": beta1 = " << b.beta1 << ", beta2 = " << b.beta2
           << (b.exact ? "" : " (block-diagonal H_2 action)") << "\n";
      } else {
        auto rep = homologically_balanced(g);
        json fs = json::array();
        for (const auto &b : rep.fields) {
          fs.push_back(betti_json(b));
          os << "over " << b.field.to_string() << ": beta1 = " << b.beta1
             << ", beta2 = " << b.beta2 << "\n";
        }
        j["fields"] = fs;
        j["balanced"] = rep.balanced;
        j["cyclic_classification_holds"] = rep.cyclic_classification_holds;
        os << "homologically balanced: " << (rep.balanced ? "yes" : "no") << "\n";
      }
    } else {
      auto orders = int_list(opt.abelian, "--abelian");
      for (const auto &d : orders)
        if (d < 0) return input_error("--abelian orders must be >= 0 (0 = Z)", opt.abelian);
      std::vector<Int> finite;
      int free = 0;
      for (const auto &d : orders) {
        if (d == 0)
          ++free;
        else
          finite.push_back(d);
      }
      auto a = FiniteAbelianGroup::from_orders(finite, free);
      j["group"] = a.to_string();
      j["nilpotent"] = true;
      j["h2"] = json_group(h2_abelian(a));
      os << "A = " << a.to_string() << "\nH_2(A) = " << h2_abelian(a).to_string() << "\n";
      std::vector<Field> fields;
      if (field) {
        fields.push_back(*field);
      } else {
        fields.push_back(Field{0});
        for (const auto &p : prime_divisors(a.torsion_order())) fields.push_back(Field{p});
      }
      json fs = json::array();
      bool balanced = true;
      for (const auto &f : fields) {
        auto b = betti_abelian(a, f);
        fs.push_back(betti_json(b));
        balanced = balanced && b.beta2 <= b.beta1;
        os << "over " << f.to_string() << ": beta1 = " << b.beta1 << ", beta2 = " << b.beta2 << "\n";
      }
      j["fields"] = fs;
      j["balanced"] = balanced;
      os << "homologically balanced: " << (balanced ? "yes" : "no") << "\n";
    }
    r.json = j;
    r.text = os.str();
    return r;
  } catch (const std::exception &e) {
    return input_error(e.what(), opt.semidirect.empty() ? opt.abelian : opt.semidirect);
  }
}

} // namespace s4e::cli
