#include "s4e/obstructions.hpp"
#include "support/catalogue.hpp"
#include "support/corpus.hpp"
#include "support/random_seifert.hpp"

#include <doctest.h>

#include <chrono>
#include <functional>
#include <map>
#include <set>

using namespace s4e;
using testing::strict_with_e;

namespace {

Status lf(const ManifoldDescription &m) { return verdict(m).status; }
Status smooth(const ManifoldDescription &m) { return verdict(m, Category::Smooth).status; }

const CriterionResult *find(const std::vector<CriterionResult> &rs, const std::string &id) {
  for (const auto &r : rs)
    if (r.id == id) return &r;
  return nullptr;
}

void check_soundness(const EmbeddingVerdict &v) {
  REQUIRE_FALSE(v.reasons.empty());
  bool failed = false, sufficient = false;
  for (const auto &r : v.reasons) {
    if (r.kind == CriterionKind::Necessary && r.outcome == Outcome::Failed) failed = true;
    if (r.kind == CriterionKind::Sufficient && r.outcome == Outcome::Passed) sufficient = true;
  }
  if (v.status == Status::DoesNotEmbed) CHECK(failed);
  if (v.status == Status::Embeds) CHECK(sufficient);
  CHECK(std::is_sorted(v.reasons.begin(), v.reasons.end(),
                       [](const auto &a, const auto &b) { return a.id < b.id; }));
}

} // namespace

TEST_CASE("verdict assembly respects categories") {
  CriterionResult smooth_fail{"a", "", CriterionKind::Necessary, Category::Smooth,
                              Outcome::Failed, ""};
  CriterionResult lf_suff{"b", "", CriterionKind::Sufficient, Category::LocallyFlat,
                          Outcome::Passed, ""};
  CHECK(assemble_verdict({smooth_fail, lf_suff}, Category::LocallyFlat).status == Status::Embeds);
  CHECK(assemble_verdict({smooth_fail, lf_suff}, Category::Smooth).status ==
        Status::DoesNotEmbed);
  CriterionResult smooth_suff{"c", "", CriterionKind::Sufficient, Category::Smooth,
                              Outcome::Passed, ""};
  CHECK(assemble_verdict({smooth_suff}, Category::LocallyFlat).status == Status::Embeds);
  CriterionResult lf_fail{"d", "", CriterionKind::Necessary, Category::LocallyFlat,
                          Outcome::Failed, ""};
  CHECK_THROWS_AS(assemble_verdict({lf_fail, smooth_suff}, Category::Smooth), std::logic_error);
  CHECK(assemble_verdict({}, Category::Smooth).status == Status::Unknown);
}

TEST_CASE("necessary battery examples") {
  auto hw = make_seifert(-1, {{2, 1}, {2, -1}});
  auto b = necessary_battery(hw);
  REQUIRE(find(b, "linking-hyperbolic"));
  CHECK(find(b, "linking-hyperbolic")->outcome == Outcome::Failed);
  CHECK(lf(hw) == Status::DoesNotEmbed);

  auto k2 = strict_with_e(0, {{2, 1}, {3, 1}}, 2);
  auto c = necessary_battery(k2);
  REQUIRE(find(c, "im-cone-bound"));
  CHECK(find(c, "im-cone-bound")->outcome == Outcome::Failed);

  LensSum l{{{3, 1, 1}, {3, 1, -1}}};
  for (const auto &r : necessary_battery(l))
    CHECK_MESSAGE(r.outcome != Outcome::Failed, r.id);
  CHECK(smooth(l) == Status::Embeds);
  CHECK(lf(l) == Status::Embeds);
}

TEST_CASE("euler characteristic bounds") {
  auto rs = necessary_battery(SphereBundle{2, 1}); // beta = 4
  REQUIRE(find(rs, "euler-characteristic"));
  CHECK(find(rs, "euler-characteristic")->detail.find("{-3,-1,1}") != std::string::npos);
}

TEST_CASE("skew symmetry is decisive for eps = 0 over S2 with odd orders") {
  CHECK(verdict_seifert_orientable_e0(make_seifert(0, {{3, 1}, {3, -1}, {5, 2}, {5, -2}}))
            .status == Status::Embeds);
  auto bad = make_seifert(0, {{3, 1}, {5, -2}, {15, 1}});
  CHECK(is_direct_double(first_homology(bad)));
  CHECK(verdict_seifert_orientable_e0(bad).status == Status::DoesNotEmbed);
  CHECK(lf(bad) == Status::DoesNotEmbed);
  CHECK(verdict_seifert_orientable_e0(SeifertData{}).status == Status::Embeds);
  CHECK_THROWS_AS(verdict_seifert_orientable_e0(make_seifert(0, {{2, 1}, {2, -1}})),
                  std::invalid_argument);
}

TEST_CASE("circle bundle examples") {
  CHECK(verdict_bundle(2, 1).status == Status::Embeds);
  CHECK(verdict_bundle(-1, 4).status == Status::DoesNotEmbed);
  CHECK(verdict_bundle(-3, 6).status == Status::Embeds);
}

TEST_CASE("paired odd data over non-orientable bases") {
  // (3,1),(3,2) with (1,-e): eps = e - 1
  auto data = [](int c, long eps) { return strict_with_e(-c, {{3, 1}, {3, 2}}, eps + 1); };
  CHECK(verdict_nonorientable_paired(data(2, 0)).status == Status::Embeds);
  CHECK(verdict_nonorientable_paired(data(1, 0)).status == Status::DoesNotEmbed);
  CHECK(verdict_nonorientable_paired(data(1, 2)).status == Status::Embeds);
  CHECK(verdict_nonorientable_paired(data(1, 2), Category::Smooth).status == Status::Embeds);
  CHECK_THROWS_AS(verdict_nonorientable_paired(make_seifert(-1, {{3, 1}, {3, 1}})),
                  std::invalid_argument);
  for (int c = 1; c <= 4; ++c)
    for (long eps = -10; eps <= 10; ++eps) {
      bool expect = -2 * c <= eps && eps <= 2 * c && ((eps - 2 * c) % 4 + 4) % 4 == 0;
      auto v = verdict(data(c, eps));
      CHECK(v.status == (expect ? Status::Embeds : Status::DoesNotEmbed));
      check_soundness(v);
    }
}

TEST_CASE("unions of mapping cylinders") {
  CHECK(verdict_union_phi(GluingMatrix{2, -1, 1, 0}).status == Status::Embeds);
  CHECK(verdict_union_phi(GluingMatrix{2, -9, 1, -4}).status == Status::Embeds);
  CHECK(verdict_union_phi(GluingMatrix{6, -1, 1, 0}).status == Status::DoesNotEmbed);
  CHECK_THROWS(verdict_union_phi(GluingMatrix{2, -3, 1, 2}));
  // the c = 0 case is a circle bundle over the Klein bottle
  for (long b = -10; b <= 10; ++b) {
    bool expect = b == 0 || b == 4 || b == -4;
    CHECK(verdict_union_phi(GluingMatrix{1, b, 0, 1}).status ==
          (expect ? Status::Embeds : Status::DoesNotEmbed));
  }
  // brute force over small M_{m,n}: the embedding set up to swap and sign
  std::set<std::pair<long, long>> good{{2, 0}, {2, 2}, {2, -2}, {2, -4}};
  auto member = [&](long m, long n) {
    for (auto [x, y] : {std::pair{m, n}, {n, m}, {-m, -n}, {-n, -m}})
      if (good.count({x, y})) return true;
    return false;
  };
  for (long m = -9; m <= 9; ++m)
    for (long n = -9; n <= 9; ++n) {
      auto v = verdict(gluing_mn(m, n));
      CHECK_MESSAGE(v.status == (member(m, n) ? Status::Embeds : Status::DoesNotEmbed),
                    m << "," << n);
      check_soundness(v);
    }
}

TEST_CASE("P(2,2) Seifert data routes through M_{0,n}") {
  for (long e = -12; e <= 12; ++e) {
    auto s = make_seifert(-1, {{2, 1}, {2, -1}, {1, -e}});
    bool expect = e == 2 || e == -2;
    CHECK_MESSAGE(lf(s) == (expect ? Status::Embeds : Status::DoesNotEmbed), e);
  }
}

TEST_CASE("torus bundles") {
  CHECK(verdict_torus_bundle({1, 0, 0, 1}).status == Status::Embeds);
  CHECK(verdict_torus_bundle({-1, 0, 0, -1}).status == Status::Embeds);
  CHECK(verdict_torus_bundle({-1, 2, 0, -1}).status == Status::DoesNotEmbed);
  CHECK_THROWS(verdict_torus_bundle({1, 1, 1, 1}));

  // conjugates of the embedding list are recognised; the conjugator works
  testing::Rng rng(11);
  std::vector<TorusBundle> seeds{{1, 1, 0, 1}, {1, -1, 0, 1}, {-1, 4, 0, -1},
                                 {-1, -4, 0, -1}, {1, 3, 0, 1}, {-1, 2, 0, -1}};
  for (int trial = 0; trial < 200; ++trial) {
    auto t = seeds[trial % seeds.size()];
    // random P in SL(2,Z) from elementary moves
    Int p0 = 1, p1 = 0, p2 = 0, p3 = 1;
    for (int i = 0; i < 6; ++i) {
      long k = testing::uniform(rng, -3, 3);
      if (i % 2) p1 += k * p0, p3 += k * p2;
      else p0 += k * p1, p2 += k * p3;
    }
    // A' = P A P^-1
    Int a = p0 * t.a + p1 * t.c, b = p0 * t.b + p1 * t.d;
    Int c = p2 * t.a + p3 * t.c, d = p2 * t.b + p3 * t.d;
    TorusBundle u{a * p3 - b * p2, -a * p1 + b * p0, c * p3 - d * p2, -c * p1 + d * p0};
    auto nf = torus_normal_form(u);
    CHECK(nf.kind == (t.a == 1 ? 1 : -1));
    CHECK(abs(nf.b) == abs(t.b));
    bool expect = abs(t.b) == (t.a == 1 ? 1 : 4);
    CHECK(verdict_torus_bundle(u).status == (expect ? Status::Embeds : Status::DoesNotEmbed));
  }
  CHECK(torus_bundle_homology({1, 0, 0, 1}) == FiniteAbelianGroup::from_orders({}, 3));
  CHECK(torus_bundle_homology({-1, 0, 0, -1}) == FiniteAbelianGroup::from_orders({2, 2}, 1));
}

TEST_CASE("lens sums") {
  CHECK(verdict_lens_sum({{{3, 1, 1}, {3, 1, -1}}}, Category::Smooth).status == Status::Embeds);
  CHECK(verdict_lens_sum({{{3, 1, 1}, {3, 1, 1}}}).status == Status::DoesNotEmbed);
  CHECK(verdict_lens_sum({{{2, 1, 1}, {2, 1, -1}}}, Category::Smooth).status ==
        Status::DoesNotEmbed);
  // -L(5,2) = L(5,3) and L(5,3) = L(5,2)^{-1}-class, so L(5,2) # L(5,2) pairs
  CHECK(lens_sum_pairs_as_double({{{5, 2, 1}, {5, 2, 1}}}));
  CHECK_FALSE(lens_sum_pairs_as_double({{{5, 1, 1}, {5, 1, 1}}}));
}

TEST_CASE("lens sums of at most three summands with p <= 9") {
  auto atoms = testing::lens_atoms(9);
  std::size_t n = atoms.size(), count = 0, mismatches = 0;
  auto run = [&](std::vector<LensSummand> v) {
    bool expect = testing::lens_smooth_oracle(v);
    auto got = verdict_lens_sum(LensSum{v}, Category::Smooth);
    ++count;
    if (got.status != (expect ? Status::Embeds : Status::DoesNotEmbed)) ++mismatches;
  };
  run({});
  for (std::size_t i = 0; i < n; ++i) {
    run({atoms[i]});
    for (std::size_t j = i; j < n; ++j) {
      run({atoms[i], atoms[j]});
      for (std::size_t k = j; k < n; ++k) run({atoms[i], atoms[j], atoms[k]});
    }
  }
  CHECK(count > 20000);
  CHECK(mismatches == 0);
}

TEST_CASE("bundle table against the literal Euler number sets") {
  std::size_t checked = 0;
  for (int base = -6; base <= 5; ++base)
    for (long e = -14; e <= 14; ++e) {
      bool expect = testing::bundle_oracle(base, e);
      for (auto cat : {Category::LocallyFlat, Category::Smooth}) {
        auto v = verdict_bundle(base, e, cat);
        CHECK(v.status == (expect ? Status::Embeds : Status::DoesNotEmbed));
        auto full = verdict(SphereBundle{base, e}, cat);
        CHECK(full.status == v.status);
        check_soundness(full);
        ++checked;
      }
    }
  CHECK(checked == 12 * 29 * 2);
}

TEST_CASE("restrained table") {
  auto start = std::chrono::steady_clock::now();
  for (const auto &x : testing::restrained_embedders()) {
    auto v = verdict(x.m);
    CHECK_MESSAGE(v.status == Status::Embeds, x.name);
    check_soundness(v);
    CHECK_MESSAGE(smooth(x.m) == x.smooth, x.name);
  }
  for (const auto &x : testing::restrained_near_misses()) {
    auto v = verdict(x.m);
    CHECK_MESSAGE(v.status == Status::DoesNotEmbed, x.name);
    check_soundness(v);
    CHECK_MESSAGE(smooth(x.m) == Status::DoesNotEmbed, x.name);
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 5.0);
}

TEST_CASE("eps = 0 odd data: verdict follows an independent skew test") {
  testing::Rng rng(7);
  int skew_seen = 0, generated = 0;
  while (generated < 100) {
    auto s = testing::random_odd_e0(rng, generated);
    REQUIRE(euler_number(s) == 0);
    ++generated;
    bool expect = testing::skew_oracle(s);
    skew_seen += expect;
    CHECK(is_skew_symmetric(s) == expect);
    auto v = verdict_seifert_orientable_e0(s);
    CHECK(v.status == (expect ? Status::Embeds : Status::DoesNotEmbed));
    CHECK(lf(s) == v.status);
    CHECK(smooth(s) == v.status);
  }
  CHECK(skew_seen >= 40);
  CHECK(skew_seen <= 90);
}

TEST_CASE("Issa-McCoy bounds") {
  // e <= k - 1 locally flat, 2e <= k + 1 smooth
  auto s = strict_with_e(0, {{3, 2}, {3, 2}, {3, 2}, {3, 2}}, 3);
  auto rs = necessary_battery(s);
  REQUIRE(find(rs, "im-cone-bound"));
  CHECK(find(rs, "im-cone-bound")->passed());
  REQUIRE(find(rs, "im-2e-bound"));
  CHECK(find(rs, "im-2e-bound")->outcome == Outcome::Failed);
  CHECK(smooth(s) == Status::DoesNotEmbed);

  CHECK(find(necessary_battery(strict_with_e(0, {{3, 2}, {3, 2}}, 2)), "im-cone-bound")
            ->outcome == Outcome::Failed);
  // orientation reversal brings eps < 0 into range
  auto pos = strict_with_e(0, {{3, 2}, {3, 2}, {3, 1}}, 2);
  CHECK(smooth(reverse_orientation(pos)) == smooth(pos));
}

TEST_CASE("k = 2e - 1 shape table") {
  auto table = testing::odd_shape_table();
  REQUIRE(table.size() == 30);
  int embeds = 0;
  for (const auto &row : table) {
    auto s = strict_with_e(0, row.strict, row.e);
    auto f = strict_form(s);
    INFO(s.to_string());
    REQUIRE(f.eps > 0);
    REQUIRE(f.e == row.e);
    REQUIRE(static_cast<long>(f.pairs.size()) == 2 * row.e - 1);
    if (row.embeds) {
      CHECK(f.eps == make_rat(1, row.strict[0].first));
      ++embeds;
    }
    auto shape = im_shape_check(f.pairs, f.e);
    CHECK(shape.shape == (row.embeds ? ImShape::OddMatch : ImShape::OddMismatch));
    CHECK(smooth(s) == (row.embeds ? Status::Embeds : Status::DoesNotEmbed));
    CHECK(smooth(reverse_orientation(s)) == smooth(s));
  }
  CHECK(embeds == 15);
}

TEST_CASE("k = 2e shapes") {
  auto s = strict_with_e(0, {{2, 1}, {3, 1}}, 1);
  auto f = strict_form(s);
  auto r = im_shape_check(f.pairs, f.e);
  CHECK(r.shape == ImShape::EvenShape1);
  CHECK(r.p * r.s + r.q * r.r + 1 == r.p * r.r);
  CHECK(r.x + r.y + r.z == 2);
  CHECK(smooth(s) == Status::Embeds);

  // shape (2): x = y = 1, z = 1 with p,q,r,s = 2,1,3,1
  auto two = strict_with_e(0, {{2, 1}, {3, 1}, {6, 1}, {6, 5}}, 2);
  auto f2 = strict_form(two);
  CHECK(im_shape_check(f2.pairs, f2.e).shape == ImShape::EvenShape2);

  auto none = strict_with_e(0, {{5, 1}, {5, 1}}, 1);
  auto f3 = strict_form(none);
  CHECK(im_shape_check(f3.pairs, f3.e).shape == ImShape::EvenNone);
  CHECK(smooth(none) == Status::DoesNotEmbed);
}

TEST_CASE("partition lemma on every partition for k <= 10") {
  testing::Rng rng(5);
  std::size_t partitions = 0, cases = 0;
  // expansions of small embedders keep the torsion a direct double
  for (const auto &s : testing::partition_lemma_cases(rng, 60)) {
    auto f = strict_form(s);
    REQUIRE(f.pairs.size() <= 10);
    auto rep = partition_lemma_check(f.pairs, f.e);
    CHECK_MESSAGE(rep.violations == 0, s.to_string());
    CHECK(rep.eps_is_inverse_lcm);
    partitions += rep.partitions;
    ++cases;
  }
  CHECK(cases >= 30);
  CHECK(partitions > 100);

  // a deficit partition is a witness for the class structure
  auto f = strict_form(strict_with_e(0, {{3, 2}, {3, 2}, {3, 1}}, 2));
  auto parts = deficit_partitions(f.pairs, f.e);
  CHECK(parts.size() == 2);
  CHECK(partition_witness(f.pairs, f.e).has_value());
}

TEST_CASE("verdicts survive moves and orientation reversal") {
  testing::Rng rng(23);
  std::vector<SeifertData> base{
      make_seifert(0, {{3, 1}, {3, -1}, {5, 2}, {5, -2}}),
      make_seifert(0, {{3, 1}, {5, -2}, {15, 1}}),
      strict_with_e(0, {{3, 2}, {3, 2}, {3, 1}}, 2),
      make_seifert(0, {{2, 1}, {3, 1}, {5, 1}, {1, -1}}),
      make_seifert(-1, {{2, 1}, {2, -1}, {1, -2}}),
      strict_with_e(-2, {{3, 1}, {3, 2}}, 1),
      make_seifert(1, {{1, 1}}),
  };
  for (const auto &s : base) {
    auto v0 = lf(s), s0 = smooth(s);
    CHECK(lf(reverse_orientation(s)) == v0);
    CHECK(smooth(reverse_orientation(s)) == s0);
    for (int i = 0; i < 20; ++i) {
      auto t = testing::random_moves(s, rng, 6);
      CHECK(lf(t) == v0);
      CHECK(smooth(t) == s0);
    }
  }
}

TEST_CASE("no verdict without reasons") {
  testing::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    int base = static_cast<int>(testing::uniform(rng, -2, 2));
    auto s = testing::random_seifert(rng, base, static_cast<int>(testing::uniform(rng, 0, 4)), 8, 2);
    for (auto cat : {Category::LocallyFlat, Category::Smooth}) {
      auto v = verdict(s, cat);
      check_soundness(v);
    }
  }
}

TEST_CASE("abelian and nilpotent complements") {
  CHECK_FALSE(abelian_nilpotent_constraints(5).abelian_possible);
  CHECK(abelian_nilpotent_constraints(3).abelian_shape == "Z^2");
  CHECK(abelian_nilpotent_constraints(0).abelian_shape == "Z/n");
  CHECK(abelian_nilpotent_constraints(2).abelian_shape == "Z + Z/n");
  CHECK(abelian_nilpotent_constraints(6).abelian_possible);
  CHECK_FALSE(abelian_nilpotent_constraints(7).abelian_possible);
  CHECK_FALSE(abelian_nilpotent_constraints(5).nilpotent_possible);
  CHECK(abelian_nilpotent_constraints(1).nilpotent_possible);
}
