#include "s4e/seifert.hpp"
#include "support/oracles.hpp"
#include "support/random_seifert.hpp"

#include <doctest.h>

using namespace s4e;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

} // namespace

TEST_CASE("euler number") {
  CHECK(euler_number(make_seifert(0, {{2, 1}, {3, 1}, {5, 1}, {1, -1}})) == make_rat(-1, 30));
  CHECK(euler_number(make_seifert(0, {{3, 1}, {5, -2}, {15, 1}})) == 0);
  CHECK(euler_number(make_seifert(3, {})) == 0);
}

TEST_CASE("validation rejects bad pairs") {
  CHECK_THROWS_AS(make_seifert(0, {{0, 1}}), SeifertError);
  CHECK_THROWS_AS(make_seifert(0, {{4, 2}}), SeifertError);
  CHECK_THROWS_AS(make_seifert(0, {{-3, 1}}), SeifertError);
}

TEST_CASE("normalization") {
  CHECK(normalize(make_seifert(0, {{3, 4}})) == make_seifert(0, {{3, 1}, {1, 1}}));
  CHECK(normalize(make_seifert(0, {{1, 0}, {5, 2}})) == make_seifert(0, {{5, 2}}));
  CHECK(normalize(make_seifert(0, {{3, -1}, {3, 1}})) ==
        make_seifert(0, {{3, 2}, {3, 1}, {1, -1}}));
}

TEST_CASE("first homology examples") {
  auto sphere = make_seifert(0, {{2, 1}, {3, 1}, {5, 1}, {1, -1}});
  auto h = first_homology(sphere);
  CHECK(h.free_rank() == 0);
  CHECK(h.torsion_trivial());
  CHECK(abs(determinant(orientable_relation_matrix(sphere))) == 1);

  auto hw = first_homology(make_seifert(-1, {{2, 1}, {2, -1}}));
  CHECK(hw.free_rank() == 0);
  CHECK(hw.divisors() == ints({4, 4}));

  auto m = first_homology(make_seifert(-2, {{3, 1}, {3, 1}}));
  CHECK(m.free_rank() == 1);
  CHECK(m.divisors() == ints({6, 6}));

  // circle bundles over RP^2
  CHECK(first_homology(make_seifert(-1, {{2, 1}})).divisors() == ints({8}));
  CHECK(first_homology(make_seifert(-1, {{1, -2}})).divisors() == ints({2, 2}));
  CHECK(first_homology(make_seifert(-1, {{1, -3}})).divisors() == ints({4}));
}

TEST_CASE("direct doubles") {
  CHECK(torsion_is_direct_double(make_seifert(0, {{3, 1}, {3, -1}, {3, 1}, {3, -1}})));
  for (long p = 2; p < 8; ++p) CHECK_FALSE(torsion_is_direct_double(make_seifert(0, {{1, p}})));
  CHECK(torsion_is_direct_double(make_seifert(0, {})));
}

TEST_CASE("skew symmetry") {
  // residues match up but eps = -1, so no equivalent data has the paired form
  CHECK_FALSE(is_skew_symmetric(make_seifert(0, {{3, 1}, {3, -1}, {7, 2}, {7, 5}})));
  CHECK(is_skew_symmetric(make_seifert(0, {{3, 1}, {3, -1}, {7, 2}, {7, 5}, {1, -1}})));
  CHECK(is_skew_symmetric(make_seifert(0, {{3, 1}, {3, -1}, {7, 2}, {7, -2}})));
  CHECK_FALSE(is_skew_symmetric(make_seifert(0, {{3, 1}, {5, -2}, {15, 1}})));
  CHECK(is_skew_symmetric(make_seifert(0, {})));
  CHECK(is_skew_symmetric(make_seifert(0, {{2, 1}, {2, -1}})));
  CHECK_FALSE(is_skew_symmetric(make_seifert(0, {{2, 1}, {2, 1}})));
  CHECK_FALSE(is_skew_symmetric(make_seifert(0, {{2, 1}, {2, 1}, {2, 1}, {1, -1}})));
}

TEST_CASE("special classes") {
  auto a = classify_special(make_seifert(0, {{2, 1}, {3, 1}, {5, 1}, {1, -1}}));
  CHECK(a.homology_sphere);
  CHECK(a.q_homology_sphere);
  auto b = classify_special(make_seifert(0, {{3, 1}, {5, -2}, {15, 1}}));
  CHECK(b.homology_handle);
  CHECK_FALSE(b.homology_sphere);
  auto bh = first_homology(make_seifert(0, {{3, 1}, {5, -2}, {15, 1}}));
  CHECK(bh.free_rank() == 1);
  CHECK(bh.torsion_trivial());
  auto c = classify_special(make_seifert(1, {}));
  CHECK_FALSE(c.homology_sphere);
  CHECK_FALSE(c.homology_handle);
  CHECK_FALSE(c.q_homology_sphere);
}

TEST_CASE("fibre sums and expansion") {
  CHECK(fibre_sum(make_seifert(1, {}), make_seifert(1, {})) == make_seifert(2, {}));
  CHECK(fibre_sum(make_seifert(-1, {{2, 1}}), make_seifert(-1, {{2, -1}})) ==
        make_seifert(-2, {{2, 1}, {2, -1}}));
  // torus # RP^2 = three crosscaps
  CHECK(fibre_sum(make_seifert(1, {}), make_seifert(-1, {})).base == -3);
  CHECK(fibre_sum(make_seifert(-2, {}), make_seifert(2, {})).base == -6);
  CHECK(expansion(make_seifert(0, {{3, 1}}), 1) ==
        make_seifert(0, {{3, 1}, {3, 1}, {3, -1}}));
  CHECK_THROWS_AS(expansion(make_seifert(0, {{3, 1}}), 2), SeifertError);
}

TEST_CASE("homology sphere data") {
  auto s = homology_sphere_data(ints({2, 3}));
  CHECK(s == make_seifert(0, {{2, 1}, {3, 1}, {1, -1}}));
  for (auto alphas : {ints({2, 3, 5}), ints({3, 5}), ints({2, 3, 5, 7}),
                      ints({4, 9, 25, 7, 11}), ints({13, 17})}) {
    auto d = homology_sphere_data(alphas);
    Rat eps = euler_number(d);
    Int prod = 1;
    for (const auto &a : alphas) prod *= a;
    CHECK(abs(eps * prod) == 1);
    CHECK(first_homology(d).torsion_trivial());
    CHECK(first_homology(d).free_rank() == 0);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      CHECK(d.pairs[i].beta > 0);
      CHECK(d.pairs[i].beta < d.pairs[i].alpha);
    }
  }
  CHECK_THROWS_AS(homology_sphere_data(ints({2, 4})), SeifertError);
  CHECK(homology_sphere_data(ints({2, 3, 5})).pairs.back().beta == -2);
  CHECK(homology_sphere_data(ints({3, 5})).pairs.back().beta == -1);
}

TEST_CASE("largest e over strict data with pairwise coprime cone orders") {
  // exhaustive over 0 < b_i < a_i: the integer e = 1/P + sum b_i/a_i is
  // unique, and the construction finds it
  for (auto alphas : {ints({2, 3}), ints({2, 3, 5}), ints({2, 3, 5, 7}),
                      ints({3, 4, 5}), ints({2, 5, 7})}) {
    Int prod = 1;
    for (const auto &a : alphas) prod *= a;
    std::vector<long> b(alphas.size(), 1);
    std::vector<long> found;
    for (;;) {
      Rat sum = make_rat(1, prod);
      for (std::size_t i = 0; i < b.size(); ++i) sum += make_rat(b[i], alphas[i]);
      if (sum.get_den() == 1) found.push_back(sum.get_num().get_si());
      std::size_t i = 0;
      while (i < b.size() && ++b[i] == alphas[i].get_si()) b[i++] = 1;
      if (i == b.size()) break;
    }
    REQUIRE(found.size() == 1);
    CHECK(-homology_sphere_data(alphas).pairs.back().beta == found[0]);
    CHECK(found[0] <= static_cast<long>(alphas.size()) - 1);
  }
  CHECK(homology_sphere_data(ints({2, 3, 5, 7})).pairs.back().beta == -2);
}

TEST_CASE("determinant identity") {
  testing::Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    auto s = testing::random_seifert(rng, 0, testing::uniform(rng, 0, 6), 12);
    Int prod = 1;
    for (const auto &p : s.pairs) prod *= p.alpha;
    Rat rhs = abs(euler_number(s) * prod);
    CHECK(Rat(abs(determinant(orientable_relation_matrix(s)))) == rhs);
  }
}

TEST_CASE("genus stabilization") {
  testing::Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    auto s = testing::random_seifert(rng, 0, testing::uniform(rng, 0, 5), 10);
    auto h0 = first_homology(s);
    int g = testing::uniform(rng, 1, 3);
    auto sg = s;
    sg.base = g;
    auto hg = first_homology(sg);
    CHECK(hg.divisors() == h0.divisors());
    CHECK(hg.free_rank() == h0.free_rank() + 2 * g);
  }
}

TEST_CASE("non-orientable torsion formula agrees with presentation SNF") {
  testing::Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    int c = testing::uniform(rng, 1, 3);
    auto s = testing::random_seifert(rng, -c, testing::uniform(rng, 0, 5), 16);
    auto formula = first_homology(s);
    auto snf = cokernel(testing::nonorientable_presentation(s));
    CHECK_MESSAGE(formula == snf, s.to_string());
    CHECK_FALSE(formula.torsion_trivial());
  }
}

TEST_CASE("invariance under equivalence moves") {
  testing::Rng rng(99);
  for (int t = 0; t < 1000; ++t) {
    int base = testing::uniform(rng, -2, 2);
    auto s = testing::random_seifert(rng, base, testing::uniform(rng, 0, 5), 9);
    auto m = testing::random_moves(s, rng, 10);
    CHECK(euler_number(m) == euler_number(s));
    CHECK(first_homology(m) == first_homology(s));
    CHECK(torsion_is_direct_double(m) == torsion_is_direct_double(s));
    CHECK(is_skew_symmetric(m) == is_skew_symmetric(s));
    CHECK(normalize(m) == normalize(s));
  }
}
