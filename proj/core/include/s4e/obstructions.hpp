#pragma once

#include "s4e/seifert_pairing.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace s4e {

// 2x2 monodromy (a, b; c, d) with det 1.
struct TorusBundle {
  Int a, b, c, d;
  void validate() const;
  std::string to_string() const;
  bool operator==(const TorusBundle &) const = default;
};

// sign * L(p, q); -L(p, q) = L(p, p - q).
struct LensSummand {
  Int p, q;
  int sign = 1;
  bool operator==(const LensSummand &) const = default;
};

struct LensSum {
  std::vector<LensSummand> summands;
  void validate() const; // p >= 2, gcd(p, q) = 1, sign = +-1
  std::string to_string() const;
  bool operator==(const LensSum &) const = default;
};

// Circle bundle with Euler number e over a closed surface: genus `base` when
// base >= 0, otherwise -base crosscaps.
struct SphereBundle {
  int base = 0;
  Int e;
  std::string to_string() const;
  bool operator==(const SphereBundle &) const = default;
};

using ManifoldDescription =
    std::variant<SeifertData, TorusBundle, GluingMatrix, LensSum, SphereBundle>;

std::string describe(const ManifoldDescription &m);

enum class Status { Embeds, DoesNotEmbed, Unknown };
enum class Category { LocallyFlat, Smooth };
enum class CriterionKind { Necessary, Sufficient };
enum class Outcome { Passed, Failed, Skipped };

std::string to_string(Status s);
std::string to_string(Category c);
std::string to_string(CriterionKind k);
std::string to_string(Outcome o);

// A necessary condition with scope LocallyFlat binds both categories; one
// with scope Smooth binds smooth embeddings only. A sufficient condition
// with scope Smooth produces a smooth (hence also locally flat) embedding.
struct CriterionResult {
  std::string id;
  std::string citation;
  CriterionKind kind = CriterionKind::Necessary;
  Category scope = Category::LocallyFlat;
  Outcome outcome = Outcome::Skipped;
  std::string detail;

  bool passed() const { return outcome == Outcome::Passed; }
};

struct EmbeddingVerdict {
  Status status = Status::Unknown;
  Category category = Category::LocallyFlat;
  std::vector<CriterionResult> reasons; // sorted by id
};

// Status implied by `reasons` for `category`. Throws std::logic_error when a
// sufficiency result and a failed necessary condition both apply.
EmbeddingVerdict assemble_verdict(std::vector<CriterionResult> reasons,
                                  Category category);

// Strict form M(g; S', (1, -e)) with 0 < beta < alpha on S'.
struct StrictForm {
  int base = 0;
  std::vector<SeifertPair> pairs;
  Int e;
  Rat eps;
};
StrictForm strict_form(const SeifertData &s);

// Partitions of the cone points into e classes, one with
// sum beta/alpha = 1 - 1/lcm(alpha) (listed first) and the rest summing to 1.
// Each partition is a class label per cone point, label 0 the deficit class.
std::vector<std::vector<int>>
deficit_partitions(const std::vector<SeifertPair> &strict, const Int &e,
                   std::size_t limit = 100000);

// Two deficit partitions P, P' such that no union of a non-empty proper
// subset of the classes of P' is a union of classes of P.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
partition_witness(const std::vector<SeifertPair> &strict, const Int &e);

// For a direct-double torsion with eps > 0: every partition into n <= e
// classes of sum <= 1 has n = e and exactly one class of sum < 1, with
// deficit 1/lcm(alpha). Counts partitions examined and violations found.
struct PartitionLemmaReport {
  std::size_t partitions = 0;
  std::size_t violations = 0;
  bool eps_is_inverse_lcm = false;
};
PartitionLemmaReport partition_lemma_check(const std::vector<SeifertPair> &strict,
                                           const Int &e);

inline constexpr std::size_t kPartitionCap = 12;

enum class ImShape { NotApplicable, OddMatch, OddMismatch, EvenShape1, EvenShape2, EvenNone };
std::string to_string(ImShape s);

struct ImShapeResult {
  ImShape shape = ImShape::NotApplicable;
  // witness for the even cases
  Int p, q, r, s;
  int x = 0, y = 0, z = 0;
  Int alpha; // odd case
  std::string to_string() const;
};

// Shape tests for k = 2e - 1 and k = 2e strict cone points.
ImShapeResult im_shape_check(const std::vector<SeifertPair> &strict, const Int &e);

std::vector<CriterionResult> necessary_battery(const ManifoldDescription &m);

EmbeddingVerdict verdict(const ManifoldDescription &m,
                         Category category = Category::LocallyFlat);

// Decisive special cases. Each throws std::invalid_argument when its shape
// precondition fails.
EmbeddingVerdict verdict_seifert_orientable_e0(const SeifertData &s,
                                               Category category = Category::LocallyFlat);
EmbeddingVerdict verdict_bundle(int base, const Int &e,
                                Category category = Category::LocallyFlat);
EmbeddingVerdict verdict_nonorientable_paired(const SeifertData &s,
                                              Category category = Category::LocallyFlat);
EmbeddingVerdict verdict_union_phi(const GluingMatrix &phi,
                                   Category category = Category::LocallyFlat);
EmbeddingVerdict verdict_torus_bundle(const TorusBundle &a,
                                      Category category = Category::LocallyFlat);
EmbeddingVerdict verdict_lens_sum(const LensSum &l,
                                  Category category = Category::LocallyFlat);

// Paired odd data (alpha, beta), (alpha, alpha - beta) over a non-orientable
// base.
bool is_paired_odd(const SeifertData &s);

// Conjugacy normal form of a parabolic or central monodromy:
// kind 0 = +-I, 1 = (1, b; 0, 1), -1 = (-1, b; 0, -1), 2 = other (elliptic
// or Anosov). `conjugator` P has P^-1 A P in that normal form.
struct TorusNormalForm {
  int kind = 2;
  Int b;
  std::array<Int, 4> conjugator{1, 0, 0, 1};
};
TorusNormalForm torus_normal_form(const TorusBundle &a);

FiniteAbelianGroup torus_bundle_homology(const TorusBundle &a);

// Lens-sum summands that pair off as L and -L (orientation-preserving
// homeomorphism classes).
bool lens_sum_pairs_as_double(const LensSum &l);
LinkingPairing lens_sum_pairing(const LensSum &l);

struct ComplementConstraints {
  int beta = 0;
  bool abelian_possible = false;
  std::string abelian_shape; // forced shape of pi_X, or empty
  bool nilpotent_possible = false;
  std::string nilpotent_shape;
  std::vector<int> euler_characteristics; // admissible chi(X)
};
// Arithmetic restrictions on complementary regions with abelian or nilpotent
// fundamental group, for beta = beta_1(M).
ComplementConstraints abelian_nilpotent_constraints(int beta);

} // namespace s4e
