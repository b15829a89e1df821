#pragma once

#include "parse.hpp"

#include "s4e/nilpotent.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace s4e::cli {

enum ExitCode {
  kComputed = 0,
  kInputError = 1,
  kUnknownDueToBound = 2,
  kSelftestFailed = 3,
};

enum class Subcommand { Homology, Pairing, Verdict, Realize, Nilpotent, Selftest };
enum class CategoryFilter { Topological, Smooth, Both };
enum class RealizeMode { Auto, Zero, NonZero };

inline constexpr int kSchemaVersion = 1;

struct Options {
  bool json = false;
  long oracle_bound = kDefaultOracleBound;
  long conj_bound = 20;
  CategoryFilter category = CategoryFilter::Topological;
  RealizeMode realize_mode = RealizeMode::Auto;
  std::string against; // pairing: compare with this pairing or manifold
  std::string semidirect; // nilpotent: "m,n"
  std::string abelian;    // nilpotent: "d1,d2,..." (0 = Z)
  std::string field;      // nilpotent: "Q" or a prime
};

struct Report {
  int exit_code = kComputed;
  std::string text;
  nlohmann::ordered_json json;
};

// One input line for homology, pairing, verdict or realize; errors become
// reports with exit code 1.
Report run_input(Subcommand cmd, const std::string &input, const Options &opt);
Report run_nilpotent(const Options &opt);

std::string render(const Report &r, bool json);

// 1 beats 2 beats 0.
int combine_exit(int a, int b);

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json json_int(const Int &n);
nlohmann::ordered_json json_group(const FiniteAbelianGroup &g);

FiniteAbelianGroup homology_of(const ManifoldDescription &m);

// GL_2(Z) matrices P with |entries| <= bound and A P = P N.
std::optional<std::array<long, 4>> find_conjugator(const TorusBundle &a, const TorusBundle &n,
                                                   long bound);

} // namespace s4e::cli
