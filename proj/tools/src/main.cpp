#include "acceptance/acceptance.hpp"
#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <thread>

using namespace s4e::cli;
using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> batch_lines(const std::string &path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

// Independent lines in parallel, output in input order.
std::vector<Report> run_batch(Subcommand cmd, const std::vector<std::string> &lines,
                              const Options &opt) {
  std::vector<Report> out(lines.size());
  std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t from = 0; from < lines.size(); from += width) {
    std::vector<std::future<Report>> fs;
    for (std::size_t i = from; i < std::min(lines.size(), from + width); ++i)
      fs.push_back(std::async(std::launch::async, run_input, cmd, lines[i], opt));
    for (std::size_t i = 0; i < fs.size(); ++i) out[from + i] = fs[i].get();
  }
  return out;
}

Report selftest(const std::vector<int> &ids) {
  namespace acc = s4e::acceptance;
  Report r;
  json cs = json::array();
  std::size_t passed = 0, failed = 0;
  auto add = [&](const acc::CriterionOutcome &o) {
    r.text += acc::format_line(o) + "\n";
    cs.push_back(json{{"id", o.id},
                      {"name", o.name},
                      {"passed", o.passed},
                      {"checks", o.checks},
                      {"failures", o.failures},
                      {"detail", o.detail},
                      {"seconds", o.seconds}});
    o.passed ? ++passed : ++failed;
  };
  if (ids.empty())
    acc::run_all(add);
  else
    for (int id : ids) add(acc::run_criterion(id));
  r.text += std::to_string(passed) + "/" + std::to_string(passed + failed) + " criteria passed\n";
  r.json = json{{"criteria", cs}, {"passed", passed}, {"failed", failed}};
  r.exit_code = failed ? kSelftestFailed : kComputed;
  return r;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"s4e: embedding obstructions and constructions for closed 3-manifolds in S^4"};
  app.set_version_flag("--version", "s4e 0.1.0 (json schema " + std::to_string(kSchemaVersion) + ")");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string category = "topological", batch, out_path, mode = "auto";
  std::string input;
  std::vector<int> criteria;
  app.add_flag("--json", opt.json, "JSON output (JSON Lines in batch mode)");
  app.add_option("--oracle-bound", opt.oracle_bound, "largest group order for brute-force isometry search")
      ->check(CLI::PositiveNumber);
  app.add_option("--conj-bound", opt.conj_bound, "entry bound for the torus-bundle conjugator search")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--category", category, "topological, smooth or both")
      ->check(CLI::IsMember({"topological", "smooth", "both"}));
  app.add_option("--batch", batch, "one input per line")->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "write the report to this file");

  auto add_input = [&](CLI::App *sub, const std::string &what) {
    sub->add_option("input", input, what);
  };
  auto *homology = app.add_subcommand("homology", "first homology H_1(M; Z)");
  add_input(homology, "manifold description");
  auto *pairing = app.add_subcommand("pairing", "torsion linking pairing and its invariants");
  add_input(pairing, "manifold description or pairing literal");
  pairing->add_option("--against", opt.against, "compare with another pairing or manifold");
  auto *verdict = app.add_subcommand("verdict", "embedding verdict with reasons");
  add_input(verdict, "manifold description");
  auto *realize = app.add_subcommand("realize", "Seifert data over S^2 with the given pairing");
  add_input(realize, "pairing literal");
  realize->add_option("--mode", mode, "Euler number: auto, zero or nonzero")
      ->check(CLI::IsMember({"auto", "zero", "nonzero"}));
  auto *nilpotent = app.add_subcommand("nilpotent", "homological balance of A x| Z");
  nilpotent->add_option("--semidirect", opt.semidirect, "Z/m x|_n Z as m,n");
  nilpotent->add_option("--abelian", opt.abelian, "abelian group Z/d1 + ... (0 = Z)");
  nilpotent->add_option("--field", opt.field, "Q or a prime p");
  auto *self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_option("--criterion", criteria, "run only these criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInputError;
  }

  opt.category = category == "smooth" ? CategoryFilter::Smooth
                 : category == "both" ? CategoryFilter::Both
                                      : CategoryFilter::Topological;
  opt.realize_mode = mode == "zero"      ? RealizeMode::Zero
                     : mode == "nonzero" ? RealizeMode::NonZero
                                         : RealizeMode::Auto;

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kInputError;
    }
  }
  std::ostream &out = out_path.empty() ? std::cout : file;

  auto emit = [&](const Report &r) {
    std::string s = render(r, opt.json);
    if (opt.json) s += "\n";
    if (!opt.json && r.exit_code == kInputError && out_path.empty() && batch.empty())
      std::cerr << s;
    else
      out << s;
  };

  if (nilpotent->parsed()) {
    auto r = run_nilpotent(opt);
    emit(r);
    return r.exit_code;
  }
  if (self->parsed()) {
    auto r = selftest(criteria);
    emit(r);
    return r.exit_code;
  }

  Subcommand cmd = homology->parsed()  ? Subcommand::Homology
                   : pairing->parsed() ? Subcommand::Pairing
                   : verdict->parsed() ? Subcommand::Verdict
                                       : Subcommand::Realize;
  if (input.empty() == batch.empty()) {
    std::cerr << "error: give exactly one input, either a literal or --batch FILE\n";
    return kInputError;
  }
  if (!batch.empty()) {
    auto lines = batch_lines(batch);
    auto reports = run_batch(cmd, lines, opt);
    int code = kComputed;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (!opt.json) out << "== " << lines[i] << "\n";
      emit(reports[i]);
      code = combine_exit(code, reports[i].exit_code);
    }
    return code;
  }
  auto r = run_input(cmd, input, opt);
  emit(r);
  return r.exit_code;
}
