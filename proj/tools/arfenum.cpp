#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arf/errors.hpp"
#include "arf/genus1.hpp"
#include "arf/genusr.hpp"
#include "arf/io.hpp"
#include "arf/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

int run_gen1(int genus, bool count_only, bool pretty) {
  const auto seqs = arf::enumerate_genus(genus);
  if (count_only) {
    std::cout << seqs.size() << "\n";
    return kExitOk;
  }
  if (pretty) {
    for (const auto& m : seqs) std::cout << m.to_string() << "\n";
    return kExitOk;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& m : seqs) j.push_back(arf::to_json(m));
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_genr(arf::TreeEnumerator& enumerator, int rank, int genus,
             bool twisted, bool count_only, bool pretty) {
  if (twisted) {
    if (count_only) {
      std::cout << enumerator.twisted_count(rank, genus) << "\n";
      return kExitOk;
    }
    const auto matrices = enumerator.twisted_list(rank, genus);
    if (pretty) {
      for (const auto& m : matrices) std::cout << m.to_string() << "\n";
      return kExitOk;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& m : matrices) j.push_back(arf::to_json(m));
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  if (count_only) {
    std::cout << enumerator.count(rank, genus) << "\n";
    return kExitOk;
  }
  const auto trees = enumerator.list(rank, genus);
  if (pretty) {
    for (const auto& t : trees) std::cout << t.to_string() << "\n";
    return kExitOk;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& t : trees) j.push_back(arf::to_json(t));
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_table(arf::TreeEnumerator& enumerator, int rank_max, int genus_max,
              bool twisted, bool with_ng) {
  const auto table = twisted
                         ? enumerator.twisted_count_table(rank_max, genus_max)
                         : enumerator.count_table(rank_max, genus_max);
  std::vector<unsigned long long> ng_row;
  if (with_ng)
    for (int n = 0; n <= genus_max; ++n) ng_row.push_back(enumerator.ng(n));
  std::cout << arf::count_table_csv(table, genus_max,
                                    with_ng ? &ng_row : nullptr);
  return kExitOk;
}

int run_render(const std::string& path, const std::string& format,
               int twisted_cap) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open " << path << "\n";
      return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const auto matrix =
      arf::matrix_from_json(nlohmann::json::parse(text), twisted_cap);
  std::cout << (format == "ascii" ? arf::render_ascii(matrix)
                                  : arf::render_dot(matrix));
  return kExitOk;
}

int run_verify(arf::TreeEnumerator& enumerator, int rank, int genus,
               const std::string& level) {
  if (rank > 4 || (rank == 1 && genus > 12) || (rank > 1 && genus > 8)) {
    std::cerr << "verify is limited to rank <= 4 with genus <= 8 "
                 "(genus <= 12 for rank 1)\n";
    return kExitUsage;
  }
  nlohmann::json report;
  report["rank"] = rank;
  report["genus"] = genus;
  report["level"] = level;
  bool ok = true;

  const auto mine = enumerator.list(rank, genus);
  const auto oracle = arf::brute_force_genus_trees(rank, genus);
  const bool oracle_ok = mine == oracle;
  report["oracle_equivalence"] = oracle_ok;
  ok = ok && oracle_ok;

  bool genus_ok = true;
  for (const auto& t : mine) genus_ok = genus_ok && t.genus() == genus;
  report["genus_correct"] = genus_ok;
  ok = ok && genus_ok;

  if (level == "full") {
    bool chain_ok = true;
    arf::AxiomReport good_total, arf_total;
    for (const auto& t : mine) {
      chain_ok = chain_ok && arf::chain_genus(t) == t.genus();
      auto box = t.conductor();
      for (auto& b : box) b += 2;
      const auto s = arf::expand_semigroup(t, box);
      const auto good = arf::check_good_axioms(s);
      const auto arf_rep = arf::check_arf_axiom(s);
      good_total.checked += good.checked;
      good_total.unchecked += good.unchecked;
      good_total.local = good_total.local && good.local;
      good_total.nonlocal_witnesses.insert(good_total.nonlocal_witnesses.end(),
                                           good.nonlocal_witnesses.begin(),
                                           good.nonlocal_witnesses.end());
      good_total.violations.insert(good_total.violations.end(),
                                   good.violations.begin(),
                                   good.violations.end());
      arf_total.checked += arf_rep.checked;
      arf_total.unchecked += arf_rep.unchecked;
      arf_total.violations.insert(arf_total.violations.end(),
                                  arf_rep.violations.begin(),
                                  arf_rep.violations.end());
    }
    report["chain_genus_consistent"] = chain_ok;
    report["good_axioms"] = arf::to_json(good_total);
    report["arf_axiom"] = arf::to_json(arf_total);
    ok = ok && chain_ok && good_total.clean() && good_total.local &&
         arf_total.clean();
  }

  report["pass"] = ok;
  std::cout << report.dump(2) << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumeration of Arf semigroups of N^r by genus"};
  app.require_subcommand(1);
  // let global options (--jobs) appear after the subcommand name
  app.fallthrough();

  int jobs = 1;
  app.add_option("--jobs", jobs,
                 "worker threads for the enumeration (ARF_ENUM_JOBS, when "
                 "set, takes precedence)")
      ->check(CLI::PositiveNumber);

  auto* gen1 = app.add_subcommand("gen1", "list Gen(n) for rank 1");
  int g1_genus = 0;
  bool g1_count = false, g1_pretty = false;
  gen1->add_option("--genus,-n", g1_genus, "target genus")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gen1->add_flag("--count", g1_count, "print the cardinality only");
  gen1->add_flag("--pretty", g1_pretty, "one sequence per line");

  auto* genr = app.add_subcommand("genr", "list Gen(r,n) or Gen-bar(r,n)");
  int gr_rank = 1, gr_genus = 0, gr_cap = 8;
  bool gr_twisted = false, gr_count = false, gr_pretty = false;
  genr->add_option("-r,--rank", gr_rank, "rank r")
      ->required()
      ->check(CLI::PositiveNumber);
  genr->add_option("-n,--genus", gr_genus, "target genus")
      ->required()
      ->check(CLI::NonNegativeNumber);
  genr->add_flag("--twisted", gr_twisted, "include twisted trees (matrices)");
  genr->add_flag("--count", gr_count, "print the cardinality only");
  genr->add_flag("--pretty", gr_pretty, "one tree per line");
  genr->add_option("--max-twisted-rank", gr_cap,
                   "permutation cap for --twisted (default 8)");

  auto* table = app.add_subcommand("table", "count table as CSV");
  int tb_rmax = 1, tb_nmax = 0, tb_cap = 8;
  bool tb_twisted = false, tb_ng = false;
  table->add_option("--rmax", tb_rmax, "largest rank")
      ->required()
      ->check(CLI::PositiveNumber);
  table->add_option("--nmax", tb_nmax, "largest genus")
      ->required()
      ->check(CLI::NonNegativeNumber);
  table->add_flag("--twisted", tb_twisted, "count Gen-bar instead of Gen");
  table->add_flag("--ng", tb_ng, "append the NG row (untwisted totals)");
  table->add_option("--max-twisted-rank", tb_cap,
                    "permutation cap for --twisted (default 8)");

  auto* render = app.add_subcommand("render", "draw a tree from JSON");
  std::string rd_path, rd_format = "dot";
  int rd_cap = 8;
  render->add_option("file", rd_path, "tree JSON file (default stdin)");
  render->add_option("--format", rd_format, "dot or ascii")
      ->check(CLI::IsMember({"dot", "ascii"}));
  render->add_option("--max-twisted-rank", rd_cap,
                     "permutation cap for matrix input (default 8)");

  auto* verify = app.add_subcommand("verify", "run the oracle suite");
  int vf_rank = 1, vf_genus = 0;
  std::string vf_level = "full";
  verify->add_option("-r,--rank", vf_rank, "rank r")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("-n,--genus", vf_genus, "target genus")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--level", vf_level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (const char* env = std::getenv("ARF_ENUM_JOBS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) jobs = parsed;
  }

  try {
    if (gen1->parsed()) return run_gen1(g1_genus, g1_count, g1_pretty);
    if (genr->parsed()) {
      arf::TreeEnumerator enumerator({gr_cap, jobs});
      return run_genr(enumerator, gr_rank, gr_genus, gr_twisted, gr_count,
                      gr_pretty);
    }
    if (table->parsed()) {
      arf::TreeEnumerator enumerator({tb_cap, jobs});
      if (tb_twisted && tb_ng) {
        std::cerr << "--ng applies to the untwisted table only\n";
        return kExitUsage;
      }
      return run_table(enumerator, tb_rmax, tb_nmax, tb_twisted, tb_ng);
    }
    if (render->parsed()) return run_render(rd_path, rd_format, rd_cap);
    if (verify->parsed()) {
      arf::TreeEnumerator enumerator({8, jobs});
      return run_verify(enumerator, vf_rank, vf_genus, vf_level);
    }
  } catch (const arf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == arf::errc::rank_too_large_for_twisted ? kExitCapExceeded
                                                             : kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
