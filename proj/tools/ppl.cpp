#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ppl/families.hpp"
#include "ppl/harness.hpp"

using namespace ppl;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw InputError("unknown format '" + s + "'");
}

void print_summary(const std::map<std::string, CheckTally>& summary, std::size_t reports) {
  std::cout << reports << " reports\n";
  for (const auto& c : check_list()) {
    auto it = summary.find(c.name);
    if (it == summary.end()) continue;
    const auto& t = it->second;
    std::cout << "  " << c.name << ": pass " << t.pass << ", sampled_pass " << t.sampled_pass << ", not_applicable " << t.not_applicable
              << ", fail " << t.fail << (is_diagnostic(c.name) ? " (diagnostic)" : "") << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Preorder polytope invariants and conjecture checks"};
  app.require_subcommand(1);

  std::string path, checks = "all", out, format = "json";
  auto* validate = app.add_subcommand("validate", "Parse a preorder file and print its canonical key");
  validate->add_option("file", path, "preorder JSON")->required();

  auto* inv = app.add_subcommand("invariants", "Compute invariants and run checks on one preorder");
  inv->add_option("file", path, "preorder JSON")->required();
  inv->add_option("--checks", checks, "comma-separated checks or 'all'");
  inv->add_option("--out", out, "output file (default stdout)");
  inv->add_option("--format", format, "json or csv");

  int max_size = 0, jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "Run checks on every preorder up to a size");
  sweep->add_option("--max-size", max_size, "largest size")->required();
  sweep->add_option("--checks", checks, "comma-separated checks or 'all'");
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_option("--out", out, "output file")->required();
  sweep->add_option("--format", format, "json or csv");

  std::string name;
  int n = 0, m = 0, k = 0;
  std::string emit;
  auto* fam = app.add_subcommand("family", "Build a member of an example family");
  fam->add_option("name", name, "family name")->required();
  fam->add_option("--n", n, "index")->required();
  fam->add_option("--m", m, "lower antichain size (antichain_sum)");
  fam->add_option("--k", k, "vertex size (k_chain)");
  fam->add_option("--emit", emit, "write the preorder JSON here");

  int order = 0;
  auto* ser = app.add_subcommand("series", "Check a generating-function identity");
  ser->add_option("identity", name, "identity name")->required();
  ser->add_option("--order", order, "truncation order")->required();
  ser->add_option("--k", k, "vertex size for k_chain_exp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*validate) {
    const Preorder t = load_preorder(path);
    std::cout << "ok: " << t.size() << " elements, " << t.num_vertices() << " vertices, key " << canonical_key(t) << "\n";
    return 0;
  }
  if (*inv) {
    HarnessConfig cfg;
    cfg.checks = parse_checks(checks);
    cfg.q_samples = q_samples_from_env();
    const auto f = parse_format(format);
    const auto rep = run_invariants(load_preorder(path), cfg);
    if (out.empty()) write_report({rep}, f, std::cout);
    else emit_report({rep}, f, out);
    return rep.any_fail() ? kExitFail : 0;
  }
  if (*sweep) {
    HarnessConfig cfg;
    cfg.checks = parse_checks(checks);
    cfg.q_samples = q_samples_from_env();
    const auto f = parse_format(format);
    const auto res = run_sweep(max_size, cfg, jobs);
    emit_report(res.reports, f, out);
    print_summary(res.summary, res.reports.size());
    for (const auto& r : res.reports)
      if (r.any_fail()) return kExitFail;
    return 0;
  }
  if (*fam) {
    const FamilySpec spec{parse_family(name), n, m, k};
    const Preorder t = build_family(spec);
    const json doc = preorder_to_json(t);
    if (emit.empty()) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ofstream f(emit);
      if (!f) throw IoError("cannot open '" + emit + "' for writing");
      f << doc.dump(2) << "\n";
      const auto d = family_data(t);
      std::cout << family_name(spec.name) << ": " << t.size() << " elements, " << d.count.get_str() << " points, h = " << d.h.str() << "\n";
    }
    return 0;
  }
  if (*ser) {
    const auto res = series_identity_check(parse_series_identity(name), order, k == 0 ? 2 : k);
    std::cout << "lhs: " << res.lhs.str() << "\nrhs: " << res.rhs.str() << "\n";
    std::cout << "counts lhs: " << res.lhs_count.str() << "\ncounts rhs: " << res.rhs_count.str() << "\n";
    std::cout << (res.ok() ? "pass" : "fail") << "\n";
    return res.ok() ? 0 : kExitFail;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
