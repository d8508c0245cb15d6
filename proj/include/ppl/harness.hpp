#pragma once

// Per-instance invariant reports, sweeps over all preorders and report output.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ppl/ehrhart.hpp"
#include "ppl/geometry.hpp"
#include "ppl/json_io.hpp"
#include "ppl/mtriangle.hpp"
#include "ppl/words.hpp"

namespace ppl {

enum class Verdict { pass, fail, not_applicable, sampled_pass };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::sampled_pass: return "sampled_pass";
  }
  return "?";
}

/// Canonical check order; theorem checks are marked.
struct CheckInfo {
  std::string name;
  bool theorem;
};

inline const std::vector<CheckInfo>& check_list() {
  static const std::vector<CheckInfo> list{
      {"ez_duality", true},        {"route_agreement", true}, {"hstar_filter", true},     {"hstar_words", false},
      {"hstar_ascstar", true},     {"magic", false},          {"zeta_minus_one", false},  {"qzeta", false},
      {"nabla_transpose", false},  {"h_palindromic", false},  {"h_unimodal", false},      {"h_gtheorem", false},
      {"gamma", false},            {"h_real_rooted", false},  {"h_dual", false},          {"m_duality", false},
      {"corner_maximal", false},   {"rtau_a", false},         {"rtau_b", false},          {"double_reciprocity", false},
      {"critical_line", false},
  };
  return list;
}

inline bool is_diagnostic(const std::string& check) { return check == "critical_line"; }

inline std::vector<std::string> all_checks() {
  std::vector<std::string> out;
  for (const auto& c : check_list()) out.push_back(c.name);
  return out;
}

/// "all" or a comma-separated subset of the check list, returned in canonical order.
inline std::vector<std::string> parse_checks(const std::string& spec) {
  if (spec.empty() || spec == "all") return all_checks();
  std::set<std::string> wanted;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    bool known = false;
    for (const auto& c : check_list()) known = known || c.name == item;
    if (!known) throw InputError("unknown check '" + item + "'");
    wanted.insert(item);
  }
  std::vector<std::string> out;
  for (const auto& c : check_list())
    if (wanted.count(c.name)) out.push_back(c.name);
  return out;
}

/// Size caps for the expensive checks; beyond them the verdict is not_applicable.
struct CheckCaps {
  int nabla = 4;
  int reflexive = 5;
  int double_ehrhart = 5;
  int nabla_k = 3, nabla_l = 3;
};

struct HarnessConfig {
  std::vector<std::string> checks = all_checks();
  std::vector<Rational> q_samples = default_q_samples();
  CheckCaps caps;
};

/// PPL_Q_SAMPLES as comma-separated rationals, else the default samples.
inline std::vector<Rational> q_samples_from_env() {
  const char* env = std::getenv("PPL_Q_SAMPLES");
  if (env == nullptr || *env == '\0') return default_q_samples();
  std::vector<Rational> out;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational q = parse_rational(item);
    if (q == 0 || q == 1) throw InputError("q sample must avoid 0 and 1: " + item);
    out.push_back(q);
  }
  if (out.empty()) throw InputError("PPL_Q_SAMPLES is empty");
  return out;
}

/// PPL_MAX_SIZE, else 5.
inline int max_size_from_env() {
  const char* env = std::getenv("PPL_MAX_SIZE");
  if (env == nullptr || *env == '\0') return 5;
  try {
    const int v = std::stoi(env);
    if (v < 1) throw InputError("PPL_MAX_SIZE must be positive");
    return std::min(v, kMaxEnumerationSize);
  } catch (const std::logic_error&) {
    throw InputError(std::string("bad PPL_MAX_SIZE '") + env + "'");
  }
}

struct ConjectureReport {
  std::string tau_key;
  int size = 0;
  json preorder;
  std::map<std::string, Verdict> verdicts;
  std::map<std::string, std::string> witnesses;
  json payload = json::object();
  double timing_ms = 0;

  [[nodiscard]] bool any_fail(bool include_diagnostics = false) const {
    for (const auto& [k, v] : verdicts)
      if (v == Verdict::fail && (include_diagnostics || !is_diagnostic(k))) return true;
    return false;
  }
};

namespace detail {

inline json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline json poly_json(const UniPoly& p) { return rationals_json(p.coeffs()); }

inline json ints_json(const UniPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_int64(c.get_num()));
  return a;
}

inline json bipoly_json(const BiPoly& p) {
  json rows = json::array();
  for (const auto& r : p.matrix()) rows.push_back(rationals_json(r));
  return rows;
}

inline std::string poly_witness(const UniPoly& a, const UniPoly& b) { return a.str() + " != " + b.str(); }

inline UniPoly int_poly(const std::vector<std::int64_t>& v) {
  std::vector<Rational> c;
  for (auto x : v) c.emplace_back(static_cast<long>(x));
  return UniPoly(c);
}

}  // namespace detail

inline ConjectureReport run_invariants(const Preorder& tau, const HarnessConfig& cfg = {}) {
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport rep;
  const int n = tau.size();
  rep.tau_key = canonical_key(tau);
  rep.size = n;
  rep.preorder = preorder_to_json(tau);
  const std::set<std::string> on(cfg.checks.begin(), cfg.checks.end());
  auto wants = [&](const char* c) { return on.count(c) > 0; };
  auto theorem_failed = [&](const std::string& check, const std::string& witness) {
    throw InternalError(check + " failed on " + rep.tau_key + ": " + witness);
  };
  auto record = [&](const std::string& check, bool ok, const std::string& witness, Verdict good = Verdict::pass) {
    rep.verdicts[check] = ok ? good : Verdict::fail;
    if (!ok) rep.witnesses[check] = witness;
  };

  // Data every report carries.
  const PointPoset P(tau, 1, 0);
  const auto hv = h_vector(P);
  const UniPoly h = detail::int_poly(hv);
  const EhrhartRecord rec = ehrhart_record(tau);
  const UniPoly zeta = zeta_polynomial(P);
  rep.payload["h_vector"] = hv;
  rep.payload["ehr"] = detail::poly_json(rec.ehr);
  rep.payload["hstar"] = detail::ints_json(rec.hstar);
  rep.payload["nvol"] = rec.nvol.get_str();
  rep.payload["route"] = route_name(rec.route);
  rep.payload["zeta"] = detail::poly_json(zeta);
  rep.payload["points"] = P.size();

  if (wants("ez_duality")) {
    const UniPoly dual_zeta = zeta_polynomial(PointPoset(tau.dual(), 1, 0)).compose_affine(1, 1);
    if (dual_zeta != rec.ehr) theorem_failed("ez_duality", detail::poly_witness(rec.ehr, dual_zeta));
    record("ez_duality", true, "");
  }
  if (wants("route_agreement")) {
    const UniPoly interp = ehrhart_interpolation(tau, 1, 0);
    if (interp != rec.ehr) theorem_failed("route_agreement", detail::poly_witness(rec.ehr, interp));
    const BigInt words = count_words(tau);
    if (words != rec.nvol) theorem_failed("route_agreement", "words " + words.get_str() + " != volume " + rec.nvol.get_str());
    record("route_agreement", true, "");
  }
  if (wants("hstar_filter")) {
    const UniPoly f = hstar_filter_formula(tau);
    if (f != rec.hstar) theorem_failed("hstar_filter", detail::poly_witness(f, rec.hstar));
    record("hstar_filter", true, "");
  }
  if (wants("hstar_words")) {
    const UniPoly w = hstar_words_descent(tau);
    record("hstar_words", w == rec.hstar, detail::poly_witness(w, rec.hstar));
  }
  if (wants("hstar_ascstar")) {
    if (!tau.minimum_vertex()) {
      rep.verdicts["hstar_ascstar"] = Verdict::not_applicable;
    } else {
      const UniPoly a = hstar_asc_star(tau);
      if (a != rec.hstar) theorem_failed("hstar_ascstar", detail::poly_witness(a, rec.hstar));
      record("hstar_ascstar", true, "");
    }
  }
  if (wants("magic")) {
    const auto c = magic_coefficients(rec.ehr, n);
    bool ok = true;
    for (const auto& x : c) ok = ok && x >= 0;
    rep.payload["magic_coeffs"] = detail::rationals_json(c);
    record("magic", ok, "magic coefficients " + rep.payload["magic_coeffs"].dump());
  }
  const long maximal = static_cast<long>(maximal_elements(P).size());
  rep.payload["maximal"] = maximal;
  if (wants("zeta_minus_one")) {
    const Rational lhs = zeta.eval(-1), rhs = Rational(n % 2 == 0 ? maximal : -maximal);
    record("zeta_minus_one", lhs == rhs, "Z(-1) = " + to_string(lhs) + ", expected " + to_string(rhs));
  }
  if (wants("qzeta")) {
    bool ok = true;
    std::string witness;
    for (const auto& q : cfg.q_samples) {
      const auto s = qzeta_sides(P, q);
      if (s.lhs != s.rhs) {
        ok = false;
        witness = "q=" + to_string(q) + ": " + to_string(s.lhs) + " != " + to_string(s.rhs);
        break;
      }
    }
    record("qzeta", ok, witness, Verdict::sampled_pass);
  }
  if (wants("nabla_transpose")) {
    if (n > cfg.caps.nabla) {
      rep.verdicts["nabla_transpose"] = Verdict::not_applicable;
    } else {
      const auto N = nabla_block(tau, cfg.caps.nabla_k, cfg.caps.nabla_l);
      const auto Nt = transpose(nabla_block(tau.dual(), cfg.caps.nabla_l, cfg.caps.nabla_k));
      record("nabla_transpose", N == Nt, "nabla block differs from the transposed dual block");
    }
  }
  if (wants("h_palindromic")) record("h_palindromic", is_palindromic(h, n), "h = " + json(hv).dump());
  if (wants("h_unimodal")) record("h_unimodal", is_unimodal_palindromic(hv), "h = " + json(hv).dump());
  if (wants("h_gtheorem")) record("h_gtheorem", is_polytopal_h(hv), "h = " + json(hv).dump());
  if (wants("gamma")) {
    const auto g = gamma_vector(h, n);
    bool ok = g.has_value();
    if (g) {
      for (const auto& x : *g) ok = ok && x >= 0 && is_integer(x);
      rep.payload["gamma"] = detail::rationals_json(*g);
    }
    record("gamma", ok, g ? "gamma = " + rep.payload["gamma"].dump() : "h not palindromic");
  }
  if (wants("h_real_rooted")) record("h_real_rooted", is_real_rooted(h), "h = " + json(hv).dump());
  if (wants("h_dual")) {
    const auto hd = h_vector(PointPoset(tau.dual(), 1, 0));
    record("h_dual", hd == hv, json(hv).dump() + " != " + json(hd).dump());
  }
  if (wants("m_duality") || wants("corner_maximal")) {
    const MTriangle M = m_triangle(P);
    const BiPoly T = transmute(M.poly);
    rep.payload["m_triangle"] = detail::bipoly_json(M.poly);
    rep.payload["transmuted"] = detail::bipoly_json(T);
    if (wants("m_duality")) record("m_duality", m_duality_check(T, n), "transmuted triangle is not symmetric");
    if (wants("corner_maximal")) {
      const Rational c = corner(T, n), expected(n % 2 == 0 ? maximal : -maximal);
      record("corner_maximal", c == expected, "corner " + to_string(c) + ", expected " + to_string(expected));
    }
  }
  if (wants("rtau_a") || wants("rtau_b")) {
    if (n > cfg.caps.reflexive) {
      if (wants("rtau_a")) rep.verdicts["rtau_a"] = Verdict::not_applicable;
      if (wants("rtau_b")) rep.verdicts["rtau_b"] = Verdict::not_applicable;
    } else {
      rep.payload["rvee_hstar"] = detail::ints_json(ehrhart_Rvee(tau).hstar);
      const auto rc = reflexive_conjecture_checks(tau);
      if (wants("rtau_a")) record("rtau_a", rc.rtau_a, "h*(R^vee) differs from the dual");
      if (wants("rtau_b")) {
        if (!rc.rtau_b) rep.verdicts["rtau_b"] = Verdict::not_applicable;
        else record("rtau_b", *rc.rtau_b, "h*(R^vee) is not the product over an ordinal-sum split");
      }
    }
  }
  if (wants("double_reciprocity")) {
    if (n > cfg.caps.double_ehrhart) {
      rep.verdicts["double_reciprocity"] = Verdict::not_applicable;
    } else {
      const BiPoly E = double_ehrhart(tau);
      rep.payload["double_ehrhart"] = detail::bipoly_json(E);
      record("double_reciprocity", double_reciprocity_check(E, n), "E(-u,-v) != (-1)^n E(u-1,v-1)");
    }
  }
  if (wants("critical_line")) {
    const UniPoly f = ehrhart_from_hstar(h, n);
    record("critical_line", roots_on_critical_line(f), "root off Re(z) = -1/2 for " + f.str());
  }
  rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

struct CheckTally {
  long pass = 0, fail = 0, not_applicable = 0, sampled_pass = 0;
};

struct SweepResult {
  std::vector<ConjectureReport> reports;
  std::map<std::string, CheckTally> summary;
};

inline std::map<std::string, CheckTally> summarize(const std::vector<ConjectureReport>& reports) {
  std::map<std::string, CheckTally> out;
  for (const auto& r : reports)
    for (const auto& [check, v] : r.verdicts) {
      auto& t = out[check];
      switch (v) {
        case Verdict::pass: ++t.pass; break;
        case Verdict::fail: ++t.fail; break;
        case Verdict::not_applicable: ++t.not_applicable; break;
        case Verdict::sampled_pass: ++t.sampled_pass; break;
      }
    }
  return out;
}

/// Runs job(i) for i in [0, count) on up to `jobs` threads. The first
/// exception is rethrown after all workers stop.
template <class Job>
void parallel_for(std::size_t count, int jobs, Job&& job) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || stop.load()) return;
      try {
        job(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

/// One report per isomorphism class of size 1..max_size, in enumeration order.
inline SweepResult run_sweep(int max_size, const HarnessConfig& cfg = {}, int jobs = 1, int cap = max_size_from_env()) {
  if (max_size < 1) throw InputError("max size must be positive");
  if (max_size > cap) throw SizeLimit("sweep size " + std::to_string(max_size) + " exceeds the cap " + std::to_string(cap));
  std::vector<Preorder> all;
  for (int n = 1; n <= max_size; ++n) {
    auto batch = enumerate_preorders(n);
    all.insert(all.end(), batch.begin(), batch.end());
  }
  SweepResult res;
  res.reports.resize(all.size());
  parallel_for(all.size(), jobs, [&](std::size_t i) { res.reports[i] = run_invariants(all[i], cfg); });
  res.summary = summarize(res.reports);
  return res;
}

inline json report_to_json(const ConjectureReport& r, bool with_timing = true) {
  json j;
  j["tau_key"] = r.tau_key;
  j["size"] = r.size;
  j["preorder"] = r.preorder;
  json checks = json::object();
  for (const auto& [k, v] : r.verdicts) checks[k] = verdict_name(v);
  j["checks"] = checks;
  j["witnesses"] = r.witnesses;
  for (const auto& [k, v] : r.payload.items()) j[k] = v;
  if (with_timing) j["timing_ms"] = r.timing_ms;
  return j;
}

enum class ReportFormat { json, csv };

inline void write_report(const std::vector<ConjectureReport>& reports, ReportFormat format, std::ostream& out, bool with_timing = true) {
  if (format == ReportFormat::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r, with_timing));
    out << arr.dump(1) << "\n";
    return;
  }
  out << "tau_key,size,check,verdict\n";
  for (const auto& r : reports)
    for (const auto& c : check_list()) {
      auto it = r.verdicts.find(c.name);
      if (it != r.verdicts.end()) out << '"' << r.tau_key << "\"," << r.size << ',' << c.name << ',' << verdict_name(it->second) << "\n";
    }
}

inline void emit_report(const std::vector<ConjectureReport>& reports, ReportFormat format, const std::string& path, bool with_timing = true) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  write_report(reports, format, f, with_timing);
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace ppl
