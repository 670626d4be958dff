#include "walshlab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "walshlab/counterexample.hpp"
#include "walshlab/kernels.hpp"
#include "walshlab/lebesgue.hpp"
#include "walshlab/limits.hpp"
#include "walshlab/martingale.hpp"

namespace walshlab::cli {

using Json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Report: one table plus metadata and a summary, rendered as CSV or JSON.

struct Report {
  std::string kind;
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  Json summary = Json::object();
};

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  return v.dump();
}

void write_csv(const Report& r, std::ostream& os) {
  os << "# schema=1 kind=" << r.kind << '\n';
  for (const auto& [key, value] : r.meta.items()) os << "# " << key << '=' << cell_text(value) << '\n';
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
  os << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
  for (const auto& [key, value] : r.summary.items()) os << "# summary " << key << '=' << cell_text(value) << '\n';
}

void write_json(const Report& r, std::ostream& os) {
  Json doc;
  doc["schema"] = 1;
  doc["kind"] = r.kind;
  doc["meta"] = r.meta;
  doc["columns"] = r.columns;
  Json records = Json::array();
  for (const auto& row : r.rows) {
    Json rec = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) rec[r.columns[i]] = row[i];
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  doc["summary"] = r.summary;
  os << doc.dump(2) << '\n';
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string frac(const Rational& v) { return to_fraction_string(v); }

bool is_bits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  if (!is_digits(s) || s.size() > 19) throw std::invalid_argument(std::string("malformed ") + what);
  return std::stoull(std::string(s));
}

std::vector<std::uint8_t> to_bits(std::string_view s) {
  std::vector<std::uint8_t> out;
  for (char c : s) out.push_back(static_cast<std::uint8_t>(c - '0'));
  return out;
}

Backend resolve_backend(const std::string& name, int depth) {
  if (name == "exact") return Backend::exact;
  if (name == "float") return Backend::floating;
  if (name == "auto") return auto_backend(depth);
  throw std::invalid_argument("backend must be exact, float or auto");
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_lebesgue(const CommandConfig& c, Report& r) {
  const FrequencyIndex n(c.n);
  const auto t = parse_t(c.t_spec);
  const auto b = lebesgue_exact(n, t);
  r.kind = "lebesgue";
  r.columns = {"n", "t", "L", "J1", "J2", "J3"};
  r.rows.push_back({Json(c.n), Json(t.to_string()), Json(to_string(b.total)), Json(to_string(b.j1)),
                    Json(to_string(b.j2)), Json(to_string(b.j3))});
  return kOk;
}

void print_lebesgue_text(const Report& r, std::ostream& os) {
  const auto& row = r.rows.front();
  os << cell_text(row[2]) << '\n';
  os << "J1=" << cell_text(row[3]) << " J2=" << cell_text(row[4]) << " J3=" << cell_text(row[5]) << '\n';
}

std::vector<std::string> scan_checks(const CommandConfig& c) {
  std::vector<std::string> checks = c.checks.empty() ? std::vector<std::string>{"ts", "mtk", "sws"} : c.checks;
  for (const auto& name : checks) {
    if (name != "ts" && name != "mtk" && name != "sws" && name != "toledo") {
      throw std::invalid_argument("unknown check '" + name + "' (expected ts, mtk, sws, toledo)");
    }
  }
  return checks;
}

int cmd_scan(const CommandConfig& c, Report& r) {
  const auto checks = scan_checks(c);
  const auto has = [&](const char* name) { return std::find(checks.begin(), checks.end(), name) != checks.end(); };

  ScanConfig sc;
  sc.exp_min = c.exp_min;
  sc.exp_max = c.exp_max;
  sc.sampling = c.samples > 0 ? TSampling::random : TSampling::exhaustive;
  sc.samples = c.samples;
  sc.seed = c.seed;
  sc.threads = c.threads;
  const ScanResult res = scan(sc);
  const ScanSummary& s = res.summary;

  r.kind = "scan";
  r.meta["exp_min"] = c.exp_min;
  r.meta["exp_max"] = c.exp_max;
  r.meta["sampling"] = sc.sampling == TSampling::random ? "random" : "exhaustive";
  r.meta["samples"] = c.samples;
  r.meta["seed"] = c.seed;
  std::string joined;
  for (const auto& name : checks) joined += (joined.empty() ? "" : ";") + name;
  r.meta["checks"] = joined;
  r.columns = {"n",        "N",        "t_bits",     "m",           "V_n",           "V_m",
               "T_nm",     "T_mn",     "L_num",      "L_den",       "upper_margin",  "lower_margin_C1",
               "lower_margin_C2",      "mtk_ok",     "sws_ok",      "lower_margin_C3/2",
               "lower_margin_swapped_C2",            "block_ok",    "quarter_variation_ok",  "violation"};
  for (const auto& b : res.records) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const bool violation = (has("ts") && (!b.upper_ok || b.lower_margin(2) < 0)) || (has("mtk") && !b.mtk_ok) ||
                           (has("sws") && !b.sws_ok);
    r.rows.push_back({Json(b.n), Json(b.level), Json(b.t_digest), Json(b.m), Json(b.v_n), Json(b.v_m),
                      Json(b.t_nm), Json(b.t_mn), Json(numerator(b.lebesgue).str()),
                      Json(denominator(b.lebesgue).str()), Json(frac(b.upper_margin)), Json(frac(b.lower_margin(1))),
                      Json(frac(b.lower_margin(2))), Json(b.mtk_ok), Json(b.sws_ok),
                      Json(frac(b.lower_margin(Rational(3, 2)))), Json(frac(b.lower_margin_swapped(2))),
                      Json(b.block_estimate_ok), Json(b.quarter_variation_ok), Json(violation)});
  }

  std::uint64_t violations = 0;
  r.summary["records"] = s.records;
  r.summary["upper_violations"] = s.upper_violations;
  r.summary["lower_violations_C1"] = s.lower_violations_c1;
  r.summary["lower_violations_C3/2"] = s.lower_violations_c3h;
  r.summary["lower_violations_C2"] = s.lower_violations_c2;
  r.summary["lower_violations_swapped_C2"] = s.lower_violations_swapped_c2;
  r.summary["block_estimate_violations"] = s.block_estimate_violations;
  r.summary["mtk_violations"] = s.mtk_violations;
  r.summary["sws_violations"] = s.sws_violations;
  r.summary["quarter_variation_violations"] = s.quarter_variation_violations;
  if (s.records > 0) {
    r.summary["min_lower_slack"] = frac(s.min_lower_slack);
    r.summary["min_lower_slack_n"] = s.min_slack_n;
    r.summary["min_lower_slack_t"] = s.min_slack_t;
    r.summary["min_lower_slack_swapped"] = frac(s.min_lower_slack_swapped);
    r.summary["max_upper_tightness"] = frac(s.max_upper_tightness);
  }
  if (has("ts")) violations += s.upper_violations + s.lower_violations_c2;
  if (has("mtk")) violations += s.mtk_violations;
  if (has("sws")) violations += s.sws_violations;
  if (has("toledo")) {
    const std::uint64_t n_max =
        std::min<std::uint64_t>((std::uint64_t{2} << c.exp_max) - 1, std::uint64_t{1} << 14);
    const auto tol = fejer_norm_scan(n_max);
    r.summary["fejer_scan_n_max"] = n_max;
    r.summary["fejer_scan_max"] = frac(tol.max_norm);
    r.summary["fejer_scan_argmax"] = tol.argmax;
    r.summary["fejer_scan_violations"] = tol.violations;
    violations += tol.violations;
  }
  r.summary["violations"] = violations;
  return violations == 0 ? kOk : kViolation;
}

int cmd_fejer_norms(const CommandConfig& c, Report& r) {
  const auto t = parse_t(c.t_spec);
  const std::uint64_t samples = c.samples > 0 ? c.samples : 64;
  const auto rows = rational_sweep(t, c.exp_min, c.exp_max, samples, c.seed, c.threads);
  r.kind = "fejer-norms";
  r.meta["t"] = t.to_string();
  r.meta["samples"] = samples;
  r.meta["seed"] = c.seed;
  r.columns = {"N", "samples", "max_norm", "max_norm_float", "argmax", "above_17_15"};
  std::uint64_t above = 0;
  for (const auto& row : rows) {
    r.rows.push_back({Json(row.level), Json(row.samples), Json(frac(row.max_norm)), Json(fmt12(to_double(row.max_norm))),
                      Json(row.argmax), Json(row.above_fejer_bound)});
    above += row.above_fejer_bound;
  }
  // Only t = 0 carries the 17/15 bound.
  const bool t_zero = t == ConjugateParameter{};
  r.summary["above_17_15"] = above;
  r.summary["violations"] = t_zero ? above : 0;
  return t_zero && above > 0 ? kViolation : kOk;
}

int cmd_counterexample(const CommandConfig& c, Report& r) {
  const auto pattern = parse_pattern(c.pattern);
  const bool exact_only = c.backend == "exact";
  if (c.backend != "exact" && c.backend != "float" && c.backend != "auto") {
    throw std::invalid_argument("backend must be exact, float or auto");
  }
  if (exact_only && c.a_max > kShadowMaxA) {
    throw ResourceCapError("counterexample: exact backend runs only up to A = 3");
  }
  const auto rows = growth_run(c.a_max, pattern, c.threads, true);
  r.kind = "counterexample";
  r.meta["pattern"] = c.pattern;
  r.meta["t"] = pattern.parameter().to_string();
  r.columns = {"A", "n", "depth", "yA", "kernel_l1_num_or_float", "llogl_fA", "orlicz_lb_Q1", "orlicz_lb_Q2"};
  std::uint64_t violations = 0;
  for (const auto& row : rows) {
    const Json y = exact_only ? Json(frac(*row.y_exact)) : Json(fmt12(row.y));
    r.rows.push_back({Json(row.a), Json(row.n), Json(row.depth), y, Json(frac(row.kernel_l1)), Json(fmt12(row.llogl)),
                      Json(fmt12(row.orlicz_q1)), Json(fmt12(row.orlicz_q2))});
    if (row.y_exact) {
      const std::string key = "shadow_A" + std::to_string(row.a);
      r.summary[key + "_exact"] = frac(*row.y_exact);
      r.summary[key + "_rel_error"] = fmt12(row.shadow_rel_error);
      if (row.shadow_rel_error > 1e-9) ++violations;
    }
  }
  r.summary["violations"] = violations;
  return violations == 0 ? kOk : kViolation;
}

int cmd_kernel(const CommandConfig& c, Report& r) {
  KernelSpec spec;
  spec.kind = parse_kernel_kind(c.kind);
  spec.n = c.n;
  spec.t = parse_t(c.t_spec);
  spec.depth = c.depth;
  const KernelValues values = materialize(spec);
  const Backend backend = resolve_backend(c.backend, values.depth);

  r.kind = "kernel";
  r.meta["kind"] = kernel_kind_name(spec.kind);
  r.meta["n"] = c.n;
  r.meta["t"] = spec.t.to_string();
  r.meta["depth"] = values.depth;
  r.meta["backend"] = backend == Backend::exact ? "exact" : "float";
  r.meta["l1_norm"] = frac(values.l1_norm());
  r.columns = {"c", "value"};
  if (backend == Backend::exact) {
    const auto f = values.to_exact();
    for (std::size_t i = 0; i < f.size(); ++i) r.rows.push_back({Json(i), Json(frac(f[i]))});
  } else {
    const auto f = values.to_float();
    for (std::size_t i = 0; i < f.size(); ++i) r.rows.push_back({Json(i), Json(fmt12(f[i]))});
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// selftest

ExactFunction random_exact(int depth, std::mt19937_64& rng) {
  std::vector<Rational> v(std::size_t{1} << depth);
  for (auto& x : v) x = Rational(static_cast<std::int64_t>(rng() % 17) - 8);
  return ExactFunction(depth, std::move(v));
}

ConjugateParameter random_t(int bits, std::mt19937_64& rng) {
  return ConjugateParameter::from_prefix_pattern(rng(), bits);
}

int cmd_selftest(const CommandConfig& c, Report& r) {
  std::mt19937_64 rng(c.seed);
  r.kind = "selftest";
  r.meta["seed"] = c.seed;
  r.columns = {"check", "cases", "violations"};
  std::uint64_t total = 0;
  const auto record = [&](const char* name, std::uint64_t cases, std::uint64_t bad) {
    r.rows.push_back({Json(name), Json(cases), Json(bad)});
    total += bad;
  };

  {
    std::uint64_t cases = 0, bad = 0;
    for (std::uint64_t n = 1; n < 256; ++n) {
      for (int k = 0; k < 8; ++k) {
        const FrequencyIndex idx(n);
        const auto t = random_t(idx.msb() + 1, rng);
        ++cases;
        if (lebesgue_exact(idx, t).total != lebesgue_bruteforce(idx, t)) ++bad;
      }
    }
    record("lebesgue_closed_vs_bruteforce", cases, bad);
  }
  {
    std::uint64_t cases = 0, bad = 0;
    for (std::uint64_t n = 1; n <= 64; ++n) {
      ++cases;
      if (dirichlet<Rational>(n, 7, false) != dirichlet<Rational>(n, 7, true)) ++bad;
    }
    record("dirichlet_closed_vs_spectral", cases, bad);
  }
  {
    std::uint64_t cases = 0, bad = 0;
    for (std::uint64_t n = 1; n < 128; ++n) {
      for (int k = 0; k < 16; ++k) {
        const auto t = ConjugateParameter::from_prefix_pattern(static_cast<std::uint64_t>(k) * 0x2D, 9);
        ++cases;
        if (conjugate_dirichlet_values(n, t, 7) != conjugate_dirichlet_block_values(n, t, 7)) ++bad;
      }
    }
    record("conjugate_dirichlet_two_forms", cases, bad);
  }
  {
    std::uint64_t cases = 0, bad = 0;
    for (std::uint64_t n = 1; n <= 32; ++n) {
      for (int k = 0; k < 4; ++k) {
        const auto t = random_t(7, rng);
        ++cases;
        if (conjugate_fejer_kernel<Rational>(n, t, 6, true) != conjugate_fejer_kernel<Rational>(n, t, 6, false)) ++bad;
      }
    }
    record("conjugate_fejer_spectral_vs_summation", cases, bad);
  }
  {
    std::uint64_t cases = 0, bad = 0;
    for (int k = 0; k < 20; ++k) {
      const auto f = random_exact(6, rng);
      const auto t = random_t(8, rng);
      for (int m = 0; m <= 6; ++m) {
        ++cases;
        if (conjugate_truncation(f, m, t) != conjugate_truncation_telescoped(f, m, t)) ++bad;
      }
    }
    record("truncation_telescoped_identity", cases, bad);
  }
  {
    std::uint64_t cases = 0, bad = 0;
    for (int k = 0; k < 20; ++k) {
      const auto f = random_exact(6, rng);
      const auto t = random_t(8, rng);
      ++cases;
      if (square_function_squared(f) != square_function_squared(conjugate_transform(f, t))) ++bad;
    }
    record("square_function_invariance", cases, bad);
  }
  {
    std::uint64_t cases = 0, bad = 0;
    for (std::uint64_t n = 1; n < (1U << 12); ++n) {
      const FrequencyIndex idx(n);
      ++cases;
      if (weighted_sum_S(idx) * 3 < variation(idx)) ++bad;
    }
    record("weighted_sum_lower_bound", cases, bad);
  }
  {
    std::uint64_t cases = 0, bad = 0;
    for (std::uint64_t n = 1; n < (1U << 12); ++n) {
      const FrequencyIndex idx(n);
      const auto rep = check_bounds(idx, ConjugateParameter{});
      ++cases;
      if (!rep.mtk_ok || !rep.sws_ok || rep.classical != rep.lebesgue) ++bad;
    }
    record("classical_bounds_t0", cases, bad);
  }
  r.summary["violations"] = total;
  return total == 0 ? kOk : kViolation;
}

}  // namespace

ConjugateParameter parse_t(std::string_view spec) {
  if (spec == "0") return ConjugateParameter{};
  constexpr std::string_view prefix = "bits:";
  if (spec.substr(0, prefix.size()) == prefix) {
    std::string_view rest = spec.substr(prefix.size());
    const auto open = rest.find('(');
    const std::string_view pre = rest.substr(0, open);
    // Empty preperiod allowed before a period.
    const bool pre_ok = is_bits(pre) || (pre.empty() && open != std::string_view::npos);
    if (!pre_ok) throw std::invalid_argument("malformed t spec: expected bits:BITS[(BITS)]");
    if (open == std::string_view::npos) return ConjugateParameter::from_bits(to_bits(pre));
    if (rest.back() != ')') throw std::invalid_argument("malformed t spec: missing ')'");
    const std::string_view per = rest.substr(open + 1, rest.size() - open - 2);
    if (!is_bits(per)) throw std::invalid_argument("malformed t spec: period must be BITS");
    return ConjugateParameter::from_bits(to_bits(pre), to_bits(per));
  }
  const auto slash = spec.find('/');
  if (slash != std::string_view::npos) {
    const std::uint64_t p = parse_u64(spec.substr(0, slash), "t numerator");
    const std::uint64_t q = parse_u64(spec.substr(slash + 1), "t denominator");
    if (q == 0) throw std::invalid_argument("t spec: zero denominator");
    if (p >= q) throw std::invalid_argument("t spec: value outside [0, 1)");
    return ConjugateParameter::from_rational(p, q);
  }
  throw std::invalid_argument("malformed t spec '" + std::string(spec) + "' (expected P/Q, bits:..., or 0)");
}

BlockParameter parse_pattern(std::string_view spec) {
  if (spec == "alternating") return BlockParameter::alternating();
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const auto token = spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    parts.push_back(static_cast<int>(parse_u64(token, "pattern")));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw std::invalid_argument("pattern must be 'alternating' or 'Q1,P1,PERIOD'");
  return BlockParameter::periodic(parts[0], parts[1], parts[2]);
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  int status = kOk;
  try {
    if (config.format != "csv" && config.format != "json") throw std::invalid_argument("format must be csv or json");
    if (config.subcommand == "lebesgue") {
      status = cmd_lebesgue(config, report);
    } else if (config.subcommand == "scan") {
      status = cmd_scan(config, report);
    } else if (config.subcommand == "fejer-norms") {
      status = cmd_fejer_norms(config, report);
    } else if (config.subcommand == "counterexample") {
      status = cmd_counterexample(config, report);
    } else if (config.subcommand == "kernel") {
      status = cmd_kernel(config, report);
    } else if (config.subcommand == "selftest") {
      status = cmd_selftest(config, report);
    } else {
      throw std::invalid_argument("unknown subcommand '" + config.subcommand + "'");
    }
  } catch (const ResourceCapError& e) {
    err << "walshlab: resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "walshlab: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  if (config.format == "json") {
    write_json(report, buffer);
  } else if (report.kind == "lebesgue") {
    print_lebesgue_text(report, buffer);
  } else {
    write_csv(report, buffer);
  }

  if (config.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "walshlab: cannot open " << config.out << '\n';
      return kUsage;
    }
    file << buffer.str();
  }
  if (status == kViolation) err << "walshlab: invariant violations detected\n";
  return status;
}

}  // namespace walshlab::cli
