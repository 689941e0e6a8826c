#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 success / witness / member, 3 empty / non-member /
// counterexample found, 2 usage or constraint error, 1 internal failure.

#include "mlr/decider.hpp"
#include "mlr/explorer.hpp"
#include "mlr/identities.hpp"
#include "mlr/io.hpp"
#include "mlr/rational.hpp"
#include "mlr/safe_model.hpp"
#include "mlr/verification.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mlr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNegative = 3;

namespace detail {

using io::Json;

struct Context {
  std::ostream& out;
  std::string format = "json";
  bool decimals = false;

  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
  void require_json(const std::string& command) const {
    if (format != "json") throw DomainError("csv output is not available for '" + command + "'");
  }
};

inline std::string join_speeds(const std::vector<std::int64_t>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

inline MlrcInstance parse_instance(const std::string& speeds, const std::string& deltas) {
  MlrcInstance inst{io::parse_speed_list(speeds), io::parse_rational_list(deltas)};
  inst.validate();
  return inst;
}

inline int cmd_check(const Context& ctx, const std::string& speeds, const std::string& deltas) {
  ctx.require_json("check");
  auto inst = parse_instance(speeds, deltas);
  Verdict v = decide_mlrc(inst);
  Json j{{"command", "check"}};
  j.update(io::to_json(inst, v, ctx.decimals));
  ctx.emit(j);
  return v.is_witness() ? kExitOk : kExitNegative;
}

inline int cmd_mlps2(const Context& ctx, const std::string& deltas) {
  ctx.require_json("mlps2");
  auto d = io::parse_rational_list(deltas);
  if (d.size() != 2) throw DomainError("mlps2 takes exactly two thresholds");
  auto r = mlps2_membership(d[0], d[1]);
  Json j{{"command", "mlps2"}, {"thresholds", io::to_json(d)}, {"member", r.member}};
  Json violated = Json::array();
  Json details = Json::array();
  for (const auto& v : r.violations) {
    violated.push_back(std::string(inequality_id(v.inequality)));
    MlrcInstance witness{{v.witness_speeds[0], v.witness_speeds[1]}, d};
    details.push_back({{"inequality", std::string(inequality_id(v.inequality))},
                       {"lhs", v.lhs.str()},
                       {"witness_speeds", Json::array({v.witness_speeds[0], v.witness_speeds[1]})},
                       {"witness_outcome", std::string(to_string(decide_mlrc(witness).outcome))}});
  }
  j["violated"] = std::move(violated);
  j["violations"] = std::move(details);
  ctx.emit(j);
  return r.member ? kExitOk : kExitNegative;
}

struct SumArgs {
  std::int64_t speed = 1;
  std::int64_t modulus = 1;
  std::string delta;
  std::string time = "0";
  std::int64_t corollary_n = 0;
  bool both = false;
};

inline int cmd_sum(const Context& ctx, const SumArgs& a) {
  ctx.require_json("sum");
  const Rational t = Rational::parse(a.time);
  Json j{{"command", "sum"}, {"speed", a.speed}, {"modulus", a.modulus}};
  Rational delta;
  if (a.corollary_n > 0) {
    delta = Rational(Integer(1), Integer(a.corollary_n));
    if (!a.delta.empty() && Rational::parse(a.delta) != delta)
      throw DomainError("--delta must equal 1/n when --corollary n is given");
  } else {
    if (a.delta.empty()) throw DomainError("--delta is required unless --corollary is given");
    delta = Rational::parse(a.delta);
  }
  ProgressionQuery q{a.speed, a.modulus, delta, t};
  q.validate();
  j["threshold"] = delta.str();
  j["time"] = t.str();
  bool consistent = true;
  if (a.corollary_n > 0) {
    Rational c = progression_sum_corollary(a.speed, a.corollary_n, a.modulus, t);
    j["n"] = a.corollary_n;
    j["value"] = c.str();
    if (a.both) {
      Rational f = progression_sum_formula(q);
      j["formula"] = f.str();
      consistent = c == f;
    }
  } else {
    auto terms = progression_sum_terms(q);
    j["value"] = terms.value.str();
    if (a.both) {
      j["terms"] = {{"gcd", terms.common_divisor},
                    {"reduced_modulus", terms.reduced_modulus},
                    {"lcm", terms.period_lcm},
                    {"centered", terms.centered.str()},
                    {"sign", terms.sign},
                    {"inner_threshold", terms.inner_threshold.str()}};
    }
  }
  if (a.both) {
    Rational direct = progression_sum_direct(q);
    j["direct"] = direct.str();
    consistent = consistent && direct == Rational::parse(j["value"].get<std::string>());
    j["agrees"] = consistent;
  }
  if (ctx.decimals) j["value_decimal"] = Rational::parse(j["value"].get<std::string>()).to_double();
  ctx.emit(j);
  return consistent ? kExitOk : kExitFailure;
}

inline int cmd_integral(const Context& ctx, const std::string& speeds, const std::string& deltas, bool oracle) {
  ctx.require_json("integral");
  auto s = io::parse_speed_list(speeds);
  auto d = io::parse_rational_list(deltas);
  if (s.size() != 2 || d.size() != 2) throw DomainError("integral takes two speeds and two thresholds");
  PairQuery q{s[0], s[1], d[0], d[1]};
  q.validate();
  if (s[0] == s[1] && !oracle) throw DomainError("equal speeds: the closed form needs distinct speeds (try --oracle)");
  Json j{{"command", "integral"}, {"speeds", io::to_json(s)}, {"thresholds", io::to_json(d)}};
  bool agrees = true;
  if (s[0] != s[1]) {
    Rational safe = pair_integral_formula(q);
    j["safe_product"] = safe.str();
    j["unsafe_product"] = unsafe_pair_integral_formula(q).str();
    if (ctx.decimals) j["safe_product_decimal"] = safe.to_double();
    if (oracle) {
      Rational o = pair_integral_oracle(q);
      j["oracle"] = o.str();
      agrees = o == safe;
      j["agrees"] = agrees;
    }
  } else {
    j["safe_product"] = nullptr;
    j["oracle"] = pair_integral_oracle(q).str();
    j["note"] = "closed form not asserted for equal speeds";
  }
  ctx.emit(j);
  return agrees ? kExitOk : kExitFailure;
}

struct SearchArgs {
  std::string deltas;
  std::int64_t max_speed = 1;
  bool all = false;
  bool no_primitive = false;
  unsigned jobs = 1;
};

inline int cmd_search(const Context& ctx, const SearchArgs& a) {
  SearchConfig cfg{io::parse_rational_list(a.deltas), a.max_speed, !a.no_primitive, !a.all, a.jobs};
  auto report = search_counterexample(cfg);
  if (ctx.format == "csv") {
    ctx.out << "# max_speed=" << cfg.max_speed << " primitive_only=" << (cfg.primitive_only ? 1 : 0)
            << " evidence only\nspeeds,outcome\n";
    for (const auto& c : report.counterexamples) ctx.out << join_speeds(c.speeds, ' ') << ",empty\n";
  } else {
    Json j{{"command", "search"}};
    j.update(io::to_json(report));
    ctx.emit(j);
  }
  return report.found() ? kExitNegative : kExitOk;
}

struct ScanArgs {
  std::string from;
  std::string to;
  std::int64_t steps = 2;
  std::int64_t max_speed = 1;
  bool no_primitive = false;
  unsigned jobs = 1;
};

inline int cmd_scan(const Context& ctx, const ScanArgs& a) {
  auto from = io::parse_rational_list(a.from);
  auto to = io::parse_rational_list(a.to);
  auto rows = segment_scan(from, to, a.steps, a.max_speed, !a.no_primitive, a.jobs);
  bool any = std::any_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.status == ScanStatus::Counterexample; });
  if (ctx.format == "csv") {
    ctx.out << "# max_speed=" << a.max_speed << " evidence only\ntau";
    for (std::size_t i = 0; i < from.size(); ++i) ctx.out << ",d" << (i + 1);
    ctx.out << ",status,counterexample\n";
    for (const auto& r : rows) {
      ctx.out << r.tau;
      for (const auto& d : r.point) ctx.out << ',' << d;
      ctx.out << ',' << to_string(r.status) << ',' << (r.counterexample ? join_speeds(*r.counterexample, ' ') : "")
              << '\n';
    }
  } else {
    Json j{{"command", "scan"},
           {"from", io::to_json(from)},
           {"to", io::to_json(to)},
           {"steps", a.steps},
           {"bound", {{"max_speed", a.max_speed}, {"primitive_only", !a.no_primitive}}}};
    Json list = Json::array();
    for (const auto& r : rows) list.push_back(io::to_json(r));
    j["rows"] = std::move(list);
    ctx.emit(j);
  }
  return any ? kExitNegative : kExitOk;
}

inline int cmd_reduce(const Context& ctx, std::int64_t k, const std::string& speeds) {
  ctx.require_json("reduce");
  auto report = case_reduction(k, io::parse_speed_list(speeds));
  Json j{{"command", "reduce"}};
  j.update(io::to_json(report));
  if (!report.residual_speeds.empty()) {
    MlrcInstance residual{report.residual_speeds,
                          std::vector<Rational>(report.residual_speeds.size(), report.residual_threshold)};
    j["residual"]["outcome"] = std::string(to_string(decide_mlrc(residual).outcome));
  }
  ctx.emit(j);
  return kExitOk;
}

inline int cmd_altsum(const Context& ctx, const std::string& specs) {
  ctx.require_json("altsum");
  auto factors = io::parse_factor_list(specs);
  auto thresholds = alternating_sum_rep(factors);
  Json fs = Json::array();
  for (const auto& f : factors) fs.push_back({{"speed", f.speed}, {"threshold", f.threshold.str()}});
  ctx.emit({{"command", "altsum"}, {"factors", std::move(fs)}, {"switching_thresholds", io::to_json(thresholds)}});
  return kExitOk;
}

inline int cmd_plot_safe(const Context& ctx, std::int64_t speed, const std::string& delta_text) {
  const Rational delta = Rational::parse(delta_text);
  auto set = safe_set(speed, delta);
  std::vector<Rational> breaks{Rational(0)};
  for (const auto& p : set.pieces()) {
    breaks.push_back(p.lo);
    if (p.hi != p.lo) breaks.push_back(p.hi);
  }
  struct Row {
    Rational t, value, right;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    const Rational next = i + 1 < breaks.size() ? breaks[i + 1] : Rational(1);
    rows.push_back({breaks[i], safe_midpoint(speed, delta, breaks[i]),
                    safe_midpoint(speed, delta, (breaks[i] + next) / 2)});
  }
  if (ctx.format == "csv") {
    ctx.out << "t,value,right_value\n";
    for (const auto& r : rows) ctx.out << r.t << ',' << r.value << ',' << r.right << '\n';
    return kExitOk;
  }
  Json bp = Json::array();
  for (const auto& r : rows) bp.push_back({{"t", r.t.str()}, {"value", r.value.str()}, {"right_value", r.right.str()}});
  ctx.emit({{"command", "plot-data"},
            {"kind", "safe"},
            {"speed", speed},
            {"threshold", delta.str()},
            {"pieces", io::to_json(set)},
            {"breakpoints", std::move(bp)}});
  return kExitOk;
}

inline int cmd_plot_intersection(const Context& ctx, const std::string& speeds, const std::string& deltas) {
  ctx.require_json("plot-data intersection");
  auto inst = parse_instance(speeds, deltas);
  Json runners = Json::array();
  for (std::size_t i = 0; i < inst.dimension(); ++i) {
    runners.push_back({{"speed", inst.speeds[i]},
                       {"threshold", inst.thresholds[i].str()},
                       {"pieces", io::to_json(safe_set(inst.speeds[i], inst.thresholds[i]))}});
  }
  Verdict v = decide_mlrc(inst);
  ctx.emit({{"command", "plot-data"},
            {"kind", "intersection"},
            {"runners", std::move(runners)},
            {"intersection", io::to_json(v.intersection)},
            {"outcome", std::string(to_string(v.outcome))}});
  return kExitOk;
}

inline int cmd_plot_region(const Context& ctx) {
  ctx.require_json("plot-data mlps2-region");
  auto pt = [](const char* a, const char* b) { return Json::array({a, b}); };
  ctx.emit({{"command", "plot-data"},
            {"kind", "mlps2-region"},
            {"vertices", Json::array({pt("0", "0"), pt("1/2", "0"), pt("1/3", "1/3"), pt("0", "1/2")})},
            {"inequalities", Json::array({"2d1+d2<=1", "d1+2d2<=1", "d1>0", "d2>0"})},
            {"excluded_edges", Json::array({Json::array({pt("0", "0"), pt("1/2", "0")}),
                                            Json::array({pt("0", "1/2"), pt("0", "0")})})},
            {"note", "edges on the coordinate axes are not part of the region"}});
  return kExitOk;
}

inline int cmd_selftest(const Context& ctx) {
  ctx.require_json("selftest");
  std::vector<GridSummary> grids{verify_progression_grid(), verify_corollary_grid(), verify_pair_integral_grid()};
  Json suites = Json::array();
  bool ok = true;
  for (const auto& g : grids) {
    Json branches = Json::object();
    for (const auto& [k, v] : g.branches) branches[k] = v;
    Json s{{"name", g.name}, {"cases", g.cases}, {"failures", g.failures}, {"branches", std::move(branches)}};
    if (g.first_failure) s["first_failure"] = *g.first_failure;
    suites.push_back(std::move(s));
    ok = ok && g.passed();
  }
  ctx.emit({{"command", "selftest"}, {"suites", std::move(suites)}, {"passed", ok}});
  return ok ? kExitOk : kExitFailure;
}

inline void usage_error(std::ostream& err, const std::string& message) {
  err << Json{{"error", "usage"}, {"message", message}}.dump() << '\n';
}

}  // namespace detail

/// `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for mixed lonely runner statements"};
  app.name("mlrc");
  app.require_subcommand(1);
  app.fallthrough();

  detail::Context ctx{out};
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--decimals", ctx.decimals, "Add approximate decimal fields next to exact values");

  std::string speeds, deltas;
  auto* check = app.add_subcommand("check", "Decide one speed tuple: witness time or empty certificate");
  check->add_option("--speeds", speeds, "Comma-separated distinct positive speeds")->required();
  check->add_option("--deltas", deltas, "Comma-separated thresholds p/q in (0,1/2]")->required();

  auto* mlps2 = app.add_subcommand("mlps2", "Membership in the two-runner parameter space");
  mlps2->add_option("--deltas", deltas, "d1,d2")->required();

  detail::SumArgs sum_args;
  auto* sum = app.add_subcommand("sum", "Safe values summed over an arithmetic progression of times");
  sum->add_option("--speed", sum_args.speed)->required();
  sum->add_option("--modulus", sum_args.modulus)->required();
  sum->add_option("--delta", sum_args.delta);
  sum->add_option("--time", sum_args.time);
  sum->add_option("--corollary", sum_args.corollary_n, "Use threshold 1/n with the simplified form");
  sum->add_flag("--both", sum_args.both, "Also print the direct sum and compare");

  bool oracle = false;
  auto* integral = app.add_subcommand("integral", "Integral of a product of two safe functions");
  integral->add_option("--speeds", speeds, "a,b")->required();
  integral->add_option("--deltas", deltas, "d1,d2")->required();
  integral->add_flag("--oracle", oracle, "Also measure the intersection directly");

  detail::SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Bounded search for a speed tuple with no safe time");
  search->add_option("--deltas", search_args.deltas)->required();
  search->add_option("--max-speed", search_args.max_speed)->required();
  search->add_flag("--all", search_args.all, "Report every counterexample instead of the first");
  search->add_flag("--no-primitive-filter", search_args.no_primitive);
  search->add_option("--jobs", search_args.jobs)->check(CLI::PositiveNumber);

  detail::ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Search along a segment of threshold vectors");
  scan->add_option("--from", scan_args.from)->required();
  scan->add_option("--to", scan_args.to)->required();
  scan->add_option("--steps", scan_args.steps)->required();
  scan->add_option("--max-speed", scan_args.max_speed)->required();
  scan->add_flag("--no-primitive-filter", scan_args.no_primitive);
  scan->add_option("--jobs", scan_args.jobs)->check(CLI::PositiveNumber);

  std::int64_t k = 0;
  auto* reduce = app.add_subcommand("reduce", "Divisibility case reduction at threshold 1/(k+1)");
  reduce->add_option("--k", k)->required();
  reduce->add_option("--speeds", speeds)->required();

  std::string specs;
  auto* altsum = app.add_subcommand("altsum", "Alternating-sum thresholds for a product of safe functions");
  altsum->add_option("--specs", specs, "speed:threshold,...")->required();

  auto* plot = app.add_subcommand("plot-data", "Data for external plotting");
  plot->require_subcommand(1);
  std::int64_t plot_speed = 1;
  std::string plot_delta;
  auto* plot_safe = plot->add_subcommand("safe", "Step function of one safe function");
  plot_safe->add_option("--speed", plot_speed)->required();
  plot_safe->add_option("--delta", plot_delta)->required();
  auto* plot_inter = plot->add_subcommand("intersection", "Per-runner safe sets and their intersection");
  plot_inter->add_option("--speeds", speeds)->required();
  plot_inter->add_option("--deltas", deltas)->required();
  auto* plot_region = plot->add_subcommand("mlps2-region", "Polygon of the two-runner parameter space");

  auto* selftest = app.add_subcommand("selftest", "Run the identity verification grids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    detail::usage_error(err, e.what());
    return kExitUsage;
  }

  try {
    if (*check) return detail::cmd_check(ctx, speeds, deltas);
    if (*mlps2) return detail::cmd_mlps2(ctx, deltas);
    if (*sum) return detail::cmd_sum(ctx, sum_args);
    if (*integral) return detail::cmd_integral(ctx, speeds, deltas, oracle);
    if (*search) return detail::cmd_search(ctx, search_args);
    if (*scan) return detail::cmd_scan(ctx, scan_args);
    if (*reduce) return detail::cmd_reduce(ctx, k, speeds);
    if (*altsum) return detail::cmd_altsum(ctx, specs);
    if (*plot_safe) return detail::cmd_plot_safe(ctx, plot_speed, plot_delta);
    if (*plot_inter) return detail::cmd_plot_intersection(ctx, speeds, deltas);
    if (*plot_region) return detail::cmd_plot_region(ctx);
    if (*selftest) return detail::cmd_selftest(ctx);
  } catch (const DomainError& e) {
    detail::usage_error(err, e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    err << detail::Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return kExitFailure;
  }
  detail::usage_error(err, "no subcommand given");
  return kExitUsage;
}

}  // namespace mlr::cli
