#pragma once

// Text and JSON forms of the library types. Rationals always travel as "p/q".

#include "mlr/decider.hpp"
#include "mlr/explorer.hpp"
#include "mlr/rational.hpp"
#include "mlr/torus_intervals.hpp"

#include "json.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlr::io {

using Json = nlohmann::ordered_json;

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

inline std::int64_t parse_positive_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 1)
    throw DomainError("expected a positive integer, got '" + std::string(text) + "'");
  return v;
}

inline std::vector<std::int64_t> parse_speed_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_positive_int(part));
  return out;
}

inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto part : split(text, ',')) out.push_back(Rational::parse(part));
  return out;
}

/// "2:1/4,4:1/4,3:1/8" -> speed/threshold factors.
inline std::vector<SafeFactor> parse_factor_list(std::string_view text) {
  std::vector<SafeFactor> out;
  for (auto part : split(text, ',')) {
    auto colon = part.find(':');
    if (colon == std::string_view::npos)
      throw DomainError("expected speed:threshold, got '" + std::string(part) + "'");
    out.push_back({parse_positive_int(part.substr(0, colon)), Rational::parse(part.substr(colon + 1))});
  }
  return out;
}

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

inline Json to_json(const std::vector<std::int64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

/// List of [lo, hi] pairs. A complement's right-open last piece is written with hi = "1".
inline Json to_json(const TorusIntervalSet& s) {
  Json a = Json::array();
  for (const auto& p : s.pieces()) a.push_back(Json::array({p.lo.str(), p.hi.str()}));
  return a;
}

inline TorusIntervalSet interval_set_from_json(const Json& j) {
  std::vector<ClosedInterval> raw;
  std::optional<Rational> open_tail;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw DomainError("interval must be a [lo, hi] pair");
    ClosedInterval iv{Rational::parse(pair[0].get<std::string>()), Rational::parse(pair[1].get<std::string>())};
    if (iv.hi == 1 && iv.lo >= 0 && iv.lo < 1) {
      open_tail = iv.lo;
      continue;
    }
    raw.push_back(std::move(iv));
  }
  auto set = TorusIntervalSet::canonicalize(std::move(raw));
  if (open_tail) set = unite(set, complement(TorusIntervalSet::canonicalize({{Rational(0), *open_tail}})));
  return set;
}

inline Json to_json(const MlrcInstance& inst, const Verdict& v, bool decimals = false) {
  Json j;
  j["speeds"] = to_json(inst.speeds);
  j["thresholds"] = to_json(inst.thresholds);
  j["outcome"] = std::string(to_string(v.outcome));
  if (v.witness_time) {
    j["witness_time"] = v.witness_time->str();
    if (decimals) j["witness_time_decimal"] = v.witness_time->to_double();
    j["distances"] = to_json(v.distances);
  }
  j["intersection"] = to_json(v.intersection);
  j["measure"] = v.intersection.measure().str();
  if (decimals) j["measure_decimal"] = v.intersection.measure().to_double();
  return j;
}

inline Json to_json(const SearchReport& r) {
  Json j;
  j["bound"] = {{"max_speed", r.config.max_speed},
                {"primitive_only", r.config.primitive_only},
                {"permutation_pruned", r.permutation_pruned},
                {"stop_at_first", r.config.stop_at_first}};
  j["thresholds"] = to_json(r.config.thresholds);
  j["tuples_decided"] = r.tuples_decided;
  j["found"] = r.found();
  j["note"] = r.found() ? "counterexample tuples have no simultaneous safe time"
                        : "no counterexample with speeds <= " + std::to_string(r.config.max_speed) +
                              "; evidence only, not a proof";
  Json list = Json::array();
  for (const auto& c : r.counterexamples) {
    list.push_back({{"speeds", to_json(c.speeds)}, {"outcome", std::string(to_string(c.verdict.outcome))}});
  }
  j["counterexamples"] = std::move(list);
  return j;
}

inline Json to_json(const ScanRow& row) {
  Json j;
  j["tau"] = row.tau.str();
  j["point"] = to_json(row.point);
  j["status"] = std::string(to_string(row.status));
  j["counterexample"] = row.counterexample ? to_json(*row.counterexample) : Json(nullptr);
  return j;
}

inline Json to_json(const ReductionReport& r) {
  Json j;
  j["k"] = r.k;
  j["speeds"] = to_json(r.speeds);
  j["divisible"] = to_json(r.divisible);
  j["remainder"] = to_json(r.remainder);
  Json bounds = Json::array();
  for (const auto& [s, b] : r.per_speed_bound) bounds.push_back({{"speed", s}, {"bound", b}});
  j["per_speed_bound"] = std::move(bounds);
  j["total_bound"] = r.total_bound;
  j["progression_length"] = r.k + 1;
  j["applicable"] = r.applicable;
  j["residual"] = {{"speeds", to_json(r.residual_speeds)},
                   {"threshold", r.residual_threshold.str()},
                   {"implied_by", "LRC(" + std::to_string(r.residual_runners) + ")"}};
  return j;
}

}  // namespace mlr::io
