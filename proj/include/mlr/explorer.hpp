#pragma once

// Bounded exhaustive searches over speed tuples and related experiments on
// higher-dimensional parameter spaces. Every search result is evidence up to
// the stated speed bound, never a proof.

#include "mlr/decider.hpp"
#include "mlr/identities.hpp"
#include "mlr/rational.hpp"
#include "mlr/safe_model.hpp"
#include "mlr/torus_intervals.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace mlr {

struct SearchConfig {
  std::vector<Rational> thresholds;
  std::int64_t max_speed = 1;
  bool primitive_only = true;
  bool stop_at_first = false;
  unsigned jobs = 1;  // 0 picks the hardware concurrency

  std::size_t dimension() const { return thresholds.size(); }

  void validate() const {
    if (thresholds.empty()) throw DomainError("search needs at least one threshold");
    for (const auto& d : thresholds) detail::require_open_threshold(d);
    if (max_speed < static_cast<std::int64_t>(thresholds.size()))
      throw DomainError("max_speed " + std::to_string(max_speed) + " admits no tuple of " +
                        std::to_string(thresholds.size()) + " distinct speeds");
  }

  /// With all thresholds equal only increasing tuples need to be examined.
  bool permutation_pruned() const {
    return std::all_of(thresholds.begin(), thresholds.end(), [&](const Rational& d) { return d == thresholds.front(); });
  }
};

struct Counterexample {
  std::vector<std::int64_t> speeds;
  Verdict verdict;
};

struct SearchReport {
  SearchConfig config;
  bool permutation_pruned = false;
  std::uint64_t tuples_decided = 0;
  std::vector<Counterexample> counterexamples;

  bool found() const { return !counterexamples.empty(); }
};

namespace detail {

// [1, n]^k in lexicographic order, addressed by a mixed-radix index.
class TupleSpace {
 public:
  TupleSpace(std::int64_t n, std::size_t k) : n_(n), k_(k) {
    total_ = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (total_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n))
        throw DomainError("search space too large");
      total_ *= static_cast<std::uint64_t>(n);
    }
  }

  std::uint64_t total() const { return total_; }

  void decode(std::uint64_t index, std::vector<std::int64_t>& out) const {
    out.assign(k_, 1);
    for (std::size_t i = k_; i-- > 0;) {
      out[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(n_)) + 1;
      index /= static_cast<std::uint64_t>(n_);
    }
  }

  void advance(std::vector<std::int64_t>& t) const {
    for (std::size_t i = k_; i-- > 0;) {
      if (t[i] < n_) {
        ++t[i];
        return;
      }
      t[i] = 1;
    }
  }

 private:
  std::int64_t n_;
  std::size_t k_;
  std::uint64_t total_;
};

inline bool eligible_tuple(const std::vector<std::int64_t>& t, bool increasing_only, bool primitive_only) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return false;
      if (increasing_only && t[i] > t[j]) return false;
    }
  }
  if (primitive_only) {
    std::int64_t g = 0;
    for (auto s : t) g = gcd(g, s);
    if (g > 1) return false;
  }
  return true;
}

// Safe sets for every (threshold index, speed) pair, built once per search.
class SafeSetCache {
 public:
  SafeSetCache(const std::vector<Rational>& thresholds, std::int64_t max_speed) {
    sets_.resize(thresholds.size());
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
      std::size_t same = i;
      for (std::size_t j = 0; j < i; ++j) {
        if (thresholds[j] == thresholds[i]) {
          same = j;
          break;
        }
      }
      if (same != i) {
        sets_[i] = sets_[same];
        continue;
      }
      sets_[i].reserve(static_cast<std::size_t>(max_speed));
      for (std::int64_t s = 1; s <= max_speed; ++s) sets_[i].push_back(safe_set(s, thresholds[i]));
    }
  }

  const TorusIntervalSet& get(std::size_t index, std::int64_t speed) const {
    return sets_[index][static_cast<std::size_t>(speed - 1)];
  }

 private:
  std::vector<std::vector<TorusIntervalSet>> sets_;
};

inline TorusIntervalSet intersect_cached(const SafeSetCache& cache, const std::vector<std::int64_t>& speeds) {
  auto order = speed_order(speeds);
  if (order.size() == 1) return cache.get(order[0], speeds[order[0]]);
  TorusIntervalSet acc = intersect(cache.get(order[0], speeds[order[0]]), cache.get(order[1], speeds[order[1]]));
  for (std::size_t i = 2; i < order.size() && !acc.empty(); ++i) {
    acc = intersect(acc, cache.get(order[i], speeds[order[i]]));
  }
  return acc;
}

struct ChunkResult {
  std::vector<Counterexample> hits;
  std::uint64_t decided = 0;
};

}  // namespace detail

/// Enumerates ordered tuples of distinct speeds in [1, max_speed]^k lexicographically and
/// reports those with no simultaneous safe time. Output does not depend on `jobs`.
inline SearchReport search_counterexample(const SearchConfig& cfg) {
  cfg.validate();
  SearchReport report;
  report.config = cfg;
  report.permutation_pruned = cfg.permutation_pruned();

  const detail::TupleSpace space(cfg.max_speed, cfg.dimension());
  const detail::SafeSetCache cache(cfg.thresholds, cfg.max_speed);

  unsigned jobs = cfg.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.jobs;
  const std::uint64_t total = space.total();
  const std::uint64_t chunk_count = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 16ULL * jobs));
  const std::uint64_t chunk_size = (total + chunk_count - 1) / chunk_count;

  std::vector<detail::ChunkResult> results(chunk_count);
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> first_hit_chunk{std::numeric_limits<std::uint64_t>::max()};

  auto worker = [&] {
    std::vector<std::int64_t> tuple;
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunk_count) return;
      if (cfg.stop_at_first && c > first_hit_chunk.load()) continue;
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(total, begin + chunk_size);
      auto& out = results[c];
      if (begin >= end) continue;
      space.decode(begin, tuple);
      for (std::uint64_t idx = begin; idx < end; ++idx, space.advance(tuple)) {
        if (cfg.stop_at_first && first_hit_chunk.load(std::memory_order_relaxed) < c) break;
        if (!detail::eligible_tuple(tuple, report.permutation_pruned, cfg.primitive_only)) continue;
        ++out.decided;
        TorusIntervalSet inter = detail::intersect_cached(cache, tuple);
        if (!inter.empty()) continue;
        out.hits.push_back({tuple, detail::make_verdict(tuple, std::move(inter))});
        if (cfg.stop_at_first) {
          std::uint64_t prev = first_hit_chunk.load();
          while (c < prev && !first_hit_chunk.compare_exchange_weak(prev, c)) {
          }
          break;
        }
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Chunks below the first hit always run to completion, so these totals are schedule independent.
  const std::uint64_t last = cfg.stop_at_first ? std::min(first_hit_chunk.load(), chunk_count - 1) : chunk_count - 1;
  for (std::uint64_t c = 0; c <= last; ++c) {
    report.tuples_decided += results[c].decided;
    for (auto& h : results[c].hits) report.counterexamples.push_back(std::move(h));
  }
  return report;
}

enum class ScanStatus { Skipped, NoCounterexample, Counterexample };

inline std::string_view to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Skipped: return "skipped";
    case ScanStatus::NoCounterexample: return "none_up_to_bound";
    case ScanStatus::Counterexample: return "counterexample";
  }
  return "";
}

struct ScanRow {
  Rational tau;
  std::vector<Rational> point;
  ScanStatus status = ScanStatus::Skipped;
  std::optional<std::vector<std::int64_t>> counterexample;
};

/// Searches the interior points tau*from + (1-tau)*to for tau = j/steps, 0 < j < steps.
/// Endpoints may touch coordinate hyperplanes; points that do are skipped.
inline std::vector<ScanRow> segment_scan(const std::vector<Rational>& from, const std::vector<Rational>& to,
                                         std::int64_t steps, std::int64_t max_speed, bool primitive_only = true,
                                         unsigned jobs = 1) {
  if (from.size() != to.size()) throw DomainError("segment endpoints have different dimensions");
  if (from.empty()) throw DomainError("segment endpoints are empty");
  if (steps < 1) throw DomainError("steps must be positive");
  for (const auto* end : {&from, &to}) {
    for (const auto& d : *end) {
      if (d < 0 || d > Rational(1, 2)) throw DomainError("segment endpoint coordinate outside [0, 1/2]: " + d.str());
    }
  }
  std::vector<ScanRow> rows;
  for (std::int64_t j = 1; j < steps; ++j) {
    ScanRow row;
    row.tau = Rational(Integer(j), Integer(steps));
    for (std::size_t i = 0; i < from.size(); ++i) row.point.push_back(row.tau * from[i] + (1 - row.tau) * to[i]);
    if (std::any_of(row.point.begin(), row.point.end(), [](const Rational& d) { return d <= 0; })) {
      rows.push_back(std::move(row));
      continue;
    }
    SearchConfig cfg{row.point, max_speed, primitive_only, true, jobs};
    auto report = search_counterexample(cfg);
    if (report.found()) {
      row.status = ScanStatus::Counterexample;
      row.counterexample = report.counterexamples.front().speeds;
    } else {
      row.status = ScanStatus::NoCounterexample;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Divisibility-based reduction for the classical threshold 1/(k+1).
struct ReductionReport {
  std::int64_t k = 0;
  std::vector<std::int64_t> speeds;
  std::vector<std::int64_t> divisible;  // speeds divisible by k+1
  std::vector<std::int64_t> remainder;
  std::vector<std::pair<std::int64_t, std::int64_t>> per_speed_bound;  // s -> max(2, gcd(s, k+1))
  std::int64_t total_bound = 0;
  bool applicable = false;
  // Needed for the divisible speeds: their quotients by k+1 must share a time at
  // distance >= 1/(k+1), which the lonely runner bound for |divisible|+1 runners provides.
  std::vector<std::int64_t> residual_speeds;
  Rational residual_threshold;
  std::int64_t residual_runners = 1;
};

inline ReductionReport case_reduction(std::int64_t k, const std::vector<std::int64_t>& speeds) {
  if (k < 1) throw DomainError("k must be positive");
  if (static_cast<std::int64_t>(speeds.size()) != k)
    throw DomainError("expected " + std::to_string(k) + " speeds, got " + std::to_string(speeds.size()));
  for (auto s : speeds) detail::require_speed(s);
  {
    auto sorted = speeds;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("speeds must be pairwise distinct");
  }
  ReductionReport r;
  r.k = k;
  r.speeds = speeds;
  const std::int64_t n = k + 1;
  for (auto s : speeds) {
    if (s % n == 0) {
      r.divisible.push_back(s);
      r.residual_speeds.push_back(s / n);
    } else {
      r.remainder.push_back(s);
      const std::int64_t bound = std::max<std::int64_t>(2, gcd(s, n));
      r.per_speed_bound.emplace_back(s, bound);
      r.total_bound += bound;
    }
  }
  r.applicable = r.total_bound < n;
  r.residual_threshold = Rational(Integer(1), Integer(n));
  r.residual_runners = static_cast<std::int64_t>(r.divisible.size()) + 1;
  return r;
}

/// Sum of unsafe(s, 1/(k+1), t + i/(k+1)) over i = 0..k, via the corollary with n = m = k+1.
inline Rational unsafe_progression_count(std::int64_t speed, std::int64_t k, const Rational& t) {
  if (k < 2) throw DomainError("unsafe progression count needs k >= 2");
  return Rational(k + 1) - progression_sum_corollary(speed, k + 1, k + 1, t);
}

struct SafeFactor {
  std::int64_t speed = 1;
  Rational threshold;
};

/// Thresholds 0 < d_1 < ... < d_r <= 1/2 with prod safe(s_i, e_i, t) equal to
/// safe(1,d_1,t) - safe(1,d_2,t) + ... away from switching points.
inline std::vector<Rational> alternating_sum_rep(const std::vector<SafeFactor>& factors) {
  if (factors.empty()) throw DomainError("alternating-sum representation needs at least one factor");
  for (const auto& f : factors) {
    detail::require_speed(f.speed);
    detail::require_open_threshold(f.threshold);
  }
  TorusIntervalSet acc = safe_set(factors.front().speed, factors.front().threshold);
  for (std::size_t i = 1; i < factors.size() && !acc.empty(); ++i) {
    acc = intersect(acc, safe_set(factors[i].speed, factors[i].threshold));
  }
  const Rational half(1, 2);
  std::vector<Rational> switching;
  for (const auto& p : acc.pieces()) {
    // Isolated points carry no weight away from switching points.
    if (p.is_point() || p.lo >= half) continue;
    switching.push_back(p.lo);
    // A piece crossing 1/2 continues into its mirror image, so it does not switch there.
    if (p.hi < half) switching.push_back(p.hi);
  }
  return switching;
}

inline Rational alternating_sum_value(const std::vector<Rational>& switching, const Rational& t) {
  Rational total;
  for (std::size_t i = 0; i < switching.size(); ++i) {
    Rational v = safe_midpoint(1, switching[i], t);
    if (i % 2 == 0) total += v;
    else total -= v;
  }
  return total;
}

inline Rational safe_product(const std::vector<SafeFactor>& factors, const Rational& t) {
  Rational p(1);
  for (const auto& f : factors) p *= safe_midpoint(f.speed, f.threshold, t);
  return p;
}

}  // namespace mlr
