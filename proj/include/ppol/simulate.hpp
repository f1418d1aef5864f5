// Copyright 2026 The ppol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Two-user asynchronous rendezvous simulation. Time-to-rendezvous counts
// from 0: a match in the very first slot is a TTR of 0. Every trial is a
// pure function of (scenario seed, trial index), so runs reproduce exactly
// and trial order does not matter.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ppol/analysis.hpp"
#include "ppol/remap.hpp"
#include "ppol/rng.hpp"
#include "ppol/sequence.hpp"

namespace ppol {

/// Trial model: either an explicit pair of channel sets, or per-trial random
/// sets of fixed sizes with an exact forced overlap. Drift is uniform over
/// one period unless pinned. horizon == 0 means one period.
struct Scenario {
  std::uint32_t total = 0;  // N
  std::optional<AvailableChannelSet> first, second;
  std::uint32_t size_first = 0, size_second = 0, overlap = 0;
  std::optional<std::uint32_t> drift;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t horizon = 0;

  bool explicit_sets() const { return first.has_value(); }
};

struct TTRStatistics {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;  // no rendezvous within the horizon
  double mean = 0.0;           // over successful trials (ETTR)
  std::uint64_t max = 0;
  std::uint64_t p50 = 0, p90 = 0, p99 = 0;  // nearest-rank quantiles
};

struct EttrComparison {
  std::uint32_t total = 0;
  std::uint32_t m = 0;
  std::uint32_t period = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t horizon = 0;
  TTRStatistics ppol;
  TTRStatistics baseline;
  double ratio = 0.0;  // ppol.mean / baseline.mean
};

namespace detail {

inline void validate_scenario(const Scenario& sc) {
  if (sc.total < 2) throw std::invalid_argument("scenario: need at least two channels");
  if (sc.trials == 0) throw std::invalid_argument("scenario: need at least one trial");
  if (sc.explicit_sets()) {
    if (!sc.second) throw std::invalid_argument("scenario: second channel set missing");
    if (sc.first->total != sc.total || sc.second->total != sc.total)
      throw std::invalid_argument("scenario: channel sets built for a different universe");
    return;
  }
  if (sc.size_first == 0 || sc.size_second == 0)
    throw std::invalid_argument("scenario: set sizes must be positive");
  if (sc.size_first > sc.total || sc.size_second > sc.total)
    throw std::invalid_argument("scenario: set size exceeds the universe");
  if (sc.overlap > std::min(sc.size_first, sc.size_second))
    throw std::invalid_argument("scenario: overlap exceeds a set size");
  if (sc.size_first + sc.size_second - sc.overlap > sc.total)
    throw std::invalid_argument("scenario: sets cannot fit the universe");
}

struct TrialDraw {
  AvailableChannelSet first, second;
  std::uint32_t drift = 0;
  std::uint64_t seed_first = 0, seed_second = 0;
};

// Sample |common| = overlap exactly: partial Fisher-Yates picks the common
// channels first, then the disjoint remainders for each user.
inline TrialDraw draw_trial(const Scenario& sc, std::uint32_t period, std::uint64_t index) {
  SplitMix64 rng(mix64(sc.seed + kGoldenGamma * index) ^ index);
  TrialDraw draw;
  if (sc.explicit_sets()) {
    draw.first = *sc.first;
    draw.second = *sc.second;
  } else {
    std::vector<std::uint32_t> pool(sc.total);
    for (std::uint32_t c = 0; c < sc.total; ++c) pool[c] = c;
    std::uint32_t taken = 0;
    auto take = [&](std::uint32_t count) {
      const std::uint32_t from = taken;
      for (std::uint32_t i = 0; i < count; ++i, ++taken)
        std::swap(pool[taken], pool[taken + rng.below(pool.size() - taken)]);
      return std::vector<std::uint32_t>(pool.begin() + from, pool.begin() + taken);
    };
    const auto common = take(sc.overlap);
    auto only_first = take(sc.size_first - sc.overlap);
    auto only_second = take(sc.size_second - sc.overlap);
    only_first.insert(only_first.end(), common.begin(), common.end());
    only_second.insert(only_second.end(), common.begin(), common.end());
    draw.first = AvailableChannelSet::make(sc.total, std::move(only_first));
    draw.second = AvailableChannelSet::make(sc.total, std::move(only_second));
  }
  draw.drift = sc.drift ? *sc.drift % period : static_cast<std::uint32_t>(rng.below(period));
  draw.seed_first = rng.next();
  draw.seed_second = rng.next();
  return draw;
}

inline TTRStatistics summarize(std::vector<std::uint64_t>& ttrs, std::uint64_t trials) {
  TTRStatistics stats;
  stats.trials = trials;
  stats.failures = trials - ttrs.size();
  if (ttrs.empty()) return stats;
  std::sort(ttrs.begin(), ttrs.end());
  long double sum = 0;
  for (std::uint64_t v : ttrs) sum += v;
  stats.mean = static_cast<double>(sum / ttrs.size());
  stats.max = ttrs.back();
  auto rank = [&](double q) {
    const std::size_t r = static_cast<std::size_t>(std::max(1.0, q * ttrs.size() + 0.5));
    return ttrs[std::min(r, ttrs.size()) - 1];
  };
  stats.p50 = rank(0.50);
  stats.p90 = rank(0.90);
  stats.p99 = rank(0.99);
  return stats;
}

// First slot t < horizon where both users, each drawing uniformly from its
// own set every slot, land on the same channel. User 2 runs `drift` slots
// ahead.
inline std::optional<std::uint64_t> random_baseline_ttr(const TrialDraw& draw,
                                                        std::uint32_t drift,
                                                        std::uint64_t horizon) {
  const auto& c1 = draw.first.channels;
  const auto& c2 = draw.second.channels;
  for (std::uint64_t t = 0; t < horizon; ++t) {
    const std::uint32_t a = c1[keyed_draw(draw.seed_first, t) % c1.size()];
    const std::uint32_t b = c2[keyed_draw(draw.seed_second, t + drift) % c2.size()];
    if (a == b) return t;
  }
  return std::nullopt;
}

enum class Simulator { kPpol, kRandomBaseline };

inline TTRStatistics run_simulation(const Scenario& sc, Simulator kind) {
  validate_scenario(sc);
  const auto m = static_cast<std::uint32_t>(smallest_prime_power_geq(sc.total + 1));
  const std::uint32_t period = m * m + m + 1;
  const std::uint64_t horizon = sc.horizon ? sc.horizon : period;
  const ChannelHoppingSequence base = build_ppol(m);
  std::vector<std::uint64_t> ttrs;
  ttrs.reserve(sc.trials);
  for (std::uint64_t i = 0; i < sc.trials; ++i) {
    const TrialDraw draw = draw_trial(sc, period, i);
    std::optional<std::uint64_t> time;
    if (kind == Simulator::kRandomBaseline) {
      time = random_baseline_ttr(draw, draw.drift, horizon);
    } else {
      const auto s1 = remap_sequence(base, make_plan(sc.total, draw.first), draw.seed_first);
      const auto s2 = remap_sequence(base, make_plan(sc.total, draw.second), draw.seed_second);
      time = ttr(s1.sequence, s2.sequence, draw.drift, horizon).ttr;
    }
    if (time) ttrs.push_back(*time);
  }
  return summarize(ttrs, sc.trials);
}

}  // namespace detail

/// Rendezvous statistics for two users hopping on remapped sequences with
/// independent per-trial seeds.
inline TTRStatistics simulate_ppol(const Scenario& scenario) {
  return detail::run_simulation(scenario, detail::Simulator::kPpol);
}

/// Same trial machinery with both users drawing a uniform channel from their
/// own set in every slot.
inline TTRStatistics simulate_random_baseline(const Scenario& scenario) {
  return detail::run_simulation(scenario, detail::Simulator::kRandomBaseline);
}

/// Both simulators over the identical stream of channel sets, drifts and
/// seeds, with the ETTR ratio.
inline EttrComparison compare_ettr(const Scenario& scenario) {
  detail::validate_scenario(scenario);
  EttrComparison cmp;
  cmp.total = scenario.total;
  cmp.m = static_cast<std::uint32_t>(smallest_prime_power_geq(scenario.total + 1));
  cmp.period = cmp.m * cmp.m + cmp.m + 1;
  cmp.trials = scenario.trials;
  cmp.seed = scenario.seed;
  cmp.horizon = scenario.horizon ? scenario.horizon : cmp.period;
  cmp.ppol = simulate_ppol(scenario);
  cmp.baseline = simulate_random_baseline(scenario);
  cmp.ratio = cmp.baseline.mean > 0 ? cmp.ppol.mean / cmp.baseline.mean : 0.0;
  return cmp;
}

}  // namespace ppol
