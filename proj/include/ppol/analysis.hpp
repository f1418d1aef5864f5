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
// Exhaustive, deterministic verification of the rendezvous guarantees:
// degree-of-rendezvous profiles over every clock drift, the predicted pair of
// possibly-failing channels per drift, and worst-case time-to-rendezvous
// sweeps over every ordered pair of available-channel sets. The worst-case
// sweeps consume wildcard (pessimistic) remappings only, so their verdicts
// hold for every resolution of the random remapping and for every seed.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ppol/remap.hpp"
#include "ppol/sequence.hpp"

namespace ppol {

/// Rendezvous outcome for one drift: channels with a witness slot, channels
/// without one, and one replayable witness per rendezvous channel.
struct DriftReport {
  std::uint32_t drift = 0;
  std::uint32_t dor = 0;
  std::vector<std::uint32_t> failing;  // ascending
  // (channel, slot t) with c(t) == c(t + drift) == channel; first such t
  std::vector<std::pair<std::uint32_t, std::uint32_t>> witnesses;
};

struct DoRProfile {
  std::uint32_t period = 0;
  std::uint32_t channel_count = 0;
  std::vector<DriftReport> drifts;  // drifts 1 .. period-1, in order

  const DriftReport& at_drift(std::uint32_t d) const { return drifts.at(d - 1); }
  std::uint32_t min_dor() const {
    std::uint32_t best = channel_count;
    for (const DriftReport& r : drifts) best = std::min(best, r.dor);
    return best;
  }
};

/// Scan every drift d in [1, p) for every channel's self-rendezvous
/// c(t) == c(t+d). Wildcard slots never match.
inline DoRProfile dor_profile(const ChannelHoppingSequence& seq) {
  if (seq.period == 0) throw std::invalid_argument("dor_profile: empty sequence");
  DoRProfile profile;
  profile.period = seq.period;
  profile.channel_count = seq.channel_count;
  profile.drifts.reserve(seq.period - 1);
  std::vector<std::int64_t> first_witness(seq.channel_count);
  for (std::uint32_t d = 1; d < seq.period; ++d) {
    std::fill(first_witness.begin(), first_witness.end(), -1);
    for (std::uint32_t t = 0; t < seq.period; ++t) {
      const int a = seq.slots[t];
      if (a == kWildcard || a != seq.slots[(t + d) % seq.period]) continue;
      if (first_witness[a] < 0) first_witness[a] = t;
    }
    DriftReport report;
    report.drift = d;
    for (std::uint32_t c = 0; c < seq.channel_count; ++c) {
      if (first_witness[c] < 0)
        report.failing.push_back(c);
      else
        report.witnesses.emplace_back(c, static_cast<std::uint32_t>(first_witness[c]));
    }
    report.dor = seq.channel_count - static_cast<std::uint32_t>(report.failing.size());
    profile.drifts.push_back(std::move(report));
  }
  return profile;
}

/// The only two channels that may fail to rendezvous at this drift: the index
/// pair (j, k) with (a_j - a_k) mod p == d.
inline std::pair<std::uint32_t, std::uint32_t> failing_pair_prediction(
    const PerfectDifferenceSet& d, std::uint32_t drift) {
  return unique_difference_pair(d, drift);
}

struct RendezvousOutcome {
  std::uint32_t drift = 0;
  std::optional<std::uint64_t> ttr;  // first matching slot, counted from 0
  int channel = kWildcard;           // matching channel when ttr is present
};

/// First t in [0, horizon) with a(t) == b(t + drift), neither a wildcard.
inline RendezvousOutcome ttr(const ChannelHoppingSequence& a, const ChannelHoppingSequence& b,
                             std::uint32_t drift, std::uint64_t horizon) {
  if (horizon == 0) throw std::invalid_argument("ttr: horizon must be positive");
  RendezvousOutcome out;
  out.drift = drift;
  for (std::uint64_t t = 0; t < horizon; ++t) {
    const int ca = a.at(t);
    if (ca == kWildcard) continue;
    if (ca == b.at(t + drift)) {
      out.ttr = t;
      out.channel = ca;
      return out;
    }
  }
  return out;
}

struct Theorem1Report {
  std::uint32_t m = 0;
  std::uint32_t period = 0;
  bool pass = false;
  std::uint32_t min_dor = 0;
  struct Violation {
    std::uint32_t drift;
    std::uint32_t dor;
    std::vector<std::uint32_t> failing;
    std::pair<std::uint32_t, std::uint32_t> predicted;
  };
  std::vector<Violation> violations;
  PerfectDifferenceSet set_used;
};

/// For every nonzero drift: DoR(d) >= m-1 and the failing channels are within
/// the predicted index pair.
inline Theorem1Report verify_theorem1(std::uint32_t m,
                                      std::optional<PerfectDifferenceSet> d = std::nullopt) {
  const ChannelHoppingSequence seq = build_ppol(m, std::move(d));
  const DoRProfile profile = dor_profile(seq);
  Theorem1Report report;
  report.m = m;
  report.period = seq.period;
  report.set_used = *seq.provenance;
  report.min_dor = profile.min_dor();
  for (const DriftReport& row : profile.drifts) {
    const auto predicted = failing_pair_prediction(report.set_used, row.drift);
    bool ok = row.dor + 2 >= seq.channel_count;  // == m - 1 at least
    for (std::uint32_t c : row.failing)
      if (c != predicted.first && c != predicted.second) ok = false;
    if (!ok)
      report.violations.push_back({row.drift, row.dor, row.failing, predicted});
  }
  report.pass = report.violations.empty();
  return report;
}

namespace detail {

inline std::vector<std::uint32_t> mask_channels(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < 32; ++c)
    if (mask & (1u << c)) out.push_back(c);
  return out;
}

// One wildcard-remapped sequence per nonempty subset of {0..N-1}.
inline std::vector<ChannelHoppingSequence> pessimistic_catalogue(
    std::uint32_t total, const ChannelHoppingSequence& base) {
  std::vector<ChannelHoppingSequence> catalogue(std::size_t{1} << total);
  for (std::uint32_t mask = 1; mask < catalogue.size(); ++mask) {
    const auto avail = AvailableChannelSet::make(total, mask_channels(mask));
    catalogue[mask] = remap_sequence_pessimistic(base, make_plan(total, avail)).sequence;
  }
  return catalogue;
}

}  // namespace detail

struct PairDrift {
  std::vector<std::uint32_t> first, second;
  std::uint32_t drift = 0;
  std::uint64_t ttr = 0;
};

struct MTTRReport {
  std::uint32_t total = 0;   // N
  std::uint32_t m = 0;
  std::uint32_t period = 0;
  std::uint64_t bound = 0;   // N^2 + 3N + 3
  bool bound_applies = false;  // N+1 is a prime power, so period == bound
  bool pass = false;
  std::uint64_t mttr = 0;
  std::uint64_t qualifying_pairs = 0;
  std::uint64_t excluded_pairs = 0;  // fewer than two common channels
  std::uint64_t failures = 0;        // (pair, drift) without rendezvous within the period
  PairDrift worst;
  PerfectDifferenceSet set_used;
};

/// Worst-case rendezvous sweep: every ordered pair of nonempty channel sets
/// with at least two common channels, every drift in [0, p), wildcard
/// semantics for both users. Certifies rendezvous within one period and
/// reports the maximum time-to-rendezvous seen.
inline MTTRReport verify_theorem2(std::uint32_t total,
                                  std::optional<PerfectDifferenceSet> d = std::nullopt,
                                  std::uint32_t budget = 8) {
  if (total < 2) throw std::invalid_argument("verify_theorem2: need at least two channels");
  if (total > budget)
    throw SearchBudgetExceeded("verify_theorem2: subset enumeration over budget");
  MTTRReport report;
  report.total = total;
  report.m = static_cast<std::uint32_t>(smallest_prime_power_geq(total + 1));
  report.period = report.m * report.m + report.m + 1;
  report.bound = static_cast<std::uint64_t>(total) * total + 3 * total + 3;
  report.bound_applies = factor_prime_power(total + 1).has_value();
  const ChannelHoppingSequence base = build_ppol(report.m, std::move(d));
  report.set_used = *base.provenance;
  const auto catalogue = detail::pessimistic_catalogue(total, base);
  const std::uint32_t subsets = (1u << total) - 1;
  for (std::uint32_t m1 = 1; m1 <= subsets; ++m1) {
    for (std::uint32_t m2 = 1; m2 <= subsets; ++m2) {
      if (std::popcount(m1 & m2) < 2) {
        ++report.excluded_pairs;
        continue;
      }
      ++report.qualifying_pairs;
      for (std::uint32_t drift = 0; drift < report.period; ++drift) {
        const auto outcome = ttr(catalogue[m1], catalogue[m2], drift, report.period);
        if (!outcome.ttr) {
          ++report.failures;
          continue;
        }
        if (*outcome.ttr >= report.mttr) {
          report.mttr = *outcome.ttr;
          report.worst = {detail::mask_channels(m1), detail::mask_channels(m2), drift,
                          *outcome.ttr};
        }
      }
    }
  }
  report.pass = report.failures == 0 && (!report.bound_applies || report.mttr <= report.bound);
  return report;
}

struct Corollary1Report {
  std::uint32_t total = 0;
  std::uint32_t m = 0;
  std::uint32_t period = 0;
  bool pass = false;
  std::uint64_t qualifying_pairs = 0;
  std::uint64_t failures = 0;  // (pair, drift, channel) without a witness
  std::uint64_t max_witness_ttr = 0;
  PairDrift worst;
  PerfectDifferenceSet set_used;
};

/// Full-diversity sweep for small sets: whenever both users hold at most
/// (N+2)/2 channels, every commonly available channel must have a rendezvous
/// witness within one period, for every drift, under wildcard semantics.
inline Corollary1Report verify_corollary1(std::uint32_t total,
                                          std::optional<PerfectDifferenceSet> d = std::nullopt,
                                          std::uint32_t budget = 8) {
  if (total < 2) throw std::invalid_argument("verify_corollary1: need at least two channels");
  if (total > budget)
    throw SearchBudgetExceeded("verify_corollary1: subset enumeration over budget");
  Corollary1Report report;
  report.total = total;
  report.m = static_cast<std::uint32_t>(smallest_prime_power_geq(total + 1));
  report.period = report.m * report.m + report.m + 1;
  const ChannelHoppingSequence base = build_ppol(report.m, std::move(d));
  report.set_used = *base.provenance;
  const auto catalogue = detail::pessimistic_catalogue(total, base);
  const std::uint32_t subsets = (1u << total) - 1;
  for (std::uint32_t m1 = 1; m1 <= subsets; ++m1) {
    if (2u * std::popcount(m1) > total + 2) continue;
    for (std::uint32_t m2 = 1; m2 <= subsets; ++m2) {
      if (2u * std::popcount(m2) > total + 2) continue;
      if ((m1 & m2) == 0) continue;
      ++report.qualifying_pairs;
      const auto& s1 = catalogue[m1];
      const auto& s2 = catalogue[m2];
      for (std::uint32_t drift = 0; drift < report.period; ++drift) {
        for (std::uint32_t channel : detail::mask_channels(m1 & m2)) {
          std::optional<std::uint64_t> witness;
          for (std::uint32_t t = 0; t < report.period; ++t) {
            if (s1.slots[t] == static_cast<int>(channel) &&
                s2.slots[(t + drift) % report.period] == static_cast<int>(channel)) {
              witness = t;
              break;
            }
          }
          if (!witness) {
            ++report.failures;
          } else if (*witness >= report.max_witness_ttr) {
            report.max_witness_ttr = *witness;
            report.worst = {detail::mask_channels(m1), detail::mask_channels(m2), drift,
                            *witness};
          }
        }
      }
    }
  }
  report.pass = report.failures == 0;
  return report;
}

}  // namespace ppol
