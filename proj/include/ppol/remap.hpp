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
// Remapping of a sequence on m+1 labels onto an arbitrary available-channel
// set, m being the smallest prime power >= N+1. When the set holds at most
// (N+2)/2 channels, the first |set| missing labels are paired one-to-one with
// the available channels so that every available channel owns two pencil
// lines; remaining labels are replaced per slot, either by an independent
// uniform draw or by a wildcard that never matches (worst-case semantics).

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ppol/rng.hpp"
#include "ppol/sequence.hpp"

namespace ppol {

struct AvailableChannelSet {
  std::uint32_t total = 0;                // N: size of the common label space
  std::vector<std::uint32_t> channels;    // sorted, distinct, within [0, N)

  static AvailableChannelSet make(std::uint32_t total, std::vector<std::uint32_t> channels) {
    std::sort(channels.begin(), channels.end());
    channels.erase(std::unique(channels.begin(), channels.end()), channels.end());
    if (channels.empty())
      throw std::invalid_argument("AvailableChannelSet: at least one channel required");
    if (channels.back() >= total)
      throw std::invalid_argument("AvailableChannelSet: channel outside the universe");
    return AvailableChannelSet{total, std::move(channels)};
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(channels.size()); }
  bool contains(std::uint32_t c) const {
    return std::binary_search(channels.begin(), channels.end(), c);
  }
};

struct RemapPlan {
  std::uint32_t total = 0;  // N
  std::uint32_t m = 0;      // smallest prime power >= N+1
  int remap_case = 0;       // 1: all missing labels random, 2: first n paired
  AvailableChannelSet available;
  // label in the complement of the available set -> available channel,
  // both sides in ascending order (Case 2 only)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> deterministic_map;
  std::vector<std::uint32_t> random_labels;

  std::uint32_t complement_size() const {
    return static_cast<std::uint32_t>(deterministic_map.size() + random_labels.size());
  }
  std::uint32_t period() const { return m * m + m + 1; }
};

inline RemapPlan make_plan(std::uint32_t total, const AvailableChannelSet& avail) {
  if (total < 2) throw std::invalid_argument("make_plan: need at least two channels");
  if (avail.total != total)
    throw std::invalid_argument("make_plan: available set built for a different universe");
  if (avail.channels.empty() || avail.channels.back() >= total)
    throw std::invalid_argument("make_plan: available set outside the universe");
  RemapPlan plan;
  plan.total = total;
  plan.m = static_cast<std::uint32_t>(smallest_prime_power_geq(total + 1));
  plan.available = avail;
  std::vector<std::uint32_t> complement;  // {0..m} minus the available channels
  for (std::uint32_t label = 0; label <= plan.m; ++label)
    if (!avail.contains(label)) complement.push_back(label);
  const std::uint32_t n = avail.size();
  if (2 * n <= total + 2) {
    plan.remap_case = 2;
    if (complement.size() < n)
      throw std::logic_error("make_plan: complement smaller than available set");
    for (std::uint32_t j = 0; j < n; ++j)
      plan.deterministic_map.emplace_back(complement[j], avail.channels[j]);
    plan.random_labels.assign(complement.begin() + n, complement.end());
  } else {
    plan.remap_case = 1;
    plan.random_labels = std::move(complement);
  }
  return plan;
}

struct RemappedSequence {
  ChannelHoppingSequence sequence;  // slots within the available set, or wildcards
  RemapPlan plan;
  std::uint64_t seed = 0;
  bool pessimistic = false;
};

namespace detail {

enum : int { kRandomSlot = -2 };

inline std::vector<int> remap_targets(const RemapPlan& plan) {
  std::vector<int> target(plan.m + 1, kRandomSlot);
  for (std::uint32_t c : plan.available.channels) target[c] = static_cast<int>(c);
  for (const auto& [label, channel] : plan.deterministic_map)
    target[label] = static_cast<int>(channel);
  return target;
}

inline RemappedSequence remap_with(const ChannelHoppingSequence& base, const RemapPlan& plan,
                                   std::uint64_t seed, bool pessimistic) {
  if (base.channel_count != plan.m + 1 || base.period != plan.period())
    throw std::invalid_argument("remap_sequence: base sequence does not match the plan");
  const std::vector<int> target = remap_targets(plan);
  RemappedSequence out;
  out.plan = plan;
  out.seed = seed;
  out.pessimistic = pessimistic;
  out.sequence.period = base.period;
  out.sequence.channel_count = plan.total;
  out.sequence.provenance = base.provenance;
  out.sequence.slots.resize(base.period);
  const auto& channels = plan.available.channels;
  for (std::uint32_t t = 0; t < base.period; ++t) {
    const int label = base.slots[t];
    if (label < 0 || static_cast<std::uint32_t>(label) > plan.m)
      throw std::invalid_argument("remap_sequence: base sequence has foreign labels");
    const int mapped = target[static_cast<std::uint32_t>(label)];
    if (mapped != kRandomSlot) {
      out.sequence.slots[t] = mapped;
    } else if (pessimistic) {
      out.sequence.slots[t] = kWildcard;
    } else {
      out.sequence.slots[t] =
          static_cast<int>(channels[keyed_draw(seed, t) % channels.size()]);
    }
  }
  return out;
}

}  // namespace detail

/// Replace every slot whose label is outside the available set: paired labels
/// deterministically, the rest by an independent uniform draw keyed on
/// (seed, slot). Equal seeds give identical sequences.
inline RemappedSequence remap_sequence(const ChannelHoppingSequence& base, const RemapPlan& plan,
                                       std::uint64_t seed) {
  return detail::remap_with(base, plan, seed, /*pessimistic=*/false);
}

/// Same, but randomly remapped slots become wildcards. Any rendezvous found
/// against such a sequence therefore holds for every resolution of the
/// randomness.
inline RemappedSequence remap_sequence_pessimistic(const ChannelHoppingSequence& base,
                                                   const RemapPlan& plan) {
  return detail::remap_with(base, plan, 0, /*pessimistic=*/true);
}

}  // namespace ppol
