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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ppol/difference_set.hpp"

namespace ppol {

/// Slot marker that never matches any channel, not even another marker.
inline constexpr int kWildcard = -1;

/// Periodic channel schedule: slot t carries channel slots[t mod period].
struct ChannelHoppingSequence {
  std::uint32_t period = 0;
  std::uint32_t channel_count = 0;  // size of the label universe
  std::vector<int> slots;
  std::optional<PerfectDifferenceSet> provenance;

  int at(std::uint64_t t) const { return slots[static_cast<std::size_t>(t % period)]; }
};

inline int channel_at(const ChannelHoppingSequence& seq, std::uint64_t t) { return seq.at(t); }

/// Channel-hopping sequence on m+1 channels over one period p = m^2+m+1:
/// channel 0 on the slots of D, channel i on the slots of the punctured
/// pencil line D_{p-a_i} \ {0}. Uses the canonical difference set of order m
/// unless one is supplied.
inline ChannelHoppingSequence build_ppol(std::uint32_t m,
                                         std::optional<PerfectDifferenceSet> d = std::nullopt) {
  if (m < 2 || !factor_prime_power(m))
    throw std::invalid_argument("build_ppol: order must be a prime power >= 2");
  const std::uint32_t p = m * m + m + 1;
  PerfectDifferenceSet pds;
  if (d) {
    pds = std::move(*d);
    if (pds.m != m || pds.p != p || pds.elements.size() != m + 1)
      throw std::invalid_argument("build_ppol: difference set order mismatch");
    if (!pds.normalized())
      throw std::invalid_argument("build_ppol: difference set must be normalized");
    if (!verify_perfect(pds.elements, p).perfect)
      throw std::invalid_argument("build_ppol: difference set is not perfect");
  } else {
    pds = singer_difference_set(m);
  }
  const PencilPartition pencil = pencil_partition(pds);
  ChannelHoppingSequence seq;
  seq.period = p;
  seq.channel_count = m + 1;
  seq.slots.assign(p, kWildcard);
  for (std::size_t channel = 0; channel < pencil.blocks.size(); ++channel)
    for (std::uint32_t t : pencil.blocks[channel].points)
      seq.slots[t] = static_cast<int>(channel);
  seq.provenance = std::move(pds);
  return seq;
}

}  // namespace ppol
