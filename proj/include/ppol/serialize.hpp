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
// JSON and CSV views of the toolkit's value types. Keys are stable; equal
// inputs serialize to identical bytes.

#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "ppol/analysis.hpp"
#include "ppol/difference_set.hpp"
#include "ppol/remap.hpp"
#include "ppol/sequence.hpp"
#include "ppol/simulate.hpp"

namespace ppol {

using nlohmann::json;

inline void to_json(json& j, const PerfectDifferenceSet& d) {
  j = json{{"m", d.m}, {"p", d.p}, {"elements", d.elements}};
}

inline void to_json(json& j, const DifferenceCheckReport& r) {
  j = json{{"perfect", r.perfect}, {"duplicated", r.duplicated}, {"missing", r.missing}};
}

inline void to_json(json& j, const Line& line) {
  j = json{{"shift", line.shift}, {"points", line.points}};
}

inline void to_json(json& j, const PencilPartition& pencil) {
  j = json{{"set", pencil.base}, {"blocks", pencil.blocks}};
}

// Valid for sequences on the dense label set {0..m}; remapped sequences are
// serialized through RemappedSequence instead.
inline void to_json(json& j, const ChannelHoppingSequence& seq) {
  j = json{{"p", seq.period}, {"m", seq.channel_count - 1}, {"slots", seq.slots}};
}

inline void to_json(json& j, const AvailableChannelSet& avail) {
  j = json{{"N", avail.total}, {"channels", avail.channels}};
}

inline void to_json(json& j, const RemapPlan& plan) {
  json map = json::object();
  for (const auto& [label, channel] : plan.deterministic_map)
    map[std::to_string(label)] = channel;
  j = json{{"N", plan.total},
           {"m", plan.m},
           {"case", plan.remap_case},
           {"available", plan.available.channels},
           {"deterministic_map", map},
           {"random_labels", plan.random_labels},
           {"complement_size", plan.complement_size()}};
}

inline void to_json(json& j, const RemappedSequence& seq) {
  j = json{{"sequence", json{{"p", seq.sequence.period},
                             {"m", seq.plan.m},
                             {"slots", seq.sequence.slots}}},
           {"plan", seq.plan},
           {"seed", seq.seed},
           {"pessimistic", seq.pessimistic}};
}

inline void to_json(json& j, const DriftReport& r) {
  json witnesses = json::object();
  for (const auto& [channel, slot] : r.witnesses)
    witnesses[std::to_string(channel)] = slot;
  j = json{{"d", r.drift}, {"dor", r.dor}, {"failing", r.failing}, {"witnesses", witnesses}};
}

inline void to_json(json& j, const DoRProfile& profile) {
  j = json{{"p", profile.period},
           {"channels", profile.channel_count},
           {"min_dor", profile.min_dor()},
           {"drifts", profile.drifts}};
}

inline void to_json(json& j, const Theorem1Report::Violation& v) {
  j = json{{"d", v.drift},
           {"dor", v.dor},
           {"failing", v.failing},
           {"predicted", json::array({v.predicted.first, v.predicted.second})}};
}

inline void to_json(json& j, const Theorem1Report& r) {
  j = json{{"m", r.m},         {"p", r.period},           {"pass", r.pass},
           {"min_dor", r.min_dor}, {"violations", r.violations}, {"set", r.set_used}};
}

inline void to_json(json& j, const PairDrift& w) {
  j = json{{"c1", w.first}, {"c2", w.second}, {"d", w.drift}, {"ttr", w.ttr}};
}

inline void to_json(json& j, const MTTRReport& r) {
  j = json{{"N", r.total},
           {"m", r.m},
           {"p", r.period},
           {"bound", r.bound},
           {"bound_applies", r.bound_applies},
           {"pass", r.pass},
           {"mttr", r.mttr},
           {"qualifying_pairs", r.qualifying_pairs},
           {"excluded_pairs", r.excluded_pairs},
           {"failures", r.failures},
           {"scope",
            "all ordered pairs of nonempty subsets of {0.." + std::to_string(r.total - 1) +
                "} with at least 2 common channels, drifts 0.." + std::to_string(r.period - 1) +
                ", wildcard remapping (seed-independent)"},
           {"worst", r.worst},
           {"set", r.set_used}};
}

inline void to_json(json& j, const Corollary1Report& r) {
  j = json{{"N", r.total},
           {"m", r.m},
           {"p", r.period},
           {"pass", r.pass},
           {"qualifying_pairs", r.qualifying_pairs},
           {"failures", r.failures},
           {"max_witness_ttr", r.max_witness_ttr},
           {"scope",
            "all ordered pairs of intersecting subsets of {0.." + std::to_string(r.total - 1) +
                "} with sizes at most (N+2)/2, every common channel, drifts 0.." +
                std::to_string(r.period - 1) + ", wildcard remapping (seed-independent)"},
           {"worst", r.worst},
           {"set", r.set_used}};
}

inline void to_json(json& j, const TTRStatistics& s) {
  j = json{{"trials", s.trials}, {"failures", s.failures}, {"mean", s.mean},
           {"max", s.max},       {"p50", s.p50},           {"p90", s.p90},
           {"p99", s.p99}};
}

inline void to_json(json& j, const EttrComparison& c) {
  j = json{{"N", c.total},     {"m", c.m},         {"p", c.period},
           {"trials", c.trials}, {"seed", c.seed}, {"horizon", c.horizon},
           {"ppol", c.ppol},   {"random", c.baseline}, {"ratio", c.ratio}};
}

inline json scenario_to_json(const Scenario& sc) {
  json j{{"N", sc.total}, {"trials", sc.trials}, {"seed", sc.seed}, {"horizon", sc.horizon}};
  if (sc.explicit_sets()) {
    j["c1"] = sc.first->channels;
    j["c2"] = sc.second->channels;
  } else {
    j["n1"] = sc.size_first;
    j["n2"] = sc.size_second;
    j["overlap"] = sc.overlap;
  }
  if (sc.drift) j["drift"] = *sc.drift;
  return j;
}

inline Scenario scenario_from_json(const json& j) {
  Scenario sc;
  sc.total = j.at("N").get<std::uint32_t>();
  sc.trials = j.at("trials").get<std::uint64_t>();
  sc.seed = j.value("seed", std::uint64_t{0});
  sc.horizon = j.value("horizon", std::uint64_t{0});
  if (j.contains("drift") && !j["drift"].is_null())
    sc.drift = j["drift"].get<std::uint32_t>();
  if (j.contains("c1") || j.contains("c2")) {
    sc.first = AvailableChannelSet::make(sc.total, j.at("c1").get<std::vector<std::uint32_t>>());
    sc.second = AvailableChannelSet::make(sc.total, j.at("c2").get<std::vector<std::uint32_t>>());
  } else {
    sc.size_first = j.at("n1").get<std::uint32_t>();
    sc.size_second = j.at("n2").get<std::uint32_t>();
    sc.overlap = j.value("overlap", std::uint32_t{0});
  }
  return sc;
}

// ---- CSV views ----

inline std::string sequence_csv(const ChannelHoppingSequence& seq) {
  std::ostringstream out;
  for (std::size_t i = 0; i < seq.slots.size(); ++i) {
    if (i) out << ',';
    out << seq.slots[i];
  }
  out << '\n';
  return out.str();
}

/// Columns: d, DoR, failing_channels (semicolon-joined).
inline std::string dor_csv(const DoRProfile& profile) {
  std::ostringstream out;
  out << "d,DoR,failing_channels\n";
  for (const DriftReport& r : profile.drifts) {
    out << r.drift << ',' << r.dor << ',';
    for (std::size_t i = 0; i < r.failing.size(); ++i) {
      if (i) out << ';';
      out << r.failing[i];
    }
    out << '\n';
  }
  return out.str();
}

inline std::string statistics_csv_header() { return "trials,failures,mean,max,p50,p90,p99\n"; }

inline std::string statistics_csv_row(const TTRStatistics& s) {
  std::ostringstream out;
  out << s.trials << ',' << s.failures << ',' << s.mean << ',' << s.max << ',' << s.p50 << ','
      << s.p90 << ',' << s.p99 << '\n';
  return out.str();
}

inline std::string statistics_csv(const TTRStatistics& s) {
  return statistics_csv_header() + statistics_csv_row(s);
}

inline std::string comparison_csv(const EttrComparison& c) {
  std::ostringstream out;
  out << "algo," << statistics_csv_header() << "ppol," << statistics_csv_row(c.ppol)
      << "random," << statistics_csv_row(c.baseline) << "ratio," << c.ratio << '\n';
  return out.str();
}

}  // namespace ppol
