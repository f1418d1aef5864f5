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

#include <catch2/catch.hpp>

#include "ppol/serialize.hpp"

using namespace ppol;

TEST_CASE("difference set serialization uses the documented keys") {
  const json j(PerfectDifferenceSet{3, 13, {0, 1, 4, 6}});
  CHECK(j["m"] == 3);
  CHECK(j["p"] == 13);
  CHECK(j["elements"] == json::array({0, 1, 4, 6}));
}

TEST_CASE("plan serialization carries the pairing and the complement size") {
  const auto plan = make_plan(4, AvailableChannelSet::make(4, {0, 2}));
  const json j(plan);
  CHECK(j["N"] == 4);
  CHECK(j["m"] == 5);
  CHECK(j["case"] == 2);
  CHECK(j["available"] == json::array({0, 2}));
  CHECK(j["deterministic_map"] == json({{"1", 0}, {"3", 2}}));
  CHECK(j["random_labels"] == json::array({4, 5}));
  CHECK(j["complement_size"] == 4);
}

TEST_CASE("sequence CSV is one line of slots") {
  const auto seq = build_ppol(3, PerfectDifferenceSet{3, 13, {0, 1, 4, 6}});
  CHECK(sequence_csv(seq) == "0,0,2,1,0,1,0,3,3,2,2,3,1\n");
  const json j(seq);
  CHECK(j["p"] == 13);
  CHECK(j["m"] == 3);
  CHECK(j["slots"].size() == 13);
}

TEST_CASE("DoR CSV lists drift, count and failing channels") {
  const auto profile = dor_profile(build_ppol(3, PerfectDifferenceSet{3, 13, {0, 1, 4, 6}}));
  const auto csv = dor_csv(profile);
  CHECK(csv.rfind("d,DoR,failing_channels\n1,3,1\n2,2,2;3\n", 0) == 0);
}

TEST_CASE("scenario JSON round-trips") {
  Scenario sc;
  sc.total = 8;
  sc.size_first = 4;
  sc.size_second = 3;
  sc.overlap = 2;
  sc.trials = 1000;
  sc.seed = 5;
  sc.drift = 12;
  const Scenario back = scenario_from_json(scenario_to_json(sc));
  CHECK(back.total == sc.total);
  CHECK(back.size_first == sc.size_first);
  CHECK(back.size_second == sc.size_second);
  CHECK(back.overlap == sc.overlap);
  CHECK(back.trials == sc.trials);
  CHECK(back.seed == sc.seed);
  REQUIRE(back.drift);
  CHECK(*back.drift == 12);

  Scenario ex;
  ex.total = 4;
  ex.first = AvailableChannelSet::make(4, {0, 2});
  ex.second = AvailableChannelSet::make(4, {1, 2});
  ex.trials = 10;
  const Scenario back2 = scenario_from_json(scenario_to_json(ex));
  REQUIRE(back2.explicit_sets());
  CHECK(back2.first->channels == ex.first->channels);
  CHECK(back2.second->channels == ex.second->channels);
}

TEST_CASE("equal reports serialize to identical bytes") {
  const auto a = json(verify_theorem1(3)).dump(2);
  const auto b = json(verify_theorem1(3)).dump(2);
  CHECK(a == b);
}
