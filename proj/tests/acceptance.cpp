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
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
// its runtime; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ppol/ppol.hpp"

namespace {

using ppol::json;

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
};

// 1. Worked m=3 example: exact sequence, pencil blocks, failing-channel
//    profile and predicted pairs.
void table_reproduction(Check& c) {
  const ppol::PerfectDifferenceSet table{3, 13, {0, 1, 4, 6}};
  const auto seq = ppol::build_ppol(3, table);
  c.expect(seq.slots == std::vector<int>{0, 0, 2, 1, 0, 1, 0, 3, 3, 2, 2, 3, 1},
           "sequence mismatch");

  const auto pencil = ppol::pencil_partition(table);
  c.expect(pencil.blocks[1].points == std::vector<std::uint32_t>{3, 5, 12}, "block 1");
  c.expect(pencil.blocks[2].points == std::vector<std::uint32_t>{2, 9, 10}, "block 2");
  c.expect(pencil.blocks[3].points == std::vector<std::uint32_t>{7, 8, 11}, "block 3");

  const auto profile = ppol::dor_profile(seq);
  const auto fails = [&](std::uint32_t channel) {
    std::vector<std::uint32_t> out;
    for (const auto& row : profile.drifts)
      if (std::find(row.failing.begin(), row.failing.end(), channel) != row.failing.end())
        out.push_back(row.drift);
    return out;
  };
  c.expect(fails(0).empty(), "channel 0 must never fail");
  c.expect(fails(1) == std::vector<std::uint32_t>{1, 3, 5, 8, 10, 12}, "channel 1 profile");
  c.expect(fails(2) == std::vector<std::uint32_t>{2, 3, 4, 9, 10, 11}, "channel 2 profile");
  c.expect(fails(3) == std::vector<std::uint32_t>{2, 5, 6, 7, 8, 11}, "channel 3 profile");

  const std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs{
      {1, 0}, {3, 2}, {2, 1}, {2, 0}, {3, 1}, {3, 0},
      {0, 3}, {1, 3}, {0, 2}, {1, 2}, {2, 3}, {0, 1}};
  for (std::uint32_t d = 1; d <= 12; ++d)
    c.expect(ppol::failing_pair_prediction(table, d) == pairs[d - 1],
             "predicted pair at d=" + std::to_string(d));
}

// 2. Every prime-power order in the desk range: valid construction and the
//    DoR(d) >= m-1 sweep.
void order_sweep(Check& c) {
  for (std::uint32_t m : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const auto d = ppol::singer_difference_set(m);
    c.expect(ppol::verify_perfect(d.elements, d.p).perfect,
             "construction invalid at m=" + std::to_string(m));
    const auto report = ppol::verify_theorem1(m);
    c.expect(report.pass, "DoR sweep failed at m=" + std::to_string(m));
    c.expect(report.min_dor + 1 >= m, "min DoR below m-1 at m=" + std::to_string(m));
  }
}

// 3. Worst-case rendezvous within one period whenever two channels are
//    commonly available; p equals the N^2+3N+3 bound at these N.
void mttr_bound(Check& c) {
  for (std::uint32_t n : {4u, 6u}) {
    const auto report = ppol::verify_theorem2(n);
    c.expect(report.pass, "sweep failed at N=" + std::to_string(n));
    c.expect(report.failures == 0, "missed rendezvous at N=" + std::to_string(n));
    c.expect(report.bound_applies && report.bound == n * n + 3 * n + 3, "bound arithmetic");
    c.expect(report.mttr <= report.bound,
             "MTTR " + std::to_string(report.mttr) + " over bound at N=" + std::to_string(n));
  }
}

// 4. Every commonly available channel rendezvouses within one period when
//    both sets hold at most (N+2)/2 channels.
void full_diversity(Check& c) {
  for (std::uint32_t n : {4u, 6u}) {
    const auto report = ppol::verify_corollary1(n);
    c.expect(report.pass, "sweep failed at N=" + std::to_string(n));
    c.expect(report.max_witness_ttr < report.period, "witness beyond the period");
  }
}

// 5. Search oracle agreement and canonical normalization.
void oracle_agreement(Check& c) {
  std::mt19937 rng(2026);
  for (std::uint32_t m : {2u, 3u, 4u, 5u}) {
    const auto found = ppol::brute_force_difference_set(m);
    c.expect(found.has_value(), "search found nothing at m=" + std::to_string(m));
    if (!found) continue;
    c.expect(ppol::verify_perfect(found->elements, found->p).perfect,
             "search result invalid at m=" + std::to_string(m));

    const auto canon = ppol::normalize_difference_set(found->elements, found->p);
    c.expect(ppol::normalize_difference_set(canon.elements, canon.p).elements == canon.elements,
             "normalization not idempotent at m=" + std::to_string(m));
    for (int trial = 0; trial < 10; ++trial) {
      std::uint32_t u = 1 + rng() % (found->p - 1);
      while (std::gcd(u, found->p) != 1) u = 1 + rng() % (found->p - 1);
      const std::uint32_t s = rng() % found->p;
      std::vector<std::uint32_t> image;
      for (std::uint32_t a : found->elements)
        image.push_back(
            static_cast<std::uint32_t>((static_cast<std::uint64_t>(u) * a + s) % found->p));
      std::sort(image.begin(), image.end());
      c.expect(ppol::normalize_difference_set(image, found->p).elements == canon.elements,
               "orbit image normalized differently at m=" + std::to_string(m));
    }
  }
}

// 6. ETTR of the remapped sequences stays close to the uniform-random
//    baseline, and no trial contradicts the worst-case certificate.
void ettr_band(Check& c) {
  ppol::Scenario sc;
  sc.total = 8;
  sc.size_first = 4;
  sc.size_second = 4;
  sc.overlap = 2;
  sc.trials = 100000;
  sc.seed = 42;
  const auto report = ppol::compare_ettr(sc);
  std::ostringstream seen;
  seen << "ratio=" << report.ratio << " ppol=" << report.ppol.mean
       << " random=" << report.baseline.mean;
  c.expect(report.ratio >= 0.8 && report.ratio <= 1.25, "ratio outside [0.8,1.25]: " + seen.str());
  c.expect(report.ppol.failures == 0, "remapped trial missed the period horizon");
  c.expect(report.ppol.max < report.period, "simulated TTR at or beyond the period");
  c.detail << seen.str();
}

// 7. Identical configurations reproduce byte-identical reports.
void determinism(Check& c) {
  c.expect(json(ppol::verify_theorem2(4)).dump(2) == json(ppol::verify_theorem2(4)).dump(2),
           "worst-case report differs between runs");
  c.expect(json(ppol::build_ppol(3, ppol::PerfectDifferenceSet{3, 13, {0, 1, 4, 6}})).dump(2) ==
               json(ppol::build_ppol(3, ppol::PerfectDifferenceSet{3, 13, {0, 1, 4, 6}})).dump(2),
           "sequence report differs between runs");
  ppol::Scenario sc;
  sc.total = 6;
  sc.size_first = 3;
  sc.size_second = 3;
  sc.overlap = 2;
  sc.trials = 2000;
  sc.seed = 7;
  c.expect(json(ppol::compare_ettr(sc)).dump(2) == json(ppol::compare_ettr(sc)).dump(2),
           "comparison report differs between runs");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example reproduction", 1.0, table_reproduction},
      {2, "DoR sweep over prime-power orders", 30.0, order_sweep},
      {3, "worst-case MTTR bound (N=4, N=6)", 300.0, mttr_bound},
      {4, "full diversity for small sets (N=4, N=6)", 300.0, full_diversity},
      {5, "search oracle and canonical normalization", 300.0, oracle_agreement},
      {6, "ETTR band vs. random baseline", 120.0, ettr_band},
      {7, "byte-identical reports", 120.0, determinism},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    criterion.run(check);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < criterion.limit_seconds, "over the runtime limit");
    std::printf("criterion %d: %s (%.2f s) - %s%s%s\n", criterion.id,
                check.pass ? "PASS" : "FAIL", seconds, criterion.name,
                check.detail.str().empty() ? "" : ": ", check.detail.str().c_str());
    if (!check.pass) ++failed;
  }
  if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
