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
// Command-line front end. Exit codes: 0 success / verification passed,
// 1 a verified property is violated, 2 usage or parameter error, 3 I/O error.
// Identical invocations (including seeds) produce byte-identical output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppol/ppol.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kIoError = 3;

void report_error(const std::string& kind, const std::string& message) {
  ppol::json j{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << j.dump() << '\n';
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    report_error("io", "cannot open output file: " + out_path);
    return kIoError;
  }
  out << text;
  if (!out) {
    report_error("io", "write failed: " + out_path);
    return kIoError;
  }
  return kOk;
}

std::string pretty(const ppol::json& j) { return j.dump(2) + "\n"; }

std::vector<std::uint32_t> parse_channel_list(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in channel list");
    std::size_t used = 0;
    const unsigned long value = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad entry in channel list: " + item);
    out.push_back(static_cast<std::uint32_t>(value));
  }
  if (out.empty()) throw std::invalid_argument("channel list is empty");
  return out;
}

ppol::PerfectDifferenceSet set_of_order(std::uint32_t m, const std::string& csv) {
  ppol::PerfectDifferenceSet d;
  d.m = m;
  d.p = m * m + m + 1;
  d.elements = parse_channel_list(csv);
  return d;
}

struct ScenarioFlags {
  std::uint32_t total = 0;
  std::string c1, c2;
  std::uint32_t n1 = 0, n2 = 0, overlap = 0;
  std::int64_t drift = -1;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  std::uint64_t horizon = 0;
  std::string scenario_file;

  ppol::Scenario build() const {
    if (!scenario_file.empty()) {
      std::ifstream in(scenario_file);
      if (!in) throw std::ios_base::failure("cannot open scenario file: " + scenario_file);
      ppol::json j;
      try {
        in >> j;
      } catch (const ppol::json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario file: ") + e.what());
      }
      return ppol::scenario_from_json(j);
    }
    ppol::Scenario sc;
    sc.total = total;
    sc.trials = trials;
    sc.seed = seed;
    sc.horizon = horizon;
    if (drift >= 0) sc.drift = static_cast<std::uint32_t>(drift);
    if (!c1.empty() || !c2.empty()) {
      if (c1.empty() || c2.empty())
        throw std::invalid_argument("--c1 and --c2 must be given together");
      sc.first = ppol::AvailableChannelSet::make(total, parse_channel_list(c1));
      sc.second = ppol::AvailableChannelSet::make(total, parse_channel_list(c2));
    } else {
      sc.size_first = n1;
      sc.size_second = n2;
      sc.overlap = overlap;
    }
    return sc;
  }

  void attach(CLI::App* cmd, bool with_universe = true) {
    if (with_universe) cmd->add_option("--N", total, "size of the channel universe");
    cmd->add_option("--c1", c1, "explicit channel set of user 1 (comma separated)");
    cmd->add_option("--c2", c2, "explicit channel set of user 2 (comma separated)");
    cmd->add_option("--n1", n1, "random-model set size of user 1");
    cmd->add_option("--n2", n2, "random-model set size of user 2");
    cmd->add_option("--overlap", overlap, "forced number of common channels");
    cmd->add_option("--drift", drift, "pin the clock drift (default: uniform per trial)");
    cmd->add_option("--trials", trials, "number of trials");
    cmd->add_option("--seed", seed, "scenario seed");
    cmd->add_option("--horizon", horizon, "slot cap per trial (0 = one period)");
    cmd->add_option("--scenario", scenario_file, "load the scenario from a JSON file");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PPoL channel-hopping sequences: generation, verification, simulation"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "build the sequence on m+1 channels");
  std::uint32_t gen_m = 0;
  std::string gen_set, gen_format = "json", gen_out;
  gen->add_option("--m", gen_m, "plane order (prime power)")->required();
  gen->add_option("--set", gen_set, "difference set to use (comma separated)");
  gen->add_option("--format", gen_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  gen->add_option("--out", gen_out, "output path (default: stdout)");

  // verify-pds
  auto* vpds = app.add_subcommand("verify-pds", "check the perfect-difference property");
  std::uint32_t vpds_p = 0;
  std::string vpds_set, vpds_out;
  vpds->add_option("--p", vpds_p, "modulus")->required();
  vpds->add_option("--set", vpds_set, "residues (comma separated)")->required();
  vpds->add_option("--out", vpds_out, "output path (default: stdout)");

  // dor
  auto* dor = app.add_subcommand("dor", "degree-of-rendezvous profile over all drifts");
  std::uint32_t dor_m = 0;
  std::string dor_set, dor_format = "json", dor_out;
  dor->add_option("--m", dor_m, "plane order (prime power)")->required();
  dor->add_option("--set", dor_set, "difference set to use (comma separated)");
  dor->add_option("--format", dor_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  dor->add_option("--out", dor_out, "output path (default: stdout)");

  // verify-theorem1
  auto* vt1 = app.add_subcommand("verify-theorem1",
                                 "DoR(d) >= m-1 with failing channels in the predicted pair");
  std::uint32_t vt1_m = 0;
  std::string vt1_set, vt1_out;
  vt1->add_option("--m", vt1_m, "plane order (prime power)")->required();
  vt1->add_option("--set", vt1_set, "difference set to use (comma separated)");
  vt1->add_option("--out", vt1_out, "output path (default: stdout)");

  // verify-theorem2
  auto* vt2 = app.add_subcommand(
      "verify-theorem2", "worst-case rendezvous within one period given two common channels");
  std::uint32_t vt2_n = 0, vt2_budget = 8;
  std::string vt2_set, vt2_out;
  vt2->add_option("--N", vt2_n, "size of the channel universe")->required();
  vt2->add_option("--set", vt2_set, "difference set to use (comma separated)");
  vt2->add_option("--budget", vt2_budget, "largest N accepted for exhaustive enumeration");
  vt2->add_option("--out", vt2_out, "output path (default: stdout)");

  // verify-corollary1
  auto* vc1 = app.add_subcommand(
      "verify-corollary1",
      "rendezvous on every common channel within one period for small sets");
  std::uint32_t vc1_n = 0, vc1_budget = 8;
  std::string vc1_set, vc1_out;
  vc1->add_option("--N", vc1_n, "size of the channel universe")->required();
  vc1->add_option("--set", vc1_set, "difference set to use (comma separated)");
  vc1->add_option("--budget", vc1_budget, "largest N accepted for exhaustive enumeration");
  vc1->add_option("--out", vc1_out, "output path (default: stdout)");

  // remap
  auto* remap = app.add_subcommand("remap", "remap the sequence onto an available-channel set");
  std::uint32_t remap_n = 0;
  std::uint64_t remap_seed = 0;
  bool remap_pessimistic = false;
  std::string remap_avail, remap_format = "json", remap_out;
  remap->add_option("--N", remap_n, "size of the channel universe")->required();
  remap->add_option("--avail", remap_avail, "available channels (comma separated)")->required();
  remap->add_option("--seed", remap_seed, "seed for the random slots");
  remap->add_flag("--pessimistic", remap_pessimistic,
                  "emit wildcards (-1) instead of random slots");
  remap->add_option("--format", remap_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  remap->add_option("--out", remap_out, "output path (default: stdout)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo time-to-rendezvous statistics");
  ScenarioFlags sim_flags;
  std::string sim_algo = "ppol", sim_format = "json", sim_out;
  sim_flags.attach(sim);
  sim->add_option("--algo", sim_algo, "ppol or random")
      ->check(CLI::IsMember({"ppol", "random"}));
  sim->add_option("--format", sim_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sim->add_option("--out", sim_out, "output path (default: stdout)");

  // compare
  auto* cmp = app.add_subcommand("compare",
                                 "remapped sequences vs. the uniform-random baseline");
  ScenarioFlags cmp_flags;
  std::string cmp_format = "json", cmp_out;
  cmp_flags.attach(cmp);
  cmp->add_option("--format", cmp_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmp->add_option("--out", cmp_out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      std::optional<ppol::PerfectDifferenceSet> d;
      if (!gen_set.empty()) d = set_of_order(gen_m, gen_set);
      const auto seq = ppol::build_ppol(gen_m, std::move(d));
      return emit(gen_format == "csv" ? ppol::sequence_csv(seq) : pretty(ppol::json(seq)),
                  gen_out);
    }

    if (vpds->parsed()) {
      const auto elements = parse_channel_list(vpds_set);
      const auto report = ppol::verify_perfect(elements, vpds_p);
      ppol::json j(report);
      j["p"] = vpds_p;
      j["elements"] = elements;
      const int io = emit(pretty(j), vpds_out);
      if (io != kOk) return io;
      return report.perfect ? kOk : kViolation;
    }

    if (dor->parsed()) {
      std::optional<ppol::PerfectDifferenceSet> d;
      if (!dor_set.empty()) d = set_of_order(dor_m, dor_set);
      const auto profile = ppol::dor_profile(ppol::build_ppol(dor_m, std::move(d)));
      return emit(dor_format == "csv" ? ppol::dor_csv(profile) : pretty(ppol::json(profile)),
                  dor_out);
    }

    if (vt1->parsed()) {
      std::optional<ppol::PerfectDifferenceSet> d;
      if (!vt1_set.empty()) d = set_of_order(vt1_m, vt1_set);
      const auto report = ppol::verify_theorem1(vt1_m, std::move(d));
      const int io = emit(pretty(ppol::json(report)), vt1_out);
      if (io != kOk) return io;
      return report.pass ? kOk : kViolation;
    }

    if (vt2->parsed()) {
      std::optional<ppol::PerfectDifferenceSet> d;
      if (!vt2_set.empty()) {
        const auto m = static_cast<std::uint32_t>(ppol::smallest_prime_power_geq(vt2_n + 1));
        d = set_of_order(m, vt2_set);
      }
      const auto report = ppol::verify_theorem2(vt2_n, std::move(d), vt2_budget);
      const int io = emit(pretty(ppol::json(report)), vt2_out);
      if (io != kOk) return io;
      return report.pass ? kOk : kViolation;
    }

    if (vc1->parsed()) {
      std::optional<ppol::PerfectDifferenceSet> d;
      if (!vc1_set.empty()) {
        const auto m = static_cast<std::uint32_t>(ppol::smallest_prime_power_geq(vc1_n + 1));
        d = set_of_order(m, vc1_set);
      }
      const auto report = ppol::verify_corollary1(vc1_n, std::move(d), vc1_budget);
      const int io = emit(pretty(ppol::json(report)), vc1_out);
      if (io != kOk) return io;
      return report.pass ? kOk : kViolation;
    }

    if (remap->parsed()) {
      const auto avail =
          ppol::AvailableChannelSet::make(remap_n, parse_channel_list(remap_avail));
      const auto plan = ppol::make_plan(remap_n, avail);
      const auto base = ppol::build_ppol(plan.m);
      const auto remapped = remap_pessimistic
                                ? ppol::remap_sequence_pessimistic(base, plan)
                                : ppol::remap_sequence(base, plan, remap_seed);
      return emit(remap_format == "csv" ? ppol::sequence_csv(remapped.sequence)
                                        : pretty(ppol::json(remapped)),
                  remap_out);
    }

    if (sim->parsed()) {
      const auto scenario = sim_flags.build();
      const auto stats = sim_algo == "random" ? ppol::simulate_random_baseline(scenario)
                                              : ppol::simulate_ppol(scenario);
      if (sim_format == "csv") return emit(ppol::statistics_csv(stats), sim_out);
      ppol::json j(stats);
      j["scenario"] = ppol::scenario_to_json(scenario);
      j["algo"] = sim_algo;
      return emit(pretty(j), sim_out);
    }

    if (cmp->parsed()) {
      const auto scenario = cmp_flags.build();
      const auto report = ppol::compare_ettr(scenario);
      if (cmp_format == "csv") return emit(ppol::comparison_csv(report), cmp_out);
      ppol::json j(report);
      j["scenario"] = ppol::scenario_to_json(scenario);
      return emit(pretty(j), cmp_out);
    }
  } catch (const ppol::SearchBudgetExceeded& e) {
    report_error("usage", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    report_error("usage", e.what());
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    report_error("io", e.what());
    return kIoError;
  }

  report_error("usage", "no subcommand given");
  return kUsage;
}
