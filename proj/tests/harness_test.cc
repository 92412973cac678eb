// Copyright 2026 The twrmec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "twrmec/harness/channel_sampler.h"
#include "twrmec/harness/config.h"
#include "twrmec/harness/reports.h"
#include "twrmec/harness/sweep.h"
#include "twrmec/harness/validation.h"

namespace twrmec {
namespace {

using nlohmann::json;

SweepConfig SmallSweep() {
  SweepConfig c;
  c.n_trials = 4;
  c.t_points = 3;
  c.seed = 7;
  return c;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(ChannelSamplerTest, ExponentialMean) {
  std::mt19937_64 rng = TrialGenerator(1, 0);
  const int n = 1000000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = SampleExponential(rng, 1e-6);
    ASSERT_GT(x, 0.0);
    ASSERT_TRUE(std::isfinite(x));
    sum += x;
  }
  EXPECT_NEAR(sum / n, 1e-6, 5e-3 * 1e-6);
}

TEST(ChannelSamplerTest, TrialStreamsAreIndependentOfOrder) {
  std::mt19937_64 a = TrialGenerator(3, 5);
  const ChannelRealization first = SampleChannels(a, 1e-6, 1e-9);
  for (std::uint64_t t = 0; t < 5; ++t) {
    std::mt19937_64 other = TrialGenerator(3, t);
    SampleChannels(other, 1e-6, 1e-9);
  }
  std::mt19937_64 b = TrialGenerator(3, 5);
  const ChannelRealization again = SampleChannels(b, 1e-6, 1e-9);
  EXPECT_EQ(first.gamma_1f, again.gamma_1f);
  EXPECT_EQ(first.gamma_2b, again.gamma_2b);

  std::mt19937_64 c = TrialGenerator(3, 6);
  EXPECT_NE(SampleChannels(c, 1e-6, 1e-9).gamma_1f, first.gamma_1f);
  std::mt19937_64 d = TrialGenerator(4, 5);
  EXPECT_NE(SampleChannels(d, 1e-6, 1e-9).gamma_1f, first.gamma_1f);
}

TEST(ChannelSamplerTest, GammaScalesWithNoise) {
  std::mt19937_64 a = TrialGenerator(9, 0);
  std::mt19937_64 b = TrialGenerator(9, 0);
  const ChannelRealization x = SampleChannels(a, 1e-6, 1e-9);
  const ChannelRealization y = SampleChannels(b, 1e-6, 2e-9);
  EXPECT_DOUBLE_EQ(x.gamma_1b, 2.0 * y.gamma_1b);
}

TEST(SweepTest, DeadlineGrid) {
  SweepConfig c;
  const std::vector<double> g = DeadlineGrid(c);
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(g.front(), 0.7);
  EXPECT_EQ(g.back(), 1.5);
  EXPECT_NEAR(g[4], 1.1, 1e-15);
  c.t_points = 1;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(SweepTest, CsvLayout) {
  const SweepResult r = RunSweep(SmallSweep(), 1);
  const std::vector<std::string> lines = Lines(FormatSweepCsv(r.records));
  ASSERT_EQ(lines.size(), 1u + 3u * 3u);
  EXPECT_EQ(lines[0], kSweepCsvHeader);
  EXPECT_EQ(lines[1].rfind("0.7,proposed,", 0), 0u);
  EXPECT_EQ(lines[2].rfind("0.7,relay_computing,", 0), 0u);
  EXPECT_EQ(lines[3].rfind("0.7,local_computing,", 0), 0u);
  EXPECT_EQ(lines[4].rfind("1.1,proposed,", 0), 0u);
  EXPECT_EQ(lines[9].rfind("1.5,local_computing,", 0), 0u);
  EXPECT_NE(lines[1].find(",4,7"), std::string::npos);
  std::ostringstream direct;
  WriteSweepCsv(direct, r.records);
  EXPECT_EQ(direct.str(), FormatSweepCsv(r.records));
}

TEST(SweepTest, CsvFormatsRecord) {
  SweepRecord rec;
  rec.deadline_s = 0.9;
  rec.scheme = Scheme::kRelayComputing;
  rec.mean_energy = 0.012345678901234567;
  rec.feasible_fraction = 0.5;
  rec.n_trials = 10;
  rec.seed = 18446744073709551615u;
  EXPECT_EQ(Lines(FormatSweepCsv({rec}))[1],
            "0.9,relay_computing,0.012345678901234567,0.5,10,18446744073709551615");
}

TEST(SweepTest, ThreadCountDoesNotChangeOutput) {
  const std::string one = FormatSweepCsv(RunSweep(SmallSweep(), 1).records);
  const std::string three = FormatSweepCsv(RunSweep(SmallSweep(), 3).records);
  EXPECT_EQ(one, three);
}

TEST(SweepTest, CommonRandomNumbersPerTrial) {
  const SweepResult r = RunSweep(SmallSweep(), 1);
  for (std::size_t trial = 0; trial < 4; ++trial) {
    double prev = INFINITY;
    for (std::size_t t = 0; t < r.deadlines.size(); ++t) {
      const TrialOutcome& o = r.outcomes[t][0][trial];
      const double e = o.feasible ? o.solution.energy.total : INFINITY;
      EXPECT_LE(e, prev);
      prev = e;
    }
  }
}

TEST(SweepTest, UnwritablePath) {
  EXPECT_THROW(WriteSweepCsvFile("/nonexistent-dir/x.csv", {}), IoError);
}

TEST(ConfigTest, AppliesKeys) {
  HarnessConfig c;
  ApplyConfig(json::parse(R"({"deadline_T": 0.8, "task_bits_L2": 2e5, "grid_points": 64,
                              "scheme": "local_computing", "n_trials": 10, "seed": 99,
                              "tol": 0.02, "oracle_tau_points": 64})"),
              &c);
  EXPECT_EQ(c.sweep.params.deadline_s, 0.8);
  EXPECT_EQ(c.sweep.params.task_bits_2, 2e5);
  EXPECT_EQ(c.sweep.search.grid_points, 64);
  EXPECT_EQ(c.sweep.search.scheme, Scheme::kLocalComputing);
  EXPECT_EQ(c.sweep.n_trials, 10);
  const ValidationConfig v = c.Validation();
  EXPECT_EQ(v.seed, 99u);
  EXPECT_EQ(v.rel_tol, 0.02);
  EXPECT_EQ(v.oracle.tau_points, 64);
  EXPECT_EQ(v.params.task_bits_2, 2e5);
  EXPECT_FALSE(c.channel.has_value());
}

TEST(ConfigTest, ChannelNeedsAllFourGains) {
  HarnessConfig c;
  ApplyConfig(json::parse(R"({"gamma_1f": 1, "gamma_2f": 2, "gamma_1b": 3, "gamma_2b": 4})"),
              &c);
  ASSERT_TRUE(c.channel.has_value());
  EXPECT_EQ(c.channel->gamma_2b, 4.0);
  HarnessConfig d;
  EXPECT_THROW(ApplyConfig(json::parse(R"({"gamma_1f": 1})"), &d), ConfigError);
}

TEST(ConfigTest, Rejections) {
  HarnessConfig c;
  EXPECT_THROW(ApplyConfig(json::parse(R"({"deadline": 1})"), &c), ConfigError);
  EXPECT_THROW(ApplyConfig(json::parse(R"({"deadline_T": "1"})"), &c), ConfigError);
  EXPECT_THROW(ApplyConfig(json::parse(R"({"grid_points": 1.5})"), &c), ConfigError);
  EXPECT_THROW(ApplyConfig(json::parse(R"({"seed": -1})"), &c), ConfigError);
  EXPECT_THROW(ApplyConfig(json::parse(R"({"scheme": "fastest"})"), &c), ConfigError);
  EXPECT_THROW(ApplyConfig(json::parse("[1, 2]"), &c), ConfigError);
  EXPECT_THROW(LoadConfigFile("/nonexistent-dir/c.json"), ConfigError);
}

TEST(ConfigTest, MalformedFile) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "twrmec_bad_config.json").string();
  std::ofstream(path) << "{\"deadline_T\": ";
  EXPECT_THROW(LoadConfigFile(path), ConfigError);
  std::filesystem::remove(path);
}

TEST(ReportsTest, ScheduleRoundTrip) {
  Schedule s;
  s.alpha1 = 0.25;
  s.alpha2 = 0.25;
  s.tau1 = 0.1;
  s.tau2 = 0.2;
  s.tau3 = 0.03;
  s.tau4 = 0.4;
  s.power_user1 = 1e-3;
  s.power_user2 = 2e-3;
  s.power_relay = 0.5;
  const Schedule back = ScheduleFromJson(json::parse(ToJson(s).dump()));
  EXPECT_EQ(back.alpha1, s.alpha1);
  EXPECT_EQ(back.tau3, s.tau3);
  EXPECT_EQ(back.power_user2, s.power_user2);
  EXPECT_EQ(back.power_relay, s.power_relay);
  EXPECT_THROW(ScheduleFromJson(json::parse(R"({"alpha1": 0})")), json::exception);
}

TEST(ReportsTest, SolveSingleOk) {
  SystemParams p;
  p.deadline_s = 0.7;
  const json r = SolveSingle(p, ChannelRealization{}, SearchConfig{});
  ASSERT_EQ(r.at("status"), "ok");
  EXPECT_EQ(r.at("scheme"), "proposed");
  const std::string cand = r.at("candidate");
  EXPECT_TRUE(cand == "alpha_zero" || cand == "alpha_one" || cand == "alpha_phi_boundary" ||
              cand == "case_a_interior" || cand == "case_b_interior");
  const Schedule s = ScheduleFromJson(r.at("schedule"));
  EXPECT_EQ(s.alpha1, s.alpha2);
  EXPECT_TRUE(r.at("diagnostics").at("feasible").get<bool>());
  EXPECT_TRUE(r.at("diagnostics").at("violations").empty());
  EXPECT_LE(std::abs(r.at("diagnostics").at("deadline_slack").get<double>()), 1e-9 * 0.7);
  EXPECT_EQ(r.at("params").at("deadline_T"), 0.7);
  EXPECT_EQ(r.at("channel").at("gamma_1f"), 1e3);
  EXPECT_NEAR(r.at("energy").at("total").get<double>(),
              EvaluateSchedule(p, ChannelRealization{}, s).total, 1e-15);
}

TEST(ReportsTest, SolveSingleInfeasible) {
  SystemParams p;
  p.deadline_s = 0.2;
  const json r = SolveSingle(p, ChannelRealization{}, SearchConfig{});
  EXPECT_EQ(r.at("status"), "infeasible");
  EXPECT_TRUE(r.contains("error"));
  EXPECT_FALSE(r.contains("schedule"));
}

TEST(ValidationTest, SingleInstance) {
  SystemParams p;
  p.deadline_s = 0.9;
  const InstanceCheck c = ValidateInstance(p, ChannelRealization{}, 0.01);
  EXPECT_TRUE(c.closed_form_feasible);
  EXPECT_TRUE(c.oracle_feasible);
  EXPECT_TRUE(c.passed);
  EXPECT_LE(c.report.gap, 0.01);

  p.deadline_s = 0.2;
  const InstanceCheck none = ValidateInstance(p, ChannelRealization{}, 0.01);
  EXPECT_TRUE(none.skipped);
}

TEST(ValidationTest, SummaryJson) {
  ValidationConfig vc;
  vc.instances = 1;
  vc.deadlines = {0.8, 1.2};
  const ValidationSummary s = RunValidation(vc);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.checks.size(), 2u);
  const json j = ValidationSummaryToJson(s, vc);
  EXPECT_EQ(j.at("passed").get<int>() + j.at("failed").get<int>() +
                j.at("skipped").get<int>(),
            2);
  EXPECT_TRUE(j.at("ok").get<bool>());
  EXPECT_EQ(j.at("cases").size(), 2u);
  vc.rel_tol = -1.0;
  EXPECT_THROW(RunValidation(vc), std::invalid_argument);
}

class CliTest : public ::testing::Test {
 protected:
  static int Run(const std::string& args) {
    const std::string cmd =
        std::string(TWRMEC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string WriteConfig(const std::string& name, const std::string& body) {
    const std::string path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path) << body;
    paths_.push_back(path);
    return path;
  }

  void TearDown() override {
    for (const std::string& p : paths_) std::filesystem::remove(p);
  }

 private:
  std::vector<std::string> paths_;
};

TEST_F(CliTest, SolveExitCodes) {
  EXPECT_EQ(Run("solve"), 0);
  EXPECT_EQ(Run("solve --seed 3 --scheme local_computing"), 0);
  EXPECT_EQ(Run("solve --config " + WriteConfig("twrmec_tight.json", R"({"deadline_T": 0.2})")),
            1);
  EXPECT_EQ(Run("solve --scheme fastest"), 3);
  EXPECT_EQ(Run("solve --config " + WriteConfig("twrmec_unknown.json", R"({"T": 1})")), 3);
  EXPECT_EQ(Run("solve --output yaml"), 3);
  EXPECT_EQ(Run("solve --no-such-flag"), 3);
  EXPECT_EQ(Run(""), 3);
}

TEST_F(CliTest, SweepExitCodes) {
  EXPECT_EQ(Run("sweep --trials 1 --t-points 2"), 0);
  EXPECT_EQ(Run("sweep --trials 1 --t-points 2 --out /nonexistent-dir/x.csv"), 3);
  EXPECT_EQ(Run("sweep --trials 0"), 3);
}

TEST_F(CliTest, ValidateExitCodes) {
  const std::string ok = WriteConfig("twrmec_val_ok.json", R"({"instances": 1})");
  EXPECT_EQ(Run("validate --config " + ok + " --tol 0.01"), 0);
  // Starving the broadcast makes the closed form miss what the grid finds.
  const std::string starved = WriteConfig(
      "twrmec_val_bad.json", R"({"instances": 1, "pr_min": 1e-4, "pr_max": 1.1e-4})");
  EXPECT_EQ(Run("validate --config " + starved), 2);
  EXPECT_EQ(Run("validate --instances 0"), 3);
}

}  // namespace
}  // namespace twrmec
