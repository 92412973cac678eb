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

#include "twrmec/outer_search.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace twrmec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tracker {
  CandidateResult best;
  bool found = false;

  double Offer(CandidateResult c) {
    const double e = c.feasible ? c.energy.total : kInf;
    if (c.feasible && (!found || e < best.energy.total)) {
      best = std::move(c);
      found = true;
    }
    return e;
  }
};

// Minimises objective(P_r) over the configured range. `objective` must
// return an infeasible candidate rather than throw.
CandidateResult SearchRelayPower(
    const SearchConfig& config,
    const std::function<CandidateResult(double)>& objective) {
  const int n = config.grid_points;
  const double log_lo = std::log(config.pr_min);
  const double log_hi = std::log(config.pr_max);
  auto grid_log = [&](int i) {
    return log_lo + (log_hi - log_lo) * static_cast<double>(i) / (n - 1);
  };

  Tracker tracker;
  int best_index = -1;
  for (int i = 0; i < n; ++i) {
    const double before = tracker.found ? tracker.best.energy.total : kInf;
    const double e = tracker.Offer(objective(std::exp(grid_log(i))));
    if (e < before) best_index = i;
  }
  if (!tracker.found) {
    throw InfeasibleError("no feasible relay power on the search grid");
  }

  double a = grid_log(std::max(best_index - 1, 0));
  double b = grid_log(std::min(best_index + 1, n - 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = tracker.Offer(objective(std::exp(c)));
  double fd = tracker.Offer(objective(std::exp(d)));
  for (int it = 0; it < config.refine_iters; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = tracker.Offer(objective(std::exp(c)));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = tracker.Offer(objective(std::exp(d)));
    }
  }
  return tracker.best;
}

OptimalSolution ToSolution(const CandidateResult& c, Scheme scheme) {
  return OptimalSolution{c.schedule, c.energy, scheme, c.label};
}

}  // namespace

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kProposed:
      return "proposed";
    case Scheme::kRelayComputing:
      return "relay_computing";
    case Scheme::kLocalComputing:
      return "local_computing";
  }
  return "unknown";
}

Scheme ParseScheme(std::string_view name) {
  for (Scheme s : kAllSchemes) {
    if (SchemeName(s) == name) return s;
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

void SearchConfig::Validate() const {
  if (!(pr_min > 0.0) || !(pr_max > pr_min) || !std::isfinite(pr_max)) {
    throw std::invalid_argument("relay power range must satisfy 0 < pr_min < pr_max");
  }
  if (grid_points < 16) {
    throw std::invalid_argument("grid_points must be at least 16");
  }
  if (refine_iters < 0) {
    throw std::invalid_argument("refine_iters must be nonnegative");
  }
}

OptimalSolution Solve(const SystemParams& params, const ChannelRealization& chan,
                      const SearchConfig& config) {
  if (config.scheme != Scheme::kProposed) {
    return SolveBaseline(params, chan, config.scheme, config);
  }
  params.Validate();
  chan.Validate();
  config.Validate();
  const CandidateResult best =
      SearchRelayPower(config, [&](double pr) -> CandidateResult {
        try {
          return SolveGivenRelayPower(params, chan, pr);
        } catch (const InfeasibleError&) {
          return CandidateResult{};
        }
      });
  return ToSolution(best, Scheme::kProposed);
}

OptimalSolution SolveBaseline(const SystemParams& params,
                              const ChannelRealization& chan, Scheme scheme,
                              const SearchConfig& config) {
  params.Validate();
  chan.Validate();
  config.Validate();
  switch (scheme) {
    case Scheme::kRelayComputing: {
      // Nothing is broadcast, so the relay power never enters.
      CandidateResult c =
          BuildCandidate(params, chan, 0.0, CandidateLabel::kAlphaOne, 1.0);
      if (!c.feasible) {
        throw InfeasibleError("relay computing cannot meet the deadline");
      }
      return ToSolution(c, scheme);
    }
    case Scheme::kLocalComputing: {
      const double alpha_min = AlphaLowerBound(params);
      const CandidateResult best = SearchRelayPower(config, [&](double pr) {
        return BuildCandidate(params, chan, pr, CandidateLabel::kAlphaZero, alpha_min);
      });
      return ToSolution(best, scheme);
    }
    case Scheme::kProposed:
      break;
  }
  throw std::invalid_argument("SolveBaseline: not a baseline scheme");
}

}  // namespace twrmec
