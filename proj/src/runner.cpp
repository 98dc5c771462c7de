// Copyright 2026 The Orient Authors
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

#include "orient/runner.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "orient/error.hpp"
#include "orient/knap.hpp"
#include "orient/min_excess.hpp"
#include "orient/oracles.hpp"
#include "orient/p2p.hpp"
#include "orient/stoch.hpp"
#include "orient/time_windows.hpp"

namespace orient {
namespace {

constexpr std::uint64_t kDefaultReplicates = 100000;

Json header(const InstanceFile& file, const char* mode, const std::string& method) {
  Json j;
  j["kind"] = std::string(kind_name(file.kind()));
  j["mode"] = mode;
  j["method"] = method;
  return j;
}

bool walk_ok(const MetricSpace& space, const Walk& walk, Vertex from, Vertex to,
             Distance budget) {
  return !walk.empty() && walk.front() == from && walk.back() == to &&
         walk_length(space, walk) <= budget;
}

Json simulation_json(const SimulationSummary& s, std::uint64_t seed) {
  Json j;
  j["replicates"] = s.replicates;
  j["seed"] = seed;
  j["mean"] = s.mean;
  j["standard_error"] = s.standard_error;
  return j;
}

Json segments_json(const InstanceFile& file, const TWPlan& plan) {
  Json out = Json::array();
  for (const TWSegment& seg : plan.segments) {
    Json j;
    j["from"] = file.name(seg.from);
    j["to"] = file.name(seg.to);
    j["depart"] = rational_to_json(seg.depart);
    j["arrive_by"] = rational_to_json(seg.arrive_by);
    j["walk"] = walk_to_json(file, seg.walk);
    j["claimed"] = vertices_to_json(file, seg.claimed);
    j["planned_reward"] = rational_to_json(seg.planned_reward);
    if (seg.policy) j["policy"] = policy_to_json(file, *seg.policy);
    out.push_back(std::move(j));
  }
  return out;
}

Json slack_report_json(const InstanceFile& file, const TWInstance& inst,
                       const std::vector<TWVisit>& visits, const Rational& slack) {
  Json out = Json::array();
  const auto strict = check_tw_feasibility(visits, inst, 1);
  for (std::size_t i = 0; i < visits.size(); ++i) {
    const TWVisit& v = visits[i];
    const auto idx = static_cast<std::size_t>(v.vertex);
    Json j;
    j["vertex"] = file.name(v.vertex);
    j["release"] = inst.release[idx];
    j["deadline"] = inst.deadline[idx];
    j["completion"] = rational_to_json(v.completion);
    j["allowed"] = rational_to_json(slack * inst.deadline[idx]);
    const Rational over = v.completion - inst.deadline[idx];
    j["overrun"] = rational_to_json(over > 0 ? over : Rational(0));
    j["meets_strict_deadline"] = strict[i].counted;
    out.push_back(std::move(j));
  }
  return out;
}

RunResult solve_p2p_file(const InstanceFile& file, const P2PInstance& inst) {
  RunResult r;
  const ExactMinExcess<Reward> exact;
  const CountingMinExcess<Reward> counting(exact);
  const P2PSolution<Reward> sol = solve_p2p(inst, counting);
  std::size_t feasible_pivots = 0;
  for (Vertex x = 0; x < inst.space.size(); ++x) {
    if (compute_eps_x(inst.space, inst.start, inst.end, inst.budget, x)) ++feasible_pivots;
  }
  r.ok = walk_ok(inst.space, sol.walk, inst.start, inst.end, inst.budget) &&
         counting.calls() == 2 * feasible_pivots;
  r.value = static_cast<double>(sol.reward);
  r.json = header(file, "solve", "pivot-min-excess");
  r.json["walk"] = walk_to_json(file, sol.walk);
  r.json["reward"] = sol.reward;
  r.json["length"] = sol.length;
  r.json["budget"] = inst.budget;
  r.json["pivot"] = file.name(sol.pivot);
  r.json["shape"] = sol.shape == PivotShape::kA ? "A" : "B";
  r.json["min_excess_calls"] = counting.calls();
  r.json["feasible"] = r.ok;
  return r;
}

RunResult solve_knap_file(const InstanceFile& file, const KnapOrientInstance& inst) {
  RunResult r;
  std::vector<KnapSearchEntry> log;
  const KnapRoute route = solve_p2p_knap(inst, &log);
  r.ok = route_is_feasible(inst, route);
  r.value = static_cast<double>(route.reward);
  r.json = header(file, "solve", "lagrangian-min-excess");
  r.json["walk"] = walk_to_json(file, route.walk);
  r.json["collected"] = vertices_to_json(file, route.collected);
  r.json["reward"] = route.reward;
  r.json["size"] = rational_to_json(route.size);
  r.json["length"] = route.length;
  r.json["travel_budget"] = inst.travel_budget;
  r.json["knapsack_budget"] = rational_to_json(inst.knapsack_budget);
  Json search = Json::array();
  for (const KnapSearchEntry& e : log) {
    Json j;
    j["theta"] = rational_to_json(e.theta);
    j["reward"] = e.reward;
    search.push_back(std::move(j));
  }
  r.json["search"] = std::move(search);
  r.json["feasible"] = r.ok;
  return r;
}

// |mean - exact| within three standard errors, or exact agreement when the
// simulated value has no variance.
bool agrees(double mean, double se, double exact) {
  if (se == 0.0) return std::fabs(mean - exact) <= 1e-9 * std::max(1.0, std::fabs(exact));
  return std::fabs(mean - exact) <= 3.0 * se;
}

RunResult solve_stoch_file(const InstanceFile& file, const StochOrientInstance& inst,
                           const RunOptions& options, bool force_simulation) {
  RunResult r;
  const NonAdaptivePolicy policy = solve_p2p_stoch(inst);
  const PolicyValue value = randomized_policy_value(inst, policy, 12, options.seed);
  r.ok = walk_ok(inst.space, policy.path, inst.start, inst.terminal, inst.budget);
  r.value = value.estimate;
  r.json = header(file, force_simulation ? "simulate" : "solve", "truncated-knapsack-policy");
  r.json["policy"] = policy_to_json(file, policy);
  r.json["value_exact"] = value.exact;
  if (value.exact) r.json["value"] = rational_to_json(value.value);
  r.json["value_estimate"] = value.estimate;
  const std::uint64_t reps =
      options.replicates ? options.replicates : (force_simulation ? kDefaultReplicates : 0);
  if (reps > 0) {
    const SimulationSummary sim = simulate_policy(inst, policy, reps, options.seed);
    const bool consistent = agrees(sim.mean, sim.standard_error, value.estimate);
    r.json["simulation"] = simulation_json(sim, options.seed);
    r.json["simulation"]["consistent"] = consistent;
    r.ok = r.ok && consistent;
  }
  r.json["feasible"] = r.ok;
  return r;
}

RunResult solve_tw_file(const InstanceFile& file, const TWInstance& inst,
                        const RunOptions& options, bool force_simulation) {
  RunResult r;
  const Rational slack = 1 + options.epsilon;
  const MarginParameters margin = compute_margin_params(options.epsilon);
  const bool stochastic = options.stochastic || inst.stochastic;
  r.json = header(file, force_simulation ? "simulate" : "solve",
                  stochastic ? "checkpoint-dp-stochastic" : "checkpoint-dp");
  r.json["epsilon"] = rational_to_json(options.epsilon);
  r.json["slack"] = rational_to_json(slack);
  r.json["margin"] = {{"s", margin.s}, {"f", margin.f}};
  r.json["reward_floor"] = rational_to_json(Rational(1, 24 * (margin.s + 2)));
  if (!stochastic) {
    const TWSolution sol = solve_time_windows(inst, options.epsilon);
    const auto verdicts = check_tw_feasibility(sol.visits, inst, slack);
    r.ok = !sol.walk.empty() && sol.walk.front() == inst.root;
    for (const TWVerdict& v : verdicts) r.ok = r.ok && v.counted;
    r.value = static_cast<double>(sol.reward);
    r.json["checkpoints"] = sol.plan.checkpoints.size();
    r.json["segments"] = segments_json(file, sol.plan);
    r.json["walk"] = walk_to_json(file, sol.walk);
    r.json["visits"] = visits_to_json(file, sol.visits);
    r.json["reward"] = sol.reward;
    if (options.slack_report) {
      r.json["slack_report"] = slack_report_json(file, inst, sol.visits, slack);
    }
    if (options.replicates > 0 || force_simulation) {
      const std::uint64_t reps = options.replicates ? options.replicates : kDefaultReplicates;
      const SimulationSummary sim = simulate_tw_plan(inst, sol.plan, reps, options.seed);
      r.json["simulation"] = simulation_json(sim, options.seed);
    }
    r.json["feasible"] = r.ok;
    return r;
  }
  const TWPlan plan = plan_time_windows(inst, options.epsilon, TWSubroutine::kStochasticP2P);
  r.json["checkpoints"] = plan.checkpoints.size();
  r.json["segments"] = segments_json(file, plan);
  r.json["planned_reward"] = rational_to_json(plan.planned_reward);
  // One traced run shows the slack usage of a concrete realization.
  CounterRng rng(options.seed, 0);
  std::vector<TWVisit> trace;
  const Reward sample = run_tw_plan_once(inst, plan, rng, &trace);
  const auto verdicts = check_tw_feasibility(trace, inst, slack);
  Reward recount = 0;
  for (const TWVerdict& v : verdicts) {
    if (v.counted) recount += inst.rewards[static_cast<std::size_t>(v.vertex)];
  }
  r.ok = recount == sample;
  r.json["sample_run"] = {{"visits", visits_to_json(file, trace)}, {"reward", sample}};
  if (options.slack_report) {
    r.json["slack_report"] = slack_report_json(file, inst, trace, slack);
  }
  const std::uint64_t reps = options.replicates ? options.replicates
                                                : (force_simulation ? kDefaultReplicates : 0);
  r.value = to_double(plan.planned_reward);
  if (reps > 0) {
    const SimulationSummary sim = simulate_tw_plan(inst, plan, reps, options.seed);
    r.json["simulation"] = simulation_json(sim, options.seed);
    r.value = sim.mean;
  }
  r.json["feasible"] = r.ok;
  return r;
}

}  // namespace

RunResult run_solve(const InstanceFile& file, const RunOptions& options) {
  if (options.epsilon <= 0) fail(ErrorCode::kInvalidArgument, "epsilon must be positive");
  switch (file.kind()) {
    case ProblemKind::kP2P:
      return solve_p2p_file(file, std::get<P2PInstance>(file.problem));
    case ProblemKind::kKnap:
      return solve_knap_file(file, std::get<KnapOrientInstance>(file.problem));
    case ProblemKind::kStoch:
      return solve_stoch_file(file, std::get<StochOrientInstance>(file.problem), options,
                              false);
    case ProblemKind::kTW:
      return solve_tw_file(file, std::get<TWInstance>(file.problem), options, false);
  }
  fail(ErrorCode::kInternal, "unknown problem kind");
}

RunResult run_oracle(const InstanceFile& file, const RunOptions& options) {
  RunResult r;
  const std::string& which = options.oracle;
  const auto reject = [&] {
    fail(ErrorCode::kInvalidArgument, "unknown oracle '" + which + "' for kind " +
                                          std::string(kind_name(file.kind())));
  };
  switch (file.kind()) {
    case ProblemKind::kP2P: {
      const auto& inst = std::get<P2PInstance>(file.problem);
      if (!which.empty() && which != "subset-dp" && which != "enumeration") reject();
      const bool enumerate = which == "enumeration";
      const PathResult res = enumerate ? oracle_p2p_by_enumeration(inst)
                                       : oracle_p2p_orienteering(inst);
      r.json = header(file, "oracle", enumerate ? "enumeration" : "subset-dp");
      r.json["walk"] = walk_to_json(file, res.walk);
      r.json["reward"] = res.reward;
      r.json["length"] = res.length;
      r.value = static_cast<double>(res.reward);
      r.ok = walk_ok(inst.space, res.walk, inst.start, inst.end, inst.budget);
      break;
    }
    case ProblemKind::kKnap: {
      const auto& inst = std::get<KnapOrientInstance>(file.problem);
      if (!which.empty() && which != "subset-dp") reject();
      const KnapRoute res = oracle_knap_orient(inst);
      r.json = header(file, "oracle", "subset-dp");
      r.json["walk"] = walk_to_json(file, res.walk);
      r.json["collected"] = vertices_to_json(file, res.collected);
      r.json["reward"] = res.reward;
      r.json["size"] = rational_to_json(res.size);
      r.json["length"] = res.length;
      r.value = static_cast<double>(res.reward);
      r.ok = route_is_feasible(inst, res);
      break;
    }
    case ProblemKind::kStoch: {
      const auto& inst = std::get<StochOrientInstance>(file.problem);
      if (which.empty() || which == "nonadaptive") {
        const OrderValue res = oracle_nonadaptive_stoch(inst);
        r.json = header(file, "oracle", "nonadaptive");
        r.json["order"] = vertices_to_json(file, res.order);
        r.json["value"] = rational_to_json(res.value);
        r.value = to_double(res.value);
      } else if (which == "adaptive") {
        const AdaptiveOracleResult res = oracle_adaptive_stoch(inst);
        r.json = header(file, "oracle", "adaptive");
        r.json["value"] = rational_to_json(res.value);
        r.json["states"] = res.decisions.size();
        const auto first = res.decisions.find(AdaptiveState{inst.start, 0, 0});
        r.json["first_decision"] =
            first == res.decisions.end() || first->second == AdaptiveOracleResult::kStop
                ? Json(nullptr)
                : Json(file.name(first->second));
        r.value = to_double(res.value);
      } else {
        reject();
      }
      r.json["value_estimate"] = r.value;
      break;
    }
    case ProblemKind::kTW: {
      const auto& inst = std::get<TWInstance>(file.problem);
      if (!which.empty() && which != "strict" && which != "slack") reject();
      const Rational slack = which == "slack" ? 1 + options.epsilon : Rational(1);
      const TWRoute res = oracle_time_windows(inst, slack);
      r.json = header(file, "oracle", which.empty() ? "strict" : which);
      r.json["slack"] = rational_to_json(slack);
      r.json["walk"] = walk_to_json(file, res.walk);
      r.json["visits"] = visits_to_json(file, res.visits);
      r.json["reward"] = res.reward;
      r.value = static_cast<double>(res.reward);
      for (const TWVerdict& v : check_tw_feasibility(res.visits, inst, slack)) {
        r.ok = r.ok && v.counted;
      }
      break;
    }
  }
  r.json["feasible"] = r.ok;
  return r;
}

RunResult run_simulate(const InstanceFile& file, const RunOptions& options) {
  switch (file.kind()) {
    case ProblemKind::kStoch:
      return solve_stoch_file(file, std::get<StochOrientInstance>(file.problem), options,
                              true);
    case ProblemKind::kTW:
      return solve_tw_file(file, std::get<TWInstance>(file.problem), options, true);
    default:
      fail(ErrorCode::kInvalidArgument,
           "simulate applies to stoch and tw instances, got " +
               std::string(kind_name(file.kind())));
  }
}

}  // namespace orient
