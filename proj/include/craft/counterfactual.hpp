#ifndef CRAFT_COUNTERFACTUAL_HPP_
#define CRAFT_COUNTERFACTUAL_HPP_

#include <string>
#include <vector>

#include "craft/candidates.hpp"
#include "craft/dynamics.hpp"
#include "craft/geometry.hpp"
#include "craft/rewards.hpp"
#include "craft/road.hpp"

namespace craft::counterfactual {

using candidates::CandidateSet;

/// Traffic-control zone as frozen in a snapshot. Light phase advances from
/// the frozen position by the schedule during virtual rollout.
struct SnapshotControlZone {
  road::ControlKind kind = road::ControlKind::red_light;
  geometry::OrientedBox trigger_zone;
  double stop_line_arclength = 0.0;  // on the snapshot route window
  bool stop_satisfied = false;       // stop sign already served
  int red_steps = 0;                 // lights only
  int green_steps = 1;
  int phase_position = 0;            // steps into the cycle at snapshot time

  /// Red at `steps_ahead` virtual steps after the snapshot.
  bool red_at(int steps_ahead) const;
};

/// Immutable record of a visited state: everything the counterfactual
/// engine needs to simulate candidate futures without the live world.
struct CounterfactualSnapshot {
  dynamics::BicycleState ego;
  double ego_half_length = 2.4;
  double ego_half_width = 1.0;
  std::vector<dynamics::DecayAgentState> agents;
  geometry::Polyline route_window;
  double route_start_progress = 0.0;  // episode route arclength at window[0]
  std::vector<road::LaneStrip> lanes;
  std::vector<geometry::OrientedBox> lane_polygons;
  std::vector<SnapshotControlZone> zones;
  std::string scenario_name;
  int world_step = 0;
};

struct TrajectoryFlags {
  bool red = false;
  bool stop = false;
};

struct CounterfactualOutcome {
  std::vector<std::vector<dynamics::BicycleState>> states;         // G x (H+1)
  std::vector<std::vector<rewards::InfractionFlags>> step_flags;   // G x H
  std::vector<TrajectoryFlags> traj_flags;                         // G
  std::vector<std::vector<double>> step_rewards;                   // G x H
  std::vector<double> returns;                                     // G
  std::vector<double> advantages;                                  // G
};

struct EngineConfig {
  int horizon = 20;
  double dt = 0.1;
  double gamma = 0.98;
  double sigma_min = 5.0;
  int chunk_size = 500;  // candidate rollouts per evaluation chunk
  double offroad_margin = 0.3;      // m beyond half lane width
  double offroute_threshold = 4.0;  // m
  double v_stop = 0.1;              // m/s, for stop-sign trajectory flags
  dynamics::PidGains gains;
  dynamics::ControlLimits limits;
  dynamics::DecayModelConfig decay;
};

struct RolloutResult {
  std::vector<std::vector<dynamics::BicycleState>> states;
  std::vector<std::vector<rewards::InfractionFlags>> step_flags;
  std::vector<TrajectoryFlags> traj_flags;
};

/// Forecast of every snapshot agent under the decay model; futures[a][t]
/// is agent a after t virtual steps (futures[a][0] is the snapshot state).
/// Candidate-independent: computed once per group.
std::vector<std::vector<dynamics::DecayAgentState>> forecast_agents(
    const CounterfactualSnapshot& snapshot, int horizon,
    const EngineConfig& cfg);

/// Tracks every valid candidate through the virtual world and detects
/// per-step and trajectory-level infractions. Throws if no candidate is
/// valid ("empty candidate group").
RolloutResult rollout_candidates(const CounterfactualSnapshot& snapshot,
                                 const CandidateSet& cands,
                                 const EngineConfig& cfg);

/// Discounted step-reward sum minus one-shot trajectory penalties.
double counterfactual_return(const std::vector<double>& step_rewards,
                             const TrajectoryFlags& flags, double gamma,
                             double lambda_red, double lambda_stop);

/// Group-normalized advantages: mean/population-std over valid entries,
/// std floored at sigma_min, invalid entries get exactly 0.
std::vector<double> group_advantages(const std::vector<double>& returns,
                                     const std::vector<std::uint8_t>& valid,
                                     double sigma_min);

/// Full evaluation of one stored group: rollout, dense per-step rewards,
/// returns, and group advantages. Pure function of its arguments.
CounterfactualOutcome evaluate_group(const CounterfactualSnapshot& snapshot,
                                     const CandidateSet& cands,
                                     const rewards::CounterfactualRewardConfig&
                                         reward_cfg,
                                     const EngineConfig& cfg);

}  // namespace craft::counterfactual

#endif  // CRAFT_COUNTERFACTUAL_HPP_
