#ifndef CRAFT_DYNAMICS_HPP_
#define CRAFT_DYNAMICS_HPP_

#include <vector>

#include "craft/geometry.hpp"

namespace craft::dynamics {

using geometry::OrientedBox;
using geometry::Polyline;
using geometry::Pose2D;
using geometry::Vec2;

struct ControlLimits {
  double steer_max = 0.5;   // rad
  double accel_min = -6.0;  // m/s^2
  double accel_max = 3.0;   // m/s^2
};

struct ControlInput {
  double steer = 0.0;
  double accel = 0.0;

  static ControlInput clamped(double steer, double accel,
                              const ControlLimits& lim = {});
};

/// Rear-axle kinematic bicycle. Speed saturates at standstill, no reverse.
struct BicycleState {
  Pose2D pose;
  double speed = 0.0;      // m/s, >= 0
  double wheelbase = 2.8;  // m, > 0
};

struct PidGains {
  double lat_kp = 0.8;
  double lat_ki = 0.0;
  double lat_kd = 0.3;
  double lon_kp = 1.0;
  double lon_ki = 0.05;
  double lon_kd = 0.0;
  double lookahead = 2.0;  // m
};

/// Integrator and previous-error carry, owned by the caller.
struct PidMemory {
  double lat_integral = 0.0;
  double lat_prev_error = 0.0;
  double lon_integral = 0.0;
  double lon_prev_error = 0.0;
  bool has_prev = false;
};

/// Reference segment with per-point target speeds (aligned with the
/// waypoint list). Waypoints may be degenerate (all coincident), which
/// means "hold position".
struct TrackingReference {
  std::vector<Vec2> waypoints;
  std::vector<double> target_speeds;
};

/// Background-agent forecast state for the counterfactual world: held
/// controls for a short window, then throttle decay and a braking ramp.
struct DecayAgentState {
  OrientedBox box;
  double speed = 0.0;
  double held_accel = 0.0;
  double held_steer = 0.0;
  bool on_connector = false;
  int step_index = 0;
  double wheelbase = 2.8;
};

struct DecayModelConfig {
  int decision_window = 5;
  int ramp_steps = 10;
  int connector_ramp_steps = 5;
  double braking_accel = -4.0;  // m/s^2
};

ControlInput pid_control(const BicycleState& state,
                         const TrackingReference& reference,
                         const PidGains& gains, PidMemory& memory, double dt,
                         const ControlLimits& limits = {});

BicycleState bicycle_step(const BicycleState& state, const ControlInput& u,
                          double dt);

/// Tracks a trajectory for `horizon` virtual steps. Output has length
/// horizon+1 with the initial state first. Throws on an empty trajectory.
std::vector<BicycleState> track_trajectory(const BicycleState& initial,
                                           const TrackingReference& trajectory,
                                           int horizon, double dt,
                                           const PidGains& gains,
                                           const ControlLimits& limits = {});

DecayAgentState decay_rollout_step(const DecayAgentState& agent, double dt,
                                   const DecayModelConfig& cfg = {});

/// Acceleration the decay model applies at a given virtual step index.
double decay_accel_at(double held_accel, int step_index, bool on_connector,
                      const DecayModelConfig& cfg = {});

}  // namespace craft::dynamics

#endif  // CRAFT_DYNAMICS_HPP_
