#include "craft/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace craft::dynamics {

ControlInput ControlInput::clamped(double steer, double accel,
                                   const ControlLimits& lim) {
  ControlInput u;
  u.steer = std::clamp(steer, -lim.steer_max, lim.steer_max);
  u.accel = std::clamp(accel, lim.accel_min, lim.accel_max);
  return u;
}

BicycleState bicycle_step(const BicycleState& state, const ControlInput& u,
                          double dt) {
  if (dt <= 0.0) throw std::invalid_argument("bicycle_step: dt must be > 0");
  BicycleState next = state;
  const double v = state.speed;
  next.pose.x += v * std::cos(state.pose.yaw) * dt;
  next.pose.y += v * std::sin(state.pose.yaw) * dt;
  next.pose.yaw = geometry::normalize_angle(
      state.pose.yaw + (v / state.wheelbase) * std::tan(u.steer) * dt);
  next.speed = std::max(0.0, v + u.accel * dt);
  return next;
}

namespace {

// Builds a usable polyline from reference waypoints, dropping coincident
// consecutive points. Empty result means "hold position".
std::optional<geometry::Polyline> usable_line(
    const std::vector<Vec2>& waypoints) {
  std::vector<Vec2> pts;
  for (const Vec2& p : waypoints) {
    if (pts.empty() || geometry::distance(pts.back(), p) >= 1e-6)
      pts.push_back(p);
  }
  if (pts.size() < 2) return std::nullopt;
  return geometry::Polyline(std::move(pts));
}

double speed_at_arclength(const TrackingReference& ref,
                          const geometry::Polyline& line, double s) {
  if (ref.target_speeds.empty()) return 0.0;
  if (ref.target_speeds.size() == 1) return ref.target_speeds.front();
  // The deduped line may have fewer vertices than the reference; map by
  // fractional arclength over the original waypoint spacing instead.
  const double frac = line.length() > 0.0 ? s / line.length() : 0.0;
  const double fidx = frac * static_cast<double>(ref.target_speeds.size() - 1);
  const std::size_t i = std::min(static_cast<std::size_t>(fidx),
                                 ref.target_speeds.size() - 2);
  const double t = std::clamp(fidx - static_cast<double>(i), 0.0, 1.0);
  return ref.target_speeds[i] * (1.0 - t) + ref.target_speeds[i + 1] * t;
}

}  // namespace

ControlInput pid_control(const BicycleState& state,
                         const TrackingReference& reference,
                         const PidGains& gains, PidMemory& memory, double dt,
                         const ControlLimits& limits) {
  if (reference.waypoints.empty())
    throw std::invalid_argument("pid_control: empty reference");

  const auto line = usable_line(reference.waypoints);
  double target_speed = 0.0;
  double lat_error = 0.0;
  if (line) {
    const Vec2 probe = state.pose.position() +
                       state.pose.heading_vector() * gains.lookahead;
    const auto proj =
        geometry::project_onto_polyline(probe, state.pose.yaw, *line);
    lat_error = proj.lateral_offset;
    const auto here = geometry::project_onto_polyline(
        state.pose.position(), state.pose.yaw, *line);
    target_speed = speed_at_arclength(reference, *line, here.arclength);
  } else {
    // Degenerate reference: hold position at the last commanded speed.
    target_speed = reference.target_speeds.empty()
                       ? 0.0
                       : reference.target_speeds.back();
  }

  const double lon_error = target_speed - state.speed;
  double lat_deriv = 0.0, lon_deriv = 0.0;
  if (memory.has_prev) {
    lat_deriv = (lat_error - memory.lat_prev_error) / dt;
    lon_deriv = (lon_error - memory.lon_prev_error) / dt;
  }
  memory.lat_integral += lat_error * dt;
  memory.lon_integral += lon_error * dt;
  memory.lat_prev_error = lat_error;
  memory.lon_prev_error = lon_error;
  memory.has_prev = true;

  // Left-positive lateral error steers right (negative) to recover.
  const double steer = -(gains.lat_kp * lat_error +
                         gains.lat_ki * memory.lat_integral +
                         gains.lat_kd * lat_deriv);
  const double accel = gains.lon_kp * lon_error +
                       gains.lon_ki * memory.lon_integral +
                       gains.lon_kd * lon_deriv;
  return ControlInput::clamped(steer, accel, limits);
}

std::vector<BicycleState> track_trajectory(const BicycleState& initial,
                                           const TrackingReference& trajectory,
                                           int horizon, double dt,
                                           const PidGains& gains,
                                           const ControlLimits& limits) {
  if (trajectory.waypoints.empty())
    throw std::invalid_argument("degenerate candidate");
  if (horizon < 1)
    throw std::invalid_argument("track_trajectory: horizon must be >= 1");

  std::vector<BicycleState> states;
  states.reserve(static_cast<std::size_t>(horizon) + 1);
  states.push_back(initial);
  PidMemory memory;
  for (int t = 0; t < horizon; ++t) {
    const ControlInput u =
        pid_control(states.back(), trajectory, gains, memory, dt, limits);
    states.push_back(bicycle_step(states.back(), u, dt));
  }
  return states;
}

double decay_accel_at(double held_accel, int step_index, bool on_connector,
                      const DecayModelConfig& cfg) {
  if (step_index < cfg.decision_window) return held_accel;
  const int ramp = on_connector ? cfg.connector_ramp_steps : cfg.ramp_steps;
  const double t = std::min(
      1.0, static_cast<double>(step_index - cfg.decision_window + 1) /
               static_cast<double>(ramp));
  const double blended =
      (1.0 - t) * std::max(held_accel, 0.0) + t * cfg.braking_accel;
  // An agent already braking harder than the ramp target keeps doing so.
  return held_accel <= 0.0 ? std::min(blended, held_accel) : blended;
}

DecayAgentState decay_rollout_step(const DecayAgentState& agent, double dt,
                                   const DecayModelConfig& cfg) {
  DecayAgentState next = agent;
  const double accel =
      decay_accel_at(agent.held_accel, agent.step_index, agent.on_connector, cfg);
  BicycleState body{agent.box.center, agent.speed, agent.wheelbase};
  const ControlInput u{agent.held_steer, accel};
  const BicycleState stepped = bicycle_step(body, u, dt);
  next.box.center = stepped.pose;
  next.speed = stepped.speed;
  next.step_index = agent.step_index + 1;
  return next;
}

}  // namespace craft::dynamics
