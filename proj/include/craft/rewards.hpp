#ifndef CRAFT_REWARDS_HPP_
#define CRAFT_REWARDS_HPP_

namespace craft::rewards {

/// Per-step infraction indicators produced by the world and the
/// counterfactual engine. collision_speed is nonzero only with collision.
struct InfractionFlags {
  bool collision = false;
  bool offroad = false;
  bool offroute = false;
  bool opposite_lane = false;
  bool emergency_lane = false;
  bool red_violation = false;
  bool stop_violation = false;
  bool go_blocked_slow = false;
  // Which control kind owns the go-required zone when go_blocked_slow fires.
  enum class GoZoneKind { none, light, sign };
  GoZoneKind go_zone_kind = GoZoneKind::none;
  double collision_speed = 0.0;  // m/s, relative speed at impact

  bool any() const {
    return collision || offroad || offroute || opposite_lane ||
           emergency_lane || red_violation || stop_violation ||
           go_blocked_slow;
  }
};

struct CounterfactualRewardConfig {
  double p_min = 0.0;        // m per step
  double p_max = 1.2;        // m per step
  double w_prog = 8.0;
  double w_g = 3.0;
  double w_c = 0.8;
  double w_h = 2.0;
  double eta_min = 0.0;
  double d_clip = 0.10;
  double delta_g_rec = 0.08;
  double delta_c_rec = 0.08;
  double k_g = 0.4;
  double k_c = 0.2;
  double k_h = 0.4;
  double c_clip = 0.5;
  double a_rec = 0.5;
  double b_rec = 0.5;
  double lambda_offroad = 1.5;
  double lambda_opp = 0.1;
  double lambda_offroute = 1.5;
  double lambda_emg = 1.0;
  double lambda_coll = 40.0;
  double lambda_red = 40.0;
  double lambda_stop = 40.0;
  double alpha_v = 0.5;
  double v_ref = 5.0;   // m/s
  double nu_min = 0.0;
  double nu_max = 1.0;
};

struct CorrectiveRewardConfig {
  double lambda_offroad = 0.5;
  double lambda_emg = 0.2;
  double lambda_offroute = 0.5;
  double lambda_red = 2.0;
  double lambda_stop = 2.0;
  double lambda_coll = 5.0;
  double v_stop = 0.1;  // m/s
  double v_go = 2.0;    // m/s
};

/// Route, lane-center, and heading deviations (absolute magnitudes) plus
/// their signed per-step changes. Negative delta means improving.
struct DeviationSample {
  double d_g = 0.0;        // m, lateral to route
  double d_c = 0.0;        // m, lateral to nearest lane centerline
  double d_h = 0.0;        // rad, heading error vs route tangent
  double delta_d_g = 0.0;
  double delta_d_c = 0.0;
  double delta_d_h = 0.0;
};

/// Clipped, normalized per-step progress in [0, 1].
double progress_term(double delta_p, const CounterfactualRewardConfig& cfg);

/// Multiplicative efficiency factor in [eta_min, 1].
double efficiency_multiplier(const DeviationSample& d,
                             const CounterfactualRewardConfig& cfg);

/// Signed recovery reward for reducing (or growing) active deviations.
double recovery_reward(const DeviationSample& d, double progress_hat,
                       const CounterfactualRewardConfig& cfg);

/// Speed-scaled collision penalty multiplier, >= 1.
double collision_multiplier(double v, const CounterfactualRewardConfig& cfg);

/// Dense per-step counterfactual reward. The collision term fires only on
/// the step flagged as the first collision of the candidate.
double counterfactual_step_reward(double progress_hat, double eta,
                                  double r_rec, const InfractionFlags& flags,
                                  bool first_collision, double v,
                                  const CounterfactualRewardConfig& cfg);

/// Sparse, safety-centered corrective reward; always <= 0. Red/stop terms
/// absorb go-required blocking for the matching control kind.
double corrective_reward(const InfractionFlags& flags,
                         const CorrectiveRewardConfig& cfg);

}  // namespace craft::rewards

#endif  // CRAFT_REWARDS_HPP_
