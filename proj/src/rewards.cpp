#include "craft/rewards.hpp"

#include <algorithm>
#include <cmath>

namespace craft::rewards {

double progress_term(double delta_p, const CounterfactualRewardConfig& cfg) {
  return std::clamp(delta_p, cfg.p_min, cfg.p_max) / cfg.p_max;
}

double efficiency_multiplier(const DeviationSample& d,
                             const CounterfactualRewardConfig& cfg) {
  const double eta = std::exp(-cfg.w_g * d.d_g) * std::exp(-cfg.w_c * d.d_c) *
                     std::exp(-cfg.w_h * d.d_h);
  return std::max(eta, cfg.eta_min);
}

double recovery_reward(const DeviationSample& d, double progress_hat,
                       const CounterfactualRewardConfig& cfg) {
  const auto clip_delta = [&](double x) {
    return std::clamp(x, -cfg.d_clip, cfg.d_clip);
  };
  double c = 0.0;
  if (d.d_g > cfg.delta_g_rec) c += cfg.k_g * (-clip_delta(d.delta_d_g));
  if (d.d_c > cfg.delta_c_rec) c += cfg.k_c * (-clip_delta(d.delta_d_c));
  // Heading recovery reuses the centerline activation threshold.
  if (d.d_h > cfg.delta_c_rec) c += cfg.k_h * (-clip_delta(d.delta_d_h));
  c = std::clamp(c, -cfg.c_clip, cfg.c_clip);
  return c * (cfg.a_rec + cfg.b_rec * progress_hat);
}

double collision_multiplier(double v, const CounterfactualRewardConfig& cfg) {
  return 1.0 + cfg.alpha_v * std::clamp(v / cfg.v_ref, cfg.nu_min, cfg.nu_max);
}

double counterfactual_step_reward(double progress_hat, double eta,
                                  double r_rec, const InfractionFlags& flags,
                                  bool first_collision, double v,
                                  const CounterfactualRewardConfig& cfg) {
  double r = cfg.w_prog * progress_hat * eta + r_rec;
  if (flags.offroad) r -= cfg.lambda_offroad;
  if (flags.opposite_lane) r -= cfg.lambda_opp;
  if (flags.offroute) r -= cfg.lambda_offroute;
  if (flags.emergency_lane) r -= cfg.lambda_emg;
  if (flags.collision && first_collision)
    r -= cfg.lambda_coll * collision_multiplier(v, cfg);
  return r;
}

double corrective_reward(const InfractionFlags& flags,
                         const CorrectiveRewardConfig& cfg) {
  using GoZoneKind = InfractionFlags::GoZoneKind;
  const bool red = flags.red_violation ||
                   (flags.go_blocked_slow &&
                    flags.go_zone_kind == GoZoneKind::light);
  const bool stop = flags.stop_violation ||
                    (flags.go_blocked_slow &&
                     flags.go_zone_kind == GoZoneKind::sign);
  double r = 0.0;
  if (flags.offroad) r -= cfg.lambda_offroad;
  if (flags.emergency_lane) r -= cfg.lambda_emg;
  if (flags.offroute) r -= cfg.lambda_offroute;
  if (red) r -= cfg.lambda_red;
  if (stop) r -= cfg.lambda_stop;
  if (flags.collision) r -= cfg.lambda_coll;
  return r;
}

}  // namespace craft::rewards
