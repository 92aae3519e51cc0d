#ifndef CRAFT_CANDIDATES_HPP_
#define CRAFT_CANDIDATES_HPP_

#include <cstdint>
#include <vector>

namespace craft::candidates {

/// One candidate waypoint in the ego frame.
struct TrajPoint {
  double x = 0.0;
  double y = 0.0;
  double target_speed = 0.0;
};

using CandidateTrajectory = std::vector<TrajPoint>;

/// A group of G candidate trajectories with logits and a validity mask.
/// Padded or infeasible entries are flagged invalid and must be ignored by
/// scoring, sampling, and advantage computation.
struct CandidateSet {
  std::vector<CandidateTrajectory> trajectories;
  std::vector<double> logits;
  std::vector<std::uint8_t> valid;

  std::size_t size() const { return trajectories.size(); }
  int valid_count() const {
    int n = 0;
    for (auto v : valid) n += v ? 1 : 0;
    return n;
  }
};

}  // namespace craft::candidates

#endif  // CRAFT_CANDIDATES_HPP_
