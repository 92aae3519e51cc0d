#ifndef CRAFT_ROAD_HPP_
#define CRAFT_ROAD_HPP_

#include <vector>

#include "craft/geometry.hpp"

namespace craft::road {

enum class LaneTag { normal, opposite, emergency };
enum class ControlKind { red_light, stop_sign };

/// A lane as a centerline ribbon of constant width.
struct LaneStrip {
  geometry::Polyline centerline;
  double width = 3.5;
  LaneTag tag = LaneTag::normal;
  bool connector = false;
};

struct LaneQuery {
  int lane_index = -1;
  double lateral = 0.0;        // |signed lateral| to that centerline
  double margin_outside = 0.0; // lateral minus half width, > 0 when outside
  LaneTag tag = LaneTag::normal;
  bool connector = false;
};

/// Nearest lane by absolute lateral offset of the point.
LaneQuery nearest_lane(const geometry::Vec2& point,
                       const std::vector<LaneStrip>& lanes);

/// One oriented box per centerline segment, inflated along the segment so
/// adjacent boxes overlap. Used for cheap point-on-map tests.
std::vector<geometry::OrientedBox> lane_boxes(
    const std::vector<LaneStrip>& lanes);

bool point_on_map(const geometry::Vec2& point,
                  const std::vector<geometry::OrientedBox>& boxes);

}  // namespace craft::road

#endif  // CRAFT_ROAD_HPP_
