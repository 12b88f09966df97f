#pragma once

#include <optional>
#include <vector>

#include "fourwis/geometry.hpp"
#include "fourwis/kinematics.hpp"

namespace fourwis {

enum class Steer : std::uint8_t { Left, Straight, Right };

/// One canonical Reeds-Shepp segment. Extent is an arc angle (rad) for turns
/// and a length (m) for straights, always nonnegative; gear carries the sign.
struct RSSegment {
    Steer steer = Steer::Straight;
    int gear = 1;          // +1 forward, -1 reverse
    double extent = 0.0;   // >= 0; turn extents <= pi
};

/// A solved Reeds-Shepp connection, owned by one motion mode.
/// Mode Ackermann solves in the body frame; mode Lateral solves with both
/// headings rotated by -pi/2 (travel along the body's right axis) and the
/// inverse rotation is applied when sampling; mode Parallel is a single
/// straight translation at fixed heading.
struct RSPath {
    MotionMode mode = MotionMode::Ackermann;
    double curvature = 1.0;            // 1/m, > 0 for modes 1-2
    std::vector<RSSegment> segments;   // <= 5
    double total_length = 0.0;         // m
    double translate_dir = 0.0;        // mode 3: direction in the start frame
    int word = -1;                     // solver word index, for diagnostics

    bool empty() const { return segments.empty(); }
};

/// Goal pose expressed in the start pose's frame.
struct PoseDelta {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;  // normalized to [0, 2*pi)
};

/// Shortest Reeds-Shepp path from the origin to `delta` under maximum
/// curvature `kappa` (> 0). Enumerates every word family; ties resolve to the
/// word with fewer segments, then the lower family index.
RSPath rs_shortest(const PoseDelta& delta, double kappa);

/// Per-mode Reeds-Shepp connection between two world poses. Mode Parallel is
/// only available when the headings agree within eps_parallel; absence is a
/// value, not an error.
std::optional<RSPath> mode_rs(const Pose& start, const Pose& goal, MotionMode mode,
                              const RobotParams& params, double eps_parallel);

/// One sampled point along a path, with the gear active at that point.
struct RSSample {
    Pose pose;
    int gear = 1;
    double cum_length = 0.0;  // m from the path start
};

/// Samples a path from `start` at spacing <= step: first sample is the start
/// pose, last is the exact endpoint. Mode Lateral samples report body
/// headings; mode Parallel samples hold the heading constant.
std::vector<RSSample> sample_path_detailed(const RSPath& path, const Pose& start,
                                           double step);

/// Pose-only view of sample_path_detailed.
std::vector<Pose> sample_path(const RSPath& path, const Pose& start, double step);

/// Exact endpoint of a path integrated from `start`.
Pose rs_endpoint(const RSPath& path, const Pose& start);

}  // namespace fourwis
