#pragma once

#include <functional>
#include <span>

#include "hullkit/hull.hpp"
#include "hullkit/ray_shoot.hpp"

namespace hullkit {

// One randomized divide-and-conquer call, reported to an observer before
// partitioning. `points` is the call's working set (pivot included) and is
// valid only for the duration of the callback.
struct RsCallInfo {
    Frame frame;
    Point pivot;
    Bridge bridge;
    std::span<const Point> points;
};

using RsObserver = std::function<void(const RsCallInfo&)>;

// Randomized divide-and-conquer hull: per call, draw a pivot uniformly at
// random, find the hull edge crossed by the pivot's ray, prune everything
// under the bridge quadrilateral, recurse on both flanks. Output is
// independent of the seed; only the work counters vary. Each recursive call
// draws from a stream keyed on (seed, structural call id), so traces are
// reproducible regardless of execution order.
Hull rs_quickhull(std::span<const Point> S, std::uint64_t seed,
                  bool shuffle_rayshoot, Stats& stats,
                  const RsObserver& observer = {});

inline Hull rs_quickhull(std::span<const Point> S, std::uint64_t seed,
                         Stats& stats) {
    return rs_quickhull(S, seed, true, stats);
}

}  // namespace hullkit
