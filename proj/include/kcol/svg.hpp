// SPDX-License-Identifier: Apache-2.0
//
// Static SVG snapshots of a scene at one time.
#pragma once

#include <string>
#include <vector>

#include "kcol/events.hpp"
#include "kcol/kinematics.hpp"

namespace kcol {

/// World-space window shared by every snapshot of one render call.
struct Viewport {
    double min_x = -1, min_y = -1, max_x = 1, max_y = 1;
};

/// Square window around all positions at the given times, with a margin.
Viewport fit_viewport(const Scene& scene, const std::vector<double>& times);

struct SnapshotStyle {
    int size_px = 640;
    /// Velocity arrows show this much elapsed time.
    double arrow_time = 0.25;
};

/// Labeled dots, velocity arrows, and one line through the anchors of every
/// event in `events` (which the caller restricts to this time). A nonempty
/// `watermark` is printed in the corner.
std::string render_snapshot(const Scene& scene, double time, const std::string& time_label,
                            const std::vector<CollinearityEvent>& events, const Viewport& view,
                            const std::string& watermark = {}, const SnapshotStyle& style = {});

}  // namespace kcol
