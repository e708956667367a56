// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV formats for scenes, event lists, audits and pair surfaces.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcol/events.hpp"
#include "kcol/exact_numbers.hpp"
#include "kcol/kinematics.hpp"
#include "kcol/surfaces.hpp"

namespace kcol {

inline constexpr int kSceneVersion = 1;

/// {"kind":"rational","value":"p/q"} or
/// {"kind":"quadratic","p":"…","q":"…","d":N,"r":"…","approx":float}.
/// d is a JSON number when it fits in 64 bits and a decimal string otherwise.
nlohmann::json time_to_json(const AlgebraicTime& t);
/// Throws std::invalid_argument on malformed input.
AlgebraicTime time_from_json(const nlohmann::json& j);

nlohmann::json scene_to_json(const Scene& scene);
/// Throws SceneError with a field path on malformed content.
Scene scene_from_json(const nlohmann::json& j);

/// Two-space indented JSON with a trailing newline.
std::string dump_scene(const Scene& scene);
/// Throws SceneError with line/column or field diagnostics.
Scene parse_scene(const std::string& text);
Scene load_scene(const std::filesystem::path& path);
void save_scene(const Scene& scene, const std::filesystem::path& path);

nlohmann::json event_to_json(const Scene& scene, const CollinearityEvent& event);
nlohmann::json events_to_json(const Scene& scene, const std::vector<CollinearityEvent>& events);
/// Header: time_exact,time_approx,k,members,anchors,tangential,contains_subcollision.
/// Member and anchor ids are separated by ';'.
std::string events_to_csv(const Scene& scene, const std::vector<CollinearityEvent>& events);

nlohmann::json audit_to_json(const BoundAudit& audit);

nlohmann::json surface_to_json(const KineticPoint& a, const KineticPoint& b, const SurfacePolynomial& s,
                               const SurfaceClass& cls);

}  // namespace kcol
