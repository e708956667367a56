// SPDX-License-Identifier: Apache-2.0
#include "kcol/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace kcol {

namespace {

using nlohmann::json;

Rational field_rational(const json& j, const std::string& where) {
    if (!j.is_string()) throw SceneError(where + ": expected a \"num/den\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SceneError(where + ": " + e.what());
    }
}

Vec2 field_vec2(const json& obj, const char* key, const std::string& where) {
    const std::string path = where + "." + key;
    if (!obj.contains(key)) throw SceneError(path + ": missing");
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != 2) throw SceneError(path + ": expected an array of two rationals");
    return {field_rational(v[0], path + "[0]"), field_rational(v[1], path + "[1]")};
}

std::string approx_string(double value) {
    std::ostringstream out;
    out << std::setprecision(17) << value;
    return out.str();
}

std::string join_ids(const Scene& scene, std::span<const std::size_t> indices) {
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) out += ';';
        out += scene[indices[i]].id;
    }
    return out;
}

json plane_to_json(const Plane& p) {
    return {{"x", to_string(p.cx)}, {"y", to_string(p.cy)}, {"t", to_string(p.ct)}, {"constant", to_string(p.c0)}};
}

}  // namespace

json time_to_json(const AlgebraicTime& t) {
    if (t.is_rational()) return {{"kind", "rational"}, {"value", to_string(t.value())}};
    json d = t.d().fits_slong_p() ? json(t.d().get_si()) : json(t.d().get_str());
    return {{"kind", "quadratic"}, {"p", t.p().get_str()}, {"q", t.q().get_str()}, {"d", d},
            {"r", t.r().get_str()}, {"approx", t.approx()}};
}

AlgebraicTime time_from_json(const json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "rational") return AlgebraicTime(parse_rational(j.at("value").get<std::string>()));
        if (kind == "quadratic") {
            const json& d = j.at("d");
            BigInt radicand = d.is_string() ? BigInt(d.get<std::string>()) : BigInt(d.get<long>());
            return AlgebraicTime::quadratic(BigInt(j.at("p").get<std::string>()), BigInt(j.at("q").get<std::string>()),
                                            radicand, BigInt(j.at("r").get<std::string>()));
        }
        throw std::invalid_argument("unknown time kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed time: ") + e.what());
    }
}

json scene_to_json(const Scene& scene) {
    json points = json::array();
    for (const auto& p : scene.points()) {
        points.push_back({{"id", p.id},
                          {"pos", {to_string(p.pos.x), to_string(p.pos.y)}},
                          {"vel", {to_string(p.vel.x), to_string(p.vel.y)}}});
    }
    return {{"version", kSceneVersion}, {"points", points}, {"meta", scene.meta()}};
}

Scene scene_from_json(const json& j) {
    if (!j.is_object()) throw SceneError("scene: expected a JSON object");
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != kSceneVersion) {
        throw SceneError("version: expected " + std::to_string(kSceneVersion));
    }
    if (!j.contains("points") || !j["points"].is_array()) throw SceneError("points: expected an array");

    std::vector<KineticPoint> points;
    const json& list = j["points"];
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "points[" + std::to_string(i) + "]";
        const json& entry = list[i];
        if (!entry.is_object()) throw SceneError(where + ": expected an object");
        if (!entry.contains("id") || !entry["id"].is_string()) throw SceneError(where + ".id: expected a string");
        points.push_back({entry["id"].get<std::string>(), field_vec2(entry, "pos", where), field_vec2(entry, "vel", where)});
    }
    json meta = j.value("meta", json::object());
    if (!meta.is_object()) throw SceneError("meta: expected an object");
    return Scene(std::move(points), std::move(meta));
}

std::string dump_scene(const Scene& scene) { return scene_to_json(scene).dump(2) + "\n"; }

Scene parse_scene(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SceneError(std::string("malformed JSON: ") + e.what());
    }
    return scene_from_json(j);
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SceneError("cannot read scene file '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scene(buffer.str());
    } catch (const SceneError& e) {
        throw SceneError(path.string() + ": " + e.what());
    }
}

void save_scene(const Scene& scene, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scene file '" + path.string() + "'");
    out << dump_scene(scene);
    if (!out) throw std::runtime_error("failed writing scene file '" + path.string() + "'");
}

json event_to_json(const Scene& scene, const CollinearityEvent& event) {
    json members = json::array();
    for (auto i : event.members) members.push_back(scene[i].id);
    return {{"time", time_to_json(event.time)},
            {"members", members},
            {"k", event.k()},
            {"anchors", {scene[event.anchors[0]].id, scene[event.anchors[1]].id}},
            {"tangential", event.tangential},
            {"contains_subcollision", event.contains_subcollision}};
}

json events_to_json(const Scene& scene, const std::vector<CollinearityEvent>& events) {
    json out = json::array();
    for (const auto& e : events) out.push_back(event_to_json(scene, e));
    return out;
}

std::string events_to_csv(const Scene& scene, const std::vector<CollinearityEvent>& events) {
    std::string out = "time_exact,time_approx,k,members,anchors,tangential,contains_subcollision\n";
    for (const auto& e : events) {
        out += e.time.to_string() + "," + approx_string(e.time.approx()) + "," + std::to_string(e.k()) + "," +
               join_ids(scene, e.members) + "," + join_ids(scene, e.anchors) + "," +
               (e.tangential ? "true" : "false") + "," + (e.contains_subcollision ? "true" : "false") + "\n";
    }
    return out;
}

json audit_to_json(const BoundAudit& audit) {
    return {{"n", audit.n},
            {"k", audit.k},
            {"event_count", audit.event_count},
            {"count_k", audit.count_k},
            {"triple_incidences", audit.triple_incidences},
            {"bound_3", audit.bound_3},
            {"bound_k", audit.bound_k},
            {"no_three_always_collinear", audit.no_three_always_collinear},
            {"pass", audit.pass},
            {"violations", audit.violations}};
}

json surface_to_json(const KineticPoint& a, const KineticPoint& b, const SurfacePolynomial& s,
                     const SurfaceClass& cls) {
    json out{{"a", a.id},
             {"b", b.id},
             {"coefficients",
              {{"alpha0", to_string(s.alpha0)},
               {"alpha1", to_string(s.alpha1)},
               {"beta0", to_string(s.beta0)},
               {"beta1", to_string(s.beta1)},
               {"gamma0", to_string(s.gamma0)},
               {"gamma1", to_string(s.gamma1)},
               {"gamma2", to_string(s.gamma2)}}},
             {"classification", to_string(cls.kind)}};
    if (cls.plane) out["plane"] = plane_to_json(*cls.plane);
    if (cls.collision_time) {
        out["factors"] = {{"horizontal", {{"t", to_string(*cls.collision_time)}}},
                          {"nonhorizontal", plane_to_json(*cls.plane)}};
    }
    return out;
}

}  // namespace kcol
