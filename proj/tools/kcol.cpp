// SPDX-License-Identifier: Apache-2.0
//
// kcol: generate kinetic scenes, enumerate collinearity events, audit the
// event-count bounds, inspect pair surfaces and render snapshots.
//
// Exit codes: 0 success, 1 bad input file or I/O failure, 2 usage error,
// 3 bound violation or oracle mismatch.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcol/constructions.hpp"
#include "kcol/events.hpp"
#include "kcol/io.hpp"
#include "kcol/surfaces.hpp"
#include "kcol/svg.hpp"

namespace fs = std::filesystem;
using namespace kcol;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    // generate
    std::string construction;
    int n = 0;
    int k = 3;
    int precision_bits = 40;
    std::uint64_t seed = 0;
    int coord_bound = 100;
    std::string output;
    // shared
    std::string scene_path;
    unsigned threads = 1;
    // events
    std::size_t kmin = 3;
    std::string format = "json";
    // count / verify
    std::size_t count_k = 3;
    bool oracle = false;
    std::size_t oracle_cap = 8;
    // pair-surface
    std::string id_a, id_b;
    // render
    std::vector<std::string> times;
    bool at_events = false;
    std::string out_dir;
};

int cmd_generate(const Args& args) {
    ConstructionParams params;
    try {
        params.name = parse_construction(args.construction);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    params.n = args.n;
    params.k = args.k;
    params.precision_bits = args.precision_bits;
    params.seed = args.seed;
    params.coord_bound = args.coord_bound;

    Scene scene;
    try {
        scene = generate(params);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (args.output.empty()) {
        std::cout << dump_scene(scene);
        std::cerr << args.construction << " n=" << scene.size() << " -> stdout\n";
    } else {
        save_scene(scene, args.output);
        std::cout << args.construction << " n=" << scene.size() << " -> " << args.output << "\n";
    }
    return 0;
}

EnumerateOptions enumerate_options(const Args& args, std::size_t k_min) {
    EnumerateOptions options;
    options.k_min = k_min;
    options.threads = args.threads;
    return options;
}

int cmd_events(const Args& args) {
    if (args.kmin < 3) throw UsageError("--kmin must be at least 3");
    const Scene scene = load_scene(args.scene_path);
    const auto events = enumerate_events(scene, enumerate_options(args, args.kmin));
    if (args.format == "csv") {
        std::cout << events_to_csv(scene, events);
    } else {
        std::cout << events_to_json(scene, events).dump(2) << "\n";
    }
    return 0;
}

int cmd_count(const Args& args) {
    if (args.count_k < 3) throw UsageError("--k must be at least 3");
    const Scene scene = load_scene(args.scene_path);
    std::cout << count_k_collinearities(scene, args.count_k, args.threads) << "\n";
    return 0;
}

int cmd_pair_surface(const Args& args) {
    if (args.id_a == args.id_b) throw UsageError("--a and --b must name different points");
    const Scene scene = load_scene(args.scene_path);
    const KineticPoint& a = scene[scene.index_of(args.id_a)];
    const KineticPoint& b = scene[scene.index_of(args.id_b)];
    std::cout << surface_to_json(a, b, surface_of_pair(a, b), classify_surface(a, b)).dump(2) << "\n";
    return 0;
}

int cmd_verify(const Args& args) {
    if (args.count_k < 3) throw UsageError("--k must be at least 3");
    const Scene scene = load_scene(args.scene_path);
    if (args.oracle && scene.size() > args.oracle_cap) {
        throw UsageError("--oracle: scene has " + std::to_string(scene.size()) + " points, cap is " +
                         std::to_string(args.oracle_cap));
    }
    const auto events = enumerate_events(scene, enumerate_options(args, 3));
    const BoundAudit audit = audit_bounds(scene, events, args.count_k);
    nlohmann::json report = audit_to_json(audit);
    bool ok = audit.pass;

    if (args.oracle) {
        BruteForceOptions options;
        options.cap = args.oracle_cap;
        const auto expected = brute_force_events(scene, options);
        const bool equal = events_to_json(scene, expected) == events_to_json(scene, events);
        report["oracle"] = {{"event_count", expected.size()}, {"equal", equal}};
        ok = ok && equal;
    }
    const std::string name = scene.meta().value("construction", std::string{});
    if (name == "tight" || name == "tight_ellipse") {
        const CertificateReport cert = verify_tight_certificate(scene);
        report["certificate"] = {{"pass", cert.pass}, {"failing_triples", cert.failing_triples}};
    }
    std::cout << report.dump(2) << "\n";
    return ok ? 0 : kExitViolation;
}

std::string file_stem_for(const Rational& t) {
    std::string s = to_string(t);
    for (char& c : s) {
        if (c == '/') c = '_';
        if (c == '-') c = 'm';
    }
    return "t_" + s;
}

int cmd_render(const Args& args) {
    if (args.times.empty() && !args.at_events) throw UsageError("render needs --times or --at-events");
    std::vector<Rational> times;
    for (const auto& text : args.times) {
        try {
            times.push_back(parse_rational(text));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--times: ") + e.what());
        }
    }
    const Scene scene = load_scene(args.scene_path);
    const auto events = enumerate_events(scene, enumerate_options(args, 3));

    struct Frame {
        double time;
        std::string label;
        std::string file;
        std::vector<CollinearityEvent> events;
        std::string watermark;
    };
    std::vector<Frame> frames;
    for (const auto& t : times) {
        Frame f{t.get_d(), to_string(t), file_stem_for(t) + ".svg", {}, {}};
        for (const auto& ev : events) {
            if (ev.time.is_rational() && ev.time.value() == t) f.events.push_back(ev);
        }
        frames.push_back(std::move(f));
    }
    if (args.at_events) {
        std::size_t index = 0;
        for (std::size_t i = 0; i < events.size();) {
            std::size_t j = i;
            Frame f{events[i].time.approx(), events[i].time.to_string(), "event_" + std::to_string(index++) + ".svg",
                    {}, {}};
            while (j < events.size() && same_time(events[i].time, events[j].time)) f.events.push_back(events[j++]);
            if (!events[i].time.is_rational()) f.watermark = "approximate: irrational time rendered at float value";
            frames.push_back(std::move(f));
            i = j;
        }
    }

    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec || !fs::is_directory(args.out_dir)) {
        std::cerr << "error: cannot create output directory '" << args.out_dir << "'\n";
        return kExitInput;
    }
    std::vector<double> frame_times;
    for (const auto& f : frames) frame_times.push_back(f.time);
    const Viewport view = fit_viewport(scene, frame_times);
    for (const auto& f : frames) {
        const fs::path path = fs::path(args.out_dir) / f.file;
        std::ofstream out(path);
        out << render_snapshot(scene, f.time, f.label, f.events, view, f.watermark);
        if (!out) {
            std::cerr << "error: cannot write '" << path.string() << "'\n";
            return kExitInput;
        }
        std::cout << path.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Args args;
    CLI::App app{"Exact k-collinearity engine for kinetic point sets"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Write a constructed scene");
    gen->add_option("--construction", args.construction,
                    "tight | tight_ellipse | no_collinearity | no_collinearity_distinct | lower_bound | random")
        ->required();
    gen->add_option("--n", args.n, "Number of points")->required();
    gen->add_option("--k", args.k, "Collinearity order (lower_bound)");
    gen->add_option("--precision-bits", args.precision_bits, "Dyadic rounding (tight family)");
    gen->add_option("--seed", args.seed, "Seed (random)");
    gen->add_option("--coord-bound", args.coord_bound, "Numerator bound (random)");
    gen->add_option("-o,--output", args.output, "Output scene file (default: stdout)");

    auto* ev = app.add_subcommand("events", "List all k-collinearities");
    ev->add_option("scene", args.scene_path, "Scene file")->required();
    ev->add_option("--kmin", args.kmin, "Minimum member count")->capture_default_str();
    ev->add_option("--format", args.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    ev->add_option("--threads", args.threads, "Worker threads")->capture_default_str();

    auto* cnt = app.add_subcommand("count", "Count k-collinearities");
    cnt->add_option("scene", args.scene_path, "Scene file")->required();
    cnt->add_option("--k", args.count_k, "Minimum member count")->capture_default_str();
    cnt->add_option("--threads", args.threads, "Worker threads")->capture_default_str();

    auto* surf = app.add_subcommand("pair-surface", "Collinearity surface of two points");
    surf->add_option("scene", args.scene_path, "Scene file")->required();
    surf->add_option("--a", args.id_a, "First point id")->required();
    surf->add_option("--b", args.id_b, "Second point id")->required();

    auto* ver = app.add_subcommand("verify", "Audit the event-count bounds");
    ver->add_option("scene", args.scene_path, "Scene file")->required();
    ver->add_option("--k", args.count_k, "Order for the k-collinearity bound")->capture_default_str();
    ver->add_flag("--oracle", args.oracle, "Cross-check against the brute-force oracle");
    ver->add_option("--oracle-cap", args.oracle_cap, "Largest scene the oracle accepts")->capture_default_str();
    ver->add_option("--threads", args.threads, "Worker threads")->capture_default_str();

    auto* ren = app.add_subcommand("render", "Write SVG snapshots");
    ren->add_option("scene", args.scene_path, "Scene file")->required();
    ren->add_option("--times", args.times, "Rational times, e.g. 0,1/2,-3")->delimiter(',');
    ren->add_flag("--at-events", args.at_events, "Also render every event time");
    ren->add_option("-o,--output", args.out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return cmd_generate(args);
        if (*ev) return cmd_events(args);
        if (*cnt) return cmd_count(args);
        if (*surf) return cmd_pair_surface(args);
        if (*ver) return cmd_verify(args);
        if (*ren) return cmd_render(args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SceneError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
