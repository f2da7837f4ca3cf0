#include "quilt/cli.hpp"

#include "quilt/batteries.hpp"
#include "quilt/dirichlet.hpp"
#include "quilt/group.hpp"
#include "quilt/lemmas.hpp"
#include "quilt/rays.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

namespace quilt {

using nlohmann::json;

namespace {

json num(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    return x;
}

json ideal(const IdealPoint& p) { return p.infinite ? json("inf") : json(p.value); }

json interval(const IdealInterval& iv) {
    if (iv.full) return json{{"full", true}};
    return json::array({ideal(iv.lo), ideal(iv.hi)});
}

template <class T>
T get(const json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be an object");
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) throw ConfigError("unknown config key '" + k + "' in " + where);
    }
}

json config_json(const RunConfig& c) {
    json set{{"kind", c.set_kind}};
    if (c.set_kind == "points") {
        json parts = json::array();
        for (const Component& p : c.components) parts.push_back({p.lo, p.hi});
        set["components"] = parts;
    } else if (c.set_kind == "cantor") {
        set["stage"] = c.cantor_stage;
    }
    json j{{"set", set},
           {"a", c.a},
           {"depth", c.depth},
           {"word_ball", c.word_ball},
           {"prune_radius", c.prune_radius},
           {"theoremC", c.theoremC},
           {"schedule", c.schedule},
           {"rays",
            {{"kind", c.ray}, {"position", c.position}, {"probes", c.probes}, {"step", c.step}, {"t_max", c.t_max}}},
           {"epsilon", c.epsilon},
           {"seed", c.seed},
           {"trials", c.trials}};
    j["tolerance"] = c.tolerance ? json(*c.tolerance) : json(nullptr);
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path.string());
    f << text;
}

// Line chart of several series sharing the x axis.
std::string chart_svg(const std::string& title, const std::vector<std::string>& names,
                      const std::vector<std::vector<double>>& xs, const std::vector<std::vector<double>>& ys) {
    const double W = 900, H = 480, m = 50;
    double xmax = 1e-9, ymin = 0.0, ymax = 1e-9;
    for (size_t s = 0; s < xs.size(); ++s)
        for (size_t i = 0; i < xs[s].size(); ++i) {
            xmax = std::max(xmax, xs[s][i]);
            if (std::isfinite(ys[s][i])) {
                ymax = std::max(ymax, ys[s][i]);
                ymin = std::min(ymin, ys[s][i]);
            }
        }
    auto px = [&](double x) { return m + x / xmax * (W - 2 * m); };
    auto py = [&](double y) { return H - m - (y - ymin) / (ymax - ymin) * (H - 2 * m); };
    static const char* colors[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085", "#7f8c8d"};
    std::ostringstream s;
    s << std::fixed << std::setprecision(3);
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<text x=\"" << m << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
    s << "<line x1=\"" << m << "\" y1=\"" << py(0) << "\" x2=\"" << W - m << "\" y2=\"" << py(0)
      << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << m << "\" y1=\"" << m << "\" x2=\"" << m << "\" y2=\"" << H - m << "\" stroke=\"black\"/>\n";
    s << "<text x=\"4\" y=\"" << m << "\" font-family=\"sans-serif\" font-size=\"10\">" << ymax << "</text>\n";
    s << "<text x=\"" << W - m << "\" y=\"" << H - m + 16 << "\" font-family=\"sans-serif\" font-size=\"10\">" << xmax
      << "</text>\n";
    for (size_t k = 0; k < xs.size(); ++k) {
        const char* col = colors[k % 7];
        s << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < xs[k].size(); ++i)
            if (std::isfinite(ys[k][i])) s << px(xs[k][i]) << ',' << py(ys[k][i]) << ' ';
        s << "\"/>\n";
        s << "<text x=\"" << W - m - 220 << "\" y=\"" << m + 14 * (k + 1) << "\" fill=\"" << col
          << "\" font-family=\"sans-serif\" font-size=\"11\">" << names[k] << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

json battery_json(const LemmaBattery& b) {
    return {{"name", b.name},     {"trials", b.trials},         {"passed", b.passed},
            {"skipped", b.skipped}, {"worst_slack", num(b.worst_slack)}, {"failures", b.failures},
            {"ok", b.ok()}};
}

json profile_json(const DeltaProfile& p) {
    std::vector<json> deltas;
    for (double d : p.deltas) deltas.push_back(num(d));
    return {{"label", p.label},          {"times", p.times},         {"deltas", deltas},
            {"certified", p.certified},  {"verdict", to_string(p.verdict)}, {"monotone", p.monotone},
            {"certified_count", p.certified_count()}, {"max_certified_delta", num(p.max_certified_delta())}};
}

json scan_json(const SigmaScan& s) {
    std::vector<json> trace;
    for (double d : s.trace) trace.push_back(num(d));
    return {{"label", s.label},
            {"epsilon", s.epsilon},
            {"t_epsilon", s.t_epsilon ? json(*s.t_epsilon) : json("not-found")},
            {"times", s.times},
            {"trace", trace},
            {"tail_decreasing", s.tail_decreasing}};
}

struct Outcome {
    json result;
    std::string svg;
    bool passed = true;
    std::vector<std::string> failed_checks;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            failed_checks.push_back(what);
        }
    }
};

std::vector<double> sample_times(const RunConfig& c) { return uniform_times(c.step, c.t_max); }

Outcome cmd_verify_lemmas(const RunConfig& c) {
    Outcome o;
    BatteryOptions opt;
    opt.trials = c.trials;
    opt.seed = c.seed;
    opt.tolerance = c.tolerance;
    json closed = json::array();
    for (const LemmaBattery& b : lemma_batteries(opt)) {
        closed.push_back(battery_json(b));
        o.check(b.ok(), b.name);
    }
    const QuiltSpec spec = spec_from_config(c);
    const GroupApprox G = build_group(spec);
    const DistanceLemmaReport dl = verify_distance_lemmas(spec, G, std::max(1, c.trials / 10), c.seed);
    json surface = json::array();
    for (const LemmaBattery& b : dl.batteries) {
        surface.push_back(battery_json(b));
        o.check(b.ok() || (b.passed == 0 && b.skipped == b.trials), b.name);
    }
    o.result = {{"closed_form", closed}, {"surface", surface}};
    std::vector<double> idx, slack;
    for (const json& b : closed) {
        idx.push_back(static_cast<double>(idx.size() + 1));
        slack.push_back(b["worst_slack"].is_number() ? b["worst_slack"].get<double>() : 0.0);
    }
    o.svg = chart_svg("worst slack per closed-form battery", {"worst slack"}, {idx}, {slack});
    return o;
}

Outcome cmd_build(const RunConfig& c) {
    Outcome o;
    const QuiltSpec spec = spec_from_config(c);
    const GroupApprox G = build_group(spec);
    json gens = json::array();
    for (const Generator& g : G.generators) {
        const IsometryClass cls = classify(g.g);
        json e{{"label", g.label}, {"trace", g.g.trace()}, {"class", to_string(cls)}, {"orientation", g.g.orientation}};
        if (cls == IsometryClass::hyperbolic) e["translation_length"] = translation_length(g.g);
        if (cls == IsometryClass::parabolic) e["fixed_point"] = ideal(fixed_points(g.g).front());
        gens.push_back(e);
        o.check(g.g.orientation == 1, "orientation of " + g.label);
    }
    json flutes = json::array();
    for (const FluteRealization& fr : G.flutes) {
        const auto h = flute_loop_elements(fr.chain);
        const auto P = flute_parabolics(fr.chain);
        double len_err = 0.0, trace_err = 0.0;
        for (size_t j = 0; j < h.size(); ++j)
            len_err = std::max(len_err, std::abs(translation_length(h[j]) - fr.chain.lengths[j]));
        for (const Isometry& p : P) trace_err = std::max(trace_err, std::abs(std::abs(p.trace()) - 2.0));
        flutes.push_back({{"interval", fr.interval_index},
                          {"s1", fr.s1},
                          {"lengths", fr.chain.lengths},
                          {"loop_length_error", len_err},
                          {"parabolic_trace_error", trace_err}});
        o.check(len_err < 1e-8, "loop lengths of flute " + std::to_string(fr.interval_index));
        o.check(trace_err < 1e-9, "parabolic traces of flute " + std::to_string(fr.interval_index));
    }
    const double disp = G.min_displacement();
    o.check(disp > 1e-3, "minimum displacement");
    json intervals = json::array();
    for (const IntervalRec& r : spec.intervals)
        intervals.push_back({{"index", r.index}, {"start", r.start}, {"end", r.end}, {"length", r.length}});
    o.result = {{"a", spec.a},
                {"c_star", [&] {
                     json parts = json::array();
                     for (const Component& p : spec.c_star().parts) parts.push_back({p.lo, p.hi});
                     return parts;
                 }()},
                {"intervals", intervals},
                {"generators", gens},
                {"flutes", flutes},
                {"ball_size", G.ball.elements.size()},
                {"certified_radius", num(G.ball.certified_radius)},
                {"min_displacement", num(disp)}};
    o.svg = render_svg(boundary_at_infinity(G.basepoint, G.ball.elements, G.word_ball), spec);
    return o;
}

Outcome cmd_dirichlet(const RunConfig& c) {
    Outcome o;
    const QuiltSpec spec = spec_from_config(c);
    const GroupApprox G = build_group(spec);
    for (int L : c.schedule)
        if (L > G.word_ball) throw ConfigError("schedule entry exceeds word_ball");
    std::vector<DirichletApprox> approxes;
    const PredictionReport r = compare_to_prediction(G, spec, c.schedule, &approxes);
    json stages = json::array();
    for (size_t s = 0; s < r.stages.size(); ++s) {
        const PredictionStage& st = r.stages[s];
        json boundary = json::array(), parabolics = json::array(), cstar = json::array();
        for (const IdealInterval& iv : approxes[s].boundary) boundary.push_back(interval(iv));
        for (const ParabolicPoint& p : approxes[s].parabolics)
            parabolics.push_back({{"point", p.point}, {"gap", num(p.gap)}});
        for (const CStarStatus& cs : st.cstar) cstar.push_back({{"lo", cs.lo}, {"hi", cs.hi}, {"contained", cs.contained}});
        stages.push_back({{"word_length", st.word_length},
                          {"elements", st.elements},
                          {"boundary", boundary},
                          {"parabolics", parabolics},
                          {"cstar", cstar},
                          {"hausdorff", num(st.hausdorff)},
                          {"excess_measure", num(st.excess_measure)},
                          {"negative_measure", num(st.negative_measure)},
                          {"negative_interval_exact", st.negative_interval_exact},
                          {"contained_in_previous", st.contained_in_previous}});
    }
    o.check(r.monotone, "boundary shrinks along the schedule");
    if (r.has_cstar) {
        o.check(r.cstar_always_contained, "C* inside every boundary");
        o.check(r.excess_nonincreasing, "excess measure nonincreasing");
    } else if (!approxes.empty()) {
        const double ea = std::exp(spec.a);
        bool exact = false;
        for (const IdealInterval& iv : approxes.back().boundary)
            exact = exact || (!iv.full && !iv.lo.infinite && !iv.hi.infinite && std::abs(iv.lo.value - 1.0) < 1e-10 &&
                              std::abs(iv.hi.value - ea) < 1e-10);
        o.check(exact, "positive interval [1, e^a] exact");
    }
    o.check(r.negative_interval_ok, spec.theoremC ? "negative interval removed" : "negative interval present");
    o.result = {{"has_cstar", r.has_cstar},
                {"theoremC", r.theoremC},
                {"stages", stages},
                {"monotone", r.monotone},
                {"cstar_always_contained", r.cstar_always_contained},
                {"excess_nonincreasing", r.excess_nonincreasing},
                {"hausdorff_nonincreasing", r.hausdorff_nonincreasing},
                {"negative_interval_ok", r.negative_interval_ok},
                {"negative_tolerance", r.negative_tolerance}};
    if (!approxes.empty()) o.svg = render_svg(approxes.back(), spec);
    return o;
}

Outcome cmd_ray(const RunConfig& c) {
    Outcome o;
    const QuiltSpec spec = spec_from_config(c);
    const GroupApprox G = build_group(spec);
    const std::vector<double> times = sample_times(c);
    std::vector<double> positions =
        c.ray == "all" ? spec.c_positions() : std::vector<double>{c.position};
    json profiles = json::array();
    std::vector<std::string> names;
    std::vector<std::vector<double>> xs, ys;
    auto run = [&](const RaySpec& r) {
        DeltaProfile p = delta_profile(r, times, G, c.threads);
        profiles.push_back(profile_json(p));
        names.push_back(p.label + " " + to_string(p.verdict));
        xs.push_back(p.times);
        ys.push_back(p.deltas);
        return p;
    };
    auto sigma_ok = [&](const DeltaProfile& p) {
        bool ok = p.verdict == Verdict::critical && p.certified_count() * 10 >= p.times.size() * 8;
        for (size_t i = 0; i < p.times.size(); ++i) ok = ok && (!p.certified[i] || std::abs(p.deltas[i]) < 1e-6);
        return ok;
    };
    if (c.ray == "custom") {
        for (double e : c.probes) run({"probe(" + std::to_string(e) + ")", G.basepoint, IdealPoint::at(e)});
    } else {
        for (double s : positions) {
            if (c.ray == "all" || c.ray == "sigma") o.check(sigma_ok(run(sigma_ray(s))), "sigma ray critical");
            const DeltaRays d = delta_c_rays(s, spec.a);
            if (c.ray == "all") {
                const DeltaProfile ps = run(d.shorter), pl = run(d.longer);
                o.check(ps.verdict == Verdict::critical || pl.verdict == Verdict::critical,
                        "one delta ray critical at " + ps.label);
            }
            if (c.ray == "delta-s") run(d.shorter);
            if (c.ray == "delta-l") run(d.longer);
        }
        if (c.ray == "all" && !spec.intervals.empty())
            for (double e : c.probes) {
                const DeltaProfile p = run({"probe(" + std::to_string(e) + ")", G.basepoint, IdealPoint::at(e)});
                o.check(p.verdict != Verdict::critical, "probe not critical: " + p.label);
            }
    }
    o.result = {{"profiles", profiles}};
    o.svg = chart_svg("Delta profiles", names, xs, ys);
    return o;
}

Outcome cmd_sigma_scan(const RunConfig& c) {
    Outcome o;
    const QuiltSpec spec = spec_from_config(c);
    if (spec.intervals.empty()) throw ConfigError("sigma-scan needs a quilt with at least one flute");
    const GroupApprox G = build_group(spec);
    json scans = json::array();
    std::vector<std::string> names;
    std::vector<std::vector<double>> xs, ys;
    for (double s : spec.c_positions()) {
        const DeltaRays d = delta_c_rays(s, spec.a);
        for (const RaySpec& r : {d.shorter, d.longer}) {
            const SigmaScan scan = theorem_sigma_scan(r, c.epsilon, c.t_max, spec, G, c.step, c.threads);
            scans.push_back(scan_json(scan));
            names.push_back(scan.label);
            xs.push_back(scan.times);
            ys.push_back(scan.trace);
            o.check(scan.t_epsilon.has_value() && *scan.t_epsilon <= c.t_max, "t_epsilon found for " + scan.label);
            o.check(scan.tail_decreasing, "trace decreasing over the last quartile for " + scan.label);
        }
    }
    o.result = {{"scans", scans}};
    o.svg = chart_svg("scaffold distance along delta rays", names, xs, ys);
    return o;
}

}  // namespace

RunConfig load_config(const std::string& path, RunConfig c) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    check_keys(j, {"set", "a", "depth", "word_ball", "prune_radius", "theoremC", "schedule", "rays", "epsilon", "seed",
                   "trials", "tolerance"},
               "config");
    if (j.contains("set")) {
        const json& s = j["set"];
        check_keys(s, {"kind", "components", "stage"}, "set");
        c.set_kind = get<std::string>(s, "kind");
        if (c.set_kind == "points") {
            c.components.clear();
            for (const json& p : s.at("components")) {
                if (p.is_number()) {
                    c.components.push_back({p.get<double>(), p.get<double>()});
                } else if (p.is_array() && p.size() == 2) {
                    c.components.push_back({p[0].get<double>(), p[1].get<double>()});
                } else {
                    throw ConfigError("set components must be numbers or [lo, hi] pairs");
                }
            }
        } else if (c.set_kind == "cantor") {
            c.cantor_stage = get<int>(s, "stage");
        } else if (c.set_kind != "annulus") {
            throw ConfigError("set kind must be points, cantor or annulus");
        }
    }
    if (j.contains("a")) c.a = get<double>(j, "a");
    if (j.contains("depth")) c.depth = get<int>(j, "depth");
    if (j.contains("word_ball")) c.word_ball = get<int>(j, "word_ball");
    if (j.contains("prune_radius")) c.prune_radius = get<double>(j, "prune_radius");
    if (j.contains("theoremC")) c.theoremC = get<bool>(j, "theoremC");
    if (j.contains("schedule")) c.schedule = get<std::vector<int>>(j, "schedule");
    if (j.contains("rays")) {
        const json& r = j["rays"];
        check_keys(r, {"kind", "position", "probes", "step", "t_max"}, "rays");
        if (r.contains("kind")) c.ray = get<std::string>(r, "kind");
        if (r.contains("position")) c.position = get<double>(r, "position");
        if (r.contains("probes")) c.probes = get<std::vector<double>>(r, "probes");
        if (r.contains("step")) c.step = get<double>(r, "step");
        if (r.contains("t_max")) c.t_max = get<double>(r, "t_max");
    }
    if (j.contains("epsilon")) c.epsilon = get<double>(j, "epsilon");
    if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed");
    if (j.contains("trials")) c.trials = get<int>(j, "trials");
    if (j.contains("tolerance") && !j["tolerance"].is_null()) c.tolerance = get<double>(j, "tolerance");
    return c;
}

QuiltSpec spec_from_config(const RunConfig& c) {
    if (c.set_kind == "annulus") return annulus_spec(c.a, c.word_ball, c.prune_radius);
    const CompactSet K = c.set_kind == "cantor" ? cantor_stage(c.cantor_stage) : make_compact_set(c.components);
    return build_quilt_spec(K, c.a, c.depth, c.word_ball, c.theoremC, c.prune_radius);
}

namespace {

void validate_config(const RunConfig& c) {
    if (c.ray != "all" && c.ray != "sigma" && c.ray != "delta-s" && c.ray != "delta-l" && c.ray != "custom")
        throw ConfigError("ray kind must be all, sigma, delta-s, delta-l or custom");
    if (!(c.step > 0.0) || !(c.t_max >= c.step)) throw ConfigError("need 0 < step <= t_max");
    if (!(c.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    if (c.trials < 1) throw ConfigError("trials must be at least 1");
    if (c.threads < 1) throw ConfigError("threads must be at least 1");
    if (c.schedule.empty()) throw ConfigError("schedule must not be empty");
    for (size_t i = 0; i < c.schedule.size(); ++i)
        if (c.schedule[i] < 1 || (i > 0 && c.schedule[i] <= c.schedule[i - 1]))
            throw ConfigError("schedule must be increasing positive word lengths");
    if (c.ray != "all" && c.ray != "custom" && !(c.position >= 0.0 && c.position < c.a))
        throw ConfigError("ray position must lie in [0, a)");
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& log) {
    Outcome o;
    try {
        validate_config(cfg);
        if (cfg.command == "verify-lemmas") {
            o = cmd_verify_lemmas(cfg);
        } else if (cfg.command == "build") {
            o = cmd_build(cfg);
        } else if (cfg.command == "dirichlet") {
            o = cmd_dirichlet(cfg);
        } else if (cfg.command == "ray") {
            o = cmd_ray(cfg);
        } else if (cfg.command == "sigma-scan") {
            o = cmd_sigma_scan(cfg);
        } else {
            throw ConfigError("unknown command " + cfg.command);
        }
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SpecError& e) {
        log << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        log << "resource cap: " << e.what() << " (partial size " << e.partial_size << ")\n";
        return kExitResource;
    } catch (const ConsistencyError& e) {
        log << "assertion failure: " << e.what() << '\n';
        return kExitAssertion;
    } catch (const std::domain_error& e) {
        log << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        log << "config error: " << e.what() << '\n';
        return kExitUsage;
    }
    const json report{{"schema", 1},
                      {"command", cfg.command},
                      {"config", config_json(cfg)},
                      {"result", o.result},
                      {"passed", o.passed},
                      {"failed_checks", o.failed_checks}};
    try {
        std::filesystem::create_directories(cfg.out_dir);
        write_file(std::filesystem::path(cfg.out_dir) / "report.json", report.dump(2) + "\n");
        write_file(std::filesystem::path(cfg.out_dir) / "figure.svg", o.svg);
    } catch (const std::exception& e) {
        log << "config error: " << e.what() << '\n';
        return kExitUsage;
    }
    log << cfg.command << ": " << (o.passed ? "pass" : "FAIL");
    for (const std::string& f : o.failed_checks) log << "\n  failed: " << f;
    log << '\n';
    return o.passed ? kExitOk : kExitAssertion;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Quilted flute surfaces: groups, Dirichlet domains and ray profiles"};
    app.require_subcommand(1);
    struct Flags {
        std::string config;
        std::optional<double> a, epsilon, tolerance, position, t_max, step;
        std::optional<int> depth, word_ball, trials;
        std::optional<std::uint64_t> seed;
        std::optional<std::string> ray;
        bool theoremC = false;
        std::string out = ".";
        int threads = 1;
    } f;
    const std::vector<std::pair<const char*, const char*>> commands{
        {"verify-lemmas", "run the closed-form and surface distance batteries"},
        {"build", "build the quilt group and check its generators"},
        {"dirichlet", "boundary-at-infinity approximations along the ball schedule"},
        {"ray", "Delta profiles of sigma, delta and probe rays"},
        {"sigma-scan", "scaffold-distance scans along the delta rays"}};
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", f.config, "JSON config file");
        sub->add_option("--a", f.a, "length of the core geodesic");
        sub->add_option("--depth", f.depth, "gamma curves per flute");
        sub->add_option("--word-ball", f.word_ball, "maximum word length");
        sub->add_option("--epsilon", f.epsilon, "scaffold neighborhood radius");
        sub->add_option("--seed", f.seed, "seed for randomized batteries");
        sub->add_flag("--theoremC", f.theoremC, "glue the twice-punctured disc on the negative side");
        sub->add_option("--out", f.out, "output directory");
        sub->add_option("--threads", f.threads, "worker cap")->check(CLI::PositiveNumber);
        sub->add_option("--trials", f.trials, "battery trial count");
        sub->add_option("--tolerance", f.tolerance, "override closed-form comparison tolerances");
        sub->add_option("--ray", f.ray, "all | sigma | delta-s | delta-l | custom");
        sub->add_option("--position", f.position, "position on the core geodesic");
        sub->add_option("--t-max", f.t_max, "last sample time");
        sub->add_option("--step", f.step, "sample spacing");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    RunConfig cfg;
    try {
        if (!f.config.empty()) cfg = load_config(f.config);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (f.a) cfg.a = *f.a;
    if (f.depth) cfg.depth = *f.depth;
    if (f.word_ball) cfg.word_ball = *f.word_ball;
    if (f.epsilon) cfg.epsilon = *f.epsilon;
    if (f.seed) cfg.seed = *f.seed;
    if (f.theoremC) cfg.theoremC = true;
    if (f.trials) cfg.trials = *f.trials;
    if (f.tolerance) cfg.tolerance = *f.tolerance;
    if (f.ray) cfg.ray = *f.ray;
    if (f.position) cfg.position = *f.position;
    if (f.t_max) cfg.t_max = *f.t_max;
    if (f.step) cfg.step = *f.step;
    cfg.out_dir = f.out;
    cfg.threads = f.threads;
    return run_command(cfg, std::cout);
}

}  // namespace quilt
