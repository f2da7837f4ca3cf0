#include "quilt/rays.hpp"

#include "quilt/lemmas.hpp"
#include "quilt/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

namespace quilt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Sends the endpoint to infinity so the ray becomes vertical.
Isometry vertical_frame(double e) { return Isometry::from(0.0, -1.0, 1.0, -e); }

std::string fmt(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

}  // namespace

HPoint RaySpec::at(double t) const {
    if (endpoint.infinite) return make_point(base.x, base.y * std::exp(t));
    const Isometry T = vertical_frame(endpoint.value);
    const HPoint zb = apply(T, base);
    return apply(invert(T), make_point(zb.x, zb.y * std::exp(t)));
}

SurfaceDistance surface_distance(const HPoint& z, const HPoint& w, const GroupApprox& group) {
    SurfaceDistance out{distance(z, w), false};
    for (const Element& e : group.ball.elements) out.value = std::min(out.value, distance(z, apply(e.g, w)));
    const SearchResult s = orbit_search(group.pairing, z, w);
    out.certified = s.complete && s.value >= out.value - 1e-9;
    return out;
}

RaySpec sigma_ray(double s) {
    return {"sigma(" + fmt(s) + ")", make_point(0.0, std::exp(s)), IdealPoint::at(std::exp(s))};
}

DeltaRays delta_c_rays(double c_position, double a) {
    const HPoint p = make_point(0.0, std::exp(a / 2));
    double best = c_position;
    for (double s : {c_position - a, c_position + a})
        if (std::abs(s - a / 2) < std::abs(best - a / 2) - 1e-12) best = s;
    const double other = best <= a / 2 ? best + a : best - a;
    const std::string tag = "(" + fmt(c_position) + ")";
    return {{"delta-s" + tag, p, IdealPoint::at(std::exp(best))}, {"delta-l" + tag, p, IdealPoint::at(std::exp(other))}};
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::critical: return "critical-consistent";
        case Verdict::subcritical: return "subcritical-consistent";
        case Verdict::horocyclic: return "horocyclic-consistent";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::size_t DeltaProfile::certified_count() const {
    return static_cast<std::size_t>(std::count(certified.begin(), certified.end(), true));
}

double DeltaProfile::max_certified_delta() const {
    double m = 0.0;
    for (size_t i = 0; i < deltas.size(); ++i)
        if (certified[i]) m = std::max(m, deltas[i]);
    return m;
}

namespace {

Verdict classify_profile(const DeltaProfile& p) {
    std::vector<size_t> cert;
    for (size_t i = 0; i < p.deltas.size(); ++i)
        if (p.certified[i]) cert.push_back(i);
    if (cert.empty()) return Verdict::inconclusive;
    if (std::all_of(cert.begin(), cert.end(), [&](size_t i) { return p.deltas[i] < kCriticalThreshold; }))
        return Verdict::critical;
    const double last = p.deltas[cert.back()];
    if (last > kHorocyclicCap && cert.size() >= 2 && last > p.deltas[cert[cert.size() - 2]]) return Verdict::horocyclic;
    const size_t quartile = (3 * p.deltas.size()) / 4;
    double lo = kInf, hi = -kInf;
    int count = 0;
    for (size_t i : cert) {
        if (i < quartile) continue;
        lo = std::min(lo, p.deltas[i]);
        hi = std::max(hi, p.deltas[i]);
        ++count;
    }
    if (count >= 2 && hi - lo < kSubcriticalDrift && lo >= kCriticalThreshold && hi <= kHorocyclicCap)
        return Verdict::subcritical;
    return Verdict::inconclusive;
}

}  // namespace

DeltaProfile delta_profile(const RaySpec& ray, const std::vector<double>& times, const GroupApprox& group,
                           int threads) {
    DeltaProfile p;
    p.label = ray.label;
    p.times = times;
    p.deltas.assign(times.size(), 0.0);
    std::vector<char> cert(times.size(), 0);
    parallel_for(times.size(), threads, [&](size_t i) {
        const SurfaceDistance d = surface_distance(ray.base, ray.at(times[i]), group);
        p.deltas[i] = times[i] - d.value;
        cert[i] = d.certified;
    });
    p.certified.assign(cert.begin(), cert.end());
    double prev = 0.0;
    for (size_t i = 0; i < times.size(); ++i) {
        if (!p.certified[i]) continue;
        if (p.deltas[i] < -1e-9 || p.deltas[i] < prev - 1e-9) p.monotone = false;
        prev = std::max(prev, p.deltas[i]);
    }
    p.verdict = classify_profile(p);
    return p;
}

std::vector<double> uniform_times(double step, double t_max) {
    if (!(step > 0.0)) throw DomainError("sample step must be positive");
    std::vector<double> out;
    for (int k = 1; k * step <= t_max + 1e-12; ++k) out.push_back(k * step);
    return out;
}

double scaffold_distance(const HPoint& z, const QuiltSpec& spec, const GroupApprox& group) {
    const std::vector<Geodesic> lifts = scaffolding_lifts(spec.intervals, spec.a, spec.base());
    double best = kInf;
    auto scan = [&](const HPoint& zz) {
        for (const Geodesic& g : lifts) best = std::min(best, distance_to_geodesic(zz, g));
    };
    scan(z);
    for (const Element& e : group.ball.elements) scan(apply(invert(e.g), z));
    return best;
}

SigmaScan theorem_sigma_scan(const RaySpec& ray, double epsilon, double t_max, const QuiltSpec& spec,
                             const GroupApprox& group, double step, int threads) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    SigmaScan out;
    out.label = ray.label;
    out.epsilon = epsilon;
    out.times = uniform_times(step, t_max);
    out.trace.assign(out.times.size(), 0.0);
    parallel_for(out.times.size(), threads,
                 [&](size_t i) { out.trace[i] = scaffold_distance(ray.at(out.times[i]), spec, group); });
    const size_t n = out.trace.size();
    if (n == 0) return out;
    size_t first_good = 0;
    for (size_t i = 0; i < n; ++i)
        if (out.trace[i] >= epsilon) first_good = i + 1;
    if (first_good < n) out.t_epsilon = out.times[first_good];
    out.tail_decreasing = true;
    for (size_t i = (3 * n) / 4; i + 1 < n; ++i)
        if (out.trace[i + 1] > out.trace[i] + 1e-12) out.tail_decreasing = false;
    return out;
}

bool DistanceLemmaReport::all_passed() const {
    return std::all_of(batteries.begin(), batteries.end(),
                       [](const LemmaBattery& b) { return b.ok(); });
}

namespace {

double distance_to_core_orbit(const HPoint& z, const GroupApprox& group) {
    const Geodesic core = Geodesic::vertical(0.0);
    double best = distance_to_geodesic(z, core);
    for (const Element& e : group.ball.elements) best = std::min(best, distance_to_geodesic(apply(invert(e.g), z), core));
    return best;
}

}  // namespace

DistanceLemmaReport verify_distance_lemmas(const QuiltSpec& spec, const GroupApprox& group, int trials,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    std::vector<double> positions = spec.c_positions();
    if (positions.empty()) positions.push_back(0.0);
    auto pick_position = [&] {
        return positions[std::uniform_int_distribution<size_t>(0, positions.size() - 1)(rng)];
    };

    DistanceLemmaReport report;
    LemmaBattery ortho;
    ortho.name = "orthogonal ray realizes its distance to the core";
    for (int i = 0; i < trials; ++i, ++ortho.trials) {
        const double s = pick_position(), t = uniform(0.0, 3.0);
        const double d = distance_to_core_orbit(sigma_ray(s).at(t), group);
        ortho.record(1e-6 - std::abs(d - t), 0.0, "s=" + fmt(s) + " t=" + fmt(t) + " d=" + fmt(d));
    }
    report.batteries.push_back(ortho);

    LemmaBattery pair;
    pair.name = "arcs between orthogonal rays exceed the height difference";
    const size_t pool = std::min<size_t>(group.ball.elements.size(), 64);
    for (int i = 0; i < trials; ++i, ++pair.trials) {
        const double s1 = pick_position(), s2 = pick_position();
        const double t1 = uniform(0.0, 4.0), t2 = uniform(0.0, 4.0);
        Isometry g = Isometry::identity();
        if (pool > 0) g = group.ball.elements[std::uniform_int_distribution<size_t>(0, pool - 1)(rng)].g;
        const HPoint z = sigma_ray(s1).at(t1), w = apply(g, sigma_ray(s2).at(t2));
        if (s1 == s2 && pool == 0) {
            ++pair.skipped;
            continue;
        }
        pair.record(distance(z, w) - std::abs(t2 - t1), 1e-9,
               "s=" + fmt(s1) + "," + fmt(s2) + " t=" + fmt(t1) + "," + fmt(t2));
    }
    report.batteries.push_back(pair);

    LemmaBattery cross;
    cross.name = "arcs crossing a flute pay the depth gap";
    for (int i = 0; i < trials; ++i, ++cross.trials) {
        if (group.flutes.empty()) {
            ++cross.skipped;
            continue;
        }
        const FluteRealization& fr =
            group.flutes[std::uniform_int_distribution<size_t>(0, group.flutes.size() - 1)(rng)];
        const size_t j = std::uniform_int_distribution<size_t>(0, fr.chain.gammas.size() - 1)(rng);
        const double t1 = uniform(0.0, 6.0), t2 = uniform(0.0, 6.0);
        const Geodesic& gamma = fr.chain.gammas[j];
        const HPoint A = make_point(0.0, std::exp(t1));
        const HPoint C = apply(reflect_in(gamma), make_point(0.0, std::exp(t2)));
        const auto B = intersect(geodesic_between(A, C), gamma);
        if (!B) {
            ++cross.skipped;
            continue;
        }
        const double k = std::exp(std::asinh(std::abs(B->x) / B->y));
        cross.record(distance(A, C) - std::abs(t2 - t1) - 2.0 * log_cosh_bound(k), 1e-6,
               "flute=" + std::to_string(fr.interval_index) + " j=" + std::to_string(j) + " t=" + fmt(t1) + "," +
                   fmt(t2) + " k=" + fmt(k));
    }
    report.batteries.push_back(cross);
    return report;
}

}  // namespace quilt
