#include "quilt/batteries.hpp"

#include "quilt/hyperbolic.hpp"
#include "quilt/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

namespace quilt {

namespace {

std::string fmt(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

}  // namespace

void LemmaBattery::record(double slack, double tol, const std::string& witness) {
    worst_slack = passed + static_cast<int>(failures.size()) == 0 ? slack : std::min(worst_slack, slack);
    if (slack > -tol) {
        ++passed;
    } else if (failures.size() < 20) {
        failures.push_back(witness + " slack=" + fmt(slack));
    } else {
        failures.back() = "... further failures omitted";
    }
}

std::vector<LemmaBattery> lemma_batteries(const BatteryOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    auto tol = [&](double stated) { return opt.tolerance.value_or(stated); };
    auto point = [&] { return make_point(uniform(-5.0, 5.0), std::exp(uniform(-2.0, 2.0))); };
    std::vector<LemmaBattery> out;

    LemmaBattery dist;
    dist.name = "distance kernel";
    for (int i = 0; i < opt.trials; ++i, ++dist.trials) {
        const HPoint z = point(), w = point();
        const double err = std::abs(distance(z, w) - distance_cosh_form(z, w));
        dist.record(tol(1e-10) - err, 0.0, "z=" + fmt(z.x) + "," + fmt(z.y) + " w=" + fmt(w.x) + "," + fmt(w.y));
    }
    for (double a : {std::log(2.0), 0.5, 1.0}) {
        ++dist.trials;
        const double err = std::abs(distance({0, 1}, {0, std::exp(a)}) - a);
        dist.record(tol(1e-12) - err, 0.0, "vertical a=" + fmt(a));
    }
    out.push_back(dist);

    LemmaBattery tri;
    tri.name = "right triangle gap";
    for (int i = 0; i < opt.trials; ++i, ++tri.trials) {
        const double k = 1.0 + std::exp(uniform(-4.0, 3.0));
        const double t = uniform(1e-4, 1.0 - 1e-4);
        const double f = triangle_gap(k, t), lower = log_cosh_bound(k);
        const double margin = std::min({lower, f - lower, std::log(k) - f});
        const double err = std::abs(f - triangle_gap_metric(k, t));
        const std::string w = "k=" + fmt(k) + " t=" + fmt(t);
        if (!(margin > 0.0)) {
            tri.record(margin, 0.0, w + " chain");
            continue;
        }
        tri.record(tol(1e-9) - err, 0.0, w);
    }
    for (double k : {1.1, 2.0, 5.0, 40.0}) {
        tri.trials += 2;
        tri.record(tol(1e-6) - std::abs(triangle_gap(k, 1e-6) - log_cosh_bound(k)), 0.0, "t->0 k=" + fmt(k));
        tri.record(tol(1e-6) - std::abs(triangle_gap(k, 1.0 - 1e-13) - std::log(k)), 0.0, "t->1 k=" + fmt(k));
    }
    out.push_back(tri);

    LemmaBattery quad;
    quad.name = "quadrilateral defect";
    for (int i = 0; i < std::max(1, opt.trials / 10); ++i, ++quad.trials) {
        const double x0 = uniform(0.01, 0.99), r = std::exp(uniform(0.0, 3.0));
        const QuadSides c = quad_sides_closed(x0, r), m = quad_sides_metric(x0, r);
        const double err = std::max({std::abs(c.BD - m.BD), std::abs(c.AB - m.AB), std::abs(c.AC - m.AC),
                                     std::abs(c.CD - m.CD), std::abs(c.BD - std::log(r))});
        quad.record(tol(1e-10) - err, 0.0, "x0=" + fmt(x0) + " r=" + fmt(r));
        ++quad.trials;
        quad.record(tol(1e-10) - std::abs(quad_defect(x0, 1.0)), 0.0, "r=1 x0=" + fmt(x0));
    }
    for (double x0 : {0.1, 0.5, 0.9}) {
        for (int i = 1; i <= 100; ++i, ++quad.trials) {
            const double r = 1.0 + 0.05 * i;
            quad.record(quad_defect(x0, r), 0.0, "grid x0=" + fmt(x0) + " r=" + fmt(r));
        }
    }
    out.push_back(quad);

    LemmaBattery detour;
    detour.name = "two-sided detour";
    for (int i = 0; i < opt.trials; ++i, ++detour.trials) {
        const Geodesic gamma = uniform(0.0, 1.0) < 0.2 ? Geodesic::vertical(uniform(-3.0, 3.0))
                                                       : Geodesic::semicircle(uniform(-3.0, 3.0),
                                                                              std::exp(uniform(-1.5, 1.5)));
        const HPoint A = point_on(gamma, uniform(-4, 4));
        const HPoint C = point_on(gamma, uniform(-4, 4));
        const Geodesic perp = orthogonal_geodesic_at(gamma, uniform(-4, 4));
        const double off = uniform(0.01, 4.0) * (uniform(0, 1) < 0.5 ? -1.0 : 1.0);
        const HPoint E = foot_of_perpendicular(point_on(perp, 0.0), gamma);
        const HPoint B = point_on(perp, arclength_param(perp, E) + off);
        const double slack = detour_slack(A, C, B, gamma);
        detour.record(slack, 0.0, "off=" + fmt(off));
    }
    out.push_back(detour);
    return out;
}

}  // namespace quilt
