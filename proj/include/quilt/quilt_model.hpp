#pragma once

#include "quilt/hyperbolic.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace quilt {

struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Closed interval of R; a singleton when lo == hi.
struct Component {
    double lo = 0.0;
    double hi = 0.0;

    bool is_point() const { return lo == hi; }
};

struct CompactSet {
    std::vector<Component> parts;  // sorted, pairwise disjoint

    double min() const { return parts.front().lo; }
    double max() const { return parts.back().hi; }
    bool contains(double x, double tol = 1e-12) const;
};

CompactSet make_compact_set(std::vector<Component> parts);
CompactSet cantor_stage(int n, double lo = 0.0, double hi = 1.0);

// phi(z) = A z + B with phi(min K) = 1 and phi(max K) = e^a.
struct Normalization {
    double A = 1.0;
    double B = 0.0;
    CompactSet image;

    double apply(double x) const { return A * x + B; }
    double unapply(double y) const { return (y - B) / A; }
};

Normalization normalize_compact_set(const CompactSet& K, double a);

double lambda_map(double c_star, double a);
double lambda_inverse(double s);

// Closed arc of positions on a circle of circumference a; hi may pass a when the arc wraps past p.
struct Arc {
    double lo = 0.0;
    double hi = 0.0;
};

struct CircleSet {
    double circumference = 1.0;
    std::vector<Arc> arcs;  // sorted by lo, lo in [0, a)

    double arc_measure() const;
};

CircleSet make_circle_set(double a, std::vector<Arc> arcs);

struct IntervalRec {
    int index = 0;
    double start = 0.0;  // position of e1 in [0, a)
    double end = 0.0;    // position of e2 in [0, a)
    double length = 0.0;
};

std::vector<IntervalRec> complement_intervals(const CircleSet& cs);

// Lowest arc start; every interval lifts into [base, base + a].
double lift_base(const CircleSet& cs);
double lifted_start(const IntervalRec& rec, double base, double a);

// Lifts through every interval endpoint, as Semicircle(0, e^s) with s lifted into [base, base + a).
std::vector<Geodesic> scaffolding_lifts(const std::vector<IntervalRec>& intervals, double a, double base);

struct FluteSpec {
    double first_length = 0.0;
    double tail_length = 0.0;
    int depth = 1;  // number of realized gamma curves

    std::vector<double> lengths() const;
};

struct QuiltSpec {
    double a = 0.0;
    double basepoint = 0.0;
    CompactSet K;
    Normalization phi;
    CircleSet circle;
    std::vector<IntervalRec> intervals;
    std::vector<FluteSpec> flutes;
    int word_ball = 10;
    double prune_radius = 9.0;
    bool theoremC = false;

    double base() const { return lift_base(circle); }
    // Positions in [0, a) of all points and arc ends of C.
    std::vector<double> c_positions() const;
    // Normalized C* as components inside [1, e^a].
    const CompactSet& c_star() const { return phi.image; }
};

void validate(const QuiltSpec& spec);

QuiltSpec build_quilt_spec(const CompactSet& K, double a, int depth, int word_ball, bool theoremC,
                           double prune_radius = 9.0);

// Ring of positions only, without any flute data; used by the annulus case.
QuiltSpec annulus_spec(double a, int word_ball, double prune_radius = 9.0);

}  // namespace quilt
