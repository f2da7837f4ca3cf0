#pragma once

#include "quilt/group.hpp"
#include "quilt/hyperbolic.hpp"
#include "quilt/quilt_model.hpp"

#include <string>
#include <vector>

namespace quilt {

// Arc of R u {inf} traversed upward from lo to hi, passing through inf when lo > hi.
// Shadows are open arcs; boundary components are closed and may be single points.
struct IdealInterval {
    IdealPoint lo;
    IdealPoint hi;
    bool full = false;  // the whole circle

    static IdealInterval between(double lo, double hi) { return {IdealPoint::at(lo), IdealPoint::at(hi), false}; }
    static IdealInterval whole() { return {IdealPoint::infinity(), IdealPoint::infinity(), true}; }

    bool is_point() const;
    bool wraps() const;  // inf lies strictly inside
    bool contains(double x, double tol = 1e-12) const;  // as a closed set
    bool contains_infinity() const;
    double measure() const;  // Lebesgue measure of the finite part
};

struct ParabolicPoint {
    double point = 0.0;
    double gap = 0.0;  // distance to the nearest other boundary material
};

struct DirichletApprox {
    HPoint center;
    std::vector<HalfPlane> halfplanes;
    std::vector<IdealInterval> shadows;
    std::vector<IdealInterval> boundary;
    std::vector<ParabolicPoint> parabolics;
    int ball_param = 0;
    std::string warning;

    bool boundary_contains(double x, double tol = 1e-12) const;
    bool boundary_contains_infinity() const;
    // Lebesgue measure of boundary n [lo, hi].
    double measure_in(double lo, double hi) const;
};

HalfPlane bisector_halfplane(const HPoint& center, const Isometry& g);
IdealInterval shadow(const HalfPlane& hp);

DirichletApprox boundary_at_infinity(const HPoint& center, const std::vector<Element>& elements, int ball_param = 0);

std::vector<ParabolicPoint> detect_parabolic_boundary(const std::vector<Element>& elements, const IdealInterval& window,
                                                      const DirichletApprox& approx);

// Every component of inner lies inside a component of outer.
bool boundary_contained(const DirichletApprox& inner, const DirichletApprox& outer, double tol = 1e-12);

struct CStarStatus {
    double lo = 0.0, hi = 0.0;
    bool contained = false;
};

struct PredictionStage {
    int word_length = 0;
    std::size_t elements = 0;
    std::vector<CStarStatus> cstar;
    bool all_cstar_contained = false;
    double hausdorff = 0.0;       // sup distance from boundary n [1, e^a] to C*, parabolic points excluded
    double excess_measure = 0.0;  // measure of (boundary n [1, e^a]) minus C*
    double negative_measure = 0.0;  // measure of boundary n [-e^a, -1]
    bool negative_interval_exact = false;  // [-e^a, -1] is a boundary component to 1e-10
    std::size_t parabolic_count = 0;
    double min_parabolic_gap = 0.0;
    bool contained_in_previous = true;
};

struct PredictionReport {
    bool has_cstar = false;
    bool theoremC = false;
    std::vector<PredictionStage> stages;
    bool monotone = true;
    bool excess_nonincreasing = true;
    bool hausdorff_nonincreasing = true;
    bool cstar_always_contained = true;
    bool negative_interval_ok = true;  // present exactly without the disc, below tolerance with it
    double negative_tolerance = 0.05;
};

// Restricts the group's ball to word lengths in the schedule, computes each boundary, and
// compares with the predicted structure.
PredictionReport compare_to_prediction(const GroupApprox& group, const QuiltSpec& spec, const std::vector<int>& schedule,
                                       std::vector<DirichletApprox>* approxes = nullptr);

std::vector<Element> truncate_ball(const std::vector<Element>& elements, int word_length);

std::string render_svg(const DirichletApprox& approx, const QuiltSpec& spec, std::size_t max_arcs = 400);

}  // namespace quilt
