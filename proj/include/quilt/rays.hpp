#pragma once

#include "quilt/batteries.hpp"
#include "quilt/group.hpp"
#include "quilt/hyperbolic.hpp"
#include "quilt/quilt_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quilt {

// Unit-speed geodesic ray from base toward an ideal endpoint.
struct RaySpec {
    std::string label;
    HPoint base;
    IdealPoint endpoint;

    HPoint at(double t) const;
};

struct SurfaceDistance {
    double value = 0.0;
    bool certified = false;
};

// Minimum over the ball of d(z, g w). Certified when an exhaustive branch-and-bound over the
// whole group confirms the minimum.
SurfaceDistance surface_distance(const HPoint& z, const HPoint& w, const GroupApprox& group);

// Ray from i e^s orthogonal to the imaginary axis, ending at e^s.
RaySpec sigma_ray(double s);

struct DeltaRays {
    RaySpec shorter;
    RaySpec longer;
};

// Rays from the basepoint to e^{s'} and e^{s' +- a}, where s' is the lift of the position
// nearest a/2; ties go to the smaller lift.
DeltaRays delta_c_rays(double c_position, double a);

enum class Verdict { critical, subcritical, horocyclic, inconclusive };
std::string to_string(Verdict v);

inline constexpr double kCriticalThreshold = 1e-4;
inline constexpr double kSubcriticalDrift = 1e-5;
inline constexpr double kHorocyclicCap = 5.0;

struct DeltaProfile {
    std::string label;
    std::vector<double> times;
    std::vector<double> deltas;
    std::vector<bool> certified;
    Verdict verdict = Verdict::inconclusive;
    bool monotone = true;  // nonnegative and nondecreasing to 1e-9

    std::size_t certified_count() const;
    double max_certified_delta() const;
};

// Delta(t) = t - d_S(ray(0), ray(t)).
DeltaProfile delta_profile(const RaySpec& ray, const std::vector<double>& times, const GroupApprox& group,
                           int threads = 1);

std::vector<double> uniform_times(double step, double t_max);

double scaffold_distance(const HPoint& z, const QuiltSpec& spec, const GroupApprox& group);

struct SigmaScan {
    std::string label;
    double epsilon = 0.0;
    std::optional<double> t_epsilon;  // empty when the trace does not settle below epsilon
    std::vector<double> times;
    std::vector<double> trace;
    bool tail_decreasing = false;  // over the last quartile of samples
};

SigmaScan theorem_sigma_scan(const RaySpec& ray, double epsilon, double t_max, const QuiltSpec& spec,
                             const GroupApprox& group, double step = 0.5, int threads = 1);

struct DistanceLemmaReport {
    std::vector<LemmaBattery> batteries;
    bool all_passed() const;
};

// (a) rays orthogonal to the core geodesic realize their distance to it; (b) arcs between two
// such rays are no shorter than the difference of heights; (c) arcs crossing a flute pay the
// extra 2 log((k^2 + 1) / 2k) where log k is the depth reached.
DistanceLemmaReport verify_distance_lemmas(const QuiltSpec& spec, const GroupApprox& group, int trials,
                                           std::uint64_t seed);

}  // namespace quilt
