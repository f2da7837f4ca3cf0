#pragma once

#include "quilt/hyperbolic.hpp"
#include "quilt/quilt_model.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quilt {

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Half-flute realized between the boundary lift Vertical(0) and a tangent chain of semicircles.
struct ReflectionChain {
    Geodesic boundary_lift = Geodesic::vertical(0.0);
    std::vector<Geodesic> gammas;
    std::vector<double> lengths;
    std::vector<double> u, v;  // gamma_j has endpoints (u_j, v_j)
};

ReflectionChain reflection_chain(const FluteSpec& spec);

// h_j = rho_beta rho_j, translating along the common perpendicular by l_j.
std::vector<Isometry> flute_loop_elements(const ReflectionChain& chain);
// P_j = rho_j rho_{j+1}, fixing the tangency point v_j.
std::vector<Isometry> flute_parabolics(const ReflectionChain& chain);

// Sends the unit semicircle to the imaginary axis with i -> i e^{s1}, the boundary lift to
// Semicircle(0, e^{s1}) and rho_0 of it to Semicircle(0, e^{s1 + l0}); the chain lands in Re z > 0.
Isometry align_map(const ReflectionChain& chain, const IntervalRec& interval, double s1);

struct Generator {
    std::string label;
    Isometry g;
};

struct Element {
    Isometry g;
    std::vector<int> word;  // letter 2k is generator k, 2k + 1 its inverse
    double displacement = 0.0;
};

struct BallResult {
    std::vector<Element> elements;  // nontrivial, sorted by (length, letters)
    double certified_radius = 0.0;
    bool pruned = false;
};

struct ResourceError : std::runtime_error {
    ResourceError(const std::string& what, std::size_t partial) : std::runtime_error(what), partial_size(partial) {}
    std::size_t partial_size;
};

inline constexpr std::size_t kDefaultBallCap = 200000;

BallResult enumerate_ball(const std::vector<Generator>& gens, int max_len, const HPoint& basepoint,
                          std::optional<double> prune_radius = std::nullopt,
                          std::size_t max_elements = kDefaultBallCap);

std::string word_string(const std::vector<Generator>& gens, const std::vector<int>& word);

// Open region swapped by a ping-pong letter. Inner and outer regions may use different radii
// on the two sides of the imaginary axis.
struct Region {
    enum class Kind { disc, inner, outer };

    Kind kind = Kind::disc;
    double center = 0.0;
    double radius = 1.0;
    double radius_neg = 1.0;  // inner/outer only: radius used where Re z < 0

    static Region disc(double center, double radius);
    static Region inner(double radius_pos, double radius_neg);
    static Region outer(double radius_pos, double radius_neg);

    bool contains(const HPoint& z) const;
    // Half-plane containing the region.
    HalfPlane hull() const;
};

struct PingPongLetter {
    std::string label;
    Isometry g;
    Region region;  // g maps the complement of its inverse's region into this one
};

// Letters come in inverse pairs (2k, 2k + 1).
struct PairingSystem {
    std::vector<PingPongLetter> letters;

    // Moves z into the common exterior of all regions; returns the point and the element used.
    std::pair<HPoint, Isometry> reduce(const HPoint& z) const;
};

struct FluteRealization {
    int interval_index = 0;
    double s1 = 0.0;
    ReflectionChain chain;
    Isometry align;
};

struct GroupApprox {
    std::vector<Generator> generators;
    BallResult ball;
    int word_ball = 0;
    double prune_radius = 0.0;
    HPoint basepoint;
    double a = 0.0;
    double base = 0.0;
    bool theoremC = false;
    std::vector<FluteRealization> flutes;
    PairingSystem pairing;

    double min_displacement() const;
};

GroupApprox assemble_group(const QuiltSpec& spec);
// Adds the twice-punctured disc on the Re z < 0 side; spec.theoremC must be set.
GroupApprox theoremC_extension(const QuiltSpec& spec);
// assemble_group or theoremC_extension depending on spec.theoremC.
GroupApprox build_group(const QuiltSpec& spec);

// Reflections in the three disc geodesics: c1 = Semicircle(0, e^{a/4}), c2 spanning
// (-e^{3a/4}, -e^{a/4}) and c3 = Semicircle(0, e^{3a/4}).
struct DiscGeodesics {
    Geodesic c1, c2, c3;
};
DiscGeodesics disc_geodesics(double a);

struct SearchResult {
    double value = 0.0;     // best found by the exhaustive search
    bool complete = false;  // false when the node cap was hit
    std::size_t nodes = 0;
};

// min over all group elements g of d(z, g w), by branch and bound over reduced ping-pong words.
SearchResult orbit_search(const PairingSystem& pairing, const HPoint& z, const HPoint& w,
                          std::size_t node_cap = 400000);

}  // namespace quilt
