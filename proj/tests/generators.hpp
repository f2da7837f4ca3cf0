#pragma once

#include "quilt/hyperbolic.hpp"

#include <cmath>
#include <random>

namespace quilt::testgen {

// Deterministic samplers for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    HPoint point(double spread = 5.0) {
        return {uniform(-spread, spread), std::exp(uniform(-2.0, 2.0))};
    }

    // Random element of SL(2,R) with moderate entries.
    Isometry isometry(int orientation = 1) {
        const double a = uniform(-2.0, 2.0), b = uniform(-2.0, 2.0), c = uniform(-2.0, 2.0);
        double d;
        if (std::abs(a) > 0.2) {
            d = (1.0 + b * c) / a;
        } else {
            return Isometry::from(uniform(0.5, 2.0), b, 0.0, 1.0, orientation);
        }
        return Isometry::from(a, b, c, d, orientation);
    }

    Geodesic geodesic() {
        if (uniform(0.0, 1.0) < 0.2) return Geodesic::vertical(uniform(-3.0, 3.0));
        return Geodesic::semicircle(uniform(-3.0, 3.0), std::exp(uniform(-1.5, 1.5)));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace quilt::testgen
