#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quilt {

struct LemmaBattery {
    std::string name;
    int trials = 0;
    int passed = 0;
    int skipped = 0;
    double worst_slack = 0.0;
    std::vector<std::string> failures;  // witness data for violated instances

    bool ok() const { return failures.empty() && passed > 0; }
    // Counts a trial; passes when slack > -tol.
    void record(double slack, double tol, const std::string& witness);
};

struct BatteryOptions {
    int trials = 10000;
    std::uint64_t seed = 1;
    std::optional<double> tolerance;  // replaces every closed-form comparison tolerance
};

// Closed-form against metric oracles: distance kernel, right-triangle gap, quadrilateral
// defect and the two-sided detour slack.
std::vector<LemmaBattery> lemma_batteries(const BatteryOptions& opt);

}  // namespace quilt
