#pragma once

#include "quilt/quilt_model.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace quilt {

enum ExitCode : int { kExitOk = 0, kExitAssertion = 2, kExitUsage = 3, kExitResource = 4 };

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;

    std::string set_kind = "points";  // points | cantor | annulus
    std::vector<Component> components{{0, 0}, {1, 1}, {3, 3}};
    int cantor_stage = 2;
    double a = 0.69314718055994531;
    int depth = 3;
    int word_ball = 10;
    double prune_radius = 9.0;
    bool theoremC = false;

    std::vector<int> schedule{6, 8, 10};

    std::string ray = "all";  // all | sigma | delta-s | delta-l | custom
    double position = 0.0;
    std::vector<double> probes{1.15, 1.7};
    double step = 0.5;
    double t_max = 8.0;
    double epsilon = 0.1;

    std::uint64_t seed = 1;
    int trials = 10000;
    std::optional<double> tolerance;

    int threads = 1;
    std::string out_dir = ".";
};

// Reads a JSON config; unknown keys and wrong types are errors.
RunConfig load_config(const std::string& path, RunConfig base = {});
QuiltSpec spec_from_config(const RunConfig& cfg);

// Runs one subcommand, writing report.json and figure.svg into cfg.out_dir.
int run_command(const RunConfig& cfg, std::ostream& log);

// Full command line entry point.
int run_cli(int argc, char** argv);

}  // namespace quilt
