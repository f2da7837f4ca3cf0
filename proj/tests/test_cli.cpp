#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quilt/cli.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace quilt;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / "quilt_cli_tests" / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

RunConfig config(const std::string& command, const std::string& dir) {
    RunConfig c;
    c.command = command;
    c.out_dir = scratch(dir).string();
    return c;
}

int run(const RunConfig& c) {
    std::ostringstream log;
    return run_command(c, log);
}

nlohmann::json report(const RunConfig& c) { return nlohmann::json::parse(slurp(fs::path(c.out_dir) / "report.json")); }

fs::path write_config(const std::string& name, const std::string& text) {
    const fs::path p = scratch("configs") / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("verify-lemmas passes quickly and fails under a tampered tolerance") {
    RunConfig c = config("verify-lemmas", "lemmas");
    c.trials = 10;
    CHECK(run(c) == kExitOk);
    const auto r = report(c);
    CHECK(r["schema"] == 1);
    CHECK(r["passed"] == true);
    c.tolerance = 1e-15;
    c.trials = 2000;
    CHECK(run(c) == kExitAssertion);
    CHECK(report(c)["passed"] == false);
}

TEST_CASE("dirichlet on the annulus reports the exact boundary") {
    RunConfig c = config("dirichlet", "annulus");
    c.set_kind = "annulus";
    CHECK(run(c) == kExitOk);
    const auto stages = report(c)["result"]["stages"];
    REQUIRE(stages.size() == 3);
    const auto b = stages.back()["boundary"];
    REQUIRE(b.size() == 2);
    CHECK(std::abs(b[0][0].get<double>() + 2.0) < 1e-10);
    CHECK(std::abs(b[1][1].get<double>() - 2.0) < 1e-10);
    CHECK(fs::file_size(fs::path(c.out_dir) / "figure.svg") > 100);
}

TEST_CASE("theoremC flips the negative interval assertion") {
    RunConfig c = config("dirichlet", "theoremC");
    c.a = 0.5;
    c.theoremC = true;
    CHECK(run(c) == kExitOk);
    CHECK(report(c)["result"]["stages"].back()["negative_measure"].get<double>() < 0.05);
    c.theoremC = false;
    CHECK(run(c) == kExitOk);
    CHECK(report(c)["result"]["stages"].back()["negative_interval_exact"] == true);
}

TEST_CASE("cantor stage two converges monotonically") {
    RunConfig c = config("dirichlet", "cantor");
    c.set_kind = "cantor";
    c.cantor_stage = 2;
    c.word_ball = 8;
    c.schedule = {4, 6, 8};
    CHECK(run(c) == kExitOk);
    CHECK(report(c)["result"]["monotone"] == true);
}

TEST_CASE("ray and sigma-scan on the shipped spec") {
    RunConfig c = config("ray", "ray");
    c.threads = 3;
    CHECK(run(c) == kExitOk);
    const auto profiles = report(c)["result"]["profiles"];
    CHECK(profiles.size() == 8);  // two positions with three rays each, plus two probes
    c.ray = "custom";
    c.probes = {1.7};
    CHECK(run(c) == kExitOk);
    CHECK(report(c)["result"]["profiles"][0]["verdict"] != "critical-consistent");

    RunConfig s = config("sigma-scan", "scan");
    CHECK(run(s) == kExitOk);
    for (const auto& scan : report(s)["result"]["scans"]) CHECK(scan["t_epsilon"].get<double>() <= 8.0);
}

TEST_CASE("configuration errors exit with the usage code") {
    RunConfig c = config("dirichlet", "bad");
    c.a = 1.5;
    CHECK(run(c) == kExitUsage);
    c = config("dirichlet", "bad");
    c.theoremC = true;
    c.a = 0.95;
    CHECK(run(c) == kExitUsage);
    c = config("nonsense", "bad");
    CHECK(run(c) == kExitUsage);
    c = config("ray", "bad");
    c.ray = "sideways";
    CHECK(run(c) == kExitUsage);
    CHECK_THROWS_AS(load_config(write_config("typo.json", R"({"depht": 3})").string()), ConfigError);
    CHECK_THROWS_AS(load_config(write_config("broken.json", "{").string()), ConfigError);
    const RunConfig loaded = load_config(write_config("ok.json", R"({"a": 0.5, "set": {"kind": "points", "components": [0, [1, 2]]}})").string());
    CHECK(loaded.a == 0.5);
    REQUIRE(loaded.components.size() == 2);
    CHECK(loaded.components[1].hi == 2.0);
}

TEST_CASE("exceeding the element cap exits with the resource code") {
    RunConfig c = config("build", "cap");
    c.word_ball = 30;
    c.prune_radius = 1e6;
    CHECK(run(c) == kExitResource);
}

TEST_CASE("identical runs give byte-identical reports") {
    RunConfig a = config("verify-lemmas", "det_a"), b = config("verify-lemmas", "det_b");
    a.trials = b.trials = 500;
    a.seed = b.seed = 42;
    b.threads = 4;
    REQUIRE(run(a) == kExitOk);
    REQUIRE(run(b) == kExitOk);
    CHECK(slurp(fs::path(a.out_dir) / "report.json") == slurp(fs::path(b.out_dir) / "report.json"));
    a.command = b.command = "ray";
    REQUIRE(run(a) == kExitOk);
    REQUIRE(run(b) == kExitOk);
    CHECK(slurp(fs::path(a.out_dir) / "report.json") == slurp(fs::path(b.out_dir) / "report.json"));
    CHECK(slurp(fs::path(a.out_dir) / "figure.svg") == slurp(fs::path(b.out_dir) / "figure.svg"));
}
