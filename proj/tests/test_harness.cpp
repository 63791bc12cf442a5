#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "optia/error.hpp"
#include "optia/harness.hpp"
#include "optia/rng.hpp"

using namespace optia;

namespace {

ExperimentConfig small_experiment() {
    ExperimentConfig c;
    c.algorithm = default_config(AlgorithmId::OptIA);
    c.algorithm.params.mu = 2;
    c.algorithm.params.tau = 40;
    c.benchmark = BenchmarkSpec::jump(16, 3);
    c.budget = 20000;
    c.runs = 12;
    c.master_seed = 99;
    return c;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("a single run experiment matches a direct run") {
    auto c = small_experiment();
    c.runs = 1;
    const auto result = run_experiment(c);
    REQUIRE(result.records.size() == 1);
    CHECK(result.records[0] == run(c.algorithm, c.benchmark, c.budget, derive_seed(c.master_seed, 0)));
}

TEST_CASE("records follow run order and do not depend on parallelism") {
    auto c = small_experiment();
    const auto serial = run_experiment(c);
    for (std::size_t i = 0; i < serial.records.size(); ++i) CHECK(serial.records[i].seed == derive_seed(c.master_seed, i));
    c.parallelism = 4;
    const auto parallel = run_experiment(c);
    CHECK(serial.records == parallel.records);
    CHECK(to_json(serial) == to_json(parallel));
    CHECK(to_csv(serial.records) == to_csv(parallel.records));
}

TEST_CASE("JSON and CSV round trip") {
    auto c = small_experiment();
    c.algorithm.params.tau.reset();
    c.benchmark = BenchmarkSpec::simple_trap(20);
    c.runs = 5;
    auto result = run_experiment(c);
    const auto back = from_json(to_json(result));
    CHECK(back.records == result.records);
    CHECK(back.config.algorithm == result.config.algorithm);
    CHECK(back.config.benchmark == result.config.benchmark);
    CHECK(back.config.budget == c.budget);
    CHECK(back.config.master_seed == c.master_seed);
    CHECK(from_csv(to_csv(result.records)) == result.records);
    CHECK(to_json(back) == to_json(result));
    CHECK(to_json(result).find("\"inf\"") != std::string::npos);
}

TEST_CASE("the CSV has one header line and one line per run") {
    const auto result = run_experiment(small_experiment());
    const std::string csv = to_csv(result.records);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
    CHECK(csv.rfind("run_index,seed,success,evaluations_used,generations,best_fitness\n", 0) == 0);
}

TEST_CASE("files are written by extension and read back") {
    const auto dir = std::filesystem::temp_directory_path() / "optia_harness_test";
    std::filesystem::create_directories(dir);
    const auto result = run_experiment(small_experiment());
    save_results(result, dir / "r.json");
    save_results(result, dir / "r.csv");
    CHECK(load_results(dir / "r.json").records == result.records);
    CHECK(from_csv(slurp(dir / "r.csv")) == result.records);
    CHECK_THROWS_AS(save_results(result, dir / "r.txt"), std::exception);
    CHECK_THROWS_AS(load_results(dir / "missing.json"), std::runtime_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("malformed input is reported with its location") {
    const auto result = run_experiment(small_experiment());
    const std::string json = to_json(result);

    SUBCASE("truncated JSON") {
        try {
            from_json(json.substr(0, json.size() / 2));
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    }
    SUBCASE("a bad field names its path") {
        std::string broken = json;
        const auto at = broken.find("\"seed\"", broken.find("\"records\""));
        REQUIRE(at != std::string::npos);
        broken.replace(at, 6, "\"sead\"");
        try {
            from_json(broken);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("records[0]") != std::string::npos);
        }
    }
    SUBCASE("truncated CSV") {
        const std::string csv = to_csv(result.records);
        const std::string cut = csv.substr(0, csv.size() - 5);
        try {
            from_csv(cut);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 13") != std::string::npos);
        }
    }
    SUBCASE("wrong CSV header") {
        CHECK_THROWS_AS(from_csv("a,b\n"), ParseError);
    }
}

TEST_CASE("invalid experiments are rejected before running") {
    auto c = small_experiment();
    c.runs = 0;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = small_experiment();
    c.budget = 0;
    CHECK_THROWS_AS(run_experiment(c), ConfigError);
    c = small_experiment();
    c.parallelism = 0;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = small_experiment();
    c.benchmark = BenchmarkSpec::jump(4, 5);
    CHECK_THROWS_AS(run_experiment(c), ConfigError);
}

TEST_CASE("(1+1) IA with hypermutation solves OneMax on 50 bits in every run") {
    ExperimentConfig c;
    c.algorithm = default_config(AlgorithmId::OnePlusOneIAHyp);
    c.benchmark = BenchmarkSpec::onemax(50);
    c.budget = 10'000'000;
    c.runs = 100;
    c.master_seed = 5;
    c.parallelism = 4;
    for (const auto& r : run_experiment(c).records) CHECK(r.success);
}

TEST_CASE("the smallest experiment runs") {
    ExperimentConfig c;
    c.algorithm = default_config(AlgorithmId::RLS1);
    c.benchmark = BenchmarkSpec::onemax(1);
    c.budget = 1;
    c.runs = 1;
    const auto r = run_experiment(c);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].evaluations_used == 1);
}
