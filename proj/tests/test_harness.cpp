#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "modspace/harness.hpp"

using namespace modspace;
using nlohmann::json;
namespace fs = std::filesystem;

TEST_SUITE("harness") {

TEST_CASE("config parsing: defaults, overrides, and schema errors") {
    ExperimentConfig cfg = config_from_json(json{{"experiment", "young-fuzz"}});
    CHECK(cfg.experiment == "young-fuzz");
    CHECK(cfg.d == 1);
    CHECK(cfg.L == 16);
    CHECK(cfg.n == 32);
    CHECK(cfg.sigma == 2.0);
    CHECK(cfg.trials == 0);
    CHECK(cfg.seed == 1);

    ExperimentConfig full = config_from_json(json{
        {"experiment", "gabor-roundtrip"},
        {"grid", {{"d", 1}, {"L", 8}, {"n", 16}}},
        {"sigma", 3.0},
        {"trials", 5},
        {"seed", 99},
        {"csv", "out.csv"},
        {"summary", "out.json"}});
    CHECK(full.L == 8);
    CHECK(full.n == 16);
    CHECK(full.sigma == 3.0);
    CHECK(full.trials == 5);
    CHECK(full.seed == 99);
    CHECK(full.out_csv == "out.csv");
    CHECK(full.out_json == "out.json");

    CHECK_THROWS(config_from_json(json::array()));
    CHECK_THROWS(config_from_json(json{{"experiment", "no-such-experiment"}}));
    CHECK_THROWS(config_from_json(json{{"trials", 10}}));  // experiment missing
    CHECK_THROWS(config_from_json(json{{"experiment", "young-fuzz"}, {"trials", -1}}));
    CHECK_THROWS(config_from_json(json{{"experiment", "young-fuzz"}, {"tolerance", -0.5}}));
    CHECK_THROWS(config_from_json(
        json{{"experiment", "young-fuzz"}, {"grid", {{"L", 7}}}}));  // odd period
    CHECK_THROWS(config_from_json(
        json{{"experiment", "young-fuzz"}, {"grid", {{"n", 12}}}}));  // not a power of two
}

TEST_CASE("catalog names every experiment with its mathematical anchor") {
    const std::vector<CatalogEntry>& cat = experiment_catalog();
    CHECK(cat.size() == 7);
    bool mb = false, yf = false;
    for (const CatalogEntry& e : cat) {
        CHECK(!e.name.empty());
        CHECK(!e.anchor.empty());
        CHECK(!e.summary.empty());
        // every catalog name is accepted by the config parser
        config_from_json(json{{"experiment", e.name}});
        if (e.name == "multiplier-bound") {
            mb = true;
            CHECK(e.anchor.find("2.1") != std::string::npos);
        }
        if (e.name == "young-fuzz") {
            yf = true;
            CHECK(e.anchor.find("Young") != std::string::npos);
        }
    }
    CHECK(mb);
    CHECK(yf);
}

TEST_CASE("repeat runs of one config are byte-identical; seeds matter") {
    ExperimentConfig cfg = config_from_json(
        json{{"experiment", "young-fuzz"}, {"trials", 40}, {"seed", 12}});
    ExperimentResult a = run_experiment(cfg);
    ExperimentResult b = run_experiment(cfg);
    CHECK(a.csv() == b.csv());
    CHECK(a.pass == b.pass);
    CHECK(a.worst_ratio == b.worst_ratio);
    CHECK(a.rows.size() == 40);

    ExperimentConfig other = config_from_json(
        json{{"experiment", "young-fuzz"}, {"trials", 40}, {"seed", 13}});
    CHECK(run_experiment(other).csv() != a.csv());
}

TEST_CASE("a small reconstruction run passes well inside tolerance") {
    ExperimentConfig cfg = config_from_json(json{
        {"experiment", "gabor-roundtrip"}, {"grid", {{"L", 8}, {"n", 16}}}, {"trials", 3}});
    ExperimentResult res = run_experiment(cfg);
    CHECK(res.pass);
    CHECK(res.worst_ratio < 1e-9);
    CHECK(res.rows.size() == 3);
    CHECK(res.csv().substr(0, res.csv_header.size()) == res.csv_header);

    ExperimentConfig bogus = cfg;
    bogus.experiment = "no-such-experiment";
    CHECK_THROWS(run_experiment(bogus));
}

TEST_CASE("report files land where the config points") {
    std::string csv_path = (fs::temp_directory_path() / "msk_harness_out.csv").string();
    std::string json_path = (fs::temp_directory_path() / "msk_harness_out.json").string();
    ExperimentConfig cfg = config_from_json(json{{"experiment", "young-fuzz"},
                                                 {"trials", 10},
                                                 {"seed", 3},
                                                 {"csv", csv_path},
                                                 {"summary", json_path}});
    ExperimentResult res = run_experiment(cfg);
    write_reports(cfg, res);

    std::ifstream is(csv_path);
    REQUIRE(is.is_open());
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    CHECK(text == res.csv());

    std::ifstream js(json_path);
    REQUIRE(js.is_open());
    json summary = json::parse(js);
    CHECK(summary.at("experiment") == "young-fuzz");
    CHECK(summary.at("pass") == res.pass);
    CHECK(summary.at("worst_ratio") == res.worst_ratio);
    CHECK(summary.contains("runtime_ms"));
}

}  // TEST_SUITE
