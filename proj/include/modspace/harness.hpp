// Experiment harness: runs the randomized verification suites behind the CLI
// and the acceptance gate.  Each experiment pins a theorem-shaped claim to a
// measurable quantity, writes one CSV row per trial (or per measured cell),
// and reduces to a single pass flag plus a worst-case ratio.
//
// Determinism contract: every random draw comes from a stream seeded by
// derive_seed(master_seed, trial_counter), trials are dispatched to a worker
// pool but rows are assembled into preallocated slots, and all floating
// point output is printed with shortest round-trip formatting - so parallel
// and serial runs of one config produce byte-identical reports.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modspace/util.hpp"

namespace modspace {

struct ExperimentConfig {
    std::string experiment;
    int d = 1;
    int L = 16;
    int n = 32;
    double sigma = 2.0;       // window regularity parameter
    int trials = 0;           // 0 -> per-experiment default
    std::uint64_t seed = 1;
    double tolerance = 0.0;   // 0 -> per-experiment default
    std::string out_csv;      // empty -> stdout only
    std::string out_json;     // empty -> no summary file
    nlohmann::json raw;       // full document, for experiment-specific knobs
};

// Parses and schema-checks a config document; unknown experiment names and
// ill-typed fields error out.
ExperimentConfig config_from_json(const nlohmann::json& doc);

struct ExperimentResult {
    std::string experiment;
    bool pass = false;
    double worst_ratio = 0.0;  // worst measured quantity, experiment-specific
    long runtime_ms = 0;
    std::string csv_header;
    std::vector<std::string> rows;

    std::string csv() const;            // header + rows, trailing newline
    nlohmann::json summary() const;     // {experiment, pass, worst_ratio, runtime_ms}
};

// Dispatches on cfg.experiment; internal certification failures inside a
// trial become failing rows rather than exceptions.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Writes result.csv() to cfg.out_csv and the summary to cfg.out_json when
// those paths are set.
void write_reports(const ExperimentConfig& cfg, const ExperimentResult& result);

struct CatalogEntry {
    std::string name;     // experiment id accepted by run_experiment
    std::string anchor;   // the claim it checks, e.g. "Thm 2.1/2.2"
    std::string summary;  // one-line description of the measurement
};

// Static catalog of all experiments with the claims they exercise.
const std::vector<CatalogEntry>& experiment_catalog();

}  // namespace modspace
