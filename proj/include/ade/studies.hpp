#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ade/config.hpp"
#include "ade/report.hpp"

namespace ade {

// Resolved per-rung run parameters after applying the preset conventions
// (spatial label -> cells = label-1; 1D time label -> 2N steps).
struct RungParams {
    long long cells = 0;
    long long steps = 0;
    double final_time = 0.0;
};

// Expected convergence rates under this project's norms, used by
// --assert-rates when the requested ladder matches the preset one.
struct RateReference {
    std::vector<long long> ladder;
    std::vector<double> l2_rates;
    std::vector<double> linf_rates;
    double tol = 0.15;
};

struct ExperimentPreset {
    std::string name;
    bool has_exact = false;      // convergence mode available
    bool two_d = false;
    long long default_m = 0;     // grid points per axis
    long long default_n = 0;     // time levels
    double default_T = 0.0;
    int default_J = 0;
    RateReference time_ref;      // vary = time
    RateReference space_ref;     // vary = space (empty ladder = last-rate-vs-2 check)
};

const ExperimentPreset& experiment_preset(const std::string& name);  // throws on unknown

// Fill unset RunConfig fields from the preset (ladder, M, N, T, J, ...).
void apply_defaults(RunConfig& cfg);

RungParams rung_params(const RunConfig& cfg, long long label);

// Run the resolution ladder, compare against the exact solution at t = T,
// fill the rate columns. Throws std::invalid_argument for experiments
// without an exact solution (turing) and on malformed ladders.
ErrorReport run_convergence_study(const RunConfig& cfg);

// Check a report's rates against the preset reference (both norm columns).
// Returns an empty optional on success, else a message describing the first
// violation.
std::optional<std::string> check_rates(const RunConfig& cfg, const ErrorReport& report);

struct SimResult {
    bool completed = false;
    int failed_step = -1;
    std::string error;
    std::vector<std::string> snapshot_files;
    std::string trace_file;
};

// March one configuration to t = T, writing snapshots, a statistics trace
// and the effective config into cfg.out_dir. On divergence the partial
// outputs stay on disk next to an `error.txt` record.
SimResult run_simulation(const RunConfig& cfg);

}  // namespace ade
