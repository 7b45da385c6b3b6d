#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace ade {

// Benchmark run description. Serializes to plain `key = value` lines with
// `#` comments; every run writes its effective config next to its outputs.
//
// Resolution labels follow the benchmark presets: a spatial label M means M
// grid points per axis (M-1 cells), and the 1D heat presets take two solver
// steps per reported time level (dt = T/(2N)); 2D presets use dt = T/N.
struct RunConfig {
    std::string experiment;  // heat1d-dirichlet | heat2d-dirichlet | heat1d-neumann |
                             // dist-order | turing
    long long m = 0;         // grid points per axis (0 = preset default)
    long long n = 0;         // time levels (0 = preset default)
    double final_time = 0.0;       // T (0 = preset default)
    int quad_intervals = 0;        // J, distributed order (0 = preset default)
    std::vector<long long> ladder; // resolution labels for convergence mode
    std::string vary = "time";     // which label the ladder varies: time | space
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    int snapshot_every = 0;
    std::vector<long long> snapshot_steps;
    bool paper_exact = false;   // restore the expensive preset resolutions
    bool assert_rates = false;  // nonzero exit when rates leave the expected band
    int gl_max_terms = 800;
    double gl_drop_tol = 1e-7;
    double noise_amp = 0.1;
    double r1 = -1.0;  // < 0 = preset default
    double r2 = -1.0;
    int threads = 0;   // 0 = all cores; 1 = serial reference kernels
    int trace_every = 0;  // 0 = preset default

    std::string to_key_values() const;
    static RunConfig from_key_values(const std::string& text);  // throws on bad input

    bool is_turing() const { return experiment == "turing"; }
};

const std::vector<std::string>& known_experiments();

}  // namespace ade
