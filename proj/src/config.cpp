#include "ade/config.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ade {

const std::vector<std::string>& known_experiments() {
    static const std::vector<std::string> names = {"heat1d-dirichlet", "heat2d-dirichlet",
                                                   "heat1d-neumann", "dist-order", "turing"};
    return names;
}

namespace {

std::string join(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<long long> split_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string RunConfig::to_key_values() const {
    std::ostringstream out;
    out << "# ade-bench run configuration\n";
    out << "experiment = " << experiment << '\n';
    out << "m = " << m << '\n';
    out << "n = " << n << '\n';
    out << "T = " << final_time << '\n';
    out << "J = " << quad_intervals << '\n';
    out << "ladder = " << join(ladder) << '\n';
    out << "vary = " << vary << '\n';
    out << "seed = " << seed << '\n';
    out << "out = " << out_dir << '\n';
    out << "snapshots = " << snapshot_every << '\n';
    out << "snapshot_steps = " << join(snapshot_steps) << '\n';
    out << "paper_exact = " << (paper_exact ? 1 : 0) << '\n';
    out << "assert_rates = " << (assert_rates ? 1 : 0) << '\n';
    out << "gl_max_terms = " << gl_max_terms << '\n';
    out << "gl_drop_tol = " << gl_drop_tol << '\n';
    out << "noise_amp = " << noise_amp << '\n';
    out << "r1 = " << r1 << '\n';
    out << "r2 = " << r2 << '\n';
    out << "threads = " << threads << '\n';
    out << "trace_every = " << trace_every << '\n';
    return out.str();
}

RunConfig RunConfig::from_key_values(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        static const std::vector<std::string> keys = {
            "experiment", "m", "n", "T", "J", "ladder", "vary", "seed", "out", "snapshots",
            "snapshot_steps", "paper_exact", "assert_rates", "gl_max_terms", "gl_drop_tol",
            "noise_amp", "r1", "r2", "threads", "trace_every"};
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" +
                                        key + "'");
        try {
            if (key == "experiment") cfg.experiment = val;
            else if (key == "m") cfg.m = std::stoll(val);
            else if (key == "n") cfg.n = std::stoll(val);
            else if (key == "T") cfg.final_time = std::stod(val);
            else if (key == "J") cfg.quad_intervals = std::stoi(val);
            else if (key == "ladder") cfg.ladder = split_list(val);
            else if (key == "vary") cfg.vary = val;
            else if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "out") cfg.out_dir = val;
            else if (key == "snapshots") cfg.snapshot_every = std::stoi(val);
            else if (key == "snapshot_steps") cfg.snapshot_steps = split_list(val);
            else if (key == "paper_exact") cfg.paper_exact = std::stoi(val) != 0;
            else if (key == "assert_rates") cfg.assert_rates = std::stoi(val) != 0;
            else if (key == "gl_max_terms") cfg.gl_max_terms = std::stoi(val);
            else if (key == "gl_drop_tol") cfg.gl_drop_tol = std::stod(val);
            else if (key == "noise_amp") cfg.noise_amp = std::stod(val);
            else if (key == "r1") cfg.r1 = std::stod(val);
            else if (key == "r2") cfg.r2 = std::stod(val);
            else if (key == "threads") cfg.threads = std::stoi(val);
            else cfg.trace_every = std::stoi(val);
        } catch (const std::exception&) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad value for " +
                                        key);
        }
    }
    return cfg;
}

}  // namespace ade
