#include "ade/studies.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ade/norms.hpp"
#include "ade/report.hpp"
#include "ade/solvers.hpp"

namespace ade {

namespace {

// Expected rates under this project's norm conventions, measured on the
// preset ladders; see README for how resolution labels map to grids/steps.
const std::vector<ExperimentPreset>& presets() {
    static const std::vector<ExperimentPreset> all = [] {
        std::vector<ExperimentPreset> v;
        {
            ExperimentPreset p;
            p.name = "heat1d-dirichlet";
            p.has_exact = true;
            p.two_d = false;
            p.default_m = 100;
            p.default_n = 100000;
            p.default_T = 2.0;
            p.time_ref = {{20, 40, 80, 160}, {1.84, 1.96, 1.99}, {1.82, 1.95, 1.98}, 0.15};
            p.space_ref = {{10, 20, 40, 80}, {2.14, 2.07, 2.04}, {2.15, 2.07, 2.04}, 0.15};
            v.push_back(p);
        }
        {
            ExperimentPreset p;
            p.name = "heat2d-dirichlet";
            p.has_exact = true;
            p.two_d = true;
            p.default_m = 50;
            p.default_n = 20000;
            p.default_T = 1.0;
            p.time_ref = {{40, 80, 160, 320}, {1.57, 1.84, 2.02}, {1.58, 1.86, 2.01}, 0.15};
            p.space_ref = {{10, 20, 40, 80}, {2.14, 2.07, 2.04}, {2.10, 2.06, 2.04}, 0.15};
            v.push_back(p);
        }
        {
            ExperimentPreset p;
            p.name = "heat1d-neumann";
            p.has_exact = true;
            p.two_d = false;
            p.default_m = 1000;
            p.default_n = 100000;
            p.default_T = 2.0;
            p.time_ref = {{500, 1000, 2000, 4000}, {0.90, 1.71, 1.90}, {0.90, 1.70, 1.88}, 0.2};
            p.space_ref = {{10, 20, 40, 80}, {0.90, 0.96, 0.98}, {0.84, 0.94, 0.97}, 0.2};
            v.push_back(p);
        }
        {
            ExperimentPreset p;
            p.name = "dist-order";
            p.has_exact = true;
            p.two_d = true;
            p.default_m = 100;
            p.default_n = 80;
            p.default_T = 0.5;
            p.default_J = 200;
            p.time_ref = {{10, 20, 40, 80}, {1.76, 1.88, 1.94}, {1.76, 1.88, 1.95}, 0.15};
            v.push_back(p);
        }
        {
            ExperimentPreset p;
            p.name = "turing";
            p.has_exact = false;
            p.two_d = true;
            p.default_m = 100;
            p.default_n = 20000;
            p.default_T = 1600.0;  // dt = 0.08
            v.push_back(p);
        }
        return v;
    }();
    return all;
}

int steps_per_level(const ExperimentPreset& p) { return p.two_d ? 1 : 2; }

Exec exec_of(const RunConfig& cfg) { return cfg.threads == 1 ? Exec::Serial : Exec::OpenMP; }

struct RungErrors {
    double l2 = 0.0;
    double linf = 0.0;
};

RungErrors run_rung(const RunConfig& cfg, const RungParams& rp) {
    const std::string& name = cfg.experiment;
    const Exec exec = exec_of(cfg);
    const TimeAxis time(rp.final_time, static_cast<int>(rp.steps));
    RungErrors out;
    if (name == "heat1d-dirichlet" || name == "heat1d-neumann") {
        const ExactSolution1D& ex =
            name == "heat1d-neumann" ? exact_heat1d_neumann() : exact_heat1d_dirichlet();
        const Grid1D grid(ex.x_min, ex.x_max, static_cast<int>(rp.cells));
        const Field1D u = run_heat1d(ex, grid, time);
        Field1D err(grid);
        for (int i = 0; i <= grid.m; ++i) err[i] = u[i] - ex.u(grid.x(i), time.T);
        out.l2 = l2_norm(err);
        out.linf = linf_norm(err);
    } else if (name == "heat2d-dirichlet" || name == "dist-order") {
        const ExactSolution2D& ex =
            name == "dist-order" ? exact_distorder2d() : exact_heat2d_dirichlet();
        const Grid2D grid(ex.x_min, ex.x_max, ex.y_min, ex.y_max, static_cast<int>(rp.cells),
                          static_cast<int>(rp.cells));
        Field2D u;
        if (name == "dist-order") {
            DistOrderProblem prob{grid,     time,   cfg.quad_intervals, ex.order_density,
                                  ex.source, ex.psi, exec};
            DistOrderSolver solver(std::move(prob));
            while (solver.step_index() < time.steps) solver.step();
            u = solver.field();
        } else {
            u = run_heat2d(ex, grid, time, exec);
        }
        Field2D err(grid);
        for (int i = 0; i <= grid.m1; ++i)
            for (int j = 0; j <= grid.m2; ++j)
                err.at(i, j) = u.at(i, j) - ex.u(grid.x(i), grid.y(j), time.T);
        out.l2 = l2_norm(err);
        out.linf = linf_norm(err);
    } else {
        throw std::invalid_argument("experiment '" + name + "' has no exact solution; use the "
                                    "simulation mode (--snapshots / --snapshot-steps)");
    }
    return out;
}

}  // namespace

const ExperimentPreset& experiment_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown experiment '" + name + "'");
}

void apply_defaults(RunConfig& cfg) {
    const ExperimentPreset& p = experiment_preset(cfg.experiment);
    if (cfg.vary != "time" && cfg.vary != "space")
        throw std::invalid_argument("vary must be 'time' or 'space'");
    if (cfg.m <= 0) cfg.m = p.default_m;
    if (cfg.n <= 0) {
        cfg.n = p.default_n;
        if (cfg.experiment == "heat2d-dirichlet" && cfg.vary == "space" && cfg.paper_exact)
            cfg.n = 100000;
    }
    if (cfg.final_time <= 0)
        cfg.final_time = cfg.experiment == "heat1d-dirichlet" && cfg.vary == "space" ? 0.5
                                                                                     : p.default_T;
    if (cfg.quad_intervals <= 0) cfg.quad_intervals = p.default_J;
    if (cfg.ladder.empty() && p.has_exact)
        cfg.ladder = cfg.vary == "time" ? p.time_ref.ladder : p.space_ref.ladder;
    if (cfg.trace_every <= 0) cfg.trace_every = 100;
    if (cfg.r1 < 0) cfg.r1 = 0.05;
    if (cfg.r2 < 0) cfg.r2 = 0.0;
    if (cfg.m < 3) throw std::invalid_argument("m: need at least 3 grid points per axis");
    if (cfg.n < 1) throw std::invalid_argument("n: need at least one time level");
}

RungParams rung_params(const RunConfig& cfg, long long label) {
    const ExperimentPreset& p = experiment_preset(cfg.experiment);
    RungParams rp;
    rp.final_time = cfg.final_time;
    if (cfg.vary == "space") {
        if (label < 3) throw std::invalid_argument("space label must be at least 3 grid points");
        rp.cells = label - 1;
        rp.steps = cfg.n * steps_per_level(p);
    } else {
        if (label < 1) throw std::invalid_argument("time label must be positive");
        rp.cells = cfg.m - 1;
        rp.steps = label * steps_per_level(p);
    }
    return rp;
}

ErrorReport run_convergence_study(const RunConfig& raw) {
    RunConfig cfg = raw;
    apply_defaults(cfg);
    const ExperimentPreset& p = experiment_preset(cfg.experiment);
    if (!p.has_exact)
        throw std::invalid_argument("experiment '" + cfg.experiment + "' has no exact solution; "
                                    "use the simulation mode (--snapshots / --snapshot-steps)");
    if (cfg.ladder.empty()) throw std::invalid_argument("empty resolution ladder");
    for (std::size_t k = 0; k + 1 < cfg.ladder.size(); ++k)
        if (cfg.ladder[k + 1] != 2 * cfg.ladder[k])
            throw std::invalid_argument("ladder entries must double");
    if (cfg.threads > 1) set_threads(cfg.threads);

    const auto t0 = std::chrono::steady_clock::now();
    ErrorReport report;
    report.experiment = cfg.experiment;
    {
        std::ostringstream meta;
        meta << "vary=" << cfg.vary << " T=" << cfg.final_time;
        if (cfg.vary == "time")
            meta << " m=" << cfg.m;
        else
            meta << " n=" << cfg.n;
        if (cfg.experiment == "dist-order") meta << " J=" << cfg.quad_intervals;
        report.fixed_params = meta.str();
    }
    for (long long label : cfg.ladder) {
        const RungErrors e = run_rung(cfg, rung_params(cfg, label));
        report.rows.push_back({label, e.l2, e.linf, 0.0, 0.0});
    }
    compute_rates(report);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::optional<std::string> check_rates(const RunConfig& raw, const ErrorReport& report) {
    RunConfig cfg = raw;
    apply_defaults(cfg);
    const ExperimentPreset& p = experiment_preset(cfg.experiment);
    const RateReference& ref = cfg.vary == "time" ? p.time_ref : p.space_ref;
    if (ref.ladder.empty() || cfg.ladder != ref.ladder)
        return "no rate reference for this ladder; use the preset ladder with --assert-rates";
    char buf[160];
    for (std::size_t k = 1; k < report.rows.size(); ++k) {
        const double l2r = report.rows[k].l2_rate, lir = report.rows[k].linf_rate;
        const double el2 = ref.l2_rates[k - 1], eli = ref.linf_rates[k - 1];
        if (std::abs(l2r - el2) > ref.tol) {
            std::snprintf(buf, sizeof(buf), "l2 rate %.3f at resolution %lld outside %.2f +/- %.2f",
                          l2r, report.rows[k].resolution, el2, ref.tol);
            return std::string(buf);
        }
        if (std::abs(lir - eli) > ref.tol) {
            std::snprintf(buf, sizeof(buf),
                          "linf rate %.3f at resolution %lld outside %.2f +/- %.2f", lir,
                          report.rows[k].resolution, eli, ref.tol);
            return std::string(buf);
        }
    }
    return std::nullopt;
}

namespace {

std::string step_tag(int step) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%06d", step);
    return buf;
}

}  // namespace

SimResult run_simulation(const RunConfig& raw) {
    RunConfig cfg = raw;
    apply_defaults(cfg);
    const ExperimentPreset& preset = experiment_preset(cfg.experiment);
    if (cfg.threads > 1) set_threads(cfg.threads);

    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    {
        std::ofstream conf(fs::path(cfg.out_dir) / "config.txt", std::ios::binary);
        conf << cfg.to_key_values();
    }

    const Exec exec = exec_of(cfg);
    const int steps = static_cast<int>(cfg.n) * (preset.two_d ? 1 : 2);
    const TimeAxis time(cfg.final_time, steps);

    // Observer step counts refer to solver steps.
    ObserverConfig obs;
    obs.snapshot_every = cfg.snapshot_every;
    for (long long s : cfg.snapshot_steps) obs.snapshot_steps.push_back(static_cast<int>(s));
    if (obs.snapshot_every <= 0 && obs.snapshot_steps.empty()) obs.snapshot_every = steps;
    obs.trace_every = cfg.trace_every;

    SimResult result;
    const std::string trace_path = (fs::path(cfg.out_dir) / "trace.csv").string();
    std::ofstream trace(trace_path, std::ios::binary);
    result.trace_file = trace_path;

    auto finish = [&](int failed_step, const std::string& err) {
        result.completed = err.empty();
        result.failed_step = failed_step;
        result.error = err;
        if (!err.empty()) {
            std::ofstream rec(fs::path(cfg.out_dir) / "error.txt", std::ios::binary);
            rec << "failed_step = " << failed_step << "\nerror = " << err << '\n';
        }
    };

    try {
        if (cfg.experiment == "turing") {
            TuringProblem prob;
            prob.grid = Grid2D::square(0.0, static_cast<double>(cfg.m - 1),
                                       static_cast<int>(cfg.m - 1));
            prob.time = time;
            prob.r1 = cfg.r1;
            prob.r2 = cfg.r2;
            prob.noise_amp = cfg.noise_amp;
            prob.seed = cfg.seed;
            prob.gl_max_terms = cfg.gl_max_terms;
            prob.gl_drop_tol = cfg.gl_drop_tol;
            prob.exec = exec;
            TuringSolver solver(std::move(prob));
            trace << "step,t,u_mean,u_std,u_min,u_max,v_mean,v_std,v_min,v_max\n";
            run_to_final(
                solver, steps, obs,
                [&](int step) {
                    for (const char* comp : {"u", "v"}) {
                        const Field2D& f = comp[0] == 'u' ? solver.u() : solver.v();
                        const std::string path =
                            (fs::path(cfg.out_dir) / ("snap_" + std::string(comp) + "_" +
                                                      step_tag(step) + ".pgm"))
                                .string();
                        write_pgm(f, path);
                        result.snapshot_files.push_back(path);
                    }
                },
                [&](int step) {
                    const FieldStats us = field_stats(solver.u()), vs = field_stats(solver.v());
                    trace << step << ',' << format_sig(time.t(step)) << ',' << format_sig(us.mean)
                          << ',' << format_sig(us.stddev) << ',' << format_sig(us.min) << ','
                          << format_sig(us.max) << ',' << format_sig(vs.mean) << ','
                          << format_sig(vs.stddev) << ',' << format_sig(vs.min) << ','
                          << format_sig(vs.max) << '\n';
                });
        } else {
            trace << "step,t,u_mean,u_std,u_min,u_max\n";
            auto trace_row = [&](int step, const FieldStats& st) {
                trace << step << ',' << format_sig(time.t(step)) << ',' << format_sig(st.mean)
                      << ',' << format_sig(st.stddev) << ',' << format_sig(st.min) << ','
                      << format_sig(st.max) << '\n';
            };
            auto snap_path = [&](int step) {
                const std::string path =
                    (fs::path(cfg.out_dir) / ("snap_u_" + step_tag(step) + ".pgm")).string();
                result.snapshot_files.push_back(path);
                return path;
            };
            if (cfg.experiment == "heat1d-dirichlet" || cfg.experiment == "heat1d-neumann") {
                const ExactSolution1D& ex = cfg.experiment == "heat1d-neumann"
                                                ? exact_heat1d_neumann()
                                                : exact_heat1d_dirichlet();
                const Grid1D grid(ex.x_min, ex.x_max, static_cast<int>(cfg.m - 1));
                Heat1DSolver solver(ex, grid, time);
                run_to_final(
                    solver, steps, obs,
                    [&](int step) { write_pgm(solver.field(), snap_path(step)); },
                    [&](int step) { trace_row(step, field_stats(solver.field())); });
            } else if (cfg.experiment == "heat2d-dirichlet") {
                const ExactSolution2D& ex = exact_heat2d_dirichlet();
                const Grid2D grid(ex.x_min, ex.x_max, ex.y_min, ex.y_max,
                                  static_cast<int>(cfg.m - 1), static_cast<int>(cfg.m - 1));
                Heat2DSolver solver(ex, grid, time, exec);
                run_to_final(
                    solver, steps, obs,
                    [&](int step) { write_pgm(solver.field(), snap_path(step)); },
                    [&](int step) { trace_row(step, field_stats(solver.field())); });
            } else {
                const ExactSolution2D& ex = exact_distorder2d();
                const Grid2D grid(ex.x_min, ex.x_max, ex.y_min, ex.y_max,
                                  static_cast<int>(cfg.m - 1), static_cast<int>(cfg.m - 1));
                DistOrderProblem prob{grid,      time,   cfg.quad_intervals,
                                      ex.order_density, ex.source, ex.psi, exec};
                DistOrderSolver solver(std::move(prob));
                run_to_final(
                    solver, steps, obs,
                    [&](int step) { write_pgm(solver.field(), snap_path(step)); },
                    [&](int step) { trace_row(step, field_stats(solver.field())); });
            }
        }
        finish(-1, "");
    } catch (const DivergenceError& e) {
        finish(e.step(), e.what());
    }
    return result;
}

}  // namespace ade
