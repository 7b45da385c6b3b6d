// Compares the serial reference kernels against the OpenMP ones and checks
// that both produce bit-identical fields.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "ade/engine2d.hpp"
#include "ade/fractional.hpp"
#include "ade/parallel.hpp"
#include "ade/rng.hpp"
#include "ade/solvers.hpp"

using namespace ade;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

bool bits_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

void report(const char* name, double serial_s, double omp_s, bool identical) {
    std::printf("%-28s %10.3f ms %10.3f ms   x%.2f   %s\n", name, serial_s * 1e3, omp_s * 1e3,
                serial_s / omp_s, identical ? "bit-identical" : "MISMATCH");
}

void bench_heat_step(int cells, int reps) {
    const Grid2D grid = Grid2D::square(0.0, 1.0, cells);
    Field2D u(grid);
    for (std::size_t k = 0; k < u.v.size(); ++k) u.v[k] = uniform_sym(7, k, 1.0);
    const std::vector<double> b(grid.nodes(), 0.25);
    const Boundary2D bc = Boundary2D::zero_dirichlet();
    const double dt = 0.5 * grid.dx * grid.dx * 10.0;

    Field2D out_serial = u, out_omp = u;
    const auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r)
        out_serial = ade_step_2d(out_serial, bc, b, dt, 1.0, 0.0, dt, Exec::Serial);
    const double ts = seconds_since(t0);
    const auto t1 = clock_type::now();
    for (int r = 0; r < reps; ++r)
        out_omp = ade_step_2d(out_omp, bc, b, dt, 1.0, 0.0, dt, Exec::OpenMP);
    const double tp = seconds_since(t1);
    char name[64];
    std::snprintf(name, sizeof(name), "ade_step_2d %dx%d x%d", cells, cells, reps);
    report(name, ts, tp, bits_equal(out_serial.v, out_omp.v));
}

void bench_gl_history(int cells, int depth, int reps) {
    const std::size_t nodes = static_cast<std::size_t>((cells + 1) * (cells + 1));
    const GlKernel kernel(0.92, depth, depth, 0.0);
    HistoryBuffer hist(nodes, depth);
    std::vector<double> level(nodes);
    for (int d = 0; d < depth; ++d) {
        for (std::size_t k = 0; k < nodes; ++k)
            level[k] = uniform_sym(11, static_cast<std::uint64_t>(d) * nodes + k, 1.0);
        hist.push(level);
    }
    const std::vector<double> u0(nodes, 0.01);
    std::vector<double> out_serial(nodes), out_omp(nodes);

    const auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) gl_history_sum(hist, u0, kernel, 0.08, out_serial, Exec::Serial);
    const double ts = seconds_since(t0);
    const auto t1 = clock_type::now();
    for (int r = 0; r < reps; ++r) gl_history_sum(hist, u0, kernel, 0.08, out_omp, Exec::OpenMP);
    const double tp = seconds_since(t1);
    char name[64];
    std::snprintf(name, sizeof(name), "gl_history %dx%d depth %d", cells, cells, depth);
    report(name, ts / reps, tp / reps, bits_equal(out_serial, out_omp));
}

void bench_turing(int cells, int steps) {
    TuringProblem prob;
    prob.grid = Grid2D::square(0.0, cells, cells);
    prob.time = TimeAxis(0.08 * steps, steps);
    prob.seed = 3;

    TuringProblem serial = prob;
    serial.exec = Exec::Serial;
    TuringSolver a(serial);
    const auto t0 = clock_type::now();
    for (int n = 0; n < steps; ++n) a.step();
    const double ts = seconds_since(t0);

    prob.exec = Exec::OpenMP;
    TuringSolver b(prob);
    const auto t1 = clock_type::now();
    for (int n = 0; n < steps; ++n) b.step();
    const double tp = seconds_since(t1);
    char name[64];
    std::snprintf(name, sizeof(name), "turing %dx%d x%d", cells + 1, cells + 1, steps);
    report(name, ts, tp, bits_equal(a.u().v, b.u().v) && bits_equal(a.v().v, b.v().v));
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", max_threads());
    std::printf("%-28s %13s %13s %7s\n", "kernel", "serial", "openmp", "speedup");
    bench_heat_step(192, 20);
    bench_gl_history(99, 800, 50);
    bench_turing(63, 300);
    return 0;
}
