#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "ade/engine1d.hpp"
#include "ade/engine2d.hpp"
#include "ade/errors.hpp"
#include "ade/exact.hpp"
#include "ade/fractional.hpp"
#include "ade/grid.hpp"
#include "ade/parallel.hpp"

namespace ade {

// Worst Neumann closure residuals |p_1 - p_0| and |q_{M-1} - q_M| seen while
// marching; both sit at rounding level by construction.
struct SweepCheck1D {
    double max_left = 0.0;
    double max_right = 0.0;
};

class Heat1DSolver {
public:
    Heat1DSolver(const ExactSolution1D& ex, const Grid1D& grid, const TimeAxis& time);

    void step();  // throws DivergenceError if the field stops being finite
    int step_index() const { return n_; }
    const Field1D& field() const { return u_; }
    const TimeAxis& time() const { return time_; }
    const SweepCheck1D& check() const { return check_; }

private:
    const ExactSolution1D* ex_;
    TimeAxis time_;
    Field1D u_;
    SweepCheck1D check_;
    int n_ = 0;
};

class Heat2DSolver {
public:
    Heat2DSolver(const ExactSolution2D& ex, const Grid2D& grid, const TimeAxis& time,
                 Exec exec = Exec::OpenMP);

    void step();
    int step_index() const { return n_; }
    const Field2D& field() const { return u_; }
    const TimeAxis& time() const { return time_; }

private:
    const ExactSolution2D* ex_;
    TimeAxis time_;
    Exec exec_;
    Boundary2D bc_;
    EdgeValues2D bv_old_;
    std::vector<double> b_half_;
    Field2D u_;
    int n_ = 0;
};

// March to t = T.
Field1D run_heat1d(const ExactSolution1D& ex, const Grid1D& grid, const TimeAxis& time,
                   SweepCheck1D* check = nullptr);
Field2D run_heat2d(const ExactSolution2D& ex, const Grid2D& grid, const TimeAxis& time,
                   Exec exec = Exec::OpenMP);

// ---------------------------------------------------------------------------

// Distributed-order problem on a rectangle: zero initial data, Dirichlet
// data psi on the boundary, order density w on [1,2].
struct DistOrderProblem {
    Grid2D grid;
    TimeAxis time;
    int quad_intervals = 200;  // J
    std::function<double(double)> order_density;
    std::function<double(double, double, double)> source;    // F(x,y,t)
    std::function<double(double, double, double)> boundary;  // psi(x,y,t)
    Exec exec = Exec::OpenMP;
};

class DistOrderSolver {
public:
    explicit DistOrderSolver(DistOrderProblem p);

    void step();
    int step_index() const { return n_; }
    const Field2D& field() const { return u_; }
    Field2D& field() { return u_; }  // tests inject nonzero initial data
    const TimeAxis& time() const { return prob_.time; }

    // b-tilde for the step about to run: the history convolution plus the
    // source at the half level.
    std::vector<double> rhs_half(double t_half) const;

    const DistributedOrderKernel& kernel() const { return kernel_; }
    const HistoryBuffer& history() const { return history_; }
    const DistOrderProblem& problem() const { return prob_; }

private:
    DistOrderProblem prob_;
    DistributedOrderKernel kernel_;
    HistoryBuffer history_;  // delta_t u^{k+1/2} fields, newest first
    Field2D u_;
    int n_ = 0;
};

// ---------------------------------------------------------------------------

// Two-component activator-inhibitor system in a sub-diffusive regime, zero
// Neumann boundary, uniform noise around the zero fixed point.
struct TuringProblem {
    Grid2D grid;
    TimeAxis time;
    double alpha = 0.92, beta = 0.88;  // fractional orders of u and v
    double big_d = 0.516;              // D
    double delta = 2.0;
    double a11 = 0.899, a12 = 1.0, a21 = -0.899, a22 = -0.91;
    // r2 = 0 keeps the +/- symmetry that selects stripes over spots; the
    // cubic coefficient sets the saturated amplitude (~ 1/sqrt(r1))
    double r1 = 0.05, r2 = 0.0;
    double noise_amp = 0.1;
    std::uint64_t seed = 1;
    int gl_max_terms = 800;
    double gl_drop_tol = 1e-7;
    Exec exec = Exec::OpenMP;
};

class TuringSolver {
public:
    explicit TuringSolver(TuringProblem p);

    void step();
    int step_index() const { return n_; }
    const Field2D& u() const { return u_; }
    const Field2D& v() const { return v_; }
    Field2D& u() { return u_; }
    Field2D& v() { return v_; }
    const TimeAxis& time() const { return prob_.time; }
    const TuringProblem& problem() const { return prob_; }

private:
    Field2D component_step(const Field2D& s_old, const Field2D& s0, double order,
                           double diff_coeff, double self_coeff, const std::vector<double>& src);

    TuringProblem prob_;
    GlHistoryEngine engine_u_, engine_v_;
    Field2D u0_, v0_, u_, v_;
    std::vector<double> sum_u_, sum_v_, src_u_, src_v_;
    int n_ = 0;
};

// ---------------------------------------------------------------------------

struct ObserverConfig {
    int snapshot_every = 0;           // fire at n % k == 0, n > 0
    std::vector<int> snapshot_steps;  // explicit steps (may include 0)
    int trace_every = 1;              // <= 0 disables the trace
};

// March a solver N steps, firing callbacks snapshot(step) / trace(step).
// Deterministic for a fixed seed; propagates DivergenceError.
template <class Solver, class SnapFn, class TraceFn>
void run_to_final(Solver& solver, int n_steps, const ObserverConfig& obs, SnapFn&& snapshot,
                  TraceFn&& trace) {
    auto want_snapshot = [&obs](int step) {
        if (obs.snapshot_every > 0 && step > 0 && step % obs.snapshot_every == 0) return true;
        for (int s : obs.snapshot_steps)
            if (s == step) return true;
        return false;
    };
    if (want_snapshot(0)) snapshot(0);
    if (obs.trace_every > 0) trace(0);
    for (int n = 0; n < n_steps; ++n) {
        solver.step();
        const int done = n + 1;
        if (want_snapshot(done)) snapshot(done);
        if (obs.trace_every > 0 && (done % obs.trace_every == 0 || done == n_steps)) trace(done);
    }
}

// Spatial statistics over all grid nodes, sequential summation.
struct FieldStats {
    double mean = 0.0, stddev = 0.0, min = 0.0, max = 0.0;
};
FieldStats field_stats(const std::vector<double>& values);
inline FieldStats field_stats(const Field2D& f) { return field_stats(f.v); }
inline FieldStats field_stats(const Field1D& f) { return field_stats(f.v); }

}  // namespace ade
