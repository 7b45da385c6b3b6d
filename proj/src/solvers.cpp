#include "ade/solvers.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "ade/rng.hpp"

namespace ade {

Heat1DSolver::Heat1DSolver(const ExactSolution1D& ex, const Grid1D& grid, const TimeAxis& time)
    : ex_(&ex), time_(time), u_(Field1D::sample(grid, ex.initial)) {}

void Heat1DSolver::step() {
    if (n_ >= time_.steps) throw std::logic_error("heat1d: already at final time");
    const Grid1D& grid = u_.grid;
    AdeStepInput1D in;
    in.dt = time_.dt;
    in.bc = ex_->bc;
    in.b_half.resize(grid.nodes());
    const double t_half = time_.t_half(n_);
    for (int i = 0; i <= grid.m; ++i) in.b_half[i] = ex_->source(grid.x(i), t_half);
    if (ex_->bc == BcKind::TimeDirichlet) {
        in.f_old = ex_->f(time_.t(n_));
        in.f_new = ex_->f(time_.t(n_ + 1));
        in.g_old = ex_->g(time_.t(n_));
        in.g_new = ex_->g(time_.t(n_ + 1));
    }
    in.u_old = std::move(u_);
    AdeStepResult1D res = ade_step_1d_detailed(in);
    if (ex_->bc == BcKind::ZeroNeumann) {
        check_.max_left = std::max(check_.max_left, std::abs(res.p[1] - res.p[0]));
        check_.max_right = std::max(check_.max_right, std::abs(res.q[grid.m - 1] - res.q[grid.m]));
    }
    u_ = std::move(res.u);
    if (!u_.finite()) throw DivergenceError(n_ + 1, "heat1d: non-finite field");
    ++n_;
}

Heat2DSolver::Heat2DSolver(const ExactSolution2D& ex, const Grid2D& grid, const TimeAxis& time,
                           Exec exec)
    : ex_(&ex),
      time_(time),
      exec_(exec),
      bc_(ex.bc == BcKind::TimeDirichlet ? Boundary2D::time_dirichlet(ex.psi)
                                         : Boundary2D::zero_neumann()),
      b_half_(grid.nodes()),
      u_(Field2D::sample(grid, [&ex](double x, double y) { return ex.u(x, y, 0.0); })) {
    if (bc_.kind == BcKind::TimeDirichlet) bv_old_ = eval_boundary_2d(grid, bc_.data, 0.0);
}

void Heat2DSolver::step() {
    if (n_ >= time_.steps) throw std::logic_error("heat2d: already at final time");
    const Grid2D& grid = u_.grid;
    const double t_half = time_.t_half(n_);
    for (int i = 0; i <= grid.m1; ++i)
        for (int j = 0; j <= grid.m2; ++j)
            b_half_[u_.idx(i, j)] = ex_->source(grid.x(i), grid.y(j), t_half);
    const SweepEquation2D eq{1.0 / time_.dt, 1.0, 0.0, &u_, &b_half_};
    if (bc_.kind == BcKind::TimeDirichlet) {
        EdgeValues2D bv_new = eval_boundary_2d(grid, bc_.data, time_.t(n_ + 1));
        u_ = ade_step_2d_core(u_, bc_, eq, &bv_old_, &bv_new, exec_);
        bv_old_ = std::move(bv_new);
    } else {
        u_ = ade_step_2d_core(u_, bc_, eq, nullptr, nullptr, exec_);
    }
    if (!u_.finite()) throw DivergenceError(n_ + 1, "heat2d: non-finite field");
    ++n_;
}

Field1D run_heat1d(const ExactSolution1D& ex, const Grid1D& grid, const TimeAxis& time,
                   SweepCheck1D* check) {
    Heat1DSolver solver(ex, grid, time);
    while (solver.step_index() < time.steps) solver.step();
    if (check) *check = solver.check();
    return solver.field();
}

Field2D run_heat2d(const ExactSolution2D& ex, const Grid2D& grid, const TimeAxis& time, Exec exec) {
    Heat2DSolver solver(ex, grid, time, exec);
    while (solver.step_index() < time.steps) solver.step();
    return solver.field();
}

// ---------------------------------------------------------------------------

DistOrderSolver::DistOrderSolver(DistOrderProblem p) : prob_(std::move(p)) {
    kernel_ =
        collapse_kernel(prob_.order_density, prob_.quad_intervals, prob_.time.dt, prob_.time.steps);
    if (!(kernel_.mu > 0)) throw std::domain_error("dist-order: degenerate operator (mu <= 0)");
    history_ = HistoryBuffer(static_cast<std::size_t>(prob_.grid.nodes()), 0);
    u_ = Field2D(prob_.grid);

    // zero initial data; the boundary carries psi(.,0), which should agree
    const EdgeValues2D bv = eval_boundary_2d(prob_.grid, prob_.boundary, 0.0);
    double worst = 0.0;
    for (const auto* edge : {&bv.x_lo, &bv.x_hi, &bv.y_lo, &bv.y_hi})
        for (double v : *edge) worst = std::max(worst, std::abs(v));
    if (worst > 1e-12)
        std::cerr << "dist-order: warning: boundary data at t=0 inconsistent with zero initial "
                     "data (max |psi| = "
                  << worst << ")\n";
    for (int j = 0; j <= prob_.grid.m2; ++j) {
        u_.at(0, j) = bv.x_lo[j];
        u_.at(prob_.grid.m1, j) = bv.x_hi[j];
    }
    for (int i = 0; i <= prob_.grid.m1; ++i) {
        u_.at(i, 0) = bv.y_lo[i];
        u_.at(i, prob_.grid.m2) = bv.y_hi[i];
    }
}

std::vector<double> DistOrderSolver::rhs_half(double t_half) const {
    const Grid2D& g = prob_.grid;
    std::vector<double> b(g.nodes());
    for (int i = 0; i <= g.m1; ++i)
        for (int j = 0; j <= g.m2; ++j) b[u_.idx(i, j)] = prob_.source(g.x(i), g.y(j), t_half);
    dist_history_sum(history_, kernel_.kappa, b, prob_.exec);
    return b;
}

void DistOrderSolver::step() {
    if (n_ >= prob_.time.steps) throw std::logic_error("dist-order: already at final time");
    const std::vector<double> b = rhs_half(prob_.time.t_half(n_));
    const Boundary2D bc = Boundary2D::time_dirichlet(prob_.boundary);
    const EdgeValues2D bv_old = eval_boundary_2d(prob_.grid, prob_.boundary, prob_.time.t(n_));
    const EdgeValues2D bv_new = eval_boundary_2d(prob_.grid, prob_.boundary, prob_.time.t(n_ + 1));
    const SweepEquation2D eq{kernel_.mu / prob_.time.dt, 1.0, 0.0, &u_, &b};
    Field2D next = ade_step_2d_core(u_, bc, eq, &bv_old, &bv_new, prob_.exec);
    if (!next.finite()) throw DivergenceError(n_ + 1, "dist-order: non-finite field");

    std::vector<double> delta(next.v.size());
    const double inv_dt = 1.0 / prob_.time.dt;
    for (std::size_t k = 0; k < delta.size(); ++k) delta[k] = (next.v[k] - u_.v[k]) * inv_dt;
    history_.push(delta);
    u_ = std::move(next);
    ++n_;
}

// ---------------------------------------------------------------------------

TuringSolver::TuringSolver(TuringProblem p) : prob_(std::move(p)) {
    if (!(prob_.alpha > 0) || prob_.alpha > 1 || !(prob_.beta > 0) || prob_.beta > 1)
        throw std::domain_error("turing: fractional orders must be in (0,1]");
    const Grid2D& g = prob_.grid;
    const std::size_t nodes = static_cast<std::size_t>(g.nodes());
    const int m_max = std::max(prob_.gl_max_terms, 1);

    u0_ = Field2D(g);
    v0_ = Field2D(g);
    for (std::size_t k = 0; k < nodes; ++k) {
        u0_.v[k] = uniform_sym(prob_.seed, k, prob_.noise_amp);
        v0_.v[k] = uniform_sym(prob_.seed, nodes + k, prob_.noise_amp);
    }
    u_ = u0_;
    v_ = v0_;
    engine_u_ = GlHistoryEngine(nodes, GlKernel(prob_.alpha, m_max, prob_.gl_max_terms,
                                                prob_.gl_drop_tol),
                                prob_.time.dt, u0_.v, prob_.exec);
    engine_v_ = GlHistoryEngine(nodes, GlKernel(prob_.beta, m_max, prob_.gl_max_terms,
                                                prob_.gl_drop_tol),
                                prob_.time.dt, v0_.v, prob_.exec);
    sum_u_.resize(nodes);
    sum_v_.resize(nodes);
    src_u_.resize(nodes);
    src_v_.resize(nodes);
}

Field2D TuringSolver::component_step(const Field2D& s_old, const Field2D& s0, double order,
                                     double diff_coeff, double self_coeff,
                                     const std::vector<double>& src) {
    SweepEquation2D eq;
    eq.time_coeff = std::exp(-order * std::log(prob_.time.dt));
    eq.diff_coeff = diff_coeff;
    eq.implicit_linear = 0.5 * self_coeff;
    eq.base = &s0;
    eq.source = &src;
    return ade_step_2d_core(s_old, Boundary2D::zero_neumann(), eq, nullptr, nullptr, prob_.exec);
}

void TuringSolver::step() {
    const std::size_t nodes = u_.v.size();

    engine_u_.history_sum(sum_u_);
    engine_v_.history_sum(sum_v_);

    const double a11 = prob_.a11, a12 = prob_.a12, a21 = prob_.a21, a22 = prob_.a22;
    const double r2 = prob_.r2, cubic = prob_.a11 * prob_.r1;
    const bool par = prob_.exec == Exec::OpenMP;
    const std::int64_t count = static_cast<std::int64_t>(nodes);
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t k = 0; k < count; ++k) {
        const double un = u_.v[k], vn = v_.v[k];
        const double quad = r2 * un * vn;
        const double cub = cubic * un * vn * vn;
        src_u_[k] = 0.5 * a11 * un + a12 * vn - quad - cub - sum_u_[k];
        src_v_[k] = 0.5 * a22 * vn + a21 * un + quad + cub - sum_v_[k];
    }

    // v's update reads u^n; the two component updates commute
    Field2D u_next = component_step(u_, u0_, prob_.alpha, prob_.big_d * prob_.delta, a11, src_u_);
    Field2D v_next = component_step(v_, v0_, prob_.beta, prob_.delta, a22, src_v_);
    if (!u_next.finite() || !v_next.finite())
        throw DivergenceError(n_ + 1, "turing: non-finite field");

    engine_u_.push(u_next.v);
    engine_v_.push(v_next.v);
    u_ = std::move(u_next);
    v_ = std::move(v_next);
    ++n_;
}

FieldStats field_stats(const std::vector<double>& values) {
    FieldStats s;
    if (values.empty()) return s;
    s.min = s.max = values[0];
    double acc = 0.0, acc2 = 0.0;
    for (double x : values) {
        acc += x;
        acc2 += x * x;
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
    }
    const double n = static_cast<double>(values.size());
    s.mean = acc / n;
    s.stddev = std::sqrt(std::max(0.0, acc2 / n - s.mean * s.mean));
    return s;
}

}  // namespace ade
