#include "ade/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace ade::oracles {

namespace {

// One triangular-split sub-step (I - dt*B) out = (I + dt*C) u + dt*b solved
// by generic elimination; B + C = A.
Eigen::VectorXd split_substep(const Eigen::VectorXd& u, double dt, const Eigen::MatrixXd& b,
                              const Eigen::MatrixXd& c, const Eigen::VectorXd& rhs_b) {
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(u.size(), u.size());
    Eigen::VectorXd rhs = u + dt * (c * u);
    if (rhs_b.size() > 0) rhs += dt * rhs_b;
    const Eigen::VectorXd out = (eye - dt * b).partialPivLu().solve(rhs);
    if (!out.allFinite()) throw std::runtime_error("split_substep: singular triangular factor");
    return out;
}

Eigen::MatrixXd half_diag_split(const Eigen::MatrixXd& a, bool lower) {
    Eigen::MatrixXd part = lower ? Eigen::MatrixXd(a.triangularView<Eigen::StrictlyLower>())
                                 : Eigen::MatrixXd(a.triangularView<Eigen::StrictlyUpper>());
    part += 0.5 * a.diagonal().asDiagonal().toDenseMatrix();
    return part;
}

}  // namespace

Eigen::MatrixXd laplacian_matrix_1d(const Grid1D& g) {
    const int n = g.m - 1;
    if (n < 1) throw std::invalid_argument("laplacian_matrix_1d: degenerate grid");
    const double s = 1.0 / (g.dx * g.dx);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = -2.0 * s;
        if (i > 0) a(i, i - 1) = s;
        if (i + 1 < n) a(i, i + 1) = s;
    }
    return a;
}

AxisSplit2D laplacian_matrix_2d(const Grid2D& g) {
    const int ni = g.m1 - 1, nj = g.m2 - 1;
    if (ni < 1 || nj < 1) throw std::invalid_argument("laplacian_matrix_2d: degenerate grid");
    const int n = ni * nj;
    const double sx = 1.0 / (g.dx * g.dx), sy = 1.0 / (g.dy * g.dy);
    AxisSplit2D split;
    split.ax = Eigen::MatrixXd::Zero(n, n);
    split.ay = Eigen::MatrixXd::Zero(n, n);
    auto row = [ni](int i, int j) { return (j - 1) * ni + (i - 1); };  // i fastest
    for (int j = 1; j <= nj; ++j)
        for (int i = 1; i <= ni; ++i) {
            const int r = row(i, j);
            split.ax(r, r) = -2.0 * sx;
            split.ay(r, r) = -2.0 * sy;
            if (i > 1) split.ax(r, row(i - 1, j)) = sx;
            if (i < ni) split.ax(r, row(i + 1, j)) = sx;
            if (j > 1) split.ay(r, row(i, j - 1)) = sy;
            if (j < nj) split.ay(r, row(i, j + 1)) = sy;
        }
    return split;
}

Eigen::VectorXd interior_vector(const Field1D& u) {
    Eigen::VectorXd v(u.grid.m - 1);
    for (int i = 1; i < u.grid.m; ++i) v[i - 1] = u[i];
    return v;
}

Eigen::VectorXd interior_vector(const Field2D& u) {
    const int ni = u.grid.m1 - 1, nj = u.grid.m2 - 1;
    Eigen::VectorXd v(ni * nj);
    for (int j = 1; j <= nj; ++j)
        for (int i = 1; i <= ni; ++i) v[(j - 1) * ni + (i - 1)] = u.at(i, j);
    return v;
}

Field1D field_from_interior(const Grid1D& g, const Eigen::VectorXd& v) {
    Field1D f(g);
    for (int i = 1; i < g.m; ++i) f[i] = v[i - 1];
    return f;
}

Field2D field_from_interior(const Grid2D& g, const Eigen::VectorXd& v) {
    Field2D f(g);
    const int ni = g.m1 - 1;
    for (int j = 1; j < g.m2; ++j)
        for (int i = 1; i < g.m1; ++i) f.at(i, j) = v[(j - 1) * ni + (i - 1)];
    return f;
}

Eigen::VectorXd dense_triangular_split_step(const Eigen::VectorXd& u, double dt,
                                            const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    if (dt == 0.0) return u;
    if (dt < 0.0) throw std::invalid_argument("dense_triangular_split_step: negative dt");
    const Eigen::MatrixXd lo = half_diag_split(a, true);
    const Eigen::MatrixXd up = a - lo;
    return 0.5 * (split_substep(u, dt, lo, up, b) + split_substep(u, dt, up, lo, b));
}

Eigen::VectorXd dense_triangular_split_step_2d(const Eigen::VectorXd& u, double dt,
                                               const AxisSplit2D& axes, const Eigen::VectorXd& b) {
    if (dt == 0.0) return u;
    if (dt < 0.0) throw std::invalid_argument("dense_triangular_split_step_2d: negative dt");
    const Eigen::MatrixXd a = axes.a();
    const Eigen::MatrixXd half_d = 0.5 * a.diagonal().asDiagonal().toDenseMatrix();
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(u.size());
    for (const bool x_lower : {true, false})
        for (const bool y_lower : {true, false}) {
            Eigen::MatrixXd bm =
                Eigen::MatrixXd(x_lower ? Eigen::MatrixXd(axes.ax.triangularView<Eigen::StrictlyLower>())
                                        : Eigen::MatrixXd(axes.ax.triangularView<Eigen::StrictlyUpper>()));
            bm += y_lower ? Eigen::MatrixXd(axes.ay.triangularView<Eigen::StrictlyLower>())
                          : Eigen::MatrixXd(axes.ay.triangularView<Eigen::StrictlyUpper>());
            bm += half_d;
            acc += split_substep(u, dt, bm, a - bm, b);
        }
    return 0.25 * acc;
}

Eigen::MatrixXd ade_operator_matrix(double dt, const Eigen::MatrixXd& a) {
    const Eigen::MatrixXd lo = half_diag_split(a, true);
    const Eigen::MatrixXd up = a - lo;
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    return 0.5 * ((eye - dt * lo).inverse() * (eye + dt * up) +
                  (eye - dt * up).inverse() * (eye + dt * lo));
}

Eigen::VectorXd crank_nicolson_step(const Eigen::VectorXd& u, double dt, const Eigen::MatrixXd& a,
                                    const Eigen::VectorXd& b_half) {
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(u.size(), u.size());
    Eigen::VectorXd rhs = (eye + 0.5 * dt * a) * u;
    if (b_half.size() > 0) rhs += dt * b_half;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(eye - 0.5 * dt * a);
    const Eigen::VectorXd out = lu.solve(rhs);
    if (!out.allFinite()) throw std::runtime_error("crank_nicolson_step: singular system");
    return out;
}

double caputo_direct_quadrature(const std::function<double(double)>& u, double alpha, double t,
                                int panels, const std::function<double(double)>& du) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("caputo_direct_quadrature: alpha must be in (0,1)");
    if (!(t > 0)) throw std::invalid_argument("caputo_direct_quadrature: t must be positive");
    if (panels < 1) throw std::invalid_argument("caputo_direct_quadrature: need panels");

    auto uprime = [&](double xi) {
        if (du) return du(xi);
        const double h = 1e-6 * std::max(1.0, std::abs(t));
        return (u(xi + h) - u(xi - h)) / (2.0 * h);
    };
    const double upper = std::pow(t, 1.0 - alpha);
    const double ds = upper / panels;
    const double expo = 1.0 / (1.0 - alpha);
    double acc = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double s = (k + 0.5) * ds;
        acc += uprime(t - std::pow(s, expo));
    }
    return acc * ds / std::tgamma(2.0 - alpha);
}

Derivatives1D finite_difference_check(const std::function<double(double, double)>& f, double x,
                                      double t, double h) {
    Derivatives1D d;
    d.dt = (f(x, t + h) - f(x, t - h)) / (2.0 * h);
    d.dxx = (f(x + h, t) - 2.0 * f(x, t) + f(x - h, t)) / (h * h);
    return d;
}

Derivatives2D finite_difference_check(const std::function<double(double, double, double)>& f,
                                      double x, double y, double t, double h) {
    Derivatives2D d;
    d.dt = (f(x, y, t + h) - f(x, y, t - h)) / (2.0 * h);
    d.dxx = (f(x + h, y, t) - 2.0 * f(x, y, t) + f(x - h, y, t)) / (h * h);
    d.dyy = (f(x, y + h, t) - 2.0 * f(x, y, t) + f(x, y - h, t)) / (h * h);
    return d;
}

}  // namespace ade::oracles
