#include "ade/step_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

#include "ade/engine1d.hpp"

namespace ade {

Eigen::MatrixXd build_step_matrix_1d(int m, double dt, double dx) {
    if (m < 2) throw std::invalid_argument("build_step_matrix_1d: need at least 2 cells");
    if (m > 200) throw std::invalid_argument("build_step_matrix_1d: dense analysis capped at m = 200");
    if (!(dt > 0) || !(dx > 0)) throw std::invalid_argument("build_step_matrix_1d: dt, dx must be positive");

    const int n = m - 1;
    const double s = 1.0 / (dx * dx);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = -2.0 * s;
        if (i > 0) a(i, i - 1) = s;
        if (i + 1 < n) a(i, i + 1) = s;
    }
    Eigen::MatrixXd b = a.triangularView<Eigen::StrictlyLower>();
    b += 0.5 * a.diagonal().asDiagonal().toDenseMatrix();
    const Eigen::MatrixXd c = a - b;

    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd lo = (eye - dt * b).partialPivLu().solve(eye + dt * c);
    const Eigen::MatrixXd hi = (eye - dt * c).partialPivLu().solve(eye + dt * b);
    return 0.5 * (lo + hi);
}

double spectral_radius(const Eigen::MatrixXd& a) {
    const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(a, false).eigenvalues();
    double rho = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) rho = std::max(rho, std::abs(ev[i]));
    return rho;
}

double apply_step_equivalence_check(const Field1D& u, double dt, const Eigen::MatrixXd& step) {
    const int m = u.grid.m;
    if (step.rows() != m - 1) throw std::invalid_argument("apply_step_equivalence_check: size mismatch");

    AdeStepInput1D in;
    in.u_old = u;
    in.u_old[0] = 0.0;
    in.u_old[m] = 0.0;
    in.dt = dt;
    in.bc = BcKind::TimeDirichlet;
    in.b_half.assign(u.grid.nodes(), 0.0);
    const Field1D stepped = ade_step_1d(in);

    Eigen::VectorXd interior(m - 1);
    for (int i = 1; i < m; ++i) interior[i - 1] = in.u_old[i];
    const Eigen::VectorXd dense = step * interior;

    double worst = 0.0;
    for (int i = 1; i < m; ++i) worst = std::max(worst, std::abs(stepped[i] - dense[i - 1]));
    return worst;
}

}  // namespace ade
