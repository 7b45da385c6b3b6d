#pragma once
#include <Eigen/Dense>
#include <functional>

#include "ade/grid.hpp"

// Independent reference computations used to validate the sweep kernels and
// the fractional kernels. Nothing here calls sweep code; dense systems are
// solved by generic LU elimination.
namespace ade::oracles {

// Interior-unknown ordering for 2D operators is lexicographic with i
// fastest; matching permutations exist for every sweep direction, so nodal
// results are ordering-independent.
Eigen::MatrixXd laplacian_matrix_1d(const Grid1D& g);

struct AxisSplit2D {
    Eigen::MatrixXd ax;  // x-direction part of the 5-point stencil
    Eigen::MatrixXd ay;  // y-direction part
    Eigen::MatrixXd a() const { return ax + ay; }
};
AxisSplit2D laplacian_matrix_2d(const Grid2D& g);

Eigen::VectorXd interior_vector(const Field1D& u);
Eigen::VectorXd interior_vector(const Field2D& u);
Field1D field_from_interior(const Grid1D& g, const Eigen::VectorXd& v);
Field2D field_from_interior(const Grid2D& g, const Eigen::VectorXd& v);

// Average of the triangular-split sub-steps
//   (I - dt B) p = (I + dt C) u + dt b,  (I - dt C) q = (I + dt B) u + dt b
// with B = L + D/2, C = U + D/2. Ground truth for the 1D step.
Eigen::VectorXd dense_triangular_split_step(const Eigen::VectorXd& u, double dt,
                                            const Eigen::MatrixXd& a,
                                            const Eigen::VectorXd& b = Eigen::VectorXd());

// 2D ground truth: averages the four splittings that take the lower or the
// upper triangle per axis, matching the four sweep directions.
Eigen::VectorXd dense_triangular_split_step_2d(const Eigen::VectorXd& u, double dt,
                                               const AxisSplit2D& axes,
                                               const Eigen::VectorXd& b = Eigen::VectorXd());

// Same 1D operator assembled from two explicit matrix inverses; a second
// route through the same algebra for cross-checking.
Eigen::MatrixXd ade_operator_matrix(double dt, const Eigen::MatrixXd& a);

// (I - dt/2 A) u1 = (I + dt/2 A) u + dt b_half, solved by dense elimination.
Eigen::VectorXd crank_nicolson_step(const Eigen::VectorXd& u, double dt, const Eigen::MatrixXd& a,
                                    const Eigen::VectorXd& b_half);

// Fractional derivative of order alpha in (0,1) at time t by direct
// quadrature of the singular integral; the substitution xi = t - s^{1/(1-alpha)}
// removes the endpoint singularity, leaving
//   1/Gamma(2-alpha) * Integral_0^{t^{1-alpha}} u'(t - s^{1/(1-alpha)}) ds
// evaluated by the composite midpoint rule. `du` may be null, in which case
// u' comes from central differences.
double caputo_direct_quadrature(const std::function<double(double)>& u, double alpha, double t,
                                int panels = 10000,
                                const std::function<double(double)>& du = nullptr);

struct Derivatives1D {
    double dt = 0.0;
    double dxx = 0.0;
};
struct Derivatives2D {
    double dt = 0.0;
    double dxx = 0.0;
    double dyy = 0.0;
};

// Central-difference probes used by the manufactured-solution checks.
Derivatives1D finite_difference_check(const std::function<double(double, double)>& f, double x,
                                      double t, double h);
Derivatives2D finite_difference_check(const std::function<double(double, double, double)>& f,
                                      double x, double y, double t, double h);

}  // namespace ade::oracles
