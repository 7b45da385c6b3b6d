#pragma once
#include <functional>
#include <string>

#include "ade/boundary.hpp"

namespace ade {

// Manufactured problems with a known exact solution; the source term is
// back-computed so solver error is measurable exactly.
struct ExactSolution1D {
    std::string name;
    double x_min = 0.0, x_max = 1.0;
    BcKind bc = BcKind::TimeDirichlet;
    std::function<double(double, double)> u;       // exact u(x,t)
    std::function<double(double, double)> source;  // b(x,t)
    std::function<double(double)> f, g;            // Dirichlet data (null for Neumann)
    std::function<double(double)> initial;         // u(x,0)
};

struct ExactSolution2D {
    std::string name;
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    BcKind bc = BcKind::TimeDirichlet;
    std::function<double(double, double, double)> u;       // exact u(x,y,t)
    std::function<double(double, double, double)> source;  // F(x,y,t)
    std::function<double(double, double, double)> psi;     // Dirichlet data
    std::function<double(double)> order_density;           // w(gamma), distributed order only
};

// u = cos(x+t) on [-pi,pi]; b = cos(x+t) - sin(x+t); f,g the trace of u.
const ExactSolution1D& exact_heat1d_dirichlet();

// u = t cos(pi x) on [0,1]; b = cos(pi x) + pi^2 t cos(pi x); zero Neumann.
const ExactSolution1D& exact_heat1d_neumann();

// u = t^2 sin(x+y) on (0,pi)^2; b = 2(t+t^2) sin(x+y).
const ExactSolution2D& exact_heat2d_dirichlet();

// u = 64 t^6 sin(x+y) on (0,pi)^2 with order density w(gamma) = Gamma(7-gamma)
// and F = 128 t^4 sin(x+y) [360 (t-1)/ln t + t^2].
const ExactSolution2D& exact_distorder2d();

}  // namespace ade
