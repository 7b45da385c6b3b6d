#include "ade/exact.hpp"

#include <cmath>

namespace ade {

namespace {
constexpr double kPi = 3.14159265358979323846;

// (t-1)/ln t, continuous at t = 1; zero at t = 0 where the enclosing t^4
// factor kills the term anyway.
double ratio_log(double t) {
    if (t <= 0.0) return 0.0;
    const double d = t - 1.0;
    if (std::abs(d) < 1e-8) return 1.0 + 0.5 * d - d * d / 12.0;
    return d / std::log(t);
}
}  // namespace

const ExactSolution1D& exact_heat1d_dirichlet() {
    static const ExactSolution1D ex = [] {
        ExactSolution1D e;
        e.name = "heat1d-dirichlet";
        e.x_min = -kPi;
        e.x_max = kPi;
        e.bc = BcKind::TimeDirichlet;
        e.u = [](double x, double t) { return std::cos(x + t); };
        e.source = [](double x, double t) { return std::cos(x + t) - std::sin(x + t); };
        e.f = [](double t) { return std::cos(t - kPi); };
        e.g = [](double t) { return std::cos(t + kPi); };
        e.initial = [](double x) { return std::cos(x); };
        return e;
    }();
    return ex;
}

const ExactSolution1D& exact_heat1d_neumann() {
    static const ExactSolution1D ex = [] {
        ExactSolution1D e;
        e.name = "heat1d-neumann";
        e.x_min = 0.0;
        e.x_max = 1.0;
        e.bc = BcKind::ZeroNeumann;
        e.u = [](double x, double t) { return t * std::cos(kPi * x); };
        e.source = [](double x, double t) { return std::cos(kPi * x) * (1.0 + kPi * kPi * t); };
        e.initial = [](double) { return 0.0; };
        return e;
    }();
    return ex;
}

const ExactSolution2D& exact_heat2d_dirichlet() {
    static const ExactSolution2D ex = [] {
        ExactSolution2D e;
        e.name = "heat2d-dirichlet";
        e.x_min = 0.0;
        e.x_max = kPi;
        e.y_min = 0.0;
        e.y_max = kPi;
        e.bc = BcKind::TimeDirichlet;
        e.u = [](double x, double y, double t) { return t * t * std::sin(x + y); };
        e.source = [](double x, double y, double t) { return 2.0 * (t + t * t) * std::sin(x + y); };
        e.psi = e.u;
        return e;
    }();
    return ex;
}

const ExactSolution2D& exact_distorder2d() {
    static const ExactSolution2D ex = [] {
        ExactSolution2D e;
        e.name = "dist-order";
        e.x_min = 0.0;
        e.x_max = kPi;
        e.y_min = 0.0;
        e.y_max = kPi;
        e.bc = BcKind::TimeDirichlet;
        e.u = [](double x, double y, double t) {
            return 64.0 * std::pow(t, 6) * std::sin(x + y);
        };
        e.source = [](double x, double y, double t) {
            if (t <= 0.0) return 0.0;
            const double t4 = t * t * t * t;
            return 128.0 * t4 * std::sin(x + y) * (360.0 * ratio_log(t) + t * t);
        };
        e.psi = e.u;
        e.order_density = [](double gamma) { return std::tgamma(7.0 - gamma); };
        return e;
    }();
    return ex;
}

}  // namespace ade
