#pragma once
#include <functional>
#include <utility>

namespace ade {

enum class BcKind { TimeDirichlet, ZeroNeumann };

// Boundary regime plus its data functions. Zero Dirichlet is the
// TimeDirichlet specialization with f = g = 0; there is no separate path.
struct Boundary1D {
    BcKind kind = BcKind::TimeDirichlet;
    std::function<double(double)> left;   // f(t)
    std::function<double(double)> right;  // g(t)

    static Boundary1D zero_dirichlet() {
        return {BcKind::TimeDirichlet, [](double) { return 0.0; }, [](double) { return 0.0; }};
    }
    static Boundary1D time_dirichlet(std::function<double(double)> f, std::function<double(double)> g) {
        return {BcKind::TimeDirichlet, std::move(f), std::move(g)};
    }
    static Boundary1D zero_neumann() { return {BcKind::ZeroNeumann, nullptr, nullptr}; }
};

struct Boundary2D {
    BcKind kind = BcKind::TimeDirichlet;
    std::function<double(double, double, double)> data;  // psi(x, y, t) on the boundary

    static Boundary2D zero_dirichlet() {
        return {BcKind::TimeDirichlet, [](double, double, double) { return 0.0; }};
    }
    static Boundary2D time_dirichlet(std::function<double(double, double, double)> psi) {
        return {BcKind::TimeDirichlet, std::move(psi)};
    }
    static Boundary2D zero_neumann() { return {BcKind::ZeroNeumann, nullptr}; }
};

}  // namespace ade
