#include "ade/norms.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ade {

double l2_norm(const Field1D& err) {
    const int m = err.grid.m;
    if (m < 2) throw std::invalid_argument("l2_norm: degenerate grid");
    double s = 0.0;
    for (int i = 1; i < m; ++i) s += err[i] * err[i];
    return std::sqrt(err.grid.dx * s);
}

double l2_norm(const Field2D& err) {
    const int m1 = err.grid.m1, m2 = err.grid.m2;
    if (m1 < 2 || m2 < 2) throw std::invalid_argument("l2_norm: degenerate grid");
    double s = 0.0;
    for (int i = 1; i < m1; ++i)
        for (int j = 1; j < m2; ++j) s += err.at(i, j) * err.at(i, j);
    return std::sqrt(err.grid.dx * err.grid.dy * s);
}

double linf_norm(const Field1D& err) {
    const int m = err.grid.m;
    if (m < 2) throw std::invalid_argument("linf_norm: degenerate grid");
    double s = 0.0;
    for (int i = 1; i < m; ++i) s = std::max(s, std::abs(err[i]));
    return s;
}

double linf_norm(const Field2D& err) {
    const int m1 = err.grid.m1, m2 = err.grid.m2;
    if (m1 < 2 || m2 < 2) throw std::invalid_argument("linf_norm: degenerate grid");
    double s = 0.0;
    for (int i = 1; i < m1; ++i)
        for (int j = 1; j < m2; ++j) s = std::max(s, std::abs(err.at(i, j)));
    return s;
}

std::vector<double> convergence_rates(const std::vector<std::pair<long long, double>>& errors) {
    std::vector<double> rates;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
        if (errors[k + 1].first != 2 * errors[k].first)
            throw std::invalid_argument("convergence_rates: resolutions must double");
        if (!(errors[k].second > 0) || !(errors[k + 1].second > 0))
            throw std::domain_error("convergence_rates: invalid error magnitude");
        rates.push_back(std::log2(errors[k].second / errors[k + 1].second));
    }
    return rates;
}

}  // namespace ade
