#pragma once
#include <utility>
#include <vector>

#include "ade/grid.hpp"

namespace ade {

// Grid-scaled discrete norms over the interior nodes only:
//   1D: sqrt(dx * sum e_i^2),   2D: sqrt(dx*dy * sum e_ij^2).
// Summation is plain left-to-right so results are reproducible.
double l2_norm(const Field1D& err);
double l2_norm(const Field2D& err);

double linf_norm(const Field1D& err);
double linf_norm(const Field2D& err);

// rate_k = log2(e_k / e_{k+1}); requires the resolution to double between
// consecutive entries and every error to be positive.
std::vector<double> convergence_rates(const std::vector<std::pair<long long, double>>& errors);

}  // namespace ade
