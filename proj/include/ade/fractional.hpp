#pragma once
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ade/parallel.hpp"

namespace ade {

// g_0 = 1, g_k = (1 - (alpha+1)/k) g_{k-1}; alpha in [0,1].
std::vector<double> g_sequence(double alpha, int count);

// lambda_0 = (1 + alpha/2) g_0, lambda_k = (1 + alpha/2) g_k - (alpha/2) g_{k-1}.
std::vector<double> lambda_sequence(double alpha, int count);

// Quadrature-collapsed time kernel for the distributed-order operator:
//   kappa_k = dgamma * sum_l c_l w(gamma_l) dt^{-alpha_l} lambda_k^{(alpha_l)}
// over gamma_l = 1 + l/J, alpha_l = gamma_l - 1, trapezoid weights c_l.
// The per-step history term becomes a single convolution in kappa.
struct DistributedOrderKernel {
    int quad_intervals = 0;  // J
    double dgamma = 0.0;
    std::vector<double> kappa;  // k = 0..N
    double mu = 0.0;            // kappa[0]
};

DistributedOrderKernel collapse_kernel(const std::function<double(double)>& w, int J, double dt,
                                       int N);

// a_m = (-1)^m binom(alpha, m) via the stable product a_m = a_{m-1}(m-1-alpha)/m.
std::vector<double> gl_coefficients(double alpha, int m_max);

// Binomial kernel plus truncation policy: keep at most `max_terms` newest
// history terms and drop those with |a_m| < drop_tol.
struct GlKernel {
    double alpha = 1.0;
    std::vector<double> a;
    int max_terms = 800;
    double drop_tol = 1e-7;

    GlKernel() = default;
    GlKernel(double alpha_, int m_max, int cap, double drop);

    // Largest retained past-term index m (>= 1 terms).
    int effective_terms() const;
};

// Past fields, newest first, one contiguous row per time level. A positive
// capacity turns it into a ring; capacity <= 0 keeps everything (the
// distributed-order history must never truncate).
class HistoryBuffer {
public:
    HistoryBuffer() = default;
    HistoryBuffer(std::size_t node_count, int capacity);

    void push(const std::vector<double>& field);
    int size() const { return static_cast<int>(stored_); }
    std::size_t nodes() const { return nodes_; }
    int capacity() const { return cap_; }
    const double* level(int age) const;  // age 0 = newest

private:
    std::size_t nodes_ = 0;
    int cap_ = 0;
    std::size_t stored_ = 0;
    std::size_t head_ = 0;  // ring slot of the newest level
    std::vector<std::vector<double>> rows_;
};

// out_j = sum_{m=1..L} a_m (u^{newest+1-m}_j - u0_j) / dt^alpha with
// L = min(history.size(), kernel.effective_terms()); the part of the
// fractional difference the marching scheme moves to the right-hand side.
void gl_history_sum(const HistoryBuffer& history, const std::vector<double>& u0,
                    const GlKernel& kernel, double dt, std::span<double> out,
                    Exec exec = Exec::Serial);

// Full fractional difference at the new level: adds the m = 0 term
// a_0 (u_new - u0)/dt^alpha on top of gl_history_sum.
std::vector<double> gl_caputo_apply(const HistoryBuffer& history, const std::vector<double>& u_new,
                                    const std::vector<double>& u0, const GlKernel& kernel,
                                    double dt);

// out_j -= sum_{k=1..n} kappa_k * delta_j(age k-1) for a history of
// difference-quotient fields (newest first).
void dist_history_sum(const HistoryBuffer& deltas, const std::vector<double>& kappa,
                      std::span<double> out, Exec exec = Exec::Serial);

// Long-run replacement for HistoryBuffer + gl_history_sum. The naive sum
// streams the whole retained history every step; this engine precomputes the
// far-history part of the next `block` steps in one node-tiled pass, cutting
// memory traffic by the block factor while leaving the arithmetic per node in
// a fixed order (serial and OpenMP results are bit-identical).
class GlHistoryEngine {
public:
    GlHistoryEngine() = default;
    GlHistoryEngine(std::size_t nodes, GlKernel kernel, double dt, std::vector<double> u0,
                    Exec exec = Exec::Serial, int block = 32);

    // History part of the fractional difference for the upcoming step, same
    // value (up to rounding) as gl_history_sum over the fields pushed so far.
    void history_sum(std::span<double> out);
    void push(const std::vector<double>& field);

    int steps() const { return count_; }
    int terms() const { return terms_; }

private:
    const double* row(int k) const { return rows_[(k - 1) % rows_.size()].data(); }
    double* row(int k) { return rows_[(k - 1) % rows_.size()].data(); }
    void rebuild_far();

    std::size_t nodes_ = 0;
    GlKernel kernel_;
    double inv_dt_alpha_ = 1.0;
    std::vector<double> u0_;
    std::vector<double> coeff_prefix_;  // prefix sums of a_m, m = 1..terms
    int terms_ = 0;
    Exec exec_ = Exec::Serial;
    int block_ = 32;
    int count_ = 0;       // fields pushed so far
    int block_base_ = 0;  // step index the far sums were built for
    std::vector<std::vector<double>> rows_;  // ring over field index k >= 1
    std::vector<std::vector<double>> far_;   // far-history sums per block step
};

}  // namespace ade
