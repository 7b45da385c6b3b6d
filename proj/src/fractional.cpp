#include "ade/fractional.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ade {

namespace {

struct Chunk {
    std::size_t lo = 0, hi = 0;
};

// contiguous per-thread node range; the per-node arithmetic order does not
// depend on the thread count, so serial and parallel results are identical
Chunk my_chunk(std::size_t nodes) {
#ifdef _OPENMP
    const std::size_t nth = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t tid = static_cast<std::size_t>(omp_get_thread_num());
    return {nodes * tid / nth, nodes * (tid + 1) / nth};
#else
    return {0, nodes};
#endif
}

}  // namespace

std::vector<double> g_sequence(double alpha, int count) {
    if (alpha < 0.0 || alpha > 1.0) throw std::domain_error("g_sequence: alpha must be in [0,1]");
    if (count < 0) throw std::invalid_argument("g_sequence: negative count");
    std::vector<double> g(count + 1);
    g[0] = 1.0;
    for (int k = 1; k <= count; ++k) g[k] = (1.0 - (alpha + 1.0) / k) * g[k - 1];
    return g;
}

std::vector<double> lambda_sequence(double alpha, int count) {
    const std::vector<double> g = g_sequence(alpha, count);
    std::vector<double> lam(count + 1);
    lam[0] = (1.0 + 0.5 * alpha) * g[0];
    for (int k = 1; k <= count; ++k) lam[k] = (1.0 + 0.5 * alpha) * g[k] - 0.5 * alpha * g[k - 1];
    return lam;
}

DistributedOrderKernel collapse_kernel(const std::function<double(double)>& w, int J, double dt,
                                       int N) {
    if (J < 1) throw std::invalid_argument("collapse_kernel: need at least one quadrature interval");
    if (!(dt > 0)) throw std::invalid_argument("collapse_kernel: dt must be positive");
    if (N < 0) throw std::invalid_argument("collapse_kernel: negative step count");

    DistributedOrderKernel ker;
    ker.quad_intervals = J;
    ker.dgamma = 1.0 / J;
    ker.kappa.assign(N + 1, 0.0);
    for (int l = 0; l <= J; ++l) {
        const double gamma_l = 1.0 + l * ker.dgamma;
        const double alpha_l = gamma_l - 1.0;
        const double c_l = (l == 0 || l == J) ? 0.5 : 1.0;
        const double w_l = w(gamma_l);
        if (w_l < 0) throw std::domain_error("collapse_kernel: order density must be nonnegative");
        const double scale = ker.dgamma * c_l * w_l * std::pow(dt, -alpha_l);
        const std::vector<double> lam = lambda_sequence(alpha_l, N);
        for (int k = 0; k <= N; ++k) ker.kappa[k] += scale * lam[k];
    }
    ker.mu = ker.kappa[0];
    return ker;
}

std::vector<double> gl_coefficients(double alpha, int m_max) {
    if (!(alpha > 0.0) || alpha > 1.0) throw std::domain_error("gl_coefficients: alpha must be in (0,1]");
    if (m_max < 0) throw std::invalid_argument("gl_coefficients: negative count");
    std::vector<double> a(m_max + 1);
    a[0] = 1.0;
    for (int m = 1; m <= m_max; ++m) a[m] = a[m - 1] * ((m - 1) - alpha) / m;
    return a;
}

GlKernel::GlKernel(double alpha_, int m_max, int cap, double drop)
    : alpha(alpha_), a(gl_coefficients(alpha_, m_max)), max_terms(cap), drop_tol(drop) {}

int GlKernel::effective_terms() const {
    int last = std::min<int>(max_terms, static_cast<int>(a.size()) - 1);
    // |a_m| decreases monotonically for m >= 1, so the threshold cuts a tail
    while (last >= 1 && std::abs(a[last]) < drop_tol) --last;
    return std::max(last, 0);
}

HistoryBuffer::HistoryBuffer(std::size_t node_count, int capacity)
    : nodes_(node_count), cap_(capacity) {
    if (cap_ > 0) rows_.reserve(static_cast<std::size_t>(cap_));
}

void HistoryBuffer::push(const std::vector<double>& field) {
    if (field.size() != nodes_) throw std::invalid_argument("HistoryBuffer: field size mismatch");
    if (cap_ > 0 && stored_ == static_cast<std::size_t>(cap_)) {
        head_ = (head_ + 1) % stored_;
        rows_[head_] = field;  // overwrite the oldest slot
        return;
    }
    rows_.push_back(field);
    head_ = rows_.size() - 1;
    ++stored_;
}

const double* HistoryBuffer::level(int age) const {
    if (age < 0 || age >= size()) throw std::out_of_range("HistoryBuffer: no such level");
    const std::size_t n = rows_.size();
    const std::size_t slot = (head_ + n - static_cast<std::size_t>(age)) % n;
    return rows_[slot].data();
}

void gl_history_sum(const HistoryBuffer& history, const std::vector<double>& u0,
                    const GlKernel& kernel, double dt, std::span<double> out, Exec exec) {
    if (!(dt > 0)) throw std::invalid_argument("gl_history_sum: dt must be positive");
    const std::size_t nodes = history.nodes();
    if (u0.size() != nodes || out.size() != nodes)
        throw std::invalid_argument("gl_history_sum: size mismatch");

    const int terms = std::min(history.size(), kernel.effective_terms());
    const double inv_dt_alpha = std::exp(-kernel.alpha * std::log(dt));

    // Dropped terms drop their u0 part as well: only retained coefficients
    // contribute to the constant offset.
    double coeff_sum = 0.0;
    for (int m = 1; m <= terms; ++m) coeff_sum += kernel.a[m];

    std::vector<const double*> levels(static_cast<std::size_t>(std::max(terms, 0)));
    for (int m = 1; m <= terms; ++m) levels[m - 1] = history.level(m - 1);

    const bool par = exec == Exec::OpenMP;
#pragma omp parallel if (par)
    {
        const Chunk c = my_chunk(nodes);
        for (std::size_t i = c.lo; i < c.hi; ++i) out[i] = -coeff_sum * u0[i];
        for (int m = 1; m <= terms; ++m) {
            const double am = kernel.a[m];
            const double* row = levels[m - 1];
            for (std::size_t i = c.lo; i < c.hi; ++i) out[i] += am * row[i];
        }
        for (std::size_t i = c.lo; i < c.hi; ++i) out[i] *= inv_dt_alpha;
    }
}

std::vector<double> gl_caputo_apply(const HistoryBuffer& history, const std::vector<double>& u_new,
                                    const std::vector<double>& u0, const GlKernel& kernel,
                                    double dt) {
    if (!(dt > 0)) throw std::invalid_argument("gl_caputo_apply: dt must be positive");
    std::vector<double> out(history.nodes());
    gl_history_sum(history, u0, kernel, dt, out, Exec::Serial);
    const double inv_dt_alpha = std::exp(-kernel.alpha * std::log(dt));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += kernel.a[0] * (u_new[i] - u0[i]) * inv_dt_alpha;
    return out;
}

void dist_history_sum(const HistoryBuffer& deltas, const std::vector<double>& kappa,
                      std::span<double> out, Exec exec) {
    const std::size_t nodes = deltas.nodes();
    if (out.size() != nodes) throw std::invalid_argument("dist_history_sum: size mismatch");
    const int terms = std::min<int>(deltas.size(), static_cast<int>(kappa.size()) - 1);

    std::vector<const double*> levels(static_cast<std::size_t>(std::max(terms, 0)));
    for (int k = 1; k <= terms; ++k) levels[k - 1] = deltas.level(k - 1);

    const bool par = exec == Exec::OpenMP;
#pragma omp parallel if (par)
    {
        const Chunk c = my_chunk(nodes);
        for (int k = 1; k <= terms; ++k) {
            const double kap = kappa[k];
            const double* row = levels[k - 1];
            for (std::size_t i = c.lo; i < c.hi; ++i) out[i] -= kap * row[i];
        }
    }
}

GlHistoryEngine::GlHistoryEngine(std::size_t nodes, GlKernel kernel, double dt,
                                 std::vector<double> u0, Exec exec, int block)
    : nodes_(nodes),
      kernel_(std::move(kernel)),
      u0_(std::move(u0)),
      exec_(exec),
      block_(std::max(block, 1)) {
    if (!(dt > 0)) throw std::invalid_argument("GlHistoryEngine: dt must be positive");
    if (u0_.size() != nodes_) throw std::invalid_argument("GlHistoryEngine: u0 size mismatch");
    inv_dt_alpha_ = std::exp(-kernel_.alpha * std::log(dt));
    terms_ = std::max(kernel_.effective_terms(), 1);
    coeff_prefix_.assign(terms_ + 1, 0.0);
    for (int m = 1; m <= terms_; ++m) coeff_prefix_[m] = coeff_prefix_[m - 1] + kernel_.a[m];
    rows_.assign(static_cast<std::size_t>(terms_ + block_), std::vector<double>(nodes_, 0.0));
    far_.assign(static_cast<std::size_t>(block_), std::vector<double>(nodes_, 0.0));
}

void GlHistoryEngine::history_sum(std::span<double> out) {
    if (out.size() != nodes_) throw std::invalid_argument("GlHistoryEngine: out size mismatch");
    const int n = count_;
    const int j = n - block_base_;
    const int lim = std::min(n, terms_);
    const double csum = coeff_prefix_[lim];
    const double* far = far_[j].data();
    const int k_lo = std::max(block_base_ + 1, n + 1 - terms_);

    const bool par = exec_ == Exec::OpenMP;
#pragma omp parallel if (par)
    {
        const Chunk c = my_chunk(nodes_);
        for (std::size_t i = c.lo; i < c.hi; ++i) out[i] = far[i] - csum * u0_[i];
        for (int k = k_lo; k <= n; ++k) {
            const double am = kernel_.a[n + 1 - k];
            const double* r = row(k);
            for (std::size_t i = c.lo; i < c.hi; ++i) out[i] += am * r[i];
        }
        for (std::size_t i = c.lo; i < c.hi; ++i) out[i] *= inv_dt_alpha_;
    }
}

void GlHistoryEngine::push(const std::vector<double>& field) {
    if (field.size() != nodes_) throw std::invalid_argument("GlHistoryEngine: field size mismatch");
    rows_[static_cast<std::size_t>(count_) % rows_.size()] = field;  // slot of k = count_+1
    ++count_;
    if (count_ - block_base_ == block_) {
        block_base_ = count_;
        rebuild_far();
    }
}

void GlHistoryEngine::rebuild_far() {
    // far_[j] = sum over retained fields k <= n0 of a_{n0+j+1-k} u^k for the
    // upcoming steps n0..n0+block-1, built in one node-tiled pass so every
    // field row is read once per block instead of once per step.
    const int n0 = block_base_;
    const int k_lo = std::max(1, n0 + 1 - terms_);
    constexpr std::size_t tile = 2048;
    const std::size_t tiles = (nodes_ + tile - 1) / tile;

    const bool par = exec_ == Exec::OpenMP;
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t t = 0; t < tiles; ++t) {
        const std::size_t lo = t * tile;
        const std::size_t hi = std::min(nodes_, lo + tile);
        for (int j = 0; j < block_; ++j) {
            double* acc = far_[j].data();
            for (std::size_t i = lo; i < hi; ++i) acc[i] = 0.0;
        }
        for (int k = n0; k >= k_lo; --k) {
            const double* r = row(k);
            const int m0 = n0 + 1 - k;  // coefficient index at j = 0
            const int j_end = std::min(block_, terms_ - m0 + 1);
            for (int j = 0; j < j_end; ++j) {
                const double am = kernel_.a[m0 + j];
                double* acc = far_[j].data();
                for (std::size_t i = lo; i < hi; ++i) acc[i] += am * r[i];
            }
        }
    }
}

}  // namespace ade
