#pragma once

// N x N corner compression of the Hankel matrix h(j+k): fast matvec through
// an FFT-based linear convolution, a dense SVD oracle for small N, and
// Golub-Kahan-Lanczos bidiagonalization with full reorthogonalization for
// the leading singular values at large N.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include "ratlog/fourier.hpp"

namespace ratlog {

struct SingularValues {
    std::vector<double> values;  // non-increasing
    long converged_count = 0;
    std::vector<double> residual_estimates;
};

class HankelOperator {
  public:
    using C = std::complex<double>;
    using Vec = Eigen::VectorXcd;

    HankelOperator(const FourierSeries& series, long N) : N_(N) {
        if (N < 1) throw std::invalid_argument("HankelOperator: N must be >= 1");
        if (long(series.values.size()) < 2 * N - 1)
            throw std::invalid_argument("HankelOperator: series length " +
                                        std::to_string(series.values.size()) +
                                        " is below the required 2N-1 = " +
                                        std::to_string(2 * N - 1));
        h_.assign(series.values.begin(), series.values.begin() + (2 * N - 1));
        // y = H x is a segment of the linear convolution of h with reverse(x);
        // embed into a zero-padded circular convolution.
        fft_size_ = 1;
        while (fft_size_ < 3 * N) fft_size_ *= 2;
        std::vector<C> h_pad(fft_size_, C(0));
        std::copy(h_.begin(), h_.end(), h_pad.begin());
        Eigen::FFT<double> fft;
        h_hat_.resize(fft_size_);
        fft.fwd(h_hat_, h_pad);
    }

    long size() const { return N_; }
    C entry(long j, long k) const { return h_.at(std::size_t(j + k)); }

    Vec matvec_naive(const Vec& x) const {
        check(x);
        Eigen::Map<const Vec> h(h_.data(), long(h_.size()));
        Vec y(N_);
        for (long j = 0; j < N_; ++j)
            y[j] = (h.segment(j, N_).array() * x.array()).sum();
        return y;
    }

    Vec matvec_fast(const Vec& x) const {
        check(x);
        std::vector<C> pad(std::size_t(fft_size_), C(0));
        for (long k = 0; k < N_; ++k) pad[std::size_t(N_ - 1 - k)] = x[k];
        Eigen::FFT<double> fft;
        std::vector<C> x_hat(static_cast<std::size_t>(fft_size_), C(0));
        fft.fwd(x_hat, pad);
        for (long i = 0; i < fft_size_; ++i) x_hat[std::size_t(i)] *= h_hat_[std::size_t(i)];
        std::vector<C> conv(static_cast<std::size_t>(fft_size_), C(0));
        fft.inv(conv, x_hat);
        Vec y(N_);
        for (long j = 0; j < N_; ++j) y[j] = conv[std::size_t(N_ - 1 + j)];
        return y;
    }

    /// Adjoint action; the matrix is complex symmetric, so A^H x = conj(A conj(x)).
    Vec matvec_adjoint(const Vec& x) const { return matvec_fast(x.conjugate()).conjugate(); }

    Eigen::MatrixXcd dense() const {
        Eigen::MatrixXcd M(N_, N_);
        for (long j = 0; j < N_; ++j)
            for (long k = 0; k < N_; ++k) M(j, k) = h_[std::size_t(j + k)];
        return M;
    }

  private:
    void check(const Vec& x) const {
        if (x.size() != N_) throw std::invalid_argument("HankelOperator: vector length mismatch");
    }

    long N_;
    long fft_size_;
    std::vector<C> h_;
    std::vector<C> h_hat_;
};

inline HankelOperator build(const FourierSeries& series, long N) {
    return HankelOperator(series, N);
}

inline SingularValues singular_values_dense(const HankelOperator& op) {
    if (op.size() > 2048)
        throw std::invalid_argument(
            "singular_values_dense: N > 2048; use singular_values_iterative");
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(op.dense());
    SingularValues out;
    out.values.assign(svd.singularValues().data(),
                      svd.singularValues().data() + svd.singularValues().size());
    out.converged_count = long(out.values.size());
    out.residual_estimates.assign(out.values.size(), 0.0);
    return out;
}

/// Top-k singular values by Golub-Kahan-Lanczos bidiagonalization with full
/// two-sided reorthogonalization; deterministic for a fixed seed.
inline SingularValues singular_values_iterative(const HankelOperator& op, long k, double tol = 1e-10,
                                                std::uint64_t seed = 0x5eed5eedULL,
                                                long max_iter = 0) {
    using Vec = Eigen::VectorXcd;
    const long N = op.size();
    if (k < 1 || k > N) throw std::invalid_argument("singular_values_iterative: k out of range");
    if (max_iter <= 0) max_iter = std::min(N, 4 * k + 100);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v0(N);
    for (long i = 0; i < N; ++i) v0[i] = std::complex<double>(gauss(rng), gauss(rng));
    v0.normalize();

    Eigen::MatrixXcd V(N, max_iter + 1), U(N, max_iter + 1);
    std::vector<double> alphas, betas;
    bool breakdown = false;
    V.col(0) = v0;

    auto reorth = [](Vec& w, const Eigen::MatrixXcd& basis, long cols) {
        auto Q = basis.leftCols(cols);
        for (int pass = 0; pass < 2; ++pass) w -= Q * (Q.adjoint() * w);
    };

    Vec p = op.matvec_fast(V.col(0));
    double alpha = p.norm();
    if (alpha < 1e-300)
        return {std::vector<double>(std::size_t(k), 0.0), k,
                std::vector<double>(std::size_t(k), 0.0)};
    alphas.push_back(alpha);
    U.col(0) = p / alpha;

    double beta = 0.0;
    auto finalize = [&](const Eigen::VectorXd& s, const Eigen::MatrixXd& uB) {
        const long p_sz = long(alphas.size());
        SingularValues out;
        out.values.resize(std::size_t(k), 0.0);
        out.residual_estimates.resize(std::size_t(k), 0.0);
        out.converged_count = 0;
        for (long i = 0; i < k; ++i) {
            if (i < p_sz) {
                out.values[std::size_t(i)] = s[i];
                double res = breakdown ? 0.0 : beta * std::abs(uB(p_sz - 1, i));
                out.residual_estimates[std::size_t(i)] = res;
                if (res <= tol * std::max(s[0], 1e-300)) ++out.converged_count;
            } else if (breakdown) {
                ++out.converged_count;  // exact zero beyond the operator rank
            }
        }
        return out;
    };

    const long check_every = std::max<long>(8, k / 4);
    for (long it = 0; it < max_iter; ++it) {
        const long p_sz = long(alphas.size());
        Vec r = op.matvec_adjoint(U.col(p_sz - 1)) - alphas.back() * V.col(p_sz - 1);
        reorth(r, V, p_sz);
        beta = r.norm();

        const bool at_end = (it + 1 == max_iter) || p_sz == N;
        const bool tiny_beta = beta < 1e-14 * std::max(1.0, alphas[0]);
        if (tiny_beta) breakdown = true;
        if (at_end || tiny_beta || (p_sz >= k && (it % check_every == check_every - 1))) {
            Eigen::MatrixXd B = Eigen::MatrixXd::Zero(p_sz, p_sz);
            for (long i = 0; i < p_sz; ++i) {
                B(i, i) = alphas[std::size_t(i)];
                if (i + 1 < p_sz) B(i, i + 1) = betas[std::size_t(i)];
            }
            Eigen::BDCSVD<Eigen::MatrixXd> svd(B, Eigen::ComputeThinU);
            const Eigen::VectorXd& s = svd.singularValues();
            bool done = at_end || breakdown;
            if (!done && p_sz >= k) {
                done = true;
                for (long i = 0; i < k; ++i)
                    if (beta * std::abs(svd.matrixU()(p_sz - 1, i)) >
                        tol * std::max(s[0], 1e-300))
                        done = false;
            }
            if (done) return finalize(s, svd.matrixU());
        }

        betas.push_back(beta);
        V.col(p_sz) = r / beta;
        Vec q = op.matvec_fast(V.col(p_sz)) - beta * U.col(p_sz - 1);
        reorth(q, U, p_sz);
        alpha = q.norm();
        if (alpha < 1e-300) {
            breakdown = true;
            alpha = 1e-300;
        }
        alphas.push_back(alpha);
        U.col(p_sz) = q / alpha;
    }
    throw std::logic_error("singular_values_iterative: unreachable");
}

/// s0 of the Hankel operator built from the shifted tail j -> h(j + N);
/// a compression-uncertainty proxy. Uses whatever tail data the series has.
inline double tail_norm_estimate(const FourierSeries& series, long N) {
    const long len = long(series.values.size());
    if (len < 2 * N - 1)
        throw std::invalid_argument("tail_norm_estimate: series length below 2N-1");
    const long tail_len = len - N;  // entries h(N) .. h(len-1)
    if (tail_len <= 0) return 0.0;
    const long Nt = (tail_len + 1) / 2;
    FourierSeries tail;
    tail.side = series.side;
    tail.values.assign(series.values.begin() + N, series.values.end());
    tail.values.resize(std::size_t(2 * Nt - 1), {0.0, 0.0});
    HankelOperator op(tail, Nt);
    SingularValues sv = singular_values_iterative(op, 1, 1e-8);
    return sv.values.empty() ? 0.0 : sv.values[0];
}

}  // namespace ratlog
