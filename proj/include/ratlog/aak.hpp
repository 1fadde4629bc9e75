#pragma once

// Rational-approximation distances in the BMO norm. The minus-side distance
// sequence is the singular value sequence of the Hankel operator built from
// the negative Fourier coefficients; the plus side uses the conjugated
// symbol. The two-sided sequence is the sorted multiset union, since the
// counting functions add.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratlog/asymptotics.hpp"
#include "ratlog/fourier.hpp"
#include "ratlog/hankel.hpp"

namespace ratlog {

enum class DistanceSide { minus, plus, merged };

inline const char* to_string(DistanceSide s) {
    switch (s) {
        case DistanceSide::minus: return "minus";
        case DistanceSide::plus: return "plus";
        default: return "merged";
    }
}

struct DistanceSeries {
    DistanceSide side = DistanceSide::minus;
    std::vector<double> values;  // rho_0 >= rho_1 >= ...
    long N_used = 0;
    double tail_proxy = 0.0;
    long converged_count = 0;
};

struct SolverOptions {
    double tol = 1e-10;
    std::uint64_t seed = 0x5eed5eedULL;
    long max_iter = 0;
    bool want_tail_proxy = true;
};

/// Distance series from an already computed coefficient series (pass-through
/// from the singular values).
inline DistanceSeries distances_from_series(const FourierSeries& series, long n_max, long N,
                                            const SolverOptions& opt = {}) {
    if (n_max < 1 || n_max > N)
        throw std::invalid_argument("distances_from_series: need 1 <= n_max <= N");
    HankelOperator op(series, N);
    SingularValues sv = singular_values_iterative(op, n_max, opt.tol, opt.seed, opt.max_iter);
    DistanceSeries out;
    out.side = series.side == Side::minus ? DistanceSide::minus : DistanceSide::plus;
    out.values = sv.values;
    out.N_used = N;
    out.converged_count = sv.converged_count;
    if (opt.want_tail_proxy && long(series.values.size()) > N)
        out.tail_proxy = tail_norm_estimate(series, N);
    return out;
}

inline DistanceSeries rho_minus(const SymbolSpec& sym, long n_max, long N,
                                MethodPolicy policy = {}, const SolverOptions& opt = {}) {
    return distances_from_series(make_series(sym, Side::minus, 2 * N - 1, policy), n_max, N, opt);
}

inline DistanceSeries rho_plus(const SymbolSpec& sym, long n_max, long N,
                               MethodPolicy policy = {}, const SolverOptions& opt = {}) {
    return distances_from_series(make_series(sym, Side::plus, 2 * N - 1, policy), n_max, N, opt);
}

/// Sorted multiset union; length is the sum of the input lengths.
inline DistanceSeries merge(const DistanceSeries& plus, const DistanceSeries& minus) {
    DistanceSeries out;
    out.side = DistanceSide::merged;
    out.values.resize(plus.values.size() + minus.values.size());
    std::merge(plus.values.begin(), plus.values.end(), minus.values.begin(), minus.values.end(),
               out.values.begin(), std::greater<double>());
    out.N_used = std::min(plus.N_used, minus.N_used);
    out.tail_proxy = std::max(plus.tail_proxy, minus.tail_proxy);
    // a merged entry is trustworthy while it exceeds every unconverged parent value
    auto floor_of = [](const DistanceSeries& d) {
        return d.converged_count < long(d.values.size())
                   ? d.values[std::size_t(d.converged_count)]
                   : -1.0;
    };
    const double unconverged_floor = std::max(floor_of(plus), floor_of(minus));
    out.converged_count = long(out.values.size());
    if (unconverged_floor >= 0.0) {
        auto it = std::upper_bound(out.values.begin(), out.values.end(), unconverged_floor,
                                   [](double a, double b) { return a > b; });
        out.converged_count = long(it - out.values.begin());
    }
    return out;
}

struct CountingResult {
    long count = 0;       // #{ n : rho_n > s } within the computed range
    bool saturated = false;  // last computed value still exceeds s
};

inline CountingResult counting(const DistanceSeries& series, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("counting: threshold must be positive");
    CountingResult out;
    auto it = std::upper_bound(series.values.begin(), series.values.end(), s,
                               [](double a, double b) { return a > b; });
    out.count = long(it - series.values.begin());
    out.saturated = !series.values.empty() && series.values.back() > s;
    return out;
}

struct BmoNorm {
    double value = 0.0;
    double s0_minus = 0.0;
    double s0_plus = 0.0;
    std::complex<double> mean{0.0, 0.0};  // omega_hat(0)
    double tail_proxy_minus = 0.0;
    double tail_proxy_plus = 0.0;
};

/// max(|P_- omega|_* , |P_+' omega|_* , |omega_hat(0)|) at compression N, the
/// operator norms taken from the two Hankel compressions.
inline BmoNorm bmo_norm(const SymbolSpec& sym, long N, MethodPolicy policy = {}) {
    sym.validate();
    BmoNorm out;
    SolverOptions opt;
    opt.tol = 1e-8;
    for (Side side : {Side::minus, Side::plus}) {
        FourierSeries ser = make_series(sym, side, 2 * N - 1, policy);
        DistanceSeries d = distances_from_series(ser, 1, N, opt);
        if (side == Side::minus) {
            out.s0_minus = d.values[0];
            out.tail_proxy_minus = d.tail_proxy;
        } else {
            out.s0_plus = d.values[0];
            out.tail_proxy_plus = d.tail_proxy;
        }
    }
    out.mean = coeff_quadrature(sym, 0).value;
    out.value = std::max({out.s0_minus, out.s0_plus, std::abs(out.mean)});
    return out;
}

struct RatioRow {
    DistanceSide side;
    long n;
    double rho;
    double scaled;  // n^g rho_n
    double ratio;   // n^g rho_n / a
};

struct DistanceReport {
    DistanceSeries minus;
    DistanceSeries plus;
    DistanceSeries merged;
    Prediction prediction;
    std::vector<RatioRow> scaled_ratios;
    bool degenerate = false;  // no algebraic decay predicted (all b vanish)
};

inline DistanceReport report(const SymbolSpec& sym, long n_max, long N, MethodPolicy policy = {},
                             const SolverOptions& opt = {}) {
    sym.validate();
    DistanceReport out;
    out.prediction = predict(sym);
    out.minus = rho_minus(sym, n_max, N, policy, opt);
    out.plus = rho_plus(sym, n_max, N, policy, opt);
    out.merged = merge(out.plus, out.minus);
    out.degenerate = out.prediction.a_merged == 0.0;
    const double g = out.prediction.decay_exponent;
    auto add_rows = [&](const DistanceSeries& d, double a) {
        if (a <= 0.0) return;
        const long n_top = std::min<long>(long(d.values.size()), d.converged_count);
        for (long n = 1; n < n_top; ++n) {
            double scaled = std::pow(double(n), g) * d.values[std::size_t(n)];
            out.scaled_ratios.push_back({d.side, n, d.values[std::size_t(n)], scaled, scaled / a});
        }
    };
    if (out.prediction.compact) {
        add_rows(out.minus, out.prediction.a_minus);
        add_rows(out.plus, out.prediction.a_plus);
        add_rows(out.merged, out.prediction.a_merged);
    }
    return out;
}

}  // namespace ratlog
