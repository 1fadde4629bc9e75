#pragma once

// Panel Gauss-Legendre quadrature with geometric grading toward endpoint
// singularities and width caps for resolving oscillation. Error estimates
// come from the 16- vs 8-point difference on every panel.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace ratlog {

template <class Real>
struct GaussRule {
    std::vector<Real> nodes;    // on [-1, 1]
    std::vector<Real> weights;
};

/// Gauss-Legendre rule by Newton iteration on P_n (computed in long double).
template <class Real>
const GaussRule<Real>& gauss_rule(int n) {
    static thread_local std::vector<GaussRule<Real>> cache(64);
    GaussRule<Real>& r = cache.at(n);
    if (!r.nodes.empty()) return r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        long double x = std::cos(3.141592653589793238462643383279503L * (i + 0.75L) / (n + 0.5L));
        long double dp = 0;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            long double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-19L) break;
        }
        r.nodes[i] = Real(x);
        r.weights[i] = Real(2.0L / ((1 - x * x) * dp * dp));
    }
    return r;
}

template <class Real>
struct QuadResult {
    std::complex<Real> value{0, 0};
    Real abs_err = 0;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        abs_err += o.abs_err;
        return *this;
    }
};

template <class Real, class F>
std::complex<Real> gauss_panel(F&& f, Real a, Real b, int n) {
    const GaussRule<Real>& r = gauss_rule<Real>(n);
    const Real mid = (a + b) / 2, half = (b - a) / 2;
    std::complex<Real> s(0, 0);
    for (int i = 0; i < n; ++i) s += std::complex<Real>(r.weights[i]) * f(mid + half * r.nodes[i]);
    return s * std::complex<Real>(half);
}

/// Integrate over consecutive panels given by breakpoints; error from the
/// embedded lower-order rule.
template <class Real, class F>
QuadResult<Real> integrate_panels(F&& f, const std::vector<Real>& bp) {
    QuadResult<Real> out;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        auto v16 = gauss_panel(f, bp[i], bp[i + 1], 16);
        auto v8 = gauss_panel(f, bp[i], bp[i + 1], 8);
        out.value += v16;
        out.abs_err += std::abs(v16 - v8);
    }
    return out;
}

/// Geometric breakpoints a_min = b0 < ... < a_max with the given ratio,
/// each span further split so no panel is wider than max_width.
template <class Real>
std::vector<Real> graded_breakpoints(Real a_min, Real a_max, Real ratio, Real max_width) {
    std::vector<Real> raw{a_max};
    Real x = a_max;
    while (x > a_min * (Real(1) + Real(1e-12))) {
        x = std::max(x / ratio, a_min);
        raw.push_back(x);
    }
    std::reverse(raw.begin(), raw.end());
    std::vector<Real> bp;
    bp.push_back(raw.front());
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        Real w = raw[i + 1] - raw[i];
        int parts = std::max(1, int(std::ceil(w / max_width)));
        for (int k = 1; k <= parts; ++k) bp.push_back(raw[i] + w * Real(k) / Real(parts));
    }
    return bp;
}

/// Uniform breakpoints over [a, b] with panel width <= max_width.
template <class Real>
std::vector<Real> uniform_breakpoints(Real a, Real b, Real max_width) {
    int parts = std::max(1, int(std::ceil((b - a) / max_width)));
    std::vector<Real> bp(parts + 1);
    for (int k = 0; k <= parts; ++k) bp[k] = a + (b - a) * Real(k) / Real(parts);
    return bp;
}

}  // namespace ratlog
