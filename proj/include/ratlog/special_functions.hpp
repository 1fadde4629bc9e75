#pragma once

// Gamma-family special functions needed by the asymptotic constants:
// log-Beta via lgamma, digamma via recurrence + Stirling, and derivatives
// of the power-log decay profile t^{-1} (log t)^{-alpha}.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ratlog {

/// digamma(x) for x > 0, accurate to ~1e-14 (recurrence into the
/// asymptotic region, then the Stirling series).
inline double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
    double r = 0.0;
    while (x < 10.0) {
        r -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    // psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n})
    double s = std::log(x) - 0.5 * inv;
    double p = inv2;
    s -= p / 12.0;
    p *= inv2;
    s += p / 120.0;
    p *= inv2;
    s -= p / 252.0;
    p *= inv2;
    s += p / 240.0;
    p *= inv2;
    s -= p / 132.0;
    p *= inv2;
    s += p * 691.0 / 32760.0;
    return r + s;
}

/// Gamma'(m+1) = m! * psi(m+1).
inline double gamma_prime(int m) {
    if (m < 0) throw std::domain_error("gamma_prime: requires m >= 0");
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    return fact * digamma(double(m) + 1.0);
}

/// B(x, y) through the log-Gamma identity.
inline double beta_function(double x, double y) {
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

inline double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

/// d^m/dt^m [ (log t)^{-alpha} ] = t^{-m} * sum_i c_i (log t)^{-alpha-i}.
/// Coefficients by the derivative recurrence; exact in the c_i.
template <class Real>
Real log_power_derivative(Real alpha, int m, Real t) {
    // c[i] multiplies (log t)^{-alpha-i-1}, i = 0..m-1 (for m >= 1).
    if (m == 0) return std::pow(std::log(t), -alpha);
    std::vector<Real> c(1, -alpha);  // first derivative: -alpha L^{-alpha-1} t^{-1}
    for (int k = 1; k < m; ++k) {
        std::vector<Real> d(c.size() + 1, Real(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            d[i] += Real(-k) * c[i];
            d[i + 1] += -(alpha + Real(i + 1)) * c[i];
        }
        c.swap(d);
    }
    const Real L = std::log(t);
    Real s = 0;
    for (std::size_t i = c.size(); i-- > 0;) s = s / L + c[i];
    s *= std::pow(L, -alpha - Real(1));
    return s * std::pow(t, Real(-m));
}

/// d^m/dt^m [ t^{-1} (log t)^{-alpha} ] by the Leibniz rule.
template <class Real>
Real power_log_profile_derivative(Real alpha, int m, Real t) {
    Real s = 0;
    Real binom = 1;
    for (int k = 0; k <= m; ++k) {
        // d^{m-k} t^{-1} = (-1)^{m-k} (m-k)! t^{-1-(m-k)}
        Real dk = binom * Real((m - k) % 2 == 0 ? 1 : -1) * Real(factorial(m - k)) *
                  std::pow(t, Real(-1 - (m - k))) * log_power_derivative(alpha, k, t);
        s += dk;
        binom *= Real(m - k) / Real(k + 1);
    }
    return s;
}

}  // namespace ratlog
