#pragma once

// Closed-form asymptotic constants and the two-term expansion oracles:
// kappa(alpha), the per-singularity coefficients b and b-tilde, the combined
// limits a(+/-) and their merge, the analytic-symbol limit, and the
// Laplace/oscillatory two-term laws used to test the integral evaluators.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ratlog/special_functions.hpp"
#include "ratlog/symbol.hpp"

namespace ratlog {

/// kappa(alpha) = 2^{-alpha} pi^{1-2 alpha} B(1/(2 alpha), 1/2)^alpha.
inline double kappa(double alpha) {
    if (!(alpha > 0)) throw std::domain_error("kappa: alpha must be positive");
    const double pi = std::numbers::pi;
    double log_beta =
        std::lgamma(1.0 / (2.0 * alpha)) + std::lgamma(0.5) - std::lgamma(1.0 / (2.0 * alpha) + 0.5);
    return std::exp(-alpha * std::numbers::ln2 + (1.0 - 2.0 * alpha) * std::log(pi) +
                    alpha * log_beta);
}

/// b = (1-alpha) v0 (1/2 - (u0+(0)-u0-(0))/(2 pi i)) - (v1+(0)-v1-(0))/(2 pi i).
inline std::complex<double> b_coefficient(const SingularityParams& p) {
    if (p.jump_mode != JumpMode::normal)
        throw std::invalid_argument("b_coefficient: jump-mode params need b_tilde");
    using C = std::complex<double>;
    const C two_pi_i(0.0, 2.0 * std::numbers::pi);
    const C v0 = detail::poly0(p.v0_plus);
    const C du = detail::poly0(p.u0_plus) - detail::poly0(p.u0_minus);
    const C dv1 = detail::poly0(p.v1_plus) - detail::poly0(p.v1_minus);
    return C(1.0 - p.alpha) * v0 * (C(0.5) - du / two_pi_i) - dv1 / two_pi_i;
}

/// Jump-mode coefficient b~ = -(v0+(0) - v0-(0))/(2 pi i); decay exponent alpha-1.
inline std::complex<double> b_tilde(const SingularityParams& p) {
    if (p.jump_mode != JumpMode::jump)
        throw std::invalid_argument("b_tilde: normal-mode params need b_coefficient");
    using C = std::complex<double>;
    return -(detail::poly0(p.v0_plus) - detail::poly0(p.v0_minus)) /
           C(0.0, 2.0 * std::numbers::pi);
}

/// a = kappa(alpha) (sum_l |b_l|^{1/alpha})^alpha, with 0^{1/alpha} = 0.
inline double a_coefficient(const std::vector<std::complex<double>>& bs, double alpha) {
    double s = 0.0;
    for (const auto& b : bs) {
        double m = std::abs(b);
        if (m > 0.0) s += std::pow(m, 1.0 / alpha);
    }
    if (s == 0.0) return 0.0;
    return kappa(alpha) * std::pow(s, alpha);
}

struct Prediction {
    double alpha = 0.0;
    double a_plus = 0.0;
    double a_minus = 0.0;
    double a_merged = 0.0;
    std::vector<std::complex<double>> b_minus;  // b(omega_l)
    std::vector<std::complex<double>> b_plus;   // b(conj(omega)_l)
    double decay_exponent = 0.0;                // alpha, or alpha-1 in jump mode
    bool compact = true;
};

inline Prediction predict(const SymbolSpec& sym) {
    Prediction out;
    if (sym.singularities.empty()) return out;
    const double alpha = sym.singularities[0].alpha;
    const bool jump = sym.singularities[0].jump_mode == JumpMode::jump;
    out.alpha = alpha;
    out.decay_exponent = jump ? alpha - 1.0 : alpha;
    out.compact = !jump || alpha > 1.0;
    for (const SingularityParams& p : sym.singularities) {
        if (jump) {
            out.b_minus.push_back(b_tilde(p));
            out.b_plus.push_back(b_tilde(conjugate(p)));
        } else {
            out.b_minus.push_back(b_coefficient(p));
            out.b_plus.push_back(b_coefficient(conjugate(p)));
        }
    }
    if (out.compact) {
        const double g = out.decay_exponent;
        out.a_minus = a_coefficient(out.b_minus, g);
        out.a_plus = a_coefficient(out.b_plus, g);
        double s = 0.0;
        if (out.a_plus > 0.0) s += std::pow(out.a_plus, 1.0 / g);
        if (out.a_minus > 0.0) s += std::pow(out.a_minus, 1.0 / g);
        out.a_merged = s > 0.0 ? std::pow(s, g) : 0.0;
    }
    return out;
}

/// Limit of n^alpha rho_n^+ for an analytic symbol:
/// |1-alpha| kappa(alpha) (sum_l |v_l(zeta_l)|^{1/alpha})^alpha.
inline double predict_analytic(const AnalyticSymbolSpec& aspec) {
    aspec.validate();
    std::vector<std::complex<double>> bs;
    bs.reserve(aspec.singularities.size());
    for (const AnalyticSingularity& s : aspec.singularities)
        bs.push_back((1.0 - aspec.alpha) * poly_eval(s.v, s.zeta));
    return a_coefficient(bs, aspec.alpha);
}

/// t^{-1-m} (log t)^{-alpha} (m! + alpha Gamma'(m+1) (log t)^{-1}).
inline std::complex<double> laplace_two_term(double alpha, int m, double t) {
    const double L = std::log(t);
    double val = std::pow(t, -1.0 - m) * std::pow(L, -alpha) *
                 (factorial(m) + alpha * gamma_prime(m) / L);
    return {val, 0.0};
}

/// sign * i^{m+1} t^{-m-1} (log t)^{-alpha}
///   * (m! + alpha (Gamma'(m+1) + m! (sign i pi/2 - a)) (log t)^{-1}).
inline std::complex<double> oscillatory_two_term(std::complex<double> a, double alpha, int m,
                                                 int sign, double t) {
    using C = std::complex<double>;
    const double L = std::log(t);
    C i_pow(0.0, 1.0);
    C ip = C(1.0);
    for (int k = 0; k <= m; ++k) ip *= i_pow;
    C half_pi_i(0.0, sign * std::numbers::pi / 2.0);
    C bracket = C(factorial(m)) +
                C(alpha) * (C(gamma_prime(m)) + C(factorial(m)) * (half_pi_i - a)) / C(L);
    return C(double(sign)) * ip * std::pow(t, -m - 1.0) * std::pow(L, -alpha) * bracket;
}

}  // namespace ratlog
