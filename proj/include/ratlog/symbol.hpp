#pragma once

// Symbols with finitely many logarithmic singularities on the unit circle.
// Each singularity at zeta = e^{i psi} contributes, in the local angle
// theta, the four-branch expression
//   sum_{j=0,1} sum_{s=+,-} v_{j,s}(theta) (-log|theta| + u_{j,s}(theta))^{1-j-alpha}
//     * 1_s(theta) * chi0(theta)
// with polynomial v, u and a principal-branch power. An additive smooth
// trigonometric polynomial can ride along; it never affects predictions.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ratlog/cutoff.hpp"
#include "ratlog/power_series.hpp"

namespace ratlog {

using Poly = std::vector<std::complex<double>>;  // coefficient k multiplies theta^k

template <class Real>
std::complex<Real> poly_eval(const Poly& p, std::complex<Real> x) {
    std::complex<Real> r(0);
    for (std::size_t i = p.size(); i-- > 0;)
        r = r * x + std::complex<Real>(Real(p[i].real()), Real(p[i].imag()));
    return r;
}

inline Poly poly_conj(const Poly& p) {
    Poly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = std::conj(p[i]);
    return q;
}

/// Polynomial composed with a power series (Horner in the series ring).
template <class Real>
PowerSeries<Real> poly_at_series(const Poly& p, const PowerSeries<Real>& x) {
    using C = std::complex<Real>;
    PowerSeries<Real> r = PowerSeries<Real>::constant(C(0), x.degree());
    for (std::size_t i = p.size(); i-- > 0;) {
        r = r * x;
        r[0] += C(Real(p[i].real()), Real(p[i].imag()));
    }
    return r;
}

enum class JumpMode { normal, jump };

struct SingularityParams {
    std::complex<double> zeta{1.0, 0.0};
    double alpha = 1.0;
    Poly v0_plus, v0_minus, v1_plus, v1_minus;
    Poly u0_plus, u0_minus, u1_plus, u1_minus;
    JumpMode jump_mode = JumpMode::normal;

    double psi() const { return std::arg(zeta); }

    const Poly& v(int j, int sigma) const {
        return j == 0 ? (sigma > 0 ? v0_plus : v0_minus) : (sigma > 0 ? v1_plus : v1_minus);
    }
    const Poly& u(int j, int sigma) const {
        return j == 0 ? (sigma > 0 ? u0_plus : u0_minus) : (sigma > 0 ? u1_plus : u1_minus);
    }
};

inline SingularityParams conjugate(const SingularityParams& p) {
    SingularityParams q = p;
    q.v0_plus = poly_conj(p.v0_plus);
    q.v0_minus = poly_conj(p.v0_minus);
    q.v1_plus = poly_conj(p.v1_plus);
    q.v1_minus = poly_conj(p.v1_minus);
    q.u0_plus = poly_conj(p.u0_plus);
    q.u0_minus = poly_conj(p.u0_minus);
    q.u1_plus = poly_conj(p.u1_plus);
    q.u1_minus = poly_conj(p.u1_minus);
    return q;
}

struct SymbolSpec {
    std::vector<SingularityParams> singularities;
    CutoffSpec cutoff;
    // Smooth additive term: list of (k, c_k) meaning sum_k c_k mu^k.
    std::vector<std::pair<int, std::complex<double>>> smooth_extra;
    double eps_min = 0.1;

    void validate() const;
};

namespace detail {

inline std::complex<double> poly0(const Poly& p) {
    return p.empty() ? std::complex<double>(0) : p[0];
}

/// Grid minimum of |-log t + u(sigma t)| over t in (e^{-40}, c],
/// geometrically graded, n points.
inline double branch_min_modulus(const Poly& u, int sigma, double c, int n) {
    double lo = std::exp(-40.0), m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double t = c * std::pow(lo / c, double(i) / double(n - 1));
        std::complex<double> w = -std::log(t) + poly_eval(u, std::complex<double>(sigma * t));
        m = std::min(m, std::abs(w));
    }
    return m;
}

inline double wrap_angle(double x) {
    const double pi = std::numbers::pi;
    x = std::fmod(x, 2 * pi);
    if (x <= -pi) x += 2 * pi;
    if (x > pi) x -= 2 * pi;
    return x;
}

}  // namespace detail

inline void SymbolSpec::validate() const {
    cutoff.validate();
    const double pi = std::numbers::pi;
    for (std::size_t l = 0; l < singularities.size(); ++l) {
        const SingularityParams& p = singularities[l];
        if (!(p.alpha > 0)) throw std::invalid_argument("SymbolSpec: alpha must be positive");
        if (p.alpha != singularities[0].alpha)
            throw std::invalid_argument("SymbolSpec: all singularities must share alpha");
        if (std::abs(std::abs(p.zeta) - 1.0) > 1e-12)
            throw std::invalid_argument("SymbolSpec: zeta must lie on the unit circle");
        if (p.jump_mode != singularities[0].jump_mode)
            throw std::invalid_argument("SymbolSpec: mixed jump modes are not supported");
        if (p.jump_mode == JumpMode::normal &&
            std::abs(detail::poly0(p.v0_plus) - detail::poly0(p.v0_minus)) > 1e-14)
            throw std::invalid_argument(
                "SymbolSpec: normal mode requires v0_plus(0) == v0_minus(0)");
        for (int j = 0; j <= 1; ++j)
            for (int sigma : {+1, -1})
                if (detail::branch_min_modulus(p.u(j, sigma), sigma, cutoff.c, 4096) < eps_min)
                    throw std::invalid_argument(
                        "SymbolSpec: |-log|theta| + u| falls below eps_min on a branch");
        for (std::size_t k = 0; k < l; ++k) {
            double d = std::abs(detail::wrap_angle(p.psi() - singularities[k].psi()));
            double sep = std::min(d, 2 * pi - d);
            if (sep < 2 * cutoff.c)
                throw std::invalid_argument(
                    "SymbolSpec: singularities need angular separation >= 2c");
        }
    }
}

inline SymbolSpec make_model_symbol(std::complex<double> v0, std::complex<double> v_plus,
                                    std::complex<double> v_minus, double alpha,
                                    CutoffSpec cutoff = {}) {
    if (!(alpha > 0)) throw std::domain_error("make_model_symbol: alpha must be positive");
    SingularityParams p;
    p.zeta = {1.0, 0.0};
    p.alpha = alpha;
    p.v0_plus = p.v0_minus = Poly{v0};
    p.v1_plus = Poly{v_plus};
    p.v1_minus = Poly{v_minus};
    SymbolSpec s;
    s.singularities = {p};
    s.cutoff = cutoff;
    s.validate();
    return s;
}

inline SymbolSpec conjugate(const SymbolSpec& sym) {
    SymbolSpec s = sym;
    for (auto& p : s.singularities) p = conjugate(p);
    std::vector<std::pair<int, std::complex<double>>> extra;
    extra.reserve(sym.smooth_extra.size());
    for (auto it = sym.smooth_extra.rbegin(); it != sym.smooth_extra.rend(); ++it)
        extra.emplace_back(-it->first, std::conj(it->second));
    s.smooth_extra = std::move(extra);
    return s;
}

/// One singularity's local contribution at local angle phi (no smooth term).
/// nullopt marks the unbounded point phi = 0.
template <class Real>
std::optional<std::complex<Real>> evaluate_local(const SingularityParams& p,
                                                 const CutoffSpec& cutoff, Real phi) {
    using C = std::complex<Real>;
    if (std::abs(phi) >= Real(cutoff.c)) return C(0);
    if (phi == Real(0)) {
        const bool v0_nonzero = std::abs(detail::poly0(p.v0_plus)) > 0 ||
                                std::abs(detail::poly0(p.v0_minus)) > 0;
        if (p.alpha <= 1.0 && v0_nonzero) return std::nullopt;
        return C(0);
    }
    const int sigma = phi > Real(0) ? +1 : -1;
    const Real chi = cutoff_value(cutoff, phi);
    const C minus_log(-std::log(std::abs(phi)), Real(0));
    C out(0);
    for (int j = 0; j <= 1; ++j) {
        const C w = minus_log + poly_eval(p.u(j, sigma), C(phi));
        const Real expo = Real(1 - j) - Real(p.alpha);
        out += poly_eval(p.v(j, sigma), C(phi)) * std::pow(w, C(expo));
    }
    return out * chi;
}

/// omega(e^{i theta}); nullopt at an unbounded singular angle.
template <class Real>
std::optional<std::complex<Real>> evaluate(const SymbolSpec& sym, Real theta) {
    using C = std::complex<Real>;
    C total(0);
    for (const SingularityParams& p : sym.singularities) {
        Real phi = Real(detail::wrap_angle(double(theta) - p.psi()));
        auto v = evaluate_local(p, sym.cutoff, phi);
        if (!v) return std::nullopt;
        total += *v;
    }
    for (const auto& [k, ck] : sym.smooth_extra)
        total += C(Real(ck.real()), Real(ck.imag())) *
                 std::exp(C(Real(0), Real(k) * theta));
    return total;
}

// Analytic symbols: omega(z) = sum_l v_l(z) (-log(zeta_l - z) + u_l(z))^{1-alpha}
// on the closed unit disk, reduced to boundary parameter form.

struct AnalyticSingularity {
    std::complex<double> zeta{1.0, 0.0};
    Poly v;  // polynomial in z
    Poly u;
};

struct AnalyticSymbolSpec {
    std::vector<AnalyticSingularity> singularities;
    double alpha = 1.0;

    void validate() const {
        if (!(alpha > 0)) throw std::invalid_argument("AnalyticSymbolSpec: alpha must be positive");
        for (const AnalyticSingularity& s : singularities) {
            if (std::abs(std::abs(s.zeta) - 1.0) > 1e-12)
                throw std::invalid_argument("AnalyticSymbolSpec: zeta must lie on the unit circle");
            // -log(zeta - z) + u(z) must be zero-free on the closed disk.
            for (int ir = 0; ir <= 64; ++ir)
                for (int ia = 0; ia < 512; ++ia) {
                    double r = double(ir) / 64.0, t = 2 * std::numbers::pi * ia / 512.0;
                    std::complex<double> z = std::polar(r, t);
                    if (std::abs(s.zeta - z) < 1e-14) continue;
                    std::complex<double> w = -std::log(s.zeta - z) + poly_eval(s.u, z);
                    if (std::abs(w) < 1e-6)
                        throw std::invalid_argument(
                            "AnalyticSymbolSpec: -log(zeta - z) + u(z) vanishes on the disk");
                }
        }
    }
};

/// Direct boundary evaluation of one analytic singularity at z = e^{i theta}.
inline std::complex<double> analytic_boundary_value(const AnalyticSingularity& s, double alpha,
                                                    double theta) {
    std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> w = -std::log(s.zeta - z) + poly_eval(s.u, z);
    return poly_eval(s.v, z) * std::pow(w, std::complex<double>(1.0 - alpha));
}

/// Boundary reduction of one analytic singularity to parameter form:
/// v1 = 0, v0(theta) = v(e^{i(psi0+theta)}),
/// u0_pm(theta) = pm i pi/2 - i theta/2 - log(sin(theta/2)/(theta/2))
///                + u(e^{i(psi0+theta)}) - i psi0.
inline SingularityParams analytic_boundary_params(const AnalyticSymbolSpec& aspec, std::size_t ell,
                                                  std::size_t degree = 8) {
    aspec.validate();
    const AnalyticSingularity& s = aspec.singularities.at(ell);
    using PS = PowerSeries<double>;
    using C = std::complex<double>;
    const double psi0 = std::arg(s.zeta);

    // z(theta) = e^{i psi0} e^{i theta} as a series in theta.
    PS z = (PS::variable(C(0), degree) * C(0, 1)).exp() * s.zeta;
    PS v_series = poly_at_series(s.v, z);
    PS u_series = poly_at_series(s.u, z);

    // log(sin(x)/x) at x = theta/2.
    PS sinc = PS::constant(C(1), degree);
    double fac = 1.0;
    for (std::size_t k = 1; 2 * k <= degree; ++k) {
        fac *= double(2 * k) * double(2 * k + 1);
        double coeff = (k % 2 == 1 ? -1.0 : 1.0) / fac / std::pow(2.0, 2.0 * k);
        sinc[2 * k] = C(coeff);
    }
    PS common = u_series - sinc.log() - PS::variable(C(0), degree) * C(0, 0.5) -
                PS::constant(C(0, psi0), degree);

    auto to_poly = [&](const PS& ps) {
        Poly p(degree + 1);
        for (std::size_t k = 0; k <= degree; ++k) p[k] = ps[k];
        return p;
    };

    SingularityParams out;
    out.zeta = s.zeta;
    out.alpha = aspec.alpha;
    out.v0_plus = out.v0_minus = to_poly(v_series);
    out.u0_plus = to_poly(common + PS::constant(C(0, std::numbers::pi / 2), degree));
    out.u0_minus = to_poly(common - PS::constant(C(0, std::numbers::pi / 2), degree));
    out.v1_plus = out.v1_minus = Poly{};
    return out;
}

}  // namespace ratlog
