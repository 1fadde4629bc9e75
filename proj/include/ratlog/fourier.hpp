#pragma once

// Fourier coefficients of log-singular symbols by two independent methods.
//
// coeff_quadrature integrates on the real angle axis with panels graded into
// the singularity. coeff_contour deforms the singular piece onto the
// rectangle (0, s i kappa, c + s i kappa, c): the vertical segment at 0 is a
// damped Laplace integral carrying the full asymptotics, the horizontal
// segment is exponentially small, and the endpoint at c is combined with the
// cutoff correction on [c1, c] so that their mutually cancelling oscillatory
// parts are never formed explicitly. The same machinery evaluates m-th
// forward differences by folding the factor (e^{i s x} - 1)^m into the
// integrand, which keeps the remainder diagnostics in the relative-accuracy
// regime out to very large j.

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ratlog/asymptotics.hpp"
#include "ratlog/cutoff.hpp"
#include "ratlog/parallel.hpp"
#include "ratlog/power_series.hpp"
#include "ratlog/quadrature.hpp"
#include "ratlog/symbol.hpp"

namespace ratlog {

enum class Side { minus, plus };
enum class Provenance { quadrature, contour, asymptotic_model };

struct CoeffResult {
    std::complex<double> value{0.0, 0.0};
    double abs_err = 0.0;
};

struct FourierSeries {
    Side side = Side::minus;
    std::vector<std::complex<double>> values;
    std::vector<double> accuracy;
    std::vector<Provenance> provenance;
};

struct MethodPolicy {
    long crossover = 10000;  // quadrature for indices <= crossover, contour above
    int jobs = 0;
};

namespace detail {

constexpr double kCoreB = 40.0;  // integration stops at |theta| = e^{-B}
constexpr int kIbpOrder = 12;    // Taylor/IBP order K at the endpoint c

template <class Real>
std::complex<Real> horner(const std::vector<std::complex<Real>>& p, std::complex<Real> x) {
    std::complex<Real> r(0);
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

template <class Real>
std::vector<std::complex<Real>> fold_poly(const Poly& p, int s) {
    std::vector<std::complex<Real>> q(p.size());
    Real sk = 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
        q[k] = std::complex<Real>(Real(p[k].real()), Real(p[k].imag())) * sk;
        sk *= Real(s);
    }
    return q;
}

template <class Real>
PowerSeries<Real> poly_series(const std::vector<std::complex<Real>>& p,
                              const PowerSeries<Real>& x) {
    PowerSeries<Real> r = PowerSeries<Real>::constant(std::complex<Real>(0), x.degree());
    for (std::size_t i = p.size(); i-- > 0;) {
        r = r * x;
        r[0] += p[i];
    }
    return r;
}

template <class Real>
std::complex<Real> cpow_int(std::complex<Real> z, int m) {
    std::complex<Real> r(1);
    for (int i = 0; i < m; ++i) r *= z;
    return r;
}

/// One oscillatory branch integral
///   J(t) = int_0^c v(x) (-log x + u(x))^p chi0(x) (e^{isx}-1)^m e^{isxt} dx
/// with polynomial v, u (already sigma-folded) and principal-branch power.
template <class Real>
class BranchEvaluator {
  public:
    using C = std::complex<Real>;

    BranchEvaluator(std::vector<C> v, std::vector<C> u, Real p, int s, int m, CutoffSpec cutoff)
        : v_(std::move(v)), u_(std::move(u)), p_(p), s_(s), m_(m), cutoff_(cutoff) {
        choose_kappa();
        // Taylor data of F at the endpoint c (F excludes the cutoff).
        PowerSeries<Real> fc = f_series(Real(cutoff_.c), kIbpOrder);
        a_.resize(kIbpOrder + 1);
        for (int k = 0; k <= kIbpOrder; ++k) a_[k] = fc[k];
        estimate_gk_norm();
        estimate_segment_sups();
    }

    /// F(z) = v(z) w(z)^p (e^{isz}-1)^m, analytic continuation off (0, c].
    C f_pure(C z) const {
        C w = -std::log(z) + horner(u_, z);
        C val = horner(v_, z) * std::pow(w, C(p_));
        if (m_ > 0) val *= cpow_int(std::exp(C(0, Real(s_)) * z) - C(1), m_);
        return val;
    }

    QuadResult<Real> eval(Real t) const {
        const Real c = Real(cutoff_.c), c1 = Real(cutoff_.c1);
        const Real B = Real(kCoreB), eps_core = std::exp(-B);
        const C i_s(0, Real(s_));
        QuadResult<Real> out;

        // Segment A: z = s i y, e^{iszt} = e^{-yt}; carries the asymptotics.
        {
            const Real ymax = std::min(kappa_, Real(45) / t);
            auto f = [&](Real y) {
                C w = C(-std::log(y), -Real(s_) * Real(std::numbers::pi) / 2) +
                      horner(u_, C(0, Real(s_) * y));
                C val = horner(v_, C(0, Real(s_) * y)) * std::pow(w, C(p_));
                if (m_ > 0) val *= cpow_int(C(std::expm1(-y)), m_);
                return i_s * val * std::exp(-y * t);
            };
            auto bp = graded_breakpoints(eps_core, ymax, Real(2), Real(8) / t);
            out += integrate_panels(f, bp);
            out.abs_err += 2 * eps_core * std::abs(f(eps_core));        // core below e^{-B}
            out.abs_err += std::abs(f(ymax)) / t;                       // damped tail to kappa
        }

        // Segment B: z = x + s i kappa, magnitude e^{-kappa t}.
        if (kappa_ * t <= Real(50)) {
            const Real damp = std::exp(-kappa_ * t);
            auto f = [&](Real x) {
                C z(x, Real(s_) * kappa_);
                return f_pure(z) * std::exp(i_s * x * t) * damp;
            };
            Real w = std::min(c / 8, Real(std::numbers::pi) / (2 * std::max(t, Real(1))));
            out += integrate_panels(f, uniform_breakpoints(Real(0), c, w));
        } else {
            out.abs_err += std::exp(-kappa_ * t) * c * sup_b_;
        }

        // Endpoint at c and the cutoff correction on [c1, c].
        const C phase_c = std::exp(i_s * c * t);
        if (t <= Real(2048)) {
            // Direct evaluation; the two oscillatory parts cancel in the sum.
            const Real ymax = std::min(kappa_, Real(45) / t);
            auto fc = [&](Real y) {
                return -i_s * phase_c * f_pure(C(c, Real(s_) * y)) * std::exp(-y * t);
            };
            out += integrate_panels(
                fc, uniform_breakpoints(Real(0), ymax, std::min(ymax / 8, Real(8) / t)));
            out.abs_err += std::abs(fc(ymax)) / t;

            auto g = [&](Real x) {
                return -f_pure(C(x)) * (Real(1) - cutoff_value(cutoff_, x)) *
                       std::exp(i_s * x * t);
            };
            Real w = std::min((c - c1) / 8, Real(std::numbers::pi) / (2 * t));
            out += integrate_panels(g, uniform_breakpoints(c1, c, w));
        } else {
            // Stable combination: C - (IBP boundary sum) - remainder.
            const int K = kIbpOrder;
            if (t <= Real(16384)) {
                const Real ymax = std::min(kappa_, Real(45) / t);
                auto fr = [&](Real y) {
                    C siy(0, Real(s_) * y);
                    return (f_pure(C(c, Real(s_) * y)) - horner(a_, siy)) * std::exp(-y * t);
                };
                QuadResult<Real> creg =
                    integrate_panels(fr, uniform_breakpoints(Real(0), ymax, Real(3) / t));
                // int_kappa^inf y^k e^{-yt} dy by exact recursion.
                Real ek = std::exp(-kappa_ * t) / t, kap_pow = 1;
                C tail(0);
                for (int k = 0; k < K; ++k) {
                    if (k > 0) {
                        kap_pow *= kappa_;
                        ek = kap_pow * std::exp(-kappa_ * t) / t + Real(k) / t * ek;
                    }
                    tail += a_[k] * cpow_int(i_s, k) * ek;
                }
                creg.value -= tail;
                creg.abs_err += std::abs(fr(ymax)) / t;
                out.value += -i_s * phase_c * creg.value;
                out.abs_err += creg.abs_err;
            } else {
                Real fK = 1;
                for (int k = 2; k <= K; ++k) fK *= Real(k);
                out.abs_err += 2 * std::abs(a_[K]) * fK * std::pow(t, Real(-K - 1));
            }
            // Remainder R_K = (is)^K t^{-K} int G^{(K)} e^{isxt} dx, G = F (1 - chi0).
            const Real scale = std::pow(t, Real(-K));
            const Real bound = gk_norm1_ * scale;
            if (bound > Real(1e-4) * std::abs(out.value)) {
                auto gk = [&](Real x) { return gk_derivative(x) * std::exp(i_s * x * t); };
                Real w = std::min((c - c1) / 8, 2 * Real(std::numbers::pi) / t);
                QuadResult<Real> rk = integrate_panels(gk, uniform_breakpoints(c1, c, w));
                out.value -= cpow_int(i_s, K) * scale * rk.value;
                out.abs_err += scale * rk.abs_err;
            } else {
                out.abs_err += bound;
            }
        }
        return out;
    }

  private:
    PowerSeries<Real> f_series(Real x0, std::size_t degree) const {
        using PS = PowerSeries<Real>;
        PS x = PS::variable(C(x0), degree);
        PS w = x.log() * C(-1) + poly_series(u_, x);
        PS f = poly_series(v_, x) * w.pow(p_);
        if (m_ > 0) {
            PS osc = (x * C(0, Real(s_))).exp() - PS::constant(C(1), degree);
            f = f * osc.ipow(unsigned(m_));
        }
        return f;
    }

    C gk_derivative(Real x0) const {
        using PS = PowerSeries<Real>;
        PS g = f_series(x0, kIbpOrder) *
               (PS::constant(C(1), kIbpOrder) - cutoff_series(cutoff_, x0, std::size_t(kIbpOrder)));
        return g.derivative_at_origin(kIbpOrder);
    }

    void choose_kappa() {
        // The rectangle must keep w = -log z + u(z) in the right half plane
        // so the principal power is the analytic continuation.
        kappa_ = Real(0.3);
        const Real c = Real(cutoff_.c);
        while (kappa_ >= Real(0.02)) {
            bool ok = true;
            for (int ix = 0; ix <= 24 && ok; ++ix)
                for (int iy = 0; iy <= 12 && ok; ++iy) {
                    Real x = std::max(c * ix / 24, std::exp(-Real(kCoreB)));
                    C z(x, Real(s_) * kappa_ * iy / 12);
                    C w = -std::log(z) + horner(u_, z);
                    if (!(w.real() > Real(0.05))) ok = false;
                }
            if (ok) return;
            kappa_ /= 2;
        }
        throw std::runtime_error(
            "coeff_contour: no admissible contour height (log branch not zero-free)");
    }

    void estimate_gk_norm() {
        const Real c = Real(cutoff_.c), c1 = Real(cutoff_.c1);
        const int n = 128;
        Real sum = 0;
        for (int i = 0; i < n; ++i) {
            Real x = c1 + (c - c1) * (Real(i) + Real(0.5)) / n;
            sum += std::abs(gk_derivative(x));
        }
        gk_norm1_ = 2 * sum * (c - c1) / n;
    }

    void estimate_segment_sups() {
        sup_b_ = 0;
        for (int i = 0; i <= 16; ++i) {
            Real x = std::max(Real(cutoff_.c) * i / 16, std::exp(-Real(kCoreB)));
            sup_b_ = std::max(sup_b_, std::abs(f_pure(C(x, Real(s_) * kappa_))));
        }
        sup_b_ *= 2;
    }

    std::vector<C> v_, u_;
    Real p_;
    int s_, m_;
    CutoffSpec cutoff_;
    Real kappa_ = Real(0.3);
    std::vector<C> a_;  // Taylor coefficients of F at c, degree kIbpOrder
    Real gk_norm1_ = 0;
    Real sup_b_ = 0;
};

template <class Real>
bool poly_is_zero(const Poly& p) {
    for (const auto& ck : p)
        if (std::abs(ck) > 0) return false;
    return true;
}

}  // namespace detail

/// Contour evaluation of Delta^m omega_hat(-t) for the singular part of a
/// symbol (smooth_extra excluded; callers add it in closed form). m > 0
/// requires a single singularity at zeta = 1 so phases do not mix.
template <class Real>
class ContourEvaluator {
  public:
    ContourEvaluator(const SymbolSpec& sym, int m = 0) : m_(m) {
        sym.validate();
        if (m < 0) throw std::domain_error("ContourEvaluator: m must be nonnegative");
        if (m > 0 && (sym.singularities.size() != 1 ||
                      std::abs(sym.singularities[0].zeta - std::complex<double>(1.0)) > 1e-12))
            throw std::invalid_argument(
                "ContourEvaluator: differences require a single singularity at zeta = 1");
        for (const SingularityParams& p : sym.singularities) {
            phases_.push_back(p.psi());
            std::vector<detail::BranchEvaluator<Real>> branches;
            for (int j = 0; j <= 1; ++j)
                for (int s : {+1, -1}) {
                    const Poly& v = p.v(j, s);
                    if (detail::poly_is_zero<Real>(v)) continue;
                    branches.emplace_back(detail::fold_poly<Real>(v, s),
                                          detail::fold_poly<Real>(p.u(j, s), s),
                                          Real(1 - j) - Real(p.alpha), s, m, sym.cutoff);
                }
            branch_sets_.push_back(std::move(branches));
        }
    }

    /// (1/2pi) sum_l zeta_l^t sum_branches J_branch(t); t >= 2.
    std::pair<std::complex<Real>, Real> coeff(Real t) const {
        if (!(t >= Real(2))) throw std::domain_error("ContourEvaluator: requires t >= 2");
        std::complex<Real> total(0);
        Real err = 0;
        for (std::size_t l = 0; l < branch_sets_.size(); ++l) {
            QuadResult<Real> acc;
            for (const auto& br : branch_sets_[l]) acc += br.eval(t);
            std::complex<Real> phase = std::exp(std::complex<Real>(0, Real(phases_[l]) * t));
            total += phase * acc.value;
            err += acc.abs_err;
        }
        const Real two_pi = 2 * Real(std::numbers::pi);
        return {total / two_pi, err / two_pi};
    }

  private:
    int m_;
    std::vector<double> phases_;
    std::vector<std::vector<detail::BranchEvaluator<Real>>> branch_sets_;
};

namespace detail {

inline std::complex<double> smooth_extra_coeff(const SymbolSpec& sym, long j) {
    // omega~ = sum c_k mu^k contributes c_{-j} to omega_hat(-j).
    for (const auto& [k, ck] : sym.smooth_extra)
        if (k == -j) return ck;
    return {0.0, 0.0};
}

}  // namespace detail

/// omega_hat(-j) = (1/2pi) int omega(e^{i theta}) e^{i j theta} d theta by
/// graded, oscillation-resolved panel quadrature on the real axis.
inline CoeffResult coeff_quadrature(const SymbolSpec& sym, long j) {
    using C = std::complex<double>;
    const double eps_core = std::exp(-detail::kCoreB);
    const double c = sym.cutoff.c;
    QuadResult<double> acc;
    C total(0);
    for (const SingularityParams& p : sym.singularities) {
        QuadResult<double> local;
        for (int jj = 0; jj <= 1; ++jj)
            for (int s : {+1, -1}) {
                const Poly& vp = p.v(jj, s);
                if (detail::poly_is_zero<double>(vp)) continue;
                auto v = detail::fold_poly<double>(vp, s);
                auto u = detail::fold_poly<double>(p.u(jj, s), s);
                const double expo = double(1 - jj) - p.alpha;
                auto f = [&](double x) {
                    C w = C(-std::log(x)) + detail::horner(u, C(x));
                    return detail::horner(v, C(x)) * std::pow(w, C(expo)) *
                           cutoff_value(sym.cutoff, x) *
                           std::exp(C(0, s * double(j) * x));
                };
                double cap = c / 4;
                if (j != 0) cap = std::min(cap, std::numbers::pi / (2.0 * std::abs(double(j))));
                auto bp = graded_breakpoints(eps_core, c, 2.0, cap);
                local += integrate_panels(f, bp);
                local.abs_err += 2 * eps_core * std::abs(f(eps_core));
            }
        C phase = std::exp(C(0, p.psi() * double(j)));
        total += phase * local.value;
        acc.abs_err += local.abs_err;
    }
    const double two_pi = 2 * std::numbers::pi;
    CoeffResult out;
    out.value = total / two_pi + detail::smooth_extra_coeff(sym, j);
    out.abs_err = acc.abs_err / two_pi;
    return out;
}

/// omega_hat(-t) via contour deformation; t >= 2, matches coeff_quadrature
/// at integer t. The smooth_extra term is added only at integer t.
inline CoeffResult coeff_contour(const SymbolSpec& sym, double t) {
    ContourEvaluator<double> ce(sym, 0);
    auto [val, err] = ce.coeff(t);
    CoeffResult out{val, err};
    if (t == std::floor(t)) out.value += detail::smooth_extra_coeff(sym, long(t));
    return out;
}

/// Leading asymptotic model sum_l b_l j^{-1} (log j)^{-alpha} zeta_l^j.
inline std::complex<double> coeff_asymptotic(const SymbolSpec& sym, long j) {
    if (j < 2) throw std::domain_error("coeff_asymptotic: requires j >= 2");
    std::complex<double> total(0.0);
    for (const SingularityParams& p : sym.singularities) {
        std::complex<double> b =
            p.jump_mode == JumpMode::jump ? b_tilde(p) : b_coefficient(p);
        total += b * std::pow(p.zeta, double(j));
    }
    const double jd = double(j);
    return total / jd * std::pow(std::log(jd), -sym.singularities.at(0).alpha);
}

/// h(0..J-1) with h(j) = omega_hat(-1-j) (minus side) or the series of
/// K(conj(omega)) (plus side). Quadrature below the crossover, contour above.
inline FourierSeries make_series(const SymbolSpec& sym, Side side, long J,
                                 MethodPolicy policy = {}) {
    if (J < 1) throw std::invalid_argument("make_series: J must be >= 1");
    const SymbolSpec working = side == Side::minus ? sym : conjugate(sym);
    FourierSeries out;
    out.side = side;
    out.values.resize(J);
    out.accuracy.resize(J);
    out.provenance.resize(J);
    const long crossover = std::max<long>(policy.crossover, 2);
    std::unique_ptr<ContourEvaluator<double>> ce;
    if (J > crossover) ce = std::make_unique<ContourEvaluator<double>>(working, 0);
    parallel_for(
        J,
        [&](long j) {
            const long idx = j + 1;
            if (idx <= crossover) {
                CoeffResult r = coeff_quadrature(working, idx);
                out.values[j] = r.value;
                out.accuracy[j] = r.abs_err;
                out.provenance[j] = Provenance::quadrature;
            } else {
                auto [val, err] = ce->coeff(double(idx));
                out.values[j] = val + detail::smooth_extra_coeff(working, idx);
                out.accuracy[j] = err;
                out.provenance[j] = Provenance::contour;
            }
        },
        policy.jobs);
    return out;
}

/// m-th forward difference g^{(m)}(j) = g^{(m-1)}(j+1) - g^{(m-1)}(j).
inline std::vector<std::complex<double>> finite_difference(
    std::vector<std::complex<double>> seq, int m) {
    if (m < 0 || std::size_t(m) > (seq.empty() ? 0 : seq.size() - 1))
        throw std::invalid_argument("finite_difference: m out of range");
    for (int pass = 0; pass < m; ++pass) {
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) seq[i] = seq[i + 1] - seq[i];
        seq.pop_back();
    }
    return seq;
}

struct RemainderDiagnostic {
    std::vector<long> indices;
    std::vector<double> scaled_remainders;
};

namespace detail {

/// Cardinal B-spline M_m on [0, m] (hardcoded through m = 3).
inline long double bspline(int m, long double u) {
    if (u <= 0 || u >= m) return m == 0 ? 1.0L : 0.0L;
    switch (m) {
        case 1:
            return 1.0L;
        case 2:
            return u <= 1 ? u : 2 - u;
        case 3:
            if (u <= 1) return u * u / 2;
            if (u <= 2) return (-2 * u * u + 6 * u - 3) / 2;
            return (3 - u) * (3 - u) / 2;
        default:
            throw std::domain_error("bspline: m must be <= 3");
    }
}

/// Delta^m [ j^{-1} (log j)^{-alpha} ] = int_0^m M_m(u) f^{(m)}(j+u) du.
inline long double delta_profile(long double alpha, int m, long double j) {
    if (m == 0) return std::pow(j, -1.0L) * std::pow(std::log(j), -alpha);
    long double total = 0;
    for (int piece = 0; piece < m; ++piece) {
        auto f = [&](long double u) {
            return std::complex<long double>(
                bspline(m, u) * power_log_profile_derivative(alpha, m, j + u));
        };
        total += integrate_panels(f, uniform_breakpoints(
                                         (long double)piece, (long double)piece + 1, 0.25L))
                     .value.real();
    }
    return total;
}

}  // namespace detail

/// Scaled remainders |Delta^m g(-j)| j^{1+m} (log j)^{alpha+1} where
/// g(-j) = omega_hat(-j) - b j^{-1} (log j)^{-alpha}. The difference is
/// evaluated directly (difference factor inside the contour integrand, exact
/// derivative quadrature for the leading profile) so the result keeps
/// relative accuracy at large j.
inline RemainderDiagnostic remainder_diagnostic(const SymbolSpec& sym,
                                                const std::vector<long>& j_list, int m,
                                                int jobs = 0) {
    if (sym.singularities.size() != 1 ||
        std::abs(sym.singularities[0].zeta - std::complex<double>(1.0)) > 1e-12)
        throw std::invalid_argument(
            "remainder_diagnostic: requires a single singularity at zeta = 1");
    if (m < 0 || m > 3) throw std::domain_error("remainder_diagnostic: m must be in [0, 3]");
    for (long j : j_list)
        if (j < 2) throw std::domain_error("remainder_diagnostic: indices must be >= 2");

    const long double alpha = sym.singularities[0].alpha;
    const std::complex<double> bd = sym.singularities[0].jump_mode == JumpMode::jump
                                        ? b_tilde(sym.singularities[0])
                                        : b_coefficient(sym.singularities[0]);
    const std::complex<long double> b(bd.real(), bd.imag());
    ContourEvaluator<long double> ce(sym, m);

    RemainderDiagnostic out;
    out.indices = j_list;
    out.scaled_remainders.resize(j_list.size());
    parallel_for(
        long(j_list.size()),
        [&](long i) {
            const long j = j_list[std::size_t(i)];
            std::complex<long double> val = ce.coeff((long double)j).first;
            // Exact m-th difference of the smooth term's coefficients.
            double binom = 1.0;
            for (int k = 0; k <= m; ++k) {
                double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
                std::complex<double> ck = detail::smooth_extra_coeff(sym, j + k);
                val += (long double)(sign * binom) *
                       std::complex<long double>(ck.real(), ck.imag());
                binom *= double(m - k) / double(k + 1);
            }
            std::complex<long double> lead = b * detail::delta_profile(alpha, m, (long double)j);
            long double scale =
                std::pow((long double)j, 1.0L + m) * std::pow(std::log((long double)j), alpha + 1);
            out.scaled_remainders[std::size_t(i)] = double(std::abs(val - lead) * scale);
        },
        jobs);
    return out;
}

/// int_0^c (-log y)^{-alpha} y^m e^{-yt} dy with graded panels into 0.
inline CoeffResult laplace_log_moment(double alpha, int m, double c, double t) {
    if (!(c > 0 && c < 1 && t > 0)) throw std::domain_error("laplace_log_moment: bad arguments");
    const double eps_core = std::exp(-detail::kCoreB);
    auto f = [&](double y) {
        return std::complex<double>(std::pow(-std::log(y), -alpha) * std::pow(y, double(m)) *
                                    std::exp(-y * t));
    };
    const double ymax = std::min(c, 60.0 / t);
    auto bp = graded_breakpoints(eps_core, ymax, 2.0, 8.0 / t);
    QuadResult<double> r = integrate_panels(f, bp);
    r.abs_err += 2 * eps_core * std::abs(f(eps_core));
    if (ymax < c) r.abs_err += std::abs(f(ymax)) / t;
    return {r.value, r.abs_err};
}

/// int (-log|x| + a)^{-alpha} 1_sign(x) chi0(x) x^m e^{ixt} dx via the
/// contour machinery (the cutoff is part of the integrand, as in the
/// two-term law it is tested against).
inline CoeffResult oscillatory_log_moment(std::complex<double> a, double alpha, int m, int sign,
                                          double t, CutoffSpec cutoff = {}) {
    using C = std::complex<double>;
    std::vector<C> v(std::size_t(m) + 1, C(0));
    v[std::size_t(m)] = C(detail::cpow_int(std::complex<double>(double(sign)), m));
    detail::BranchEvaluator<double> br(std::move(v), std::vector<C>{a}, -alpha, sign, 0, cutoff);
    QuadResult<double> r = br.eval(t);
    return {r.value, r.abs_err};
}

}  // namespace ratlog
