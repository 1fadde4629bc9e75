#pragma once

// Smooth even cutoff: 1 on [-c1, c1], 0 outside (-c, c), glued with the
// flat bump S(x) = f(x)/(f(x)+f(1-x)), f(x) = exp(-1/x). All derivatives
// vanish at both junctions, which the Fourier machinery relies on.

#include <cmath>
#include <stdexcept>

#include "ratlog/power_series.hpp"

namespace ratlog {

struct CutoffSpec {
    double c1 = 0.25;
    double c = 0.5;

    void validate() const {
        if (!(0.0 < c1 && c1 < c && c < 1.0))
            throw std::invalid_argument("CutoffSpec: requires 0 < c1 < c < 1");
    }
};

namespace detail {

template <class Real>
Real bump_f(Real x) {
    return x > Real(0) ? std::exp(Real(-1) / x) : Real(0);
}

}  // namespace detail

/// chi0(theta); even, C-infinity, flat at |theta| = c1 and c.
template <class Real>
Real cutoff_value(const CutoffSpec& cut, Real theta) {
    const Real a = std::abs(theta);
    const Real c1 = Real(cut.c1), c = Real(cut.c);
    if (a <= c1) return Real(1);
    if (a >= c) return Real(0);
    const Real x = (c - a) / (c - c1);
    const Real f = detail::bump_f(x), g = detail::bump_f(Real(1) - x);
    return f / (f + g);
}

/// Taylor series of chi0 about theta0, valid for theta0 in (c1, c).
/// (Outside the transition the series is the constant 1 or 0.)
template <class Real>
PowerSeries<Real> cutoff_series(const CutoffSpec& cut, Real theta0, std::size_t degree) {
    using PS = PowerSeries<Real>;
    using C = std::complex<Real>;
    const Real c1 = Real(cut.c1), c = Real(cut.c);
    if (theta0 <= c1) return PS::constant(C(1), degree);
    if (theta0 >= c) return PS::constant(C(0), degree);
    PS x(degree);
    x[0] = C((c - theta0) / (c - c1));
    if (degree >= 1) x[1] = C(Real(-1) / (c - c1));
    PS one_minus_x = PS::constant(C(1), degree) - x;
    // exp(-1/x) with series inverses; both x and 1-x have positive value here.
    PS f = (x.inverse() * C(-1)).exp();
    PS g = (one_minus_x.inverse() * C(-1)).exp();
    return f * (f + g).inverse();
}

}  // namespace ratlog
