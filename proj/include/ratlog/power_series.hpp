#pragma once

// Truncated complex Taylor series arithmetic. Degrees stay small (<= ~16);
// everything is dense O(d^2) and templated on the real scalar so the
// high-accuracy diagnostics can run in long double.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ratlog {

template <class Real>
class PowerSeries {
  public:
    using C = std::complex<Real>;

    PowerSeries() = default;
    explicit PowerSeries(std::size_t degree) : c_(degree + 1, C(0)) {}
    PowerSeries(std::initializer_list<C> coeffs) : c_(coeffs) {}

    static PowerSeries constant(C value, std::size_t degree) {
        PowerSeries s(degree);
        s.c_[0] = value;
        return s;
    }

    /// The identity series x0 + s (value x0, slope 1).
    static PowerSeries variable(C x0, std::size_t degree) {
        PowerSeries s(degree);
        s.c_[0] = x0;
        if (degree >= 1) s.c_[1] = C(1);
        return s;
    }

    /// Taylor expansion of the polynomial sum_k p[k] x^k about x0.
    static PowerSeries from_polynomial(const std::vector<C>& p, C x0, std::size_t degree) {
        PowerSeries r = constant(C(0), degree);
        PowerSeries x = variable(x0, degree);
        for (std::size_t i = p.size(); i-- > 0;) {
            r = r * x;
            r.c_[0] += p[i];
        }
        return r;
    }

    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const C& operator[](std::size_t k) const { return c_[k]; }
    C& operator[](std::size_t k) { return c_[k]; }

    C value() const { return c_.empty() ? C(0) : c_[0]; }

    /// k-th derivative value at the expansion point: k! * c_k.
    C derivative_at_origin(std::size_t k) const {
        if (k >= c_.size()) return C(0);
        Real f = 1;
        for (std::size_t i = 2; i <= k; ++i) f *= Real(i);
        return c_[k] * f;
    }

    PowerSeries operator+(const PowerSeries& o) const {
        PowerSeries r(std::max(degree(), o.degree()));
        for (std::size_t k = 0; k < r.c_.size(); ++k) {
            if (k < c_.size()) r.c_[k] += c_[k];
            if (k < o.c_.size()) r.c_[k] += o.c_[k];
        }
        return r;
    }
    PowerSeries operator-(const PowerSeries& o) const {
        PowerSeries r(std::max(degree(), o.degree()));
        for (std::size_t k = 0; k < r.c_.size(); ++k) {
            if (k < c_.size()) r.c_[k] += c_[k];
            if (k < o.c_.size()) r.c_[k] -= o.c_[k];
        }
        return r;
    }
    PowerSeries operator*(const PowerSeries& o) const {
        PowerSeries r(std::max(degree(), o.degree()));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size() && i + j < r.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        return r;
    }
    PowerSeries operator*(C s) const {
        PowerSeries r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    /// exp of the series (general constant term).
    PowerSeries exp() const {
        const std::size_t d = degree();
        PowerSeries b = *this;
        C a0 = b.c_[0];
        b.c_[0] = C(0);
        PowerSeries r = constant(C(1), d);
        PowerSeries term = constant(C(1), d);
        Real kfac = 1;
        for (std::size_t k = 1; k <= d; ++k) {
            term = term * b;
            kfac *= Real(k);
            r = r + term * C(Real(1) / kfac);
        }
        return r * std::exp(a0);
    }

    /// Principal log of the series; requires a nonzero constant term.
    PowerSeries log() const {
        const std::size_t d = degree();
        C a0 = c_[0];
        if (a0 == C(0)) throw std::domain_error("PowerSeries::log: zero constant term");
        PowerSeries b = *this * (C(1) / a0);
        b.c_[0] = C(0);  // b = a/a0 - 1
        PowerSeries r = constant(std::log(a0), d);
        PowerSeries term = constant(C(1), d);
        for (std::size_t k = 1; k <= d; ++k) {
            term = term * b;
            Real sign = (k % 2 == 1) ? Real(1) : Real(-1);
            r = r + term * C(sign / Real(k));
        }
        return r;
    }

    /// Principal branch power a^p, p real.
    PowerSeries pow(Real p) const { return (log() * C(p)).exp(); }

    /// Multiplicative inverse; requires a nonzero constant term.
    PowerSeries inverse() const {
        const std::size_t d = degree();
        C a0 = c_[0];
        if (a0 == C(0)) throw std::domain_error("PowerSeries::inverse: zero constant term");
        PowerSeries b = *this * (C(1) / a0);
        b.c_[0] = C(0);
        PowerSeries r = constant(C(1), d);
        PowerSeries term = constant(C(1), d);
        for (std::size_t k = 1; k <= d; ++k) {
            term = term * b;
            Real sign = (k % 2 == 1) ? Real(-1) : Real(1);
            r = r + term * C(sign);
        }
        return r * (C(1) / a0);
    }

    /// Integer power by repeated multiplication (m >= 0).
    PowerSeries ipow(unsigned m) const {
        PowerSeries r = constant(C(1), degree());
        for (unsigned i = 0; i < m; ++i) r = r * (*this);
        return r;
    }

  private:
    std::vector<C> c_;
};

}  // namespace ratlog
