// Acceptance gate: twelve pinned criteria, one pass/fail line each.
// Usage: acceptance [n ...]  (default: run all)
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ratlog/aak.hpp"
#include "ratlog/asymptotics.hpp"
#include "ratlog/fourier.hpp"
#include "ratlog/hankel.hpp"
#include "ratlog/io.hpp"

using namespace ratlog;
using C = std::complex<double>;
using clock_type = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool within(double measured, double threshold) { return measured <= threshold; }

std::string eng(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// 1. closed-form constants and the model-symbol b coefficient
bool crit_closed_forms(std::string& detail) {
    double k_err = std::max(std::abs(kappa(1.0) - 0.5), std::abs(kappa(0.5) - 1.0));
    bool ok = within(k_err, 1e-12);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        C v0(uni(rng), uni(rng)), vp(uni(rng), uni(rng)), vm(uni(rng), uni(rng));
        double alpha = 0.25 + 2.75 * std::abs(uni(rng)) / 2.0;
        SingularityParams p;
        p.alpha = alpha;
        p.v0_plus = p.v0_minus = Poly{v0};
        p.v1_plus = Poly{vp};
        p.v1_minus = Poly{vm};
        const C dv = (vp - vm) / C(0.0, 2.0 * std::numbers::pi);
        C minus_expect = C(1.0 - alpha) * v0 * 0.5 - dv;
        C plus_expect = C(1.0 - alpha) * v0 * 0.5 + dv;
        worst = std::max(worst, std::abs(b_coefficient(p) - minus_expect));
        worst = std::max(worst, std::abs(std::conj(b_coefficient(conjugate(p))) - plus_expect));
    }
    ok = ok && within(worst, 1e-14 * 10.0);  // scale: |v| up to 2, so ~1e-14 absolute
    detail = "kappa err " + eng(k_err) + ", b err " + eng(worst);
    return ok && within(worst, 1e-14 * 10.0);
}

// 2. rank-one geometric oracle
bool crit_rank_one(std::string& detail) {
    FourierSeries s;
    for (int j = 0; j < 511; ++j) s.values.push_back({std::pow(0.5, j), 0.0});
    HankelOperator op(s, 256);
    SingularValues d = singular_values_dense(op);
    SingularValues it = singular_values_iterative(op, 2, 1e-12);
    double e0 = std::max(std::abs(d.values[0] - 4.0 / 3.0), std::abs(it.values[0] - 4.0 / 3.0));
    double e1 = std::max(d.values[1], it.values[1]);
    detail = "s0 err " + eng(e0) + ", s1 " + eng(e1);
    return within(e0, 1e-10) && within(e1, 1e-10);
}

// 3. fast vs naive matvec
bool crit_matvec(std::string& detail) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (long N : {1024L, 16384L}) {
        for (int rep = 0; rep < 10; ++rep) {
            FourierSeries s;
            s.values.reserve(std::size_t(2 * N - 1));
            for (long j = 0; j < 2 * N - 1; ++j) s.values.push_back({g(rng), g(rng)});
            HankelOperator op(s, N);
            Eigen::VectorXcd x(N);
            for (long i = 0; i < N; ++i) x[i] = C(g(rng), g(rng));
            Eigen::VectorXcd naive = op.matvec_naive(x);
            worst = std::max(worst, (op.matvec_fast(x) - naive).norm() / naive.norm());
        }
    }
    detail = "worst rel " + eng(worst) + " over 20 draws";
    return within(worst, 1e-12);
}

// 4. iterative vs dense, top 50 at N = 512
bool crit_iterative_vs_dense(std::string& detail) {
    SymbolSpec sym = make_model_symbol(1.0, 1.0, 0.0, 1.0);
    FourierSeries ser = make_series(sym, Side::minus, 1023);
    HankelOperator op(ser, 512);
    SingularValues d = singular_values_dense(op);
    SingularValues it = singular_values_iterative(op, 50, 1e-14, 0x5eed5eedULL, 400);
    // relative with an absolute floor: dense absolute accuracy is ~eps*s0,
    // and the spectrum crosses that floor inside the top 50
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        std::size_t n = std::size_t(i);
        worst = std::max(worst,
                         std::abs(d.values[n] - it.values[n]) / (d.values[n] + 1e-6 * d.values[0]));
    }
    detail = "worst floored rel " + eng(worst);
    return within(worst, 1e-8);
}

// 5. quadrature vs contour cross-oracle
bool crit_cross_oracle(std::string& detail) {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.0}) {
        SymbolSpec sym = make_model_symbol(C(1.0), C(1.0), C(0.25), alpha);
        for (long j : {10L, 100L, 1000L, 10000L}) {
            CoeffResult q = coeff_quadrature(sym, j);
            CoeffResult c = coeff_contour(sym, double(j));
            worst = std::max(worst, std::abs(q.value - c.value) / std::abs(q.value));
        }
    }
    detail = "worst rel " + eng(worst);
    return within(worst, 1e-8);
}

// 6. remainder law: scaled remainders show no growth trend over dyadic j
bool crit_remainder_trend(std::string& detail) {
    std::vector<long> js;
    for (long j = 128; j <= (1L << 24); j *= 2) js.push_back(j);
    double worst_ratio = 0.0;
    for (double alpha : {0.5, 1.0, 2.0}) {
        SymbolSpec sym = make_model_symbol(C(1.0), C(0.6), C(-0.2), alpha);
        for (int m = 0; m <= 3; ++m) {
            RemainderDiagnostic d = remainder_diagnostic(sym, js, m);
            double all_max = 0.0, top3 = 0.0;
            for (std::size_t i = 0; i < d.scaled_remainders.size(); ++i) {
                all_max = std::max(all_max, d.scaled_remainders[i]);
                if (i + 3 >= d.scaled_remainders.size())
                    top3 = std::max(top3, d.scaled_remainders[i]);
            }
            worst_ratio = std::max(worst_ratio, top3 / (1.1 * all_max));
        }
    }
    detail = "worst top3/(1.1*all) " + eng(worst_ratio);
    return worst_ratio <= 1.0;
}

// 7. two-term expansion laws with a fitted constant
bool crit_two_term(std::string& detail) {
    double worst = 0.0;
    auto check_family = [&](const std::function<C(double)>& numeric,
                            const std::function<C(double)>& lead) {
        auto rel = [&](double t) {
            return std::abs(numeric(t) - lead(t)) / std::abs(lead(t)) *
                   std::pow(std::log(t), 2);
        };
        double Cfit = rel(1e6);
        for (double t : {1e7, 1e8}) worst = std::max(worst, rel(t) / (3.0 * Cfit));
    };
    for (double alpha : {0.5, 1.0, 2.0})
        for (int m : {0, 1}) {
            check_family([=](double t) { return laplace_log_moment(alpha, m, 0.5, t).value; },
                         [=](double t) { return laplace_two_term(alpha, m, t); });
            const C a(0.3, 0.1);
            for (int sign : {1, -1})
                check_family(
                    [=](double t) { return oscillatory_log_moment(a, alpha, m, sign, t).value; },
                    [=](double t) { return oscillatory_two_term(a, alpha, m, sign, t); });
        }
    detail = "worst rel/(3*Cfit) " + eng(worst);
    return worst <= 1.0;
}

// 8. merge identity against the brute-force min-max split, counting additivity
bool crit_merge(std::string& detail) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_int_distribution<int> len(1, 101);
    bool merge_ok = true;
    for (int trial = 0; trial < 1000 && merge_ok; ++trial) {
        DistanceSeries p, m;
        p.side = DistanceSide::plus;
        m.side = DistanceSide::minus;
        p.values.resize(std::size_t(len(rng)));
        m.values.resize(std::size_t(len(rng)));
        for (double& x : p.values) x = uni(rng);
        for (double& x : m.values) x = uni(rng);
        std::sort(p.values.rbegin(), p.values.rend());
        std::sort(m.values.rbegin(), m.values.rend());
        p.converged_count = long(p.values.size());
        m.converged_count = long(m.values.size());
        DistanceSeries mg = merge(p, m);
        for (std::size_t n = 0; n < mg.values.size() && n <= 200; ++n) {
            double best = 1e300;
            for (std::size_t np = 0; np <= n; ++np) {
                std::size_t nm = n - np;
                if (np >= p.values.size() && nm >= m.values.size()) continue;
                double vp = np < p.values.size() ? p.values[np] : 0.0;
                double vm = nm < m.values.size() ? m.values[nm] : 0.0;
                best = std::min(best, std::max(vp, vm));
            }
            if (mg.values[n] != best) merge_ok = false;
        }
        if (trial == 0) {
            for (int i = 0; i < 100; ++i) {
                double thr = uni(rng);
                if (counting(mg, thr).count !=
                    counting(p, thr).count + counting(m, thr).count)
                    merge_ok = false;
            }
        }
    }
    detail = merge_ok ? "1000 pairs, exact" : "mismatch found";
    return merge_ok;
}

// 9. singular-value law trend for the one-sided symbol at alpha = 1
bool crit_sv_trend(std::string& detail) {
    SymbolSpec sym = make_model_symbol(0.0, 1.0, 0.0, 1.0);
    Prediction pred = predict(sym);
    const double a = 1.0 / (4.0 * std::numbers::pi);
    bool pred_ok = std::abs(pred.a_minus - a) < 1e-14;

    FourierSeries ser = make_series(sym, Side::minus, 65535);
    auto ratio = [&](long N, long k, long n) {
        HankelOperator op(ser, N);
        SingularValues sv = singular_values_iterative(op, k, 1e-10);
        return double(n) * sv.values[std::size_t(n)] / a;
    };
    double r13 = ratio(1L << 13, 64, 32);
    double r14 = ratio(1L << 14, 64, 32);
    HankelOperator op15(ser, 1L << 15);
    SingularValues sv15 = singular_values_iterative(op15, 128, 1e-10);
    double r15_16 = 16.0 * sv15.values[16] / a;
    double r15_32 = 32.0 * sv15.values[32] / a;
    double r15_64 = 64.0 * sv15.values[64] / a;

    bool window_ok = 0.6 <= r15_64 && r15_64 <= 1.6;
    bool n_trend_ok = std::abs(r15_16 - 1.0) >= std::abs(r15_32 - 1.0) &&
                      std::abs(r15_32 - 1.0) >= std::abs(r15_64 - 1.0);
    bool N_trend_ok = std::abs(r13 - 1.0) >= std::abs(r14 - 1.0) &&
                      std::abs(r14 - 1.0) >= std::abs(r15_32 - 1.0);
    detail = "a- exact:" + std::string(pred_ok ? "yes" : "NO") +
             "; ratio(n=64,N=2^15) = " + eng(r15_64) + " target [0.6,1.6]:" +
             (window_ok ? "yes" : "NO") + "; n-trend:" + (n_trend_ok ? "yes" : "NO") +
             "; N-trend(n=32: " + eng(r13) + "," + eng(r14) + "," + eng(r15_32) + "):" +
             (N_trend_ok ? "yes" : "NO") +
             ". Known finite-section deficit: an N-section captures only O(log N) modes of "
             "this operator family, so n = 64 at N = 2^15 cannot reach the limit.";
    return pred_ok && window_ok && n_trend_ok && N_trend_ok;
}

// 10. conjugation and reality symmetry
bool crit_conjugation(std::string& detail) {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0}) {
        SymbolSpec real_sym = make_model_symbol(1.0, 0.8, 0.3, alpha);
        DistanceSeries m = rho_minus(real_sym, 16, 128);
        DistanceSeries p = rho_plus(real_sym, 16, 128);
        for (int i = 0; i < 16; ++i)
            worst = std::max(worst, std::abs(m.values[std::size_t(i)] -
                                             p.values[std::size_t(i)]));
    }
    SymbolSpec cplx = make_model_symbol(C(1.0), C(0.9, 0.3), C(0.1, -0.2), 1.0);
    DistanceSeries lhs = rho_plus(conjugate(cplx), 16, 128);
    DistanceSeries rhs = rho_minus(cplx, 16, 128);
    bool bit_identical = lhs.values == rhs.values;
    detail = "real-symbol worst gap " + eng(worst) + ", conjugate identity bit-identical: " +
             (bit_identical ? "yes" : "NO");
    return within(worst, 1e-9) && bit_identical;
}

// 11. analytic symbol reduction
bool crit_analytic(std::string& detail) {
    AnalyticSymbolSpec aspec;
    aspec.alpha = 0.5;
    aspec.singularities.push_back({{1.0, 0.0}, Poly{C(1.0)}, Poly{C(3.0)}});
    double limit = predict_analytic(aspec);
    bool limit_ok = std::abs(limit - 0.5) < 1e-12;

    SingularityParams p = analytic_boundary_params(aspec, 0);
    SymbolSpec reduced;
    reduced.singularities.push_back(p);
    double worst = 0.0;
    for (int i = -20; i <= 20; ++i) {
        if (i == 0) continue;
        double theta = 0.25 * double(i) / 20.0;
        C direct = analytic_boundary_value(aspec.singularities[0], aspec.alpha, theta);
        auto red = evaluate(reduced, theta);
        worst = std::max(worst, std::abs(*red - direct));
    }
    C b_bar = b_coefficient(conjugate(p));
    double b_err = std::abs(b_bar - C(0.5));
    detail = "limit err " + eng(std::abs(limit - 0.5)) + ", boundary err " + eng(worst) +
             ", b err " + eng(b_err);
    return limit_ok && within(worst, 1e-10) && within(b_err, 1e-12);
}

// 12. smooth perturbation stability
bool crit_perturbation(std::string& detail) {
    SymbolSpec sym = make_model_symbol(0.0, 1.0, 0.0, 1.0);
    SymbolSpec pert = sym;
    pert.smooth_extra = {{-2, C(1.0)}, {-5, C(3.0)}};
    Prediction p0 = predict(sym), p1 = predict(pert);
    bool pred_same = p0.a_minus == p1.a_minus && p0.a_plus == p1.a_plus &&
                     p0.b_minus == p1.b_minus && p0.b_plus == p1.b_plus;

    SymbolSpec only;
    only.smooth_extra = pert.smooth_extra;
    double bound = rho_minus(only, 1, 16).values[0];

    DistanceSeries base = rho_minus(sym, 32, 1024);
    DistanceSeries shifted = rho_minus(pert, 32, 1024);
    double worst = 0.0;
    for (int i = 0; i < 32; ++i)
        worst = std::max(worst, std::abs(base.values[std::size_t(i)] -
                                         shifted.values[std::size_t(i)]));
    detail = "prediction unchanged: " + std::string(pred_same ? "yes" : "NO") +
             ", worst shift " + eng(worst) + " vs bound " + eng(bound);
    return pred_same && worst <= bound + 1e-10;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "closed-form constants", 1.0, crit_closed_forms},
        {2, "rank-one oracle", 1.0, crit_rank_one},
        {3, "fast matvec", 10.0, crit_matvec},
        {4, "iterative vs dense", 30.0, crit_iterative_vs_dense},
        {5, "cross-oracle Fourier", 120.0, crit_cross_oracle},
        {6, "remainder law trend", 300.0, crit_remainder_trend},
        {7, "two-term laws", 120.0, crit_two_term},
        {8, "merge identity", 10.0, crit_merge},
        {9, "singular-value law trend", 600.0, crit_sv_trend},
        {10, "conjugation symmetry", 60.0, crit_conjugation},
        {11, "analytic symbol", 60.0, crit_analytic},
        {12, "perturbation stability", 120.0, crit_perturbation},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        std::string detail;
        auto t0 = clock_type::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
        bool in_budget = secs < c.budget_seconds;
        ok = ok && in_budget;
        if (!ok) ++failures;
        std::printf("criterion %2d [%s]: %s  (%.1fs%s; %s)\n", c.id, c.name,
                    ok ? "PASS" : "FAIL", secs, in_budget ? "" : " OVER BUDGET",
                    detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
