#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "ratlog/aak.hpp"

using namespace ratlog;
using C = std::complex<double>;

namespace {
DistanceSeries make_sorted(std::vector<double> v, DistanceSide side) {
    std::sort(v.rbegin(), v.rend());
    DistanceSeries d;
    d.side = side;
    d.values = std::move(v);
    d.converged_count = long(d.values.size());
    return d;
}
}  // namespace

TEST_CASE("merge is the sorted multiset union") {
    DistanceSeries p = make_sorted({3.0, 1.0}, DistanceSide::plus);
    DistanceSeries m = make_sorted({2.0, 0.5}, DistanceSide::minus);
    DistanceSeries mg = merge(p, m);
    REQUIRE(mg.values == std::vector<double>{3.0, 2.0, 1.0, 0.5});
    REQUIRE(mg.side == DistanceSide::merged);
    REQUIRE(mg.converged_count == 4);
}

TEST_CASE("merging against zeros appends zeros") {
    DistanceSeries p = make_sorted({0.0, 0.0, 0.0}, DistanceSide::plus);
    DistanceSeries m = make_sorted({2.0, 1.0}, DistanceSide::minus);
    DistanceSeries mg = merge(p, m);
    REQUIRE(mg.values == std::vector<double>{2.0, 1.0, 0.0, 0.0, 0.0});
}

TEST_CASE("merged value solves the min-max split") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> a(25), b(18);
        for (double& x : a) x = uni(rng);
        for (double& x : b) x = uni(rng);
        DistanceSeries p = make_sorted(a, DistanceSide::plus);
        DistanceSeries m = make_sorted(b, DistanceSide::minus);
        DistanceSeries mg = merge(p, m);
        for (std::size_t n = 0; n < mg.values.size(); ++n) {
            double best = 1e300;
            for (std::size_t np = 0; np <= n; ++np) {
                std::size_t nm = n - np;
                if (np >= p.values.size() && nm >= m.values.size()) continue;
                double vp = np < p.values.size() ? p.values[np] : 0.0;
                double vm = nm < m.values.size() ? m.values[nm] : 0.0;
                best = std::min(best, std::max(vp, vm));
            }
            REQUIRE(mg.values[n] == best);
        }
    }
}

TEST_CASE("counting: basic thresholds and additivity under merge") {
    DistanceSeries s = make_sorted({3.0, 2.0, 1.0}, DistanceSide::minus);
    REQUIRE(counting(s, 1.5).count == 2);
    REQUIRE(counting(s, 4.0).count == 0);
    REQUIRE(counting(s, 0.5).saturated);
    REQUIRE_THROWS_AS(counting(s, 0.0), std::invalid_argument);

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> a(30), b(30);
    for (double& x : a) x = uni(rng);
    for (double& x : b) x = uni(rng);
    DistanceSeries p = make_sorted(a, DistanceSide::plus);
    DistanceSeries m = make_sorted(b, DistanceSide::minus);
    DistanceSeries mg = merge(p, m);
    for (int i = 0; i < 50; ++i) {
        double thr = uni(rng);
        REQUIRE(counting(mg, thr).count == counting(p, thr).count + counting(m, thr).count);
    }
}

TEST_CASE("distance series is a bit-identical pass-through of singular values") {
    SymbolSpec sym = make_model_symbol(1.0, 1.0, 0.25, 1.0);
    FourierSeries ser = make_series(sym, Side::minus, 127);
    SolverOptions opt;
    DistanceSeries d = distances_from_series(ser, 8, 64, opt);
    SingularValues sv =
        singular_values_iterative(HankelOperator(ser, 64), 8, opt.tol, opt.seed, opt.max_iter);
    REQUIRE(d.values == sv.values);
    REQUIRE(d.tail_proxy > 0.0);
}

TEST_CASE("conjugation swaps sides exactly") {
    SymbolSpec sym = make_model_symbol(C(1.0, 0.0), C(0.9, 0.3), C(0.1, -0.2), 1.0);
    DistanceSeries a = rho_minus(sym, 6, 32);
    DistanceSeries b = rho_plus(conjugate(sym), 6, 32);
    REQUIRE(a.values == b.values);
}

TEST_CASE("real symbols have matching plus and minus distances") {
    SymbolSpec sym = make_model_symbol(1.0, 0.7, 0.2, 1.5);
    DistanceSeries m = rho_minus(sym, 6, 64);
    DistanceSeries p = rho_plus(sym, 6, 64);
    for (int i = 0; i < 6; ++i) REQUIRE(std::abs(m.values[std::size_t(i)] -
                                                 p.values[std::size_t(i)]) < 1e-9);
}

TEST_CASE("a single negative power is a rank-one tail") {
    SymbolSpec sym;
    sym.smooth_extra = {{-1, C(1.0)}};
    DistanceSeries d = rho_minus(sym, 4, 16);
    REQUIRE(std::abs(d.values[0] - 1.0) < 1e-12);
    for (int i = 1; i < 4; ++i) REQUIRE(d.values[std::size_t(i)] < 1e-12);
}

TEST_CASE("bmo norm of constants and the zero symbol") {
    SymbolSpec zero;
    REQUIRE(bmo_norm(zero, 8).value == 0.0);
    SymbolSpec cst;
    cst.smooth_extra = {{0, C(-2.5, 0.0)}};
    BmoNorm b = bmo_norm(cst, 8);
    REQUIRE(std::abs(b.value - 2.5) < 1e-14);
    REQUIRE(b.s0_minus < 1e-14);
    REQUIRE(b.s0_plus < 1e-14);
}

TEST_CASE("report ratio table follows prediction availability") {
    SECTION("degenerate: both b vanish") {
        SymbolSpec sym = make_model_symbol(0.0, 0.7, 0.7, 1.0);
        DistanceReport r = report(sym, 4, 32);
        REQUIRE(r.degenerate);
        REQUIRE(r.scaled_ratios.empty());
        // distances still decay
        REQUIRE(r.minus.values[3] < r.minus.values[0]);
    }
    SECTION("one-sided table rows") {
        SymbolSpec sym = make_model_symbol(0.0, 1.0, 0.0, 1.0);
        DistanceReport r = report(sym, 4, 32);
        REQUIRE(!r.degenerate);
        bool has_minus = false, has_merged = false;
        for (const RatioRow& row : r.scaled_ratios) {
            if (row.side == DistanceSide::minus) has_minus = true;
            if (row.side == DistanceSide::merged) has_merged = true;
            REQUIRE(row.scaled == std::pow(double(row.n), 1.0) * row.rho);
        }
        REQUIRE(has_minus);
        REQUIRE(has_merged);
    }
}

TEST_CASE("report for the conjugate symbol swaps sides, merged invariant") {
    SymbolSpec sym = make_model_symbol(C(1.0), C(0.9, 0.3), C(0.1, -0.2), 1.0);
    DistanceReport a = report(sym, 5, 32);
    DistanceReport b = report(conjugate(sym), 5, 32);
    for (int i = 0; i < 5; ++i) {
        REQUIRE(std::abs(a.minus.values[std::size_t(i)] - b.plus.values[std::size_t(i)]) < 1e-9);
        REQUIRE(std::abs(a.plus.values[std::size_t(i)] - b.minus.values[std::size_t(i)]) < 1e-9);
        REQUIRE(std::abs(a.merged.values[std::size_t(i)] - b.merged.values[std::size_t(i)]) <
                1e-9);
    }
}

TEST_CASE("smooth perturbations leave the prediction alone and shift distances boundedly") {
    SymbolSpec sym = make_model_symbol(1.0, 1.0, 0.25, 1.0);
    SymbolSpec pert = sym;
    pert.smooth_extra = {{-2, C(1.0)}, {-5, C(3.0)}};
    Prediction p0 = predict(sym), p1 = predict(pert);
    REQUIRE(p0.a_minus == p1.a_minus);
    REQUIRE(p0.b_minus[0] == p1.b_minus[0]);

    // Hankel operator of the perturbation alone
    SymbolSpec only;
    only.smooth_extra = pert.smooth_extra;
    DistanceSeries dp = rho_minus(only, 1, 16);
    const double shift_bound = dp.values[0];

    DistanceSeries base = rho_minus(sym, 8, 64);
    DistanceSeries shifted = rho_minus(pert, 8, 64);
    for (int i = 0; i < 8; ++i)
        REQUIRE(std::abs(base.values[std::size_t(i)] - shifted.values[std::size_t(i)]) <=
                shift_bound + 1e-10);
}
