#include "catch_amalgamated.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "ratlog/hankel.hpp"

using namespace ratlog;
using C = std::complex<double>;

namespace {
FourierSeries random_series(long len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    FourierSeries s;
    for (long j = 0; j < len; ++j) s.values.push_back({g(rng), g(rng)});
    s.accuracy.assign(s.values.size(), 0.0);
    s.provenance.assign(s.values.size(), Provenance::quadrature);
    return s;
}

FourierSeries geometric_series(long len, double q) {
    FourierSeries s;
    for (long j = 0; j < len; ++j) s.values.push_back({std::pow(q, double(j)), 0.0});
    return s;
}
}  // namespace

TEST_CASE("construction requires 2N-1 coefficients and says so") {
    FourierSeries s = random_series(10, 1);
    REQUIRE_NOTHROW(HankelOperator(s, 5));
    try {
        HankelOperator op(s, 8);
        FAIL("expected length check to throw");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        REQUIRE(msg.find("10") != std::string::npos);
        REQUIRE(msg.find("15") != std::string::npos);
    }
}

TEST_CASE("entries and dense layout follow h(j+k)") {
    FourierSeries s = random_series(9, 2);
    HankelOperator op(s, 5);
    Eigen::MatrixXcd M = op.dense();
    for (long j = 0; j < 5; ++j)
        for (long k = 0; k < 5; ++k) {
            REQUIRE(op.entry(j, k) == s.values[std::size_t(j + k)]);
            REQUIRE(M(j, k) == s.values[std::size_t(j + k)]);
        }
}

TEST_CASE("fast matvec equals the naive one") {
    for (long N : {7L, 64L, 333L}) {
        FourierSeries s = random_series(2 * N - 1, std::uint64_t(N));
        HankelOperator op(s, N);
        std::mt19937_64 rng(99);
        std::normal_distribution<double> g;
        Eigen::VectorXcd x(N);
        for (long i = 0; i < N; ++i) x[i] = C(g(rng), g(rng));
        Eigen::VectorXcd fast = op.matvec_fast(x), naive = op.matvec_naive(x);
        REQUIRE((fast - naive).norm() <= 1e-12 * naive.norm());
    }
}

TEST_CASE("adjoint matvec matches the dense adjoint") {
    const long N = 40;
    FourierSeries s = random_series(2 * N - 1, 7);
    HankelOperator op(s, N);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    Eigen::VectorXcd x(N);
    for (long i = 0; i < N; ++i) x[i] = C(g(rng), g(rng));
    Eigen::VectorXcd got = op.matvec_adjoint(x);
    Eigen::VectorXcd ref = op.dense().adjoint() * x;
    REQUIRE((got - ref).norm() <= 1e-12 * ref.norm());
}

TEST_CASE("rank-one geometric symbol: s0 = 4/3, s1 = 0") {
    FourierSeries s = geometric_series(511, 0.5);
    HankelOperator op(s, 256);
    SingularValues dense = singular_values_dense(op);
    SingularValues iter = singular_values_iterative(op, 2, 1e-12);
    // h(j+k) = 2^{-j} 2^{-k}: rank one, norm = sum_j 4^{-j} = 4/3
    REQUIRE(std::abs(dense.values[0] - 4.0 / 3.0) <= 1e-10);
    REQUIRE(std::abs(iter.values[0] - 4.0 / 3.0) <= 1e-10);
    REQUIRE(dense.values[1] <= 1e-10);
    REQUIRE(iter.values[1] <= 1e-10);
    REQUIRE(iter.converged_count >= 2);
}

TEST_CASE("iterative solver matches dense on a random operator") {
    const long N = 96;
    FourierSeries s = random_series(2 * N - 1, 11);
    HankelOperator op(s, N);
    SingularValues dense = singular_values_dense(op);
    SingularValues iter = singular_values_iterative(op, 10, 1e-12);
    for (int i = 0; i < 10; ++i)
        REQUIRE(std::abs(dense.values[std::size_t(i)] - iter.values[std::size_t(i)]) <=
                1e-10 * dense.values[0]);
}

TEST_CASE("iterative solver is deterministic for a fixed seed") {
    const long N = 64;
    FourierSeries s = random_series(2 * N - 1, 3);
    HankelOperator op(s, N);
    SingularValues a = singular_values_iterative(op, 6, 1e-10, 123);
    SingularValues b = singular_values_iterative(op, 6, 1e-10, 123);
    REQUIRE(a.values == b.values);
}

TEST_CASE("dense path refuses oversized operators") {
    FourierSeries s = geometric_series(2 * 4096 - 1, 0.99);
    HankelOperator op(s, 4096);
    REQUIRE_THROWS_AS(singular_values_dense(op), std::invalid_argument);
}

TEST_CASE("tail norm of the geometric symbol has the closed form") {
    FourierSeries s = geometric_series(511, 0.5);
    // shifted tail h(N+j) = 2^{-N} 2^{-j} is again rank one
    double got = tail_norm_estimate(s, 8);
    REQUIRE(std::abs(got - std::pow(2.0, -8) * 4.0 / 3.0) < 1e-10);
    // decays with N
    REQUIRE(tail_norm_estimate(s, 16) < got);
}
