#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "onsager/dyadic.hpp"
#include "onsager/error.hpp"
#include "onsager/generators.hpp"
#include "onsager/norms_time.hpp"

using namespace onsager;

namespace {
template <class F>
NormSeries sample(F&& f, double a, double b, int count) {
    std::vector<double> t, v;
    for (int i = 0; i < count; ++i) {
        const double s = a + (b - a) * i / (count - 1);
        t.push_back(s);
        v.push_back(f(s));
    }
    return NormSeries(t, v);
}

/// s^{-1/2} on log-spaced points in [1e-8, 1].
NormSeries inverse_sqrt_series(int count, double exponent = 0.5) {
    std::vector<double> t, v;
    for (int i = 0; i < count; ++i) {
        const double s = std::pow(10.0, -8.0 + 8.0 * i / (count - 1));
        t.push_back(s);
        v.push_back(std::pow(s, -exponent));
    }
    return NormSeries(t, v);
}

/// Smooth nonnegative random series sampled on a fine grid.
NormSeries smooth_random(std::mt19937_64& rng, int count = 2000) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double T = 0.5 + 2.0 * u(rng);
    double a[4], w[4], ph[4];
    for (int j = 0; j < 4; ++j) {
        a[j] = u(rng);
        w[j] = 1.0 + 6.0 * u(rng);
        ph[j] = 6.28 * u(rng);
    }
    const double base = 0.2 * u(rng);
    return sample(
        [&](double s) {
            double v = 0.0;
            for (int j = 0; j < 4; ++j) v += a[j] * std::sin(w[j] * s + ph[j]);
            return base + std::abs(v);
        },
        0.0, T, count);
}

VelocityField shear_at(const Grid& g, double nu, double t) {
    VelocityField u = shear_mode(g, 3, std::sqrt(2.0) * std::exp(-9.0 * nu * t));
    u.time = t;
    return u;
}
}  // namespace

TEST_CASE("series validation") {
    CHECK_THROWS_AS(NormSeries({0.0}, {1.0}), PreconditionError);
    CHECK_THROWS_AS(NormSeries({0.0, 1.0}, {1.0}), PreconditionError);
    CHECK_THROWS_AS(NormSeries({0.0, 0.0}, {1.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(NormSeries({0.0, 1.0}, {1.0, -1.0}), PreconditionError);
}

TEST_CASE("distribution function") {
    const NormSeries c = sample([](double) { return 2.0; }, 0.0, 3.0, 50);
    CHECK(distribution_function(c, 1.0) == doctest::Approx(3.0));
    CHECK(distribution_function(c, 2.0) == 0.0);
    CHECK(distribution_function(c, 5.0) == 0.0);

    const NormSeries f = inverse_sqrt_series(100000);
    for (double t : {1.5, 3.0, 10.0, 100.0})
        CHECK(distribution_function(f, t) == doctest::Approx(std::pow(t, -2.0)).epsilon(0.02));
    double prev = distribution_function(f, 0.0);
    CHECK(prev <= f.span() * (1 + 1e-12));
    for (double t = 0.5; t < 1e3; t *= 1.3) {
        const double m = distribution_function(f, t);
        CHECK(m <= prev);
        prev = m;
    }
}

TEST_CASE("weak quasinorm") {
    const NormSeries c = sample([](double) { return 2.0; }, 0.0, 3.0, 50);
    for (double beta : {0.5, 1.0, 3.0})
        CHECK(weak_quasinorm(c, beta) == doctest::Approx(2.0 * std::pow(3.0, 1.0 / beta)));
    CHECK(weak_quasinorm(c, INFINITY) == 2.0);
    CHECK(weak_quasinorm(sample([](double) { return 0.0; }, 0, 1, 5), 2.0) == 0.0);
    for (double beta : {2.0, 3.0}) {
        const NormSeries f = inverse_sqrt_series(10000, 1.0 / beta);
        CHECK(weak_quasinorm(f, beta) == doctest::Approx(1.0).epsilon(0.05));
    }
    CHECK_THROWS_AS(weak_quasinorm(c, 0.0), PreconditionError);
}

TEST_CASE("time norm") {
    const NormSeries c = sample([](double) { return 2.0; }, 0.0, 3.0, 50);
    for (double beta : {0.5, 1.0, 3.0})
        CHECK(time_norm(c, beta) == doctest::Approx(2.0 * std::pow(3.0, 1.0 / beta)));
    CHECK(time_norm(sample([](double s) { return s; }, 0.0, 1.0, 10000), 1.0) ==
          doctest::Approx(0.5).epsilon(1e-6));
    CHECK(time_norm(inverse_sqrt_series(10000), 0.5) == doctest::Approx(16.0 / 9.0).epsilon(0.01));
    CHECK(time_norm(sample([](double s) { return s; }, 0.0, 1.0, 11), INFINITY) == 1.0);
}

TEST_CASE("exceptional sets") {
    const NormSeries f = inverse_sqrt_series(100000);
    for (int q = 0; q <= 5; ++q) {
        const ExceptionalSet e = exceptional_set(f, q, 2.0);
        CHECK(e.threshold == doctest::Approx(lambda(q)));
        CHECK(e.measure == doctest::Approx(std::pow(lambda(q), -2.0)).epsilon(0.02));
        REQUIRE(e.intervals.size() == 1);
        CHECK(e.intervals[0].lo == f.times().front());
    }
    const double beta = 3.0;
    const int q = 2;
    const double thr = std::pow(lambda(q), 2.0 / beta);
    const NormSeries low = sample([&](double s) { return 0.5 * thr * std::sin(s) * std::sin(s); }, 0, 3, 40);
    CHECK(exceptional_set(low, q, beta).measure == 0.0);
    CHECK(exceptional_set(low, q, beta).intervals.empty());
    const NormSeries at = sample([&](double) { return thr; }, 0.0, 2.0, 7);
    const ExceptionalSet full = exceptional_set(at, q, beta);
    REQUIRE(full.intervals.size() == 1);
    CHECK(full.intervals[0].lo == 0.0);
    CHECK(full.intervals[0].hi == 2.0);
    CHECK(full.measure == doctest::Approx(2.0));
}

TEST_CASE("inequalities on random smooth series") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const NormSeries f = smooth_random(rng);
        for (double beta : {1.0, 1.5, 2.0, 3.0}) {
            const double strong = time_norm(f, beta);
            const double weak = weak_quasinorm(f, beta);
            CHECK(weak <= strong);
            for (double t : {0.1, 0.3, 0.6, 1.0, 1.5})
                CHECK(std::pow(strong, beta) >= std::pow(t, beta) * distribution_function(f, t));
            for (int q = 0; q <= 4; ++q)
                CHECK(exceptional_set(f, q, beta).measure <=
                      std::pow(weak, beta) * std::pow(lambda(q), -2.0) * (1 + 1e-12));
        }
        const double c = 3.7;
        const NormSeries g = f.scaled(c);
        CHECK(weak_quasinorm(g, 2.0) == doctest::Approx(c * weak_quasinorm(f, 2.0)).epsilon(1e-13));
        CHECK(time_norm(g, 0.5) == doctest::Approx(c * time_norm(f, 0.5)).epsilon(1e-13));
        CHECK(distribution_function(g, 0.5 * c) == distribution_function(f, 0.5));
        CHECK(exceptional_set(g, 1, 2.0).measure == doctest::Approx(superlevel_set(f, 2.0 / c).measure));
    }
}

TEST_CASE("membership of trajectories") {
    const Grid g = make_grid(32);
    const double nu = 0.1;
    std::vector<VelocityField> zero;
    for (int i = 0; i < 3; ++i) {
        VelocityField z(g);
        z.time = 0.5 * i;
        zero.push_back(z);
    }
    const Membership mz = membership(Trajectory(nu, zero), {2.0, true, {0.0, 3.0, INFINITY}});
    CHECK(mz.value == 0.0);
    CHECK(mz.finite_at_resolution);

    std::vector<VelocityField> snaps;
    const double T = 1.0;
    for (int i = 0; i <= 200; ++i) snaps.push_back(shear_at(g, nu, T * i / 200));
    const Trajectory traj(nu, snaps);
    const Membership m = membership(traj, {3.0, false, {0.0, 3.0, INFINITY}});
    // ||A cos 3x||_3 = A ((2pi)^2 * 8/3)^{1/3}; A(t) = sqrt(2) e^{-9 nu t}.
    const double c3 = std::cbrt(std::pow(2.0 * M_PI, 2) * 8.0 / 3.0);
    const double closed = c3 * std::sqrt(2.0) * std::cbrt((1.0 - std::exp(-27.0 * nu * T)) / (27.0 * nu));
    CHECK(m.value == doctest::Approx(closed).epsilon(0.01));

    std::vector<VelocityField> scaled;
    for (const auto& u : snaps) {
        VelocityField v = 2.5 * u;
        v.time = u.time;
        scaled.push_back(v);
    }
    const Membership ms = membership(Trajectory(nu, scaled), {3.0, false, {0.0, 3.0, INFINITY}});
    CHECK(ms.value == doctest::Approx(2.5 * m.value).epsilon(1e-12));
}
