#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "onsager/error.hpp"
#include "onsager/generators.hpp"
#include "onsager/heuristics.hpp"

using namespace onsager;
using R = Rational;

TEST_CASE("f exponent examples") {
    CHECK(f_exponent(5.0 / 6.0, 2.0, 0.0) == doctest::Approx(-1.0 / 3.0));
    CHECK(f_exponent(1.0, 2.0, 0.0) == doctest::Approx(-0.4));
    for (double d : {0.0, 0.5, 1.0, 2.0, 3.0}) CHECK(f_exponent(0.7, 2.0, d) == doctest::Approx(1.4 / (d - 5.0)));
    CHECK(f_exponent(0.0, INFINITY, 0.0) == doctest::Approx(-0.6));
    CHECK_THROWS_AS(f_exponent(0.0, 2.0, 3.5), PreconditionError);
    CHECK_THROWS_AS(f_exponent(0.0, 0.5, 1.0), PreconditionError);
}

TEST_CASE("f exponent monotonicity in d") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(-1.0, 2.0), up(0.0, 1.0), ud(0.01, 2.99);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const double alpha = ua(rng), p = 1.0 / up(rng), d = ud(rng);
        const double sign = 1.0 - 2.0 / p - alpha;
        if (std::abs(sign) < 1e-6) continue;
        const double h = 1e-4;
        const double deriv = (f_exponent(alpha, p, d + h) - f_exponent(alpha, p, d - h)) / (2 * h);
        CHECK((deriv > 0) == (sign > 0));
        ++checked;
    }
    CHECK(checked > 990);
}

TEST_CASE("worst dimension and optimal beta") {
    const WorstCase w0 = worst_d(R(0), R(1, 4));
    CHECK(w0.d == WorstDimension::OneMinus);
    CHECK(optimal_inv_beta(R(0), R(1, 4)) == R(1, 4));
    CHECK(optimal_beta(R(0), R(1, 4)) == R(4));

    const WorstCase w56 = worst_d(R(5, 6), R(1, 2));
    CHECK(w56.d == WorstDimension::Zero);
    CHECK(optimal_beta(R(5, 6), R(1, 2)) == R(3));
    CHECK(to_string(WorstDimension::Zero) == "0");
    CHECK(to_string(WorstDimension::OneMinus) == "one-minus");

    for (int j = 0; j <= 40; ++j) {
        const R ip(j, 40);
        const R split = 1 - 2 * ip;
        const R below = split / 2 + R(1, 2) - ip;
        const R above = R(2, 5) * split + R(3, 5) - R(6, 5) * ip;
        CHECK(below == above);
        CHECK(optimal_inv_beta(split, ip) == below);
        for (int i = -20; i <= 40; ++i) {
            const R alpha(i, 20);
            const WorstCase w = worst_d(alpha, ip);
            CHECK((w.d == WorstDimension::Zero) == (alpha > split));
            // The optimal exponent is minus the worst-case f.
            CHECK(optimal_inv_beta(alpha, ip) == -w.f);
            const double d = w.d == WorstDimension::Zero ? 0.0 : 1.0;
            CHECK(to_double(w.f) == doctest::Approx(f_exponent(to_double(alpha), exponent_from_inverse(ip), d)));
        }
    }
    CHECK_THROWS_AS(optimal_beta(R(-3), R(1)), PreconditionError);
}

TEST_CASE("cascade slopes") {
    CascadeParams p;
    p.d = 0.0;
    p.alpha = 1.0;
    const CascadeResult r = cascade_simulate(p);
    REQUIRE(r.rows.size() == 40);
    std::vector<double> rem, h1, lam;
    for (const auto& row : r.rows) {
        rem.push_back(row.remaining_t);
        h1.push_back(row.h_alpha_norm);
        lam.push_back(row.lambda_n);
    }
    CHECK(loglog_slope(rem, h1) == doctest::Approx(-0.4).epsilon(0.02));
    CHECK(loglog_slope(rem, lam) == doctest::Approx(-0.4).epsilon(0.02));

    for (double d : {0.5, 1.0, 2.0, 2.9}) {
        CascadeParams q;
        q.d = d;
        q.alpha = 0.5;
        const CascadeResult c = cascade_simulate(q);
        std::vector<double> x, y;
        for (const auto& row : c.rows) {
            x.push_back(row.remaining_t);
            y.push_back(row.h_alpha_norm);
        }
        CHECK(loglog_slope(x, y) == doctest::Approx(2 * 0.5 / (d - 5.0)).epsilon(0.02));
    }
}

TEST_CASE("cascade bookkeeping") {
    for (double d : {0.0, 1.0, 2.5}) {
        for (double e : {0.5, 1.0, 4.0}) {
            CascadeParams p;
            p.d = d;
            p.energy = e;
            p.start_shell = 2;
            p.shells = 30;
            p.p = 2.0;
            const CascadeResult r = cascade_simulate(p);
            const double ratio = std::pow(2.0, -(5.0 - d) / 2.0);
            const double tstar = std::pow(e, -0.5) * std::pow(4.0, -(5.0 - d) / 2.0) / (1.0 - ratio);
            CHECK(r.T_star == doctest::Approx(tstar).epsilon(1e-12));
            CHECK(std::isfinite(r.T_star));
            double cum = 0.0;
            for (std::size_t i = 0; i < r.rows.size(); ++i) {
                const auto& row = r.rows[i];
                CHECK(row.n == 2 + static_cast<int>(i));
                CHECK(row.lambda_n == std::ldexp(1.0, row.n));
                CHECK(row.T_n == doctest::Approx(e / (std::pow(row.lambda_n, (5 - d) / 2) * std::pow(e, 1.5))));
                cum += row.T_n;
                CHECK(row.cumulative_t == doctest::Approx(cum));
                CHECK(row.remaining_t == doctest::Approx(r.T_star - row.cumulative_t).epsilon(1e-9).scale(r.T_star));
                CHECK(row.remaining_t > 0.0);
                CHECK(row.besov_norm == row.h_alpha_norm);
                CHECK(row.h_alpha_norm == doctest::Approx(row.lambda_n * std::sqrt(e)));
            }
        }
    }
    CHECK_THROWS_AS(cascade_simulate(CascadeParams{3.0}), PreconditionError);
    CHECK_THROWS_AS(cascade_simulate(CascadeParams{0.0, 0.0}), PreconditionError);

    CascadeParams b;
    b.d = 1.0;
    b.p = 4.0;
    b.alpha = 0.0;
    for (const auto& row : cascade_simulate(b).rows)
        CHECK(row.besov_norm == doctest::Approx(std::pow(row.lambda_n, 0.5 * 2.0 / 2.0)));
}

TEST_CASE("enstrophy integrability") {
    CascadeParams p;
    p.d = 1.0;
    const CascadeResult one = cascade_simulate(p);
    CHECK(one.enstrophy_ratio == doctest::Approx(1.0));
    CHECK(one.enstrophy_diverges);
    const double first = one.rows.front().enstrophy_partial_sum;
    CHECK(one.rows.back().enstrophy_partial_sum == doctest::Approx(40 * first));

    p.d = 2.0;
    const CascadeResult two = cascade_simulate(p);
    CHECK(two.enstrophy_diverges);
    CHECK(two.rows.back().enstrophy_partial_sum > 1e4 * two.rows.front().enstrophy_partial_sum);

    p.d = 0.5;
    const CascadeResult half = cascade_simulate(p);
    CHECK_FALSE(half.enstrophy_diverges);
    const double limit = half.rows.front().enstrophy_partial_sum / (1.0 - half.enstrophy_ratio);
    CHECK(half.rows.back().enstrophy_partial_sum <= limit * (1 + 1e-12));
}

TEST_CASE("linear against nonlinear") {
    const double lam = std::ldexp(1.0, 10);
    const TermScales a = linear_vs_nonlinear(lam, 1.0, 2.0);
    CHECK(a.linear / a.nonlinear == doctest::Approx(32.0));
    CHECK(a.linear_dominates);
    const TermScales b = linear_vs_nonlinear(lam, 1.0, 1.0);
    CHECK(b.linear == doctest::Approx(b.nonlinear));
    const TermScales c = linear_vs_nonlinear(lam, 1.0, 0.0);
    CHECK(c.linear / c.nonlinear == doctest::Approx(1.0 / 32.0));
    CHECK_FALSE(c.linear_dominates);
    for (double d = 0.05; d < 3.0; d += 0.1) CHECK(linear_vs_nonlinear(64.0, 1.0, d).linear_dominates == (d > 1.0));
}

TEST_CASE("intermittency estimate") {
    const Grid g = make_grid(32);
    // |u| = 1 everywhere for the helical mode, so the estimate is exactly 3.
    CHECK(intermittency_estimate(helical_mode(g, 3), 1) == doctest::Approx(3.0).epsilon(0.05 / 3));
    // cos 3x: sup/L2 gains a factor sqrt 2, which costs log 2 / log lambda_1 = 1.
    CHECK(intermittency_estimate(shear_mode(g, 3, 1.0), 1) == doctest::Approx(2.0));
    CHECK_THROWS_AS(intermittency_estimate(VelocityField(g), 1), PreconditionError);

    const Grid g64 = make_grid(64);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const VelocityField u0 = intermittent_field(g64, 4, 0.0, seed);
        CHECK(std::abs(intermittency_estimate(u0, 4) - 0.0) <= 0.3);
        const VelocityField u2 = intermittent_field(g64, 4, 2.0, seed);
        const double d2 = intermittency_estimate(u2, 4);
        CHECK(std::abs(d2 - 2.0) <= 0.3);
        CHECK(intermittency_estimate(-3.5 * u2, 4) == doctest::Approx(d2).epsilon(1e-12));
        CHECK(intermittency_estimate(0.01 * u2, 4) == doctest::Approx(d2).epsilon(1e-12));
    }
}

TEST_CASE("log-log slope") {
    std::vector<double> x, y;
    for (int i = 1; i <= 20; ++i) {
        x.push_back(i);
        y.push_back(3.0 * std::pow(i, -1.7));
    }
    CHECK(loglog_slope(x, y) == doctest::Approx(-1.7));
    CHECK(loglog_slope(x, y, 20) == doctest::Approx(-1.7));
    CHECK_THROWS_AS(loglog_slope(x, y, 1), PreconditionError);
    CHECK_THROWS_AS(loglog_slope(x, y, 21), PreconditionError);
}
