#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "onsager/dyadic.hpp"
#include "onsager/error.hpp"
#include "onsager/generators.hpp"
#include "onsager/io.hpp"
#include "onsager/spectral.hpp"
#include "support.hpp"

using namespace onsager;

namespace {
const double kTwoPi = 2.0 * M_PI;
const double kVol = std::pow(kTwoPi, 3);

VelocityField rough_random(const Grid& g, unsigned seed) {
    // Not projected, not dealiased: exercises the transforms on every mode.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    PhysicalField s{g.n, {}};
    for (auto& c : s.comp) {
        c.resize(s.size());
        for (auto& x : c) x = nd(rng);
    }
    return from_physical(s, g);
}
}  // namespace

TEST_CASE("make_grid sets the dealiasing cutoff") {
    CHECK(make_grid(64).kmax == 21);
    CHECK(make_grid(8).kmax == 2);
    CHECK_THROWS_AS(make_grid(7), PreconditionError);
    CHECK_THROWS_AS(make_grid(6), PreconditionError);
    CHECK(make_grid(64).product_size() == 64);
    CHECK(make_grid(66).product_size() > 66);
}

TEST_CASE("single mode synthesizes cos(3 x1)") {
    const Grid g = make_grid(16);
    VelocityField u(g);
    u.set_mode(1, 3, 0, 0, 0.5);
    CHECK(u.coeff(1, -3, 0, 0) == Complex(0.5, 0.0));
    const PhysicalField s = to_physical(u);
    double err = 0.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int l = 0; l < g.n; ++l) {
                const std::size_t p = (static_cast<std::size_t>(i) * g.n + j) * g.n + l;
                err = std::max(err, std::abs(s.comp[1][p] - std::cos(3.0 * kTwoPi * i / g.n)));
                err = std::max(err, std::abs(s.comp[0][p]) + std::abs(s.comp[2][p]));
            }
    CHECK(err < 1e-14);
}

TEST_CASE("zero coefficients give zero samples") {
    const PhysicalField s = to_physical(VelocityField(make_grid(8)));
    for (const auto& c : s.comp)
        for (double x : c) CHECK(x == 0.0);
}

TEST_CASE("transform round trip is the identity") {
    for (int n : {8, 16, 24}) {
        const Grid g = make_grid(n);
        const VelocityField u = rough_random(g, 7u + n);
        const VelocityField back = from_physical(to_physical(u), g);
        double peak = 0.0;
        for (int c = 0; c < 3; ++c)
            for (const auto& z : u.component(c)) peak = std::max(peak, std::abs(z));
        CHECK(max_coeff_diff(u, back) <= 1e-12 * peak);
        // Padded synthesis followed by analysis keeps the coefficients.
        const VelocityField d = dealias(u);
        CHECK(max_coeff_diff(d, from_physical(to_physical(d, g.product_size() + 4), g)) <=
              1e-12 * peak);
    }
}

TEST_CASE("synthesis agrees with direct summation of the series") {
    const Grid g = make_grid(8);
    const VelocityField u = random_divfree(g, band_profile(1, 2, 1.0), 3);
    const auto modes = test::nonzero_modes(u);
    const PhysicalField s = to_physical(u);
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> pick(0, g.n - 1);
    for (int t = 0; t < 20; ++t) {
        const int i = pick(rng), j = pick(rng), l = pick(rng);
        const double x[3] = {kTwoPi * i / g.n, kTwoPi * j / g.n, kTwoPi * l / g.n};
        const auto v = test::evaluate(modes, x);
        const std::size_t p = (static_cast<std::size_t>(i) * g.n + j) * g.n + l;
        for (int c = 0; c < 3; ++c) CHECK(s.comp[c][p] == doctest::Approx(v[c]).epsilon(1e-12));
    }
}

TEST_CASE("leray projection") {
    const Grid g = make_grid(16);
    SUBCASE("gradient fields are annihilated") {
        VelocityField grad(g);
        std::mt19937_64 rng(5);
        std::normal_distribution<double> nd;
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c) {
                    const Complex gk(nd(rng), nd(rng));
                    const int k[3] = {a, b, c};
                    for (int i = 0; i < 3; ++i) grad.set_mode(i, a, b, c, Complex(0.0, k[i]) * gk);
                }
        const VelocityField p = leray_project(grad);
        double peak = 0.0;
        for (int c = 0; c < 3; ++c)
            for (const auto& z : p.component(c)) peak = std::max(peak, std::abs(z));
        CHECK(peak < 1e-14);
    }
    SUBCASE("idempotent, norm nonincreasing, divergence-free") {
        const VelocityField u = rough_random(g, 11);
        const VelocityField p = leray_project(u);
        CHECK(divergence_residual(p) <= 1e-12);
        CHECK(max_coeff_diff(p, leray_project(p)) <= 1e-14);
        CHECK(energy(p) <= energy(u));
        // Mean mode untouched.
        for (int c = 0; c < 3; ++c) CHECK(p.component(c)[0] == u.component(c)[0]);
    }
    SUBCASE("divergence-free input is unchanged") {
        const VelocityField tg = taylor_green(g);
        CHECK(max_coeff_diff(tg, leray_project(tg)) <= 1e-14);
    }
}

TEST_CASE("lp_norm examples") {
    const Grid g = make_grid(16);
    VelocityField c(g);
    c.set_mode(0, 0, 0, 0, 2.5);
    for (double p : {1.0, 2.0, 3.0, 7.5})
        CHECK(lp_norm(c, p) == doctest::Approx(2.5 * std::pow(kVol, 1.0 / p)).epsilon(1e-13));
    CHECK(lp_norm(c, INFINITY) == doctest::Approx(2.5));
    const VelocityField cosmode = shear_mode(g, 3, 1.0);
    CHECK(lp_norm(cosmode, 2.0) == doctest::Approx(std::pow(kTwoPi, 1.5) / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(lp_norm(VelocityField(g), 3.0) == 0.0);
    CHECK(lp_norm(VelocityField(g), INFINITY) == 0.0);
    CHECK_THROWS_AS(lp_norm(c, 0.5), PreconditionError);
}

TEST_CASE("normalized lp norms are nondecreasing in p") {
    const Grid g = make_grid(16);
    for (unsigned seed = 0; seed < 10; ++seed) {
        const VelocityField u = random_divfree(g, power_law_profile(g.kmax, 1.0, 1.0), seed);
        double prev = 0.0;
        for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 10.0, double(INFINITY)}) {
            const double v = lp_norm(u, p) * (std::isinf(p) ? 1.0 : std::pow(kVol, -1.0 / p));
            CHECK(v >= prev * (1.0 - 1e-13));
            prev = v;
        }
    }
}

TEST_CASE("taylor_green datum") {
    for (int n : {8, 32}) {
        const Grid g = make_grid(n);
        const VelocityField u = taylor_green(g);
        CHECK(divergence_residual(u) <= 1e-14);
        CHECK(energy(u) == doctest::Approx(kVol / 4.0).epsilon(1e-12));
        for (int c = 0; c < 3; ++c) CHECK(u.component(c)[0] == Complex(0.0));
        CHECK(is_dealiased(u));
        // Physical samples match the closed form.
        const PhysicalField s = to_physical(u);
        double err = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    const double x = kTwoPi * i / n, y = kTwoPi * j / n, z = kTwoPi * l / n;
                    const std::size_t p = (static_cast<std::size_t>(i) * n + j) * n + l;
                    err = std::max(err, std::abs(s.comp[0][p] - std::sin(x) * std::cos(y) * std::cos(z)));
                    err = std::max(err, std::abs(s.comp[1][p] + std::cos(x) * std::sin(y) * std::cos(z)));
                    err = std::max(err, std::abs(s.comp[2][p]));
                }
        CHECK(err < 1e-14);
    }
}

TEST_CASE("random_divfree contract") {
    const Grid g = make_grid(32);
    const VelocityField zero = random_divfree(g, band_profile(1, 4, 0.0), 1);
    CHECK(energy(zero) == 0.0);

    const SpectrumProfile prof = power_law_profile(g.kmax, 5.0 / 6.0, 2.0);
    const VelocityField a = random_divfree(g, prof, 42);
    const VelocityField b = random_divfree(g, prof, 42);
    CHECK(max_coeff_diff(a, b) == 0.0);
    CHECK(max_coeff_diff(a, random_divfree(g, prof, 43)) > 0.0);
    CHECK(divergence_residual(a) <= 1e-12);
    CHECK(hermitian_residual(a) == 0.0);
    CHECK(is_dealiased(a));
    CHECK(lp_norm(a, 2.0) == doctest::Approx(2.0).epsilon(1e-12));

    // Per-bin L2 norms by direct summation.
    std::vector<double> bins(prof.bin_norm.size(), 0.0);
    for_each_mode(g, [&](std::size_t idx, int k1, int k2, int k3, double w) {
        const int m = static_cast<int>(std::lround(std::sqrt(double(k1 * k1 + k2 * k2 + k3 * k3))));
        if (m >= static_cast<int>(bins.size())) return;
        for (int c = 0; c < 3; ++c) bins[m] += w * std::norm(a.component(c)[idx]);
    });
    for (std::size_t m = 0; m < bins.size(); ++m)
        CHECK(std::sqrt(kVol * bins[m]) == doctest::Approx(prof.bin_norm[m]).epsilon(1e-10).scale(1e-12));

    SUBCASE("shell-concentrated profile occupies shells 1..3") {
        const VelocityField s = random_divfree(g, shell_profile(2, 1.0), 9);
        const DyadicShells sh = decompose(s);
        for (int q = -1; q <= sh.top(); ++q) {
            const double e = energy(sh.shell(q));
            if (q >= 1 && q <= 3)
                CHECK(e > 0.0);
            else
                CHECK(e == 0.0);
        }
    }
    SUBCASE("profiles beyond kmax are rejected") {
        SpectrumProfile too_wide = band_profile(1, g.kmax + 3, 1.0);
        CHECK_THROWS_AS(random_divfree(g, too_wide, 0), PreconditionError);
    }
}

TEST_CASE("intermittent_field contract") {
    const Grid g = make_grid(32);
    for (double d : {0.0, 1.5, 3.0}) {
        const VelocityField u = intermittent_field(g, 3, d, 17);
        CHECK(divergence_residual(u) <= 1e-12);
        CHECK(is_dealiased(u));
        CHECK(max_coeff_diff(u, intermittent_field(g, 3, d, 17)) == 0.0);
        const DyadicShells sh = decompose(u);
        double inside = 0.0, outside = 0.0;
        for (int q = -1; q <= sh.top(); ++q)
            ((q >= 2 && q <= 4) ? inside : outside) += energy(sh.shell(q));
        CHECK(inside > 0.0);
        CHECK(outside == 0.0);
    }
    const VelocityField full = intermittent_field(g, 3, 3.0, 2);
    const double ratio = lp_norm(full, INFINITY) / lp_norm(full, 2.0);
    const double base = std::pow(kTwoPi, -1.5);
    CHECK(ratio <= 2.0 * base);
    CHECK(ratio >= 0.5 * base);
    CHECK_THROWS_AS(intermittent_field(g, top_shell(g) + 1, 1.0, 0), PreconditionError);
}

TEST_CASE("trajectory validation") {
    const Grid g = make_grid(8);
    VelocityField a(g), b(g), c(make_grid(10));
    a.time = 0.0;
    b.time = 0.5;
    c.time = 1.0;
    CHECK_NOTHROW(Trajectory(0.1, {a, b}));
    CHECK_THROWS_AS(Trajectory(0.0, {a, b}), PreconditionError);
    CHECK_THROWS_AS(Trajectory(0.1, {a}), PreconditionError);
    CHECK_THROWS_AS(Trajectory(0.1, {b, a}), PreconditionError);
    CHECK_THROWS_AS(Trajectory(0.1, {a, c}), PreconditionError);
    VelocityField untimed(g);
    CHECK_THROWS_AS(Trajectory(0.1, {a, untimed}), PreconditionError);
}

TEST_CASE("ONSF1 snapshots and trajectory directories") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "onsager_io_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const Grid g = make_grid(8);
    VelocityField u = rough_random(g, 3);
    enforce_hermitian(u);
    u.time = 0.25;

    write_snapshot(dir / "a.onsf", u, 0.1);
    const Snapshot s = read_snapshot(dir / "a.onsf");
    CHECK(s.nu == 0.1);
    CHECK(s.field.time.value() == 0.25);
    CHECK(max_coeff_diff(u, s.field) == 0.0);
    CHECK(fs::file_size(dir / "a.onsf") > 8u * 8 * 8 * 48);

    {
        std::ofstream bad(dir / "bad.onsf");
        bad << "NOPE\n{}\n";
    }
    CHECK_THROWS_AS(read_snapshot(dir / "bad.onsf"), IoError);
    CHECK_THROWS_AS(read_snapshot(dir / "missing.onsf"), IoError);
    {
        const std::string full = [&] {
            std::ifstream in(dir / "a.onsf", std::ios::binary);
            return std::string(std::istreambuf_iterator<char>(in), {});
        }();
        std::ofstream cut(dir / "cut.onsf", std::ios::binary);
        cut << full.substr(0, full.size() - 5);
    }
    CHECK_THROWS_AS(read_snapshot(dir / "cut.onsf"), IoError);

    TrajectoryWriter w(dir / "traj", 0.05, 8);
    VelocityField v = taylor_green(g);
    for (int i = 0; i < 3; ++i) {
        v.time = 0.1 * i;
        w.add(v);
        w.add_budget(snapshot_budget(v));
    }
    w.finish();
    const TrajectoryReader r(dir / "traj");
    CHECK(r.nu() == 0.05);
    CHECK(r.size() == 3);
    const Trajectory t = r.load_all();
    CHECK(t.time(2) == doctest::Approx(0.2));
    CHECK(max_coeff_diff(t.snapshots()[1], v) == 0.0);
    REQUIRE(r.has_budgets());
    const auto budgets = r.budgets();
    REQUIRE(budgets.size() == 3);
    const SnapshotBudget direct = snapshot_budget(v);
    CHECK(budgets[1].flux == direct.flux);
    CHECK(budgets[1].low_energy == direct.low_energy);
    CHECK_THROWS_AS(TrajectoryReader(dir / "nowhere"), IoError);
    fs::remove_all(dir);
}

TEST_CASE("doubles are written with 17 significant digits") {
    for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300})
        CHECK(std::stod(format_double(x)) == x);
}
