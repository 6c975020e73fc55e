#include <doctest.h>

#include <cmath>
#include <memory>

#include "faberlab/cauchy.hpp"

using namespace faberlab;

namespace {

std::shared_ptr<const DiscretizedCurve> circle_grid(int n) {
    return std::make_shared<DiscretizedCurve>(resample(CurveSpec::circle(1.0), n));
}

} // namespace

TEST_SUITE("cauchy") {

TEST_CASE("cauchy integral of analytic data") {
    auto grid = circle_grid(512);
    auto sq = BoundaryFunction::from_callable(grid, [](Complex z) { return z * z; });
    CHECK(std::abs(cauchy_integral(sq, Complex(0.3, 0.0)) - 0.09) < 1e-10);
    CHECK(std::abs(cauchy_integral(sq, Complex(3.0, 0.0))) < 1e-10);

    auto inv = BoundaryFunction::from_callable(grid, [](Complex z) { return 1.0 / z; });
    CHECK(std::abs(cauchy_integral(inv, Complex(2.0, 0.0)) - (-0.5)) < 1e-10);
}

TEST_CASE("near-curve evaluation is refused") {
    auto grid = circle_grid(64);
    auto f = BoundaryFunction::from_callable(grid, [](Complex z) { return z; });
    CHECK_THROWS_AS(cauchy_integral(f, Complex(1.0 + 0.1 * grid->spacing(), 0.0)), Error);
}

TEST_CASE("singular operator eigenrelations on circle monomials") {
    auto grid = circle_grid(512);
    for (int n = -16; n <= 16; ++n) {
        auto f = BoundaryFunction::from_callable(
            grid, [n](Complex z) { return std::pow(z, n); });
        auto sf = singular_op(f);
        double lam = (n >= 0) ? 0.5 : -0.5;
        double worst = 0.0;
        for (int j = 0; j < grid->size(); ++j)
            worst = std::max(worst, std::abs(sf[j] - lam * f[j]));
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("plemelj traces split laurent data") {
    auto grid = circle_grid(512);

    auto sq = BoundaryFunction::from_callable(grid, [](Complex z) { return z * z; });
    auto [p1, m1] = plemelj_values(sq);
    for (int j = 0; j < grid->size(); ++j) {
        CHECK(std::abs(p1[j] - sq[j]) < 1e-9);
        CHECK(std::abs(m1[j]) < 1e-9);
    }

    auto inv = BoundaryFunction::from_callable(grid, [](Complex z) { return 1.0 / z; });
    auto [p2, m2] = plemelj_values(inv);
    for (int j = 0; j < grid->size(); ++j) {
        CHECK(std::abs(p2[j]) < 1e-9);
        CHECK(std::abs(m2[j] + inv[j]) < 1e-9);
    }

    auto mix = BoundaryFunction::from_callable(
        grid, [](Complex z) { return z + 1.0 / z; });
    auto [p3, m3] = plemelj_values(mix);
    for (int j = 0; j < grid->size(); ++j) {
        CHECK(std::abs(p3[j] - grid->nodes()[j].z) < 1e-9);
        CHECK(std::abs(m3[j] + 1.0 / grid->nodes()[j].z) < 1e-9);
    }
}

TEST_CASE("jump identity holds exactly by construction") {
    auto grid = circle_grid(256);
    auto f = BoundaryFunction::from_callable(
        grid, [](Complex z) { return std::exp(z) + 0.7 / (z - Complex(0.0, 2.0)); });
    auto [fp, fm] = plemelj_values(f);
    auto sf = singular_op(f);
    for (int j = 0; j < grid->size(); ++j) {
        // the traces are +-f/2 + S f, so the identities hold to rounding
        CHECK(std::abs((fp[j] - fm[j]) - f[j]) < 1e-13);
        CHECK(std::abs((fp[j] + fm[j]) * 0.5 - sf[j]) < 1e-13);
    }
}

TEST_CASE("odd node counts are rejected by the PV rule") {
    // resample enforces powers of two, so build an odd grid by hand
    const int n = 9;
    auto spec = CurveSpec::circle(1.0);
    std::vector<CurveNode> nodes(n);
    const double S = spec.length();
    for (int j = 0; j < n; ++j) {
        double s = j * S / n;
        nodes[j] = {s, spec.point(s), spec.derivative(s)};
    }
    auto grid = std::make_shared<DiscretizedCurve>(spec, nodes);
    BoundaryFunction f(grid, std::vector<Complex>(n, 1.0));
    CHECK_THROWS_AS(singular_op(f), Error);
}

TEST_CASE("off-curve convergence is at least second order") {
    auto f512 = BoundaryFunction::from_callable(
        circle_grid(512), [](Complex z) { return std::exp(z); });
    auto f64 = BoundaryFunction::from_callable(
        circle_grid(64), [](Complex z) { return std::exp(z); });
    const Complex z(0.4, 0.1);
    const Complex truth = std::exp(z);
    double e64 = std::abs(cauchy_integral(f64, z) - truth);
    double e512 = std::abs(cauchy_integral(f512, z) - truth);
    // trapezoid on a closed analytic curve is spectral; demand at least h^2
    CHECK(e512 < e64 / 64.0 + 1e-14);
}

} // TEST_SUITE
