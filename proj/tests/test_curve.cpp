#include <doctest.h>

#include <cmath>

#include "faberlab/curve.hpp"

using namespace faberlab;

TEST_SUITE("curve") {

TEST_CASE("circle nodes at the quarter points") {
    auto grid = resample(CurveSpec::circle(1.0), 4);
    REQUIRE(grid.size() == 4);
    const Complex expect[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(grid[j].z - expect[j]) < 1e-12);
        CHECK(std::abs(std::abs(grid[j].dz) - 1.0) < 1e-12);
    }
}

TEST_CASE("circle radius preserved at all nodes") {
    auto grid = resample(CurveSpec::circle(2.5), 256);
    for (const auto& node : grid.nodes())
        CHECK(std::abs(std::abs(node.z) - 2.5) < 1e-12);
}

TEST_CASE("non-power-of-two node count rejected") {
    CHECK_THROWS_AS(resample(CurveSpec::circle(1.0), 7), Error);
    try {
        resample(CurveSpec::circle(1.0), 7);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Sizing);
    }
}

TEST_CASE("cusped custom curve rejected") {
    // z(s) traces a closed deltoid-like path whose speed vanishes at s = 0
    const double S = 2.0 * kPi;
    auto point = [](double s) { return Complex(std::cos(s), std::sin(s)); };
    auto deriv = [](double s) {
        // artificial speed dip to zero at s = 0
        double speed = std::sin(s / 2.0);
        return Complex(-std::sin(s), std::cos(s)) * speed;
    };
    CHECK_THROWS_AS(resample(CurveSpec::custom(point, deriv, S), 16), Error);
}

TEST_CASE("ellipse arc length matches adaptive quadrature") {
    const double a = 2.0, b = 1.0;
    auto spec = CurveSpec::ellipse(a, b);
    // fine composite Simpson of |z'(t)| = sqrt(a^2 sin^2 t + b^2 cos^2 t)
    auto speed = [&](double t) {
        return std::sqrt(a * a * std::sin(t) * std::sin(t) + b * b * std::cos(t) * std::cos(t));
    };
    const int m = 1 << 16;
    const double ht = 2.0 * kPi / m;
    double simpson = speed(0.0) + speed(2.0 * kPi);
    for (int j = 1; j < m; ++j) simpson += (j % 2 ? 4.0 : 2.0) * speed(j * ht);
    simpson *= ht / 3.0;
    CHECK(std::abs(spec.length() - simpson) < 1e-6 * simpson);

    // trapezoid of |z'(s)| over the arc-length grid reproduces S
    auto grid = resample(spec, 256);
    double total = 0.0;
    for (const auto& node : grid.nodes()) total += std::abs(node.dz) * grid.spacing();
    CHECK(std::abs(total - spec.length()) < 1e-6 * spec.length());
}

TEST_CASE("interior winding number is +1") {
    auto grid = resample(CurveSpec::ellipse(2.0, 1.0), 128);
    CHECK(std::abs(grid.winding_number(Complex(0.3, -0.2)) - 1.0) < 1e-6);
    CHECK(std::abs(grid.winding_number(Complex(5.0, 0.0))) < 1e-6);
}

TEST_CASE("carleson ratio of the unit circle peaks near pi") {
    auto report = check_regular(CurveSpec::circle(1.0), 512);
    CHECK(report.is_regular);
    CHECK(std::abs(report.sup_ratio - kPi) < 0.02 * kPi);
}

TEST_CASE("carleson ratio at small radii approaches 2") {
    auto grid = resample(CurveSpec::circle(1.0), 8192);
    std::vector<int> centers;
    for (int j = 0; j < 8192; j += 128) centers.push_back(j);
    std::vector<double> radii{0.06, 0.08, 0.1};
    double ratio = carleson_sup_ratio(grid, centers, radii);
    CHECK(std::abs(ratio - 2.0) < 0.02 * 2.0);
}

TEST_CASE("smooth ellipse is regular") {
    auto report = check_regular(CurveSpec::ellipse(2.0, 1.0), 512);
    CHECK(report.is_regular);
}

TEST_CASE("refining the radii grid cannot lower the estimate") {
    auto grid = resample(CurveSpec::circle(1.0), 512);
    std::vector<int> centers{0, 128, 256, 384};
    std::vector<double> coarse{0.5, 1.0, 2.0};
    std::vector<double> fine{0.5, 0.75, 1.0, 1.5, 2.0};
    CHECK(carleson_sup_ratio(grid, centers, fine) >=
          carleson_sup_ratio(grid, centers, coarse) - 1e-12);
}

} // TEST_SUITE
