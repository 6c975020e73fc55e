#include "faberlab/faber.hpp"

#include <algorithm>
#include <cmath>

namespace faberlab {

namespace {

// coefficient of z^m from samples of g(z) dz/dt on a closed loop z(t),
// t uniform on [0, 2pi): (1/2pi i) * (2pi/N) * sum g_j z_j^{-m-1} (dz/dt)_j
Complex loop_coefficient(const std::vector<Complex>& z, const std::vector<Complex>& g_dzdt,
                         int m) {
    const int nsamp = static_cast<int>(z.size());
    Complex sum(0.0, 0.0);
    for (int j = 0; j < nsamp; ++j)
        sum += g_dzdt[j] * std::pow(z[j], Complex(-m - 1.0, 0.0));
    return sum / (Complex(0.0, 1.0) * double(nsamp));
}

void check_closure(const std::vector<Complex>& closed_branch, const char* what) {
    const Complex ratio = closed_branch.back() / closed_branch.front();
    if (std::abs(ratio - 1.0) > 1e-8)
        throw Error(ErrorKind::Branch,
                    std::string(what) + ": branch does not close over the sampling loop");
}

} // namespace

Complex FaberPolynomial::evaluate(Complex z) const {
    if (side == FaberSide::Plus) {
        Complex v(0.0, 0.0);
        for (int m = static_cast<int>(coeffs.size()) - 1; m >= 0; --m) v = v * z + coeffs[m];
        return v;
    }
    const Complex u = 1.0 / z;
    Complex acc(0.0, 0.0);
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) acc = acc * u + coeffs[k];
    return acc * u;
}

FaberPolynomial faber_plus(const LaurentMap& phi, double p, int n, double radius, int samples) {
    if (phi.direction() != MapDirection::Phi)
        throw Error(ErrorKind::Config, "plus-side construction needs the exterior map");
    if (n < 0) throw Error(ErrorKind::Config, "plus-side index must be >= 0");
    if (!(p > 1.0)) throw Error(ErrorKind::Config, "space exponent must exceed 1");
    if (!(radius > 1.0)) throw Error(ErrorKind::Config, "plus-side sampling radius must exceed 1");

    std::vector<Complex> w(samples), z(samples), dphi(samples + 1);
    for (int j = 0; j < samples; ++j) {
        w[j] = radius * std::exp(Complex(0.0, 2.0 * kPi * j / samples));
        z[j] = phi.inverse(w[j]);
        dphi[j] = phi.derivative(z[j]);
    }
    dphi[samples] = dphi[0]; // close the loop for the branch check
    auto root = branch_power(dphi, 1.0 / p);
    check_closure(root, "(phi')^{1/p}");
    root.pop_back();

    std::vector<Complex> g_dzdt(samples);
    for (int j = 0; j < samples; ++j) {
        const Complex g = std::pow(w[j], double(n)) * root[j];
        g_dzdt[j] = g * phi.inverse_derivative(w[j]) * Complex(0.0, 1.0) * w[j];
    }

    FaberPolynomial out;
    out.side = FaberSide::Plus;
    out.n = n;
    out.p = p;
    out.extraction_radius = radius;
    out.coeffs.resize(n + 1);
    for (int m = 0; m <= n; ++m) out.coeffs[m] = loop_coefficient(z, g_dzdt, m);
    double res = 0.0;
    for (int m = n + 1; m <= n + 3; ++m)
        res = std::max(res, std::abs(loop_coefficient(z, g_dzdt, m)));
    out.residual = res;

    if (n == 0) {
        out.dropped_factor = out.coeffs[0]; // gamma^{1/p}, absorbed by the convention
        out.coeffs[0] = Complex(1.0, 0.0);
    }
    return out;
}

FaberPolynomial faber_minus(const LaurentMap& psi, double p, int n, double radius, int samples) {
    if (psi.direction() != MapDirection::Psi)
        throw Error(ErrorKind::Config, "minus-side construction needs the interior map");
    if (n < 1) throw Error(ErrorKind::Config, "minus-side index must be >= 1");
    if (!(p > 1.0)) throw Error(ErrorKind::Config, "space exponent must exceed 1");
    if (!(radius > 1.0)) throw Error(ErrorKind::Config, "minus-side sampling radius must exceed 1");

    // w clockwise on |w| = radius so the z loop runs counterclockwise around 0
    std::vector<Complex> w(samples), z(samples), wclosed(samples + 1), dpsi(samples + 1);
    for (int j = 0; j < samples; ++j) {
        w[j] = radius * std::exp(Complex(0.0, -2.0 * kPi * j / samples));
        z[j] = psi.inverse(w[j]);
        wclosed[j] = w[j];
        dpsi[j] = psi.derivative(z[j]);
    }
    wclosed[samples] = w[0];
    dpsi[samples] = dpsi[0];

    auto pw = branch_power(wclosed, double(n) - 2.0 / p); // psi^{n-2/p} on the loop
    auto root = branch_power(dpsi, 1.0 / p);
    std::vector<Complex> product(samples + 1);
    for (int j = 0; j <= samples; ++j) product[j] = pw[j] * root[j];
    check_closure(product, "psi^{n-2/p} (psi')^{1/p}");
    product.pop_back();

    std::vector<Complex> g_dzdt(samples);
    for (int j = 0; j < samples; ++j)
        g_dzdt[j] = product[j] * psi.inverse_derivative(w[j]) * Complex(0.0, -1.0) * w[j];

    FaberPolynomial out;
    out.side = FaberSide::Minus;
    out.n = n;
    out.p = p;
    out.extraction_radius = radius;
    out.coeffs.resize(n);
    for (int k = 0; k < n; ++k) out.coeffs[k] = loop_coefficient(z, g_dzdt, -(k + 1));
    double res = 0.0;
    for (int m = -n - 3; m <= -n - 1; ++m)
        res = std::max(res, std::abs(loop_coefficient(z, g_dzdt, m)));
    out.residual = res;
    return out;
}

namespace {

FaberPolynomial checked(const FaberPolynomial& a, const FaberPolynomial& b) {
    double scale = 1e-30, diff = 0.0;
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        scale = std::max(scale, std::abs(a.coeffs[i]));
        diff = std::max(diff, std::abs(a.coeffs[i] - b.coeffs[i]));
    }
    if (diff / scale > 1e-8)
        throw Error(ErrorKind::Accuracy,
                    "two-radius extraction disagreement " + std::to_string(diff / scale));
    return a;
}

} // namespace

FaberPolynomial faber_plus_checked(const LaurentMap& phi, double p, int n, double r1, double r2) {
    return checked(faber_plus(phi, p, n, r1), faber_plus(phi, p, n, r2));
}

FaberPolynomial faber_minus_checked(const LaurentMap& psi, double p, int n, double r1, double r2) {
    return checked(faber_minus(psi, p, n, r1), faber_minus(psi, p, n, r2));
}

Complex faber_product(const LaurentMap& map, double p, int n, Complex z) {
    const int steps = 512;
    if (map.direction() == MapDirection::Phi) {
        if (!map.in_domain(z)) throw Error(ErrorKind::Domain, "probe not in the exterior domain");
        // radial continuation from far out along z*t (star-shaped exterior)
        const double diam = map.boundary_grid().diameter();
        const double T = std::max(2.0, 10.0 * diam / std::abs(z));
        std::vector<Complex> dphi(steps);
        for (int k = 0; k < steps; ++k) {
            const double t = std::pow(T, double(steps - 1 - k) / (steps - 1));
            dphi[k] = map.derivative(z * t);
        }
        const Complex root = branch_power(dphi, 1.0 / p).back();
        return std::pow(map.map(z), double(n)) * root;
    }
    if (std::abs(z) == 0.0) throw Error(ErrorKind::Domain, "psi has a pole at z = 0");
    if (!map.in_domain(z)) throw Error(ErrorKind::Domain, "probe not in the interior domain");
    // segment continuation from the real-axis anchor psi^{-1}(2); catalog
    // interiors are convex, so the segment stays inside -- bend it if it
    // passes too close to the pole at 0
    const Complex z0 = map.inverse(Complex(2.0, 0.0));
    const double diam = map.boundary_grid().diameter();
    auto path_value = [&](const std::vector<Complex>& pts) {
        std::vector<Complex> vpsi(pts.size()), vdpsi(pts.size());
        for (size_t k = 0; k < pts.size(); ++k) {
            vpsi[k] = map.map(pts[k]);
            vdpsi[k] = map.derivative(pts[k]);
        }
        return branch_power(vpsi, double(n) - 2.0 / p).back() *
               branch_power(vdpsi, 1.0 / p).back();
    };
    std::vector<Complex> pts;
    auto add_segment = [&](Complex a, Complex b) {
        for (int k = 0; k < steps; ++k) pts.push_back(a + (b - a) * (double(k) / (steps - 1)));
    };
    // distance from segment [z0, z] to the origin
    const Complex d = z - z0;
    double tmin = std::clamp(-(z0.real() * d.real() + z0.imag() * d.imag()) / std::norm(d), 0.0, 1.0);
    if (std::abs(z0 + tmin * d) < 0.05 * diam) {
        const Complex mid = 0.5 * (z0 + z) + Complex(0.0, 0.1 * diam);
        add_segment(z0, mid);
        add_segment(mid, z);
    } else {
        add_segment(z0, z);
    }
    return path_value(pts);
}

Complex faber_remainder(const LaurentMap& map, const FaberPolynomial& poly, Complex z) {
    Complex principal = poly.evaluate(z);
    if (poly.side == FaberSide::Plus && poly.n == 0) principal *= poly.dropped_factor;
    return faber_product(map, poly.p, poly.n, z) - principal;
}

} // namespace faberlab
