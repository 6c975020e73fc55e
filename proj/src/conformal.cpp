#include "faberlab/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "faberlab/fourier.hpp"

namespace faberlab {

// -------------------------------------------------------------------------
// theta functions (series in a real nome; terms decay like q^{n^2})

Complex jacobi_theta1(Complex v, double q) {
    Complex sum(0.0, 0.0);
    for (int n = 0; n < 24; ++n) {
        const double c = std::pow(q, (n + 0.5) * (n + 0.5)) * (n % 2 ? -1.0 : 1.0);
        if (c == 0.0) break;
        sum += c * std::sin(Complex(2.0 * n + 1.0) * v);
    }
    return 2.0 * sum;
}

Complex jacobi_theta4(Complex v, double q) {
    Complex sum(1.0, 0.0);
    for (int n = 1; n < 24; ++n) {
        const double c = 2.0 * std::pow(q, double(n) * n) * (n % 2 ? -1.0 : 1.0);
        if (c == 0.0) break;
        sum += c * std::cos(Complex(2.0 * n) * v);
    }
    return sum;
}

Complex jacobi_theta1_dv(Complex v, double q) {
    Complex sum(0.0, 0.0);
    for (int n = 0; n < 24; ++n) {
        const double c = std::pow(q, (n + 0.5) * (n + 0.5)) * (n % 2 ? -1.0 : 1.0);
        if (c == 0.0) break;
        sum += c * (2.0 * n + 1.0) * std::cos(Complex(2.0 * n + 1.0) * v);
    }
    return 2.0 * sum;
}

Complex jacobi_theta4_dv(Complex v, double q) {
    Complex sum(0.0, 0.0);
    for (int n = 1; n < 24; ++n) {
        const double c = -4.0 * double(n) * std::pow(q, double(n) * n) * (n % 2 ? -1.0 : 1.0);
        if (c == 0.0) break;
        sum += c * std::sin(Complex(2.0 * n) * v);
    }
    return sum;
}

// -------------------------------------------------------------------------
// branch continuation

std::vector<double> unwrap_args(const std::vector<Complex>& samples) {
    std::vector<double> args(samples.size());
    if (samples.empty()) return args;
    if (std::abs(samples[0]) == 0.0)
        throw Error(ErrorKind::Branch, "branch continuation hit a zero sample");
    args[0] = std::arg(samples[0]);
    for (size_t j = 1; j < samples.size(); ++j) {
        if (std::abs(samples[j]) == 0.0)
            throw Error(ErrorKind::Branch, "branch continuation hit a zero sample");
        const double d = std::arg(samples[j] / samples[j - 1]);
        if (std::abs(d) >= kPi * 0.999)
            throw Error(ErrorKind::Branch,
                        "argument gap >= pi between path samples; refine the path");
        args[j] = args[j - 1] + d;
    }
    return args;
}

std::vector<Complex> branch_power(const std::vector<Complex>& samples, double mu) {
    const auto args = unwrap_args(samples);
    std::vector<Complex> out(samples.size());
    for (size_t j = 0; j < samples.size(); ++j)
        out[j] = std::exp(mu * Complex(std::log(std::abs(samples[j])), args[j]));
    return out;
}

BranchedRoot branch_root(const std::vector<Complex>& samples, double p) {
    if (!(p > 1.0)) throw Error(ErrorKind::Config, "branch root order must exceed 1");
    BranchedRoot r;
    r.base_samples = samples;
    r.order = p;
    r.root_samples = branch_power(samples, 1.0 / p);
    return r;
}

// -------------------------------------------------------------------------
// ellipse interior map: f maps int(ellipse) onto the unit disc, f(0)=0,
// f'(0)>0, via f(z) = theta1(asin(z/cf), q)/theta4(asin(z/cf), q) with
// nome q = ((a-b)/(a+b))^2.

namespace {

struct EllipseInterior {
    double cf;   // focal distance sqrt(a^2-b^2)
    double q;    // nome

    Complex f(Complex z) const {
        const Complex w = std::asin(z / cf);
        return jacobi_theta1(w, q) / jacobi_theta4(w, q);
    }
    Complex df(Complex z) const {
        const Complex w = std::asin(z / cf);
        const Complex t1 = jacobi_theta1(w, q), t4 = jacobi_theta4(w, q);
        const Complex g = (jacobi_theta1_dv(w, q) * t4 - t1 * jacobi_theta4_dv(w, q)) / (t4 * t4);
        Complex cw = std::cos(w);
        if (std::abs(cw) < 1e-14) cw = Complex(1e-14, 0.0); // removable 0/0 at the foci
        return g / (cf * cw);
    }
    double df0() const {
        return (jacobi_theta1_dv(Complex(0, 0), q) / jacobi_theta4(Complex(0, 0), q)).real() / cf;
    }

    // f^{-1}(u) for |u| <= 1 by radial Newton continuation from 0
    Complex finv(Complex u) const {
        Complex z(0.0, 0.0);
        const int steps = 8;
        for (int t = 1; t <= steps; ++t) {
            const Complex target = u * (double(t) / steps);
            if (t == 1) z = target / df0();
            for (int it = 0; it < 30; ++it) {
                const Complex r = f(z) - target;
                if (std::abs(r) < 1e-14) break;
                const Complex d = df(z);
                if (std::abs(d) < 1e-16)
                    throw Error(ErrorKind::Numeric, "ellipse interior map inversion: f' ~ 0");
                z -= r / d;
            }
        }
        if (std::abs(f(z) - u) > 1e-10)
            throw Error(ErrorKind::Numeric, "ellipse interior map inversion did not converge");
        return z;
    }
};

// sqrt(z^2 - cf^2) with branch cut on the focal segment, ~ z at infinity
Complex branch_sqrt_foci(Complex z, double cf) {
    return std::sqrt(z - cf) * std::sqrt(z + cf);
}

std::vector<Complex> extract_circle_coeffs(const std::function<Complex(Complex)>& g,
                                           double radius, int top_degree, int count) {
    // Laurent coefficients of g on |z| = radius, degrees top_degree,
    // top_degree-1, ..., top_degree-count+1
    const int n = 4096;
    std::vector<Complex> samples(n);
    for (int j = 0; j < n; ++j)
        samples[j] = g(radius * std::exp(Complex(0.0, 2.0 * kPi * j / n)));
    auto modes = fourier_coefficients(samples);
    double maxabs = 0.0;
    for (const auto& v : samples) maxabs = std::max(maxabs, std::abs(v));
    // modes at the rounding floor are pure noise; scaling them by
    // radius^{-deg} would inflate them into spurious tail coefficients
    const double floor = 1e-13 * maxabs;
    std::vector<Complex> out(count);
    for (int i = 0; i < count; ++i) {
        const int deg = top_degree - i;
        Complex mode = fourier_mode(modes, deg);
        out[i] = (std::abs(mode) < floor) ? Complex(0.0)
                                          : mode * std::pow(radius, -deg);
    }
    return out;
}

double min_abs_on(const DiscretizedCurve& grid) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& nd : grid.nodes()) m = std::min(m, std::abs(nd.z));
    return m;
}

} // namespace

bool LaurentMap::in_domain(Complex z) const {
    switch (curve_.kind()) {
    case CurveKind::Circle: {
        const double R = curve_.radius();
        return direction_ == MapDirection::Phi ? std::abs(z) > R
                                               : (std::abs(z) < R && std::abs(z) > 0.0);
    }
    case CurveKind::Ellipse: {
        const double a = curve_.semi_axis_a(), b = curve_.semi_axis_b();
        const double v = (z.real() / a) * (z.real() / a) + (z.imag() / b) * (z.imag() / b);
        return direction_ == MapDirection::Phi ? v > 1.0 : (v < 1.0 && std::abs(z) > 0.0);
    }
    case CurveKind::Custom: {
        const double wind = grid_->winding_number(z);
        const bool interior = std::abs(wind - 1.0) < 0.25;
        return direction_ == MapDirection::Phi ? !interior : (interior && std::abs(z) > 0.0);
    }
    }
    return false;
}

Complex eval_map(const LaurentMap& map, Complex z) {
    if (map.direction() == MapDirection::Psi && std::abs(z) == 0.0)
        throw Error(ErrorKind::Domain, "psi has a pole at z = 0");
    if (!map.in_domain(z))
        throw Error(ErrorKind::Domain, "evaluation point on or across the curve");
    return map.map(z);
}

Complex eval_derivative(const LaurentMap& map, Complex z) {
    if (map.direction() == MapDirection::Psi && std::abs(z) == 0.0)
        throw Error(ErrorKind::Domain, "psi has a pole at z = 0");
    if (!map.in_domain(z))
        throw Error(ErrorKind::Domain, "evaluation point on or across the curve");
    return map.derivative(z);
}

LaurentMap build_map(const CurveSpec& spec, MapDirection direction, int truncation) {
    if (truncation < 8) throw Error(ErrorKind::Config, "truncation order must be >= 8");
    LaurentMap m;
    m.direction_ = direction;
    m.truncation_ = truncation;
    m.curve_ = spec;
    m.grid_ = std::make_shared<DiscretizedCurve>(resample(spec, 256));

    if (spec.kind() == CurveKind::Circle) {
        const double R = spec.radius();
        if (direction == MapDirection::Phi) {
            m.leading_ = 1.0 / R;
            m.fwd_ = [R](Complex z) { return z / R; };
            m.dfwd_ = [R](Complex) { return Complex(1.0 / R, 0.0); };
            m.inv_ = [R](Complex w) { return R * w; };
            m.dinv_ = [R](Complex) { return Complex(R, 0.0); };
        } else {
            m.leading_ = R;
            m.fwd_ = [R](Complex z) { return R / z; };
            m.dfwd_ = [R](Complex z) { return -R / (z * z); };
            m.inv_ = [R](Complex w) { return R / w; };
            m.dinv_ = [R](Complex w) { return -R / (w * w); };
        }
    } else if (spec.kind() == CurveKind::Ellipse) {
        const double a = spec.semi_axis_a(), b = spec.semi_axis_b();
        if (a <= b) throw Error(ErrorKind::Config, "catalog ellipse map needs a > b");
        if (direction == MapDirection::Phi) {
            const double c = 0.5 * (a + b), d = 0.5 * (a - b);
            const double cf = std::sqrt(a * a - b * b);
            m.leading_ = 1.0 / c;
            m.fwd_ = [c, cf](Complex z) { return (z + branch_sqrt_foci(z, cf)) / (2.0 * c); };
            m.dfwd_ = [c, cf](Complex z) {
                const Complex s = branch_sqrt_foci(z, cf);
                return (1.0 + z / s) / (2.0 * c);
            };
            m.inv_ = [c, d](Complex w) { return c * w + d / w; };
            m.dinv_ = [c, d](Complex w) { return c - d / (w * w); };
        } else {
            EllipseInterior ell{std::sqrt(a * a - b * b),
                                std::pow((a - b) / (a + b), 2.0)};
            m.leading_ = 1.0 / ell.df0();
            m.fwd_ = [ell](Complex z) { return 1.0 / ell.f(z); };
            m.dfwd_ = [ell](Complex z) {
                const Complex fz = ell.f(z);
                return -ell.df(z) / (fz * fz);
            };
            m.inv_ = [ell](Complex w) { return ell.finv(1.0 / w); };
            m.dinv_ = [ell](Complex w) {
                const Complex z = ell.finv(1.0 / w);
                return -1.0 / (w * w * ell.df(z));
            };
        }
    } else {
        throw Error(ErrorKind::Config,
                    "custom curves need a boundary correspondence (build_map_custom)");
    }

    // coefficient tables
    const double diam = m.grid_->diameter();
    if (direction == MapDirection::Phi) {
        const double Rbig = 2.0 * diam;
        m.coeffs_ = extract_circle_coeffs(m.fwd_, Rbig, 1, truncation);
        m.inverse_coeffs_ = extract_circle_coeffs(m.inv_, 4.0, 1, truncation);
    } else {
        const double r0 = 0.4 * min_abs_on(*m.grid_);
        auto low = extract_circle_coeffs(m.fwd_, r0, truncation - 2, truncation);
        std::reverse(low.begin(), low.end()); // store degrees -1, 0, 1, ...
        m.coeffs_ = std::move(low);
        auto invc = extract_circle_coeffs(m.inv_, 4.0, -1, truncation);
        m.inverse_coeffs_ = std::move(invc);
    }
    m.tail_estimate_ = std::abs(m.coeffs_.back());

    // round-trip invariant at the curve nodes
    double worst = 0.0;
    for (const auto& nd : m.grid_->nodes())
        worst = std::max(worst, std::abs(m.inv_(m.fwd_(nd.z)) - nd.z));
    m.roundtrip_residual_ = worst;
    if (worst > 1e-8 * diam)
        throw Error(ErrorKind::Accuracy,
                    "map round-trip residual " + std::to_string(worst) + " exceeds tolerance");
    return m;
}

LaurentMap build_map_custom(const CurveSpec& spec, MapDirection direction,
                            const std::vector<Complex>& boundary_w, int truncation) {
    if (truncation < 8) throw Error(ErrorKind::Config, "truncation order must be >= 8");
    const int n = static_cast<int>(boundary_w.size());
    if (!is_power_of_two(n) || n < 16)
        throw Error(ErrorKind::Config, "boundary correspondence needs a power-of-two sample count");
    LaurentMap m;
    m.direction_ = direction;
    m.truncation_ = truncation;
    m.curve_ = spec;
    m.grid_ = std::make_shared<DiscretizedCurve>(resample(spec, n));
    const auto& nodes = m.grid_->nodes();
    const double h = m.grid_->spacing();

    // forward Laurent coefficients from contour integrals over Gamma
    auto contour_coeff = [&](int degree) {
        Complex sum(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            sum += boundary_w[j] * std::pow(nodes[j].z, -degree - 1) * nodes[j].dz;
        return sum * h / Complex(0.0, 2.0 * kPi);
    };
    // inverse coefficients from the same correspondence traversed in w
    std::vector<Complex> dw(n);
    {
        auto modes = fourier_coefficients(boundary_w);
        const double S = spec.length();
        for (int j = 0; j < n; ++j) {
            Complex d(0.0, 0.0);
            for (int k = -n / 2 + 1; k < n / 2; ++k)
                d += fourier_mode(modes, k) * Complex(0.0, 2.0 * kPi * k / S) *
                     std::exp(Complex(0.0, 2.0 * kPi * k * nodes[j].s / S));
            dw[j] = d;
        }
    }
    auto inverse_coeff = [&](int degree) {
        Complex sum(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            sum += nodes[j].z * std::pow(boundary_w[j], -degree - 1) * dw[j];
        return sum * h / Complex(0.0, 2.0 * kPi);
    };

    if (direction == MapDirection::Phi) {
        m.coeffs_.resize(truncation);
        m.inverse_coeffs_.resize(truncation);
        for (int i = 0; i < truncation; ++i) {
            m.coeffs_[i] = contour_coeff(1 - i);
            m.inverse_coeffs_[i] = inverse_coeff(1 - i);
        }
        m.leading_ = m.coeffs_[0].real();
    } else {
        m.coeffs_.resize(truncation);
        for (int i = 0; i < truncation; ++i) m.coeffs_[i] = contour_coeff(i - 1);
        m.inverse_coeffs_.resize(truncation);
        for (int i = 0; i < truncation; ++i) m.inverse_coeffs_[i] = inverse_coeff(-1 - i);
        m.leading_ = m.coeffs_[0].real();
    }
    if (m.leading_ <= 0.0)
        throw Error(ErrorKind::Accuracy, "fitted leading coefficient is not positive");

    // truncated-series evaluators
    auto fc = m.coeffs_;
    auto ic = m.inverse_coeffs_;
    if (direction == MapDirection::Phi) {
        m.fwd_ = [fc](Complex z) {
            Complex v = fc[0] * z;
            Complex zp(1.0, 0.0);
            for (size_t i = 1; i < fc.size(); ++i) { v += fc[i] * zp; zp /= z; }
            return v;
        };
        m.dfwd_ = [fc](Complex z) {
            Complex v = fc[0];
            for (size_t i = 2; i < fc.size(); ++i)
                v += fc[i] * (1.0 - double(i)) * std::pow(z, -double(i));
            return v;
        };
        m.inv_ = [ic](Complex w) {
            Complex v = ic[0] * w;
            for (size_t i = 1; i < ic.size(); ++i) v += ic[i] * std::pow(w, 1.0 - double(i));
            return v;
        };
        m.dinv_ = [ic](Complex w) {
            Complex v = ic[0];
            for (size_t i = 2; i < ic.size(); ++i)
                v += ic[i] * (1.0 - double(i)) * std::pow(w, -double(i));
            return v;
        };
    } else {
        m.fwd_ = [fc](Complex z) {
            Complex v(0.0, 0.0);
            for (size_t i = 0; i < fc.size(); ++i) v += fc[i] * std::pow(z, double(i) - 1.0);
            return v;
        };
        m.dfwd_ = [fc](Complex z) {
            Complex v(0.0, 0.0);
            for (size_t i = 0; i < fc.size(); ++i)
                if (i != 1) v += fc[i] * (double(i) - 1.0) * std::pow(z, double(i) - 2.0);
            return v;
        };
        m.inv_ = [ic](Complex w) {
            Complex v(0.0, 0.0);
            for (size_t i = 0; i < ic.size(); ++i) v += ic[i] * std::pow(w, -1.0 - double(i));
            return v;
        };
        m.dinv_ = [ic](Complex w) {
            Complex v(0.0, 0.0);
            for (size_t i = 0; i < ic.size(); ++i)
                v += ic[i] * (-1.0 - double(i)) * std::pow(w, -2.0 - double(i));
            return v;
        };
    }
    m.tail_estimate_ = std::abs(m.coeffs_.back());

    double worst = 0.0;
    for (int j = 0; j < n; ++j)
        worst = std::max(worst, std::abs(m.inv_(boundary_w[j]) - nodes[j].z));
    m.roundtrip_residual_ = worst;
    if (worst > 1e-6 * m.grid_->diameter())
        throw Error(ErrorKind::Accuracy,
                    "custom map round-trip residual " + std::to_string(worst) + " exceeds tolerance");
    return m;
}

} // namespace faberlab
