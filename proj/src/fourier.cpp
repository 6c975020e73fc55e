#include "faberlab/fourier.hpp"

#include <algorithm>
#include <cmath>

namespace faberlab {

void fft(std::vector<Complex>& a, int sign) {
    const int n = static_cast<int>(a.size());
    if (!is_power_of_two(n)) throw Error(ErrorKind::Sizing, "fft length must be a power of two");
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / len;
        const Complex wlen(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (int j = 0; j < len / 2; ++j) {
                const Complex u = a[i + j];
                const Complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<Complex> fourier_coefficients(const std::vector<Complex>& samples) {
    std::vector<Complex> c = samples;
    fft(c, -1);
    const double inv = 1.0 / static_cast<double>(c.size());
    for (auto& v : c) v *= inv;
    return c;
}

Complex fourier_mode(const std::vector<Complex>& coeffs, int k) {
    const int n = static_cast<int>(coeffs.size());
    int idx = k % n;
    if (idx < 0) idx += n;
    return coeffs[idx];
}

TrigInterp::TrigInterp(const std::vector<Complex>& samples, double period)
    : coeffs_(fourier_coefficients(samples)), period_(period) {}

Complex TrigInterp::operator()(double s) const {
    const int n = static_cast<int>(coeffs_.size());
    const double x = 2.0 * kPi * s / period_;
    Complex sum(0.0, 0.0);
    // symmetric band: k = -n/2+1 .. n/2-1, Nyquist mode split as cosine
    const int half = n / 2;
    for (int k = -half + 1; k < half; ++k)
        sum += fourier_mode(coeffs_, k) * std::exp(Complex(0.0, k * x));
    sum += fourier_mode(coeffs_, half) * std::cos(half * x);
    return sum;
}

MonotoneCorrespondence::MonotoneCorrespondence(const std::vector<double>& theta_nodes,
                                               double period, int orient)
    : theta_nodes_(theta_nodes), period_(period), orient_(orient) {
    const int n = static_cast<int>(theta_nodes.size());
    std::vector<Complex> periodic(n);
    for (int j = 0; j < n; ++j) {
        const double s = j * period / n;
        periodic[j] = theta_nodes[j] - orient * 2.0 * kPi * s / period;
    }
    periodic_ = TrigInterp(periodic, period);
}

double MonotoneCorrespondence::forward(double s) const {
    return orient_ * 2.0 * kPi * s / period_ + periodic_(s).real();
}

double MonotoneCorrespondence::inverse(double theta) const {
    const int n = static_cast<int>(theta_nodes_.size());
    // bracket on the node ladder, then Newton on the trig representation
    const double base = theta_nodes_[0];
    double target = theta;
    const double span = orient_ * 2.0 * kPi;
    // shift target into [base, base + span)
    double k = std::floor((target - base) / span);
    target -= k * span;

    // initial guess: linear scan over node values (monotone in orient direction)
    int lo = 0;
    for (int j = 0; j < n - 1; ++j) {
        const bool inside = orient_ > 0
            ? (theta_nodes_[j] <= target && target <= theta_nodes_[j + 1])
            : (theta_nodes_[j] >= target && target >= theta_nodes_[j + 1]);
        if (inside) { lo = j; break; }
    }
    const double hstep = period_ / n;
    double s = lo * hstep;
    const double denom = theta_nodes_[(lo + 1) % n] - theta_nodes_[lo];
    if (std::abs(denom) > 1e-14) s += hstep * (target - theta_nodes_[lo]) / denom;

    for (int it = 0; it < 40; ++it) {
        const double f = forward(s) - target;
        const double eps = 1e-6 * period_;
        const double df = (forward(s + eps) - forward(s - eps)) / (2.0 * eps);
        if (std::abs(df) < 1e-14) break;
        const double step = f / df;
        s -= step;
        if (std::abs(step) < 1e-14 * period_) break;
    }
    s = std::fmod(s, period_);
    if (s < 0.0) s += period_;
    return s;
}

} // namespace faberlab
