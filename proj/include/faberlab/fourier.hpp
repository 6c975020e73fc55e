#pragma once

#include <vector>

#include "faberlab/curve.hpp"

namespace faberlab {

// In-place radix-2 FFT, n a power of two. sign = -1 forward, +1 inverse
// (inverse is unnormalized).
void fft(std::vector<Complex>& a, int sign);

// Fourier coefficients c_k = (1/n) sum_j f_j e^{-2pi i jk/n} of samples on a
// uniform periodic grid; returned in the layout c[0], c[1], ..., c[n-1] with
// negative frequencies aliased to the upper half.
std::vector<Complex> fourier_coefficients(const std::vector<Complex>& samples);

// coefficient of e^{2pi i k s / S}, k possibly negative
Complex fourier_mode(const std::vector<Complex>& coeffs, int k);

// Trigonometric interpolation of periodic samples on a uniform grid over
// [0, period).  Spectrally accurate for smooth data.
class TrigInterp {
public:
    TrigInterp() = default;
    TrigInterp(const std::vector<Complex>& samples, double period);
    Complex operator()(double s) const;

private:
    std::vector<Complex> coeffs_;
    double period_ = 1.0;
};

// Monotone periodic correspondence theta(s) = 2*pi*orient*s/S + periodic(s),
// built from node samples; supports inversion s(theta).  orient is +1 or -1.
class MonotoneCorrespondence {
public:
    MonotoneCorrespondence() = default;
    // theta_nodes[j] is the already-unwrapped value at s_j = j*S/N
    MonotoneCorrespondence(const std::vector<double>& theta_nodes, double period, int orient);
    double forward(double s) const;   // theta(s)
    double inverse(double theta) const; // s with theta(s) = theta (mod 2*pi*orient)
    int orientation() const { return orient_; }

private:
    TrigInterp periodic_;
    std::vector<double> theta_nodes_;
    double period_ = 1.0;
    int orient_ = 1;
};

} // namespace faberlab
