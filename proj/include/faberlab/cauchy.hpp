#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "faberlab/curve.hpp"

namespace faberlab {

// Complex boundary data sampled at the nodes of a DiscretizedCurve.
class BoundaryFunction {
public:
    BoundaryFunction() = default;
    BoundaryFunction(std::shared_ptr<const DiscretizedCurve> curve, std::vector<Complex> samples);

    const DiscretizedCurve& curve() const { return *curve_; }
    std::shared_ptr<const DiscretizedCurve> curve_ptr() const { return curve_; }
    const std::vector<Complex>& samples() const { return samples_; }
    std::vector<Complex>& samples() { return samples_; }
    int size() const { return static_cast<int>(samples_.size()); }
    Complex operator[](int j) const { return samples_[j]; }

    static BoundaryFunction from_callable(std::shared_ptr<const DiscretizedCurve> curve,
                                          const std::function<Complex(Complex)>& f);

private:
    std::shared_ptr<const DiscretizedCurve> curve_;
    std::vector<Complex> samples_;
};

// (1/2pi i) \int f(xi)/(xi - z) dxi by trapezoid; z must stay >= 2h away from
// the curve (Domain error within h, accuracy warning inside 2h is left to the
// caller via distance_to).
Complex cauchy_integral(const BoundaryFunction& f, Complex z);

// Principal-value singular operator S_Gamma by the parity-staggered trapezoid
// rule (node j integrates over the opposite-parity nodes with doubled step).
BoundaryFunction singular_op(const BoundaryFunction& f);

// Sokhotskii-Plemelj traces F± = ±f/2 + S_Gamma f; F+ - F- = f by construction.
std::pair<BoundaryFunction, BoundaryFunction> plemelj_values(const BoundaryFunction& f);

} // namespace faberlab
