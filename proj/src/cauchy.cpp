#include "faberlab/cauchy.hpp"

#include <cmath>

namespace faberlab {

BoundaryFunction::BoundaryFunction(std::shared_ptr<const DiscretizedCurve> curve,
                                   std::vector<Complex> samples)
    : curve_(std::move(curve)), samples_(std::move(samples)) {
    if (!curve_) throw Error(ErrorKind::Data, "boundary function needs a curve");
    if (static_cast<int>(samples_.size()) != curve_->size())
        throw Error(ErrorKind::Data, "sample count does not match curve nodes");
    for (const auto& v : samples_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error(ErrorKind::Data, "non-finite boundary sample");
}

BoundaryFunction BoundaryFunction::from_callable(std::shared_ptr<const DiscretizedCurve> curve,
                                                 const std::function<Complex(Complex)>& f) {
    std::vector<Complex> samples(curve->size());
    for (int j = 0; j < curve->size(); ++j) samples[j] = f((*curve)[j].z);
    return BoundaryFunction(std::move(curve), std::move(samples));
}

Complex cauchy_integral(const BoundaryFunction& f, Complex z) {
    const auto& curve = f.curve();
    const double h = curve.spacing();
    if (curve.distance_to(z) < h)
        throw Error(ErrorKind::Domain, "evaluation point within one grid spacing of the curve");
    Complex sum(0.0, 0.0);
    for (int j = 0; j < curve.size(); ++j)
        sum += f[j] * curve[j].dz / (curve[j].z - z);
    return sum * h / Complex(0.0, 2.0 * kPi);
}

BoundaryFunction singular_op(const BoundaryFunction& f) {
    const auto& curve = f.curve();
    const int n = curve.size();
    if (n % 2 != 0) throw Error(ErrorKind::Sizing, "singular operator needs an even node count");
    const double h = curve.spacing();
    std::vector<Complex> out(n);
    for (int j = 0; j < n; ++j) {
        Complex sum(0.0, 0.0);
        for (int k = (j + 1) % 2; k < n; k += 2) // opposite parity only
            sum += f[k] * curve[k].dz / (curve[k].z - curve[j].z);
        out[j] = sum * (2.0 * h) / Complex(0.0, 2.0 * kPi);
    }
    return BoundaryFunction(f.curve_ptr(), std::move(out));
}

std::pair<BoundaryFunction, BoundaryFunction> plemelj_values(const BoundaryFunction& f) {
    BoundaryFunction s = singular_op(f);
    std::vector<Complex> plus(f.size()), minus(f.size());
    for (int j = 0; j < f.size(); ++j) {
        plus[j] = 0.5 * f[j] + s[j];
        minus[j] = -0.5 * f[j] + s[j];
    }
    return {BoundaryFunction(f.curve_ptr(), std::move(plus)),
            BoundaryFunction(f.curve_ptr(), std::move(minus))};
}

} // namespace faberlab
