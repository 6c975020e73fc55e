#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "faberlab/curve.hpp"

namespace faberlab {

enum class MapDirection {
    Phi, // exterior of Gamma -> exterior of the unit disc, phi(inf)=inf, phi'(inf)=gamma>0
    Psi  // interior of Gamma -> exterior of the unit disc, pole at 0, lim z*psi(z)=alpha>0
};

// Conformal map held as truncated Laurent coefficients plus evaluators.  For
// catalog curves the evaluators are closed forms (Joukowski for the ellipse
// exterior, a theta-function quotient for the ellipse interior); the
// coefficient vectors are extracted from them and carried for serialization
// and tail estimates.
class LaurentMap {
public:
    MapDirection direction() const { return direction_; }
    int truncation() const { return truncation_; }
    double leading() const { return leading_; } // gamma (Phi) or alpha (Psi)
    double roundtrip_residual() const { return roundtrip_residual_; }
    double tail_estimate() const { return tail_estimate_; }
    const CurveSpec& curve() const { return curve_; }
    const DiscretizedCurve& boundary_grid() const { return *grid_; }

    // Laurent coefficients of the forward map: Phi stores degrees 1, 0, -1, ...
    // (gamma, gamma_0, gamma_1, ...); Psi stores degrees -1, 0, 1, ...
    // (alpha, alpha_0, alpha_1, ...).
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    // Inverse-map coefficients: Phi inverse at w=inf, degrees 1, 0, -1, ...;
    // Psi inverse at w=inf, degrees -1, -2, ...
    const std::vector<Complex>& inverse_coeffs() const { return inverse_coeffs_; }

    // unchecked evaluators (valid up to the boundary for catalog maps)
    Complex map(Complex z) const { return fwd_(z); }
    Complex derivative(Complex z) const { return dfwd_(z); }
    Complex inverse(Complex w) const { return inv_(w); }
    Complex inverse_derivative(Complex w) const { return dinv_(w); }

    bool in_domain(Complex z) const;

private:
    friend LaurentMap build_map(const CurveSpec&, MapDirection, int);
    friend LaurentMap build_map_custom(const CurveSpec&, MapDirection,
                                       const std::vector<Complex>&, int);
    LaurentMap() = default;

    MapDirection direction_ = MapDirection::Phi;
    int truncation_ = 0;
    double leading_ = 0.0;
    double roundtrip_residual_ = 0.0;
    double tail_estimate_ = 0.0;
    CurveSpec curve_;
    std::shared_ptr<const DiscretizedCurve> grid_; // coarse grid for domain tests
    std::vector<Complex> coeffs_, inverse_coeffs_;
    std::function<Complex(Complex)> fwd_, dfwd_, inv_, dinv_;
};

// Catalog construction (circle, ellipse); Config error for custom curves
// without a boundary correspondence, Accuracy error when the round-trip
// invariant fails.
LaurentMap build_map(const CurveSpec& spec, MapDirection direction, int truncation = 64);

// Custom curves: boundary_w are the values of the map at the nodes of
// resample(spec, boundary_w.size()); Laurent coefficients are fitted by
// contour FFT and the evaluators use the truncated series.
LaurentMap build_map_custom(const CurveSpec& spec, MapDirection direction,
                            const std::vector<Complex>& boundary_w, int truncation = 64);

// checked evaluation (Domain error on or across the curve; pole error at 0 for Psi)
Complex eval_map(const LaurentMap& map, Complex z);
Complex eval_derivative(const LaurentMap& map, Complex z);

// --- branch-continued powers along sampled paths -------------------------

// cumulative unwrapped arguments along an ordered path (principal at entry 0);
// Branch error on a zero sample or an argument gap >= pi between neighbours
std::vector<double> unwrap_args(const std::vector<Complex>& samples);

// continuous selection of v^mu along the path, exp(mu (ln|v| + i arg_cont v))
std::vector<Complex> branch_power(const std::vector<Complex>& samples, double mu);

struct BranchedRoot {
    std::vector<Complex> base_samples;
    double order = 2.0; // p
    std::vector<Complex> root_samples;
};

BranchedRoot branch_root(const std::vector<Complex>& samples, double p);

// theta functions with real nome q in (0,1); exposed for oracle tests
Complex jacobi_theta1(Complex v, double q);
Complex jacobi_theta4(Complex v, double q);
Complex jacobi_theta1_dv(Complex v, double q);
Complex jacobi_theta4_dv(Complex v, double q);

} // namespace faberlab
