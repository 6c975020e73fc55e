#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "faberlab/faber.hpp"
#include "faberlab/fourier.hpp"
#include "faberlab/riemann.hpp"

namespace faberlab {

// Everything an expansion needs: the curve grid, both conformal maps, the
// boundary correspondences theta(s) = arg(map(z(s))), branch-continued root
// samples along the boundary, and lazily grown Faber polynomial caches.
class SpaceParams {
public:
    double p = 2.0;
    WeightSpec weight;
    std::shared_ptr<const DiscretizedCurve> curve;
    std::shared_ptr<const LaurentMap> phi, psi;
    MonotoneCorrespondence corr_phi; // arg phi(z(s)), orientation +1
    MonotoneCorrespondence corr_psi; // arg psi(z(s)), orientation -1
    std::vector<double> arg_xi;      // continued arg z(s_j), one full turn

    MuckenhouptReport rho_scan, rho_plus_scan, rho_minus_scan;

    const FaberPolynomial& plus_poly(int n) const;
    const FaberPolynomial& minus_poly(int k) const; // k >= 1
    // boundary values of the polynomials at the curve nodes
    const std::vector<Complex>& plus_values(int n) const;
    const std::vector<Complex>& minus_values(int k) const;

    // branch-continued (phi'(z(s)))^{1/p} at the nodes (closes over the loop)
    const std::vector<double>& phi_root_args() const { return phi_root_args_; }
    std::vector<double> phi_root_args_; // continued arg of phi' at nodes

    struct Cache;
    const Cache* cache_ptr() const;

private:
    std::shared_ptr<Cache> cache_;
    friend SpaceParams make_space(const CurveSpec&, int, double, WeightSpec);
};

SpaceParams make_space(const CurveSpec& spec, int n, double p, WeightSpec weight);

// f_plus(w) = f[phi_inv(w)] (phi_inv'(w))^{1/p} resampled to the uniform
// circle grid through the boundary correspondence.
BoundaryFunction transplant_plus(const BoundaryFunction& f, const SpaceParams& sp);
// f_minus(w) = f[psi_inv(w)] (psi_inv'(w))^{2/p}.
BoundaryFunction transplant_minus(const BoundaryFunction& f, const SpaceParams& sp);

// Coefficients {F_n^+, n = 0..M1} of a plus-trace in the plus Faber system,
// read off by pulling the trace back to the circle and taking the DFT.
// Data error when the Plemelj minus-part exceeds purity_tol relative.
std::vector<Complex> expand_smirnov_plus(const BoundaryFunction& F, const SpaceParams& sp,
                                         int M1, double purity_tol = 0.05);
// Coefficients {F_n^-, n = 1..M2} of a minus-trace vanishing at infinity;
// Data error when the plus-part exceeds purity_tol or the pulled-back
// function has a constant mode above g0_tol relative (nonvanishing at inf).
std::vector<Complex> expand_smirnov_minus(const BoundaryFunction& F, const SpaceParams& sp,
                                          int M2, double purity_tol = 0.05,
                                          double g0_tol = 0.05);

struct DoubleExpansion {
    std::vector<Complex> plus_coeffs;  // n = 0..M1
    std::vector<Complex> minus_coeffs; // entry k-1 holds n = k, k = 1..M2
    std::vector<double> residual_history; // relative ||f - S_{M,M}||, M = 0..min(M1,M2)
    double f_norm = 0.0;
    BoundaryFunction f;
    double plus_purity = 0.0, minus_purity = 0.0, g0_defect = 0.0;
    std::vector<std::string> warnings;
};

// Solve A F+ + B F- = f (vanishing at infinity), expand each side in its
// Faber system, and record the partial-sum residual history.
DoubleExpansion expand_double(const BoundaryFunction& f, const CoefficientPair& pair,
                              const SpaceParams& sp, int M1, int M2, bool strict = false);

// Double expansion against A = e^{i alpha arg xi}, B = e^{-i alpha arg xi}
// with the continuous branch of arg xi from the curve start point.
DoubleExpansion expand_phase_system(const BoundaryFunction& f, double alpha,
                                    const SpaceParams& sp, int M1, int M2,
                                    bool strict = false);

// Partial sum S_{M1,M2} = A sum F_n^+ F+_{p,n} + B sum F_n^- F-_{p,n} and its
// relative weighted distance to the expanded f.
std::pair<BoundaryFunction, double> reconstruct(const DoubleExpansion& exp,
                                                const CoefficientPair& pair,
                                                const SpaceParams& sp, int M1, int M2);

// Least-squares slope of log10(residual) per truncation step over the last
// half of the sequence; "convergent" when below -0.05.
double decay_slope(const std::vector<double>& residuals);

} // namespace faberlab
