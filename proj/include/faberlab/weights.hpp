#pragma once

#include <utility>
#include <vector>

#include "faberlab/curve.hpp"

namespace faberlab {

// Power weight on the arc parameter: rho(z(s)) = prod_k |s - t_k|^{alpha_k}.
struct WeightSpec {
    std::vector<double> points;  // t_k in (0, S), pairwise distinct
    std::vector<double> alphas;  // exponents
    double p = 2.0;              // ambient L^p exponent, 1 < p < inf

    double q() const { return p / (p - 1.0); }

    static WeightSpec unit(double p = 2.0) { return WeightSpec{{}, {}, p}; }

    void validate(double total_length) const;
};

// point value of rho at arc parameter s; Data error when s hits a singular
// point with a negative exponent
double weight_eval(const WeightSpec& w, double s);

// rho at node j, singular nodes pushed half a step toward the non-singular side
double weight_eval_offset(const WeightSpec& w, double s, double half_step);

struct MuckenhouptReport {
    double ap_estimate = 0.0;
    double refined_estimate = 0.0;
    bool in_class = false;
};

// Scan of the A_p quotient (mean rho)(mean rho^{-1/(p-1)})^{p-1} over discs
// centered at curve nodes with a geometric radii grid; membership = estimate
// stable (< 10% growth) when the grid doubles.
MuckenhouptReport muckenhoupt_scan(const WeightSpec& w, const CurveSpec& spec, int n,
                                   int n_centers = 48, int n_radii = 40);

struct AdmissibilityReport {
    std::vector<double> merged_points; // tau_k = {s_k} U {t_k}
    std::vector<double> betas;         // Eq-form exponents per merged point
    bool window_ok = false;            // -1 < beta_k < p/q for all k
    bool disjoint = false;             // no jump point coincides with a weight point
    bool cor43_ok = false;             // per-list bounds for the disjoint case
    bool cor43_literal = false;        // same with the literal q/p bound on alpha
};

// jumps: list of (s_k, h_k) including the start-point jump (0, h_0) when present
AdmissibilityReport beta_exponents(const WeightSpec& w,
                                   const std::vector<std::pair<double, double>>& jumps,
                                   double p, double total_length);

// weighted L^p norm of boundary samples: (int |f|^p rho |z'| ds)^{1/p}
double weighted_norm(const std::vector<Complex>& samples, const DiscretizedCurve& curve,
                     const WeightSpec& w, double p);

} // namespace faberlab
