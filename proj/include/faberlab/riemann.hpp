#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "faberlab/cauchy.hpp"
#include "faberlab/weights.hpp"

namespace faberlab {

// Boundary coefficients of A F+ + B F- = f with their declared phase jumps.
// jump_sites are arc parameters (use 0.0 for a jump at the start point);
// jump_sizes are the declared increments of arg(-B/A) there, used to
// disambiguate the branch when a jump exceeds pi in size.
struct CoefficientPair {
    BoundaryFunction A, B;
    std::vector<double> jump_sites;
    std::vector<double> jump_sizes;

    static CoefficientPair from_callables(std::shared_ptr<const DiscretizedCurve> curve,
                                          const std::function<Complex(Complex)>& a,
                                          const std::function<Complex(Complex)>& b);
};

// D(s) = -B/A, the continued phase Omega(s) = arg D, the jump list h_k
// (including the start-point jump h_0 = Omega(+0) - Omega(S-0)), and the
// singular factor sigma(s) = prod |z(s_k) - z(s)|^{-h_k/2pi}.
struct JumpData {
    std::shared_ptr<const DiscretizedCurve> curve;
    BoundaryFunction D;
    std::vector<double> omega;                   // continued arg D at nodes
    std::vector<std::pair<double, double>> jumps; // (s_k, h_k), start point first if present
    std::vector<double> sigma;                   // 0.0 marker at singular nodes
    BoundaryFunction exponent;                   // ln|D| + i Omega
};

// Condition-i check (|A|^{+-1}, |B|^{+-1} bounded) plus phase continuation;
// Condition error when |A| or |B| degenerates at a node.
JumpData jump_data(const CoefficientPair& pair);

// Canonical solution Z(z) = exp Cauchy[ln|D| + i Omega](z) with Plemelj
// traces; Z+ = D Z- holds node-wise by construction.
struct CanonicalSolution {
    JumpData jd;
    BoundaryFunction z_plus, z_minus;

    Complex evaluate(Complex z) const; // off-curve (>= 2h away)
};

CanonicalSolution canonical_solution(const JumpData& jd);

struct RiemannSolution {
    BoundaryFunction plus_trace, minus_trace;
    std::function<Complex(Complex)> evaluate; // picks the side from the point
    int m = -1;
    double boundary_residual = 0.0; // relative weighted residual of A F+ + B F- = f
    std::vector<std::string> warnings;
};

// Homogeneous family {Z z^k, k = 0..m}; empty for m < 0. Admissibility of
// the weight (window -1 < beta_k < p/q) warns by default and refuses under
// strict.
std::vector<RiemannSolution> solve_homogeneous(const CoefficientPair& pair,
                                               const WeightSpec& weight, double p, int m,
                                               bool strict = false);

// Nonhomogeneous solution F1 = Z * Cauchy[g / Z+] with g = f / A; the
// construction satisfies A F+ + B F- = f node-wise identically.  When
// vanish_at_infinity, no homogeneous part is added (the unique decaying
// solution); otherwise the zero polynomial is used and m is recorded.
RiemannSolution solve_nonhomogeneous(const CoefficientPair& pair, const WeightSpec& weight,
                                     double p, const BoundaryFunction& f, int m,
                                     bool vanish_at_infinity, bool strict = false);

// Admissibility report for the pair's jumps against the weight (Eq-window).
AdmissibilityReport pair_admissibility(const JumpData& jd, const WeightSpec& weight, double p);

} // namespace faberlab
