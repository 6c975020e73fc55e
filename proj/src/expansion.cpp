#include "faberlab/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace faberlab {

struct SpaceParams::Cache {
    std::vector<FaberPolynomial> plus, minus; // minus[k-1] holds index k
    std::vector<std::vector<Complex>> plus_vals, minus_vals;
    std::shared_ptr<const DiscretizedCurve> circle_grid;
    TrigInterp phi_rootinv;      // (phi'(z(s)))^{-1/p}, periodic
    TrigInterp psi_h_rootinv;    // (psi'(z(s)) z(s)^2)^{-1/p}, periodic
    TrigInterp arg_xi_periodic;  // arg z(s) - 2 pi s / S
    TrigInterp log_abs_xi;       // ln|z(s)|
    // precomputed pullback grids: arc positions of the uniform circle nodes
    // under each correspondence, and the multipliers there
    std::vector<double> s_plus, s_minus;
    std::vector<Complex> mult_plus;             // (phi_inv')^{1/p}
    std::vector<Complex> mult_minus_kernel;     // w^{2/p} (psi_inv')^{1/p}
    std::vector<Complex> mult_minus_transplant; // (psi_inv')^{2/p}
};

namespace {

double l2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

} // namespace

SpaceParams make_space(const CurveSpec& spec, int n, double p, WeightSpec weight) {
    if (!(p > 1.0)) throw Error(ErrorKind::Config, "space exponent must exceed 1");
    weight.p = p;
    SpaceParams sp;
    sp.p = p;
    sp.weight = weight;
    sp.curve = std::make_shared<DiscretizedCurve>(resample(spec, n));
    sp.phi = std::make_shared<LaurentMap>(build_map(spec, MapDirection::Phi));
    sp.psi = std::make_shared<LaurentMap>(build_map(spec, MapDirection::Psi));
    const auto& nodes = sp.curve->nodes();
    const double S = sp.curve->length();

    std::vector<Complex> phi_b(n), psi_b(n), dphi(n), dpsi_h(n), xi(n);
    for (int j = 0; j < n; ++j) {
        phi_b[j] = sp.phi->map(nodes[j].z);
        psi_b[j] = sp.psi->map(nodes[j].z);
        dphi[j] = sp.phi->derivative(nodes[j].z);
        dpsi_h[j] = sp.psi->derivative(nodes[j].z) * nodes[j].z * nodes[j].z;
        xi[j] = nodes[j].z;
    }
    sp.corr_phi = MonotoneCorrespondence(unwrap_args(phi_b), S, +1);
    sp.corr_psi = MonotoneCorrespondence(unwrap_args(psi_b), S, -1);
    sp.arg_xi = unwrap_args(xi);
    sp.phi_root_args_ = unwrap_args(dphi);

    sp.cache_ = std::make_shared<SpaceParams::Cache>();
    sp.cache_->circle_grid = std::make_shared<DiscretizedCurve>(resample(CurveSpec::circle(1.0), n));
    std::vector<Complex> r_phi(n), r_psi(n), argxi_p(n), logxi(n);
    const auto arg_h = unwrap_args(dpsi_h);
    for (int j = 0; j < n; ++j) {
        r_phi[j] = std::exp(Complex(-std::log(std::abs(dphi[j])) / p, -sp.phi_root_args_[j] / p));
        r_psi[j] = std::exp(Complex(-std::log(std::abs(dpsi_h[j])) / p, -arg_h[j] / p));
        argxi_p[j] = Complex(sp.arg_xi[j] - 2.0 * kPi * nodes[j].s / S, 0.0);
        logxi[j] = Complex(std::log(std::abs(nodes[j].z)), 0.0);
    }
    sp.cache_->phi_rootinv = TrigInterp(r_phi, S);
    sp.cache_->psi_h_rootinv = TrigInterp(r_psi, S);
    sp.cache_->arg_xi_periodic = TrigInterp(argxi_p, S);
    sp.cache_->log_abs_xi = TrigInterp(logxi, S);

    auto& cc = *sp.cache_;
    cc.s_plus.resize(n);
    cc.s_minus.resize(n);
    cc.mult_plus.resize(n);
    cc.mult_minus_kernel.resize(n);
    cc.mult_minus_transplant.resize(n);
    for (int k = 0; k < n; ++k) {
        cc.s_plus[k] = sp.corr_phi.inverse(2.0 * kPi * k / n);
        cc.mult_plus[k] = cc.phi_rootinv(cc.s_plus[k]);
        cc.s_minus[k] = sp.corr_psi.inverse(-2.0 * kPi * k / n);
    }
    // branch of z^{2/p} continued along the k-path: anchored principal at the
    // path start, then s advances monotonically with k except for a single
    // wrap past S, where arg z gains 2 pi
    double wrap = 0.0;
    {
        const double s0 = cc.s_minus[0];
        const double raw0 = cc.arg_xi_periodic(s0).real() + 2.0 * kPi * s0 / S;
        const Complex z0 = std::exp(Complex(cc.log_abs_xi(s0).real(), raw0));
        wrap = 2.0 * kPi * std::round((std::arg(z0) - raw0) / (2.0 * kPi));
    }
    for (int k = 0; k < n; ++k) {
        if (k > 0 && cc.s_minus[k] < cc.s_minus[k - 1] - S / 2.0) wrap += 2.0 * kPi;
        const double theta = -2.0 * kPi * k / n; // continued arg of psi on the path
        const double s = cc.s_minus[k];
        const Complex hinv = cc.psi_h_rootinv(s); // (psi' z^2)^{-1/p}
        const double argxi = cc.arg_xi_periodic(s).real() + 2.0 * kPi * s / S + wrap;
        const Complex zlog(cc.log_abs_xi(s).real(), argxi);
        // (psi_inv')^{c/p} = (psi' z^2)^{-c/p} z^{2c/p}
        cc.mult_minus_kernel[k] =
            std::exp(Complex(0.0, 2.0 / p * theta)) * hinv * std::exp(2.0 / p * zlog);
        cc.mult_minus_transplant[k] = hinv * hinv * std::exp(4.0 / p * zlog);
    }

    // A_p scans of rho and its transplants (weight carried through the
    // boundary correspondences onto the unit circle)
    const int scan_n = std::min(n, 512);
    sp.rho_scan = muckenhoupt_scan(weight, spec, scan_n);
    WeightSpec wp = weight, wm = weight;
    for (size_t k = 0; k < weight.points.size(); ++k) {
        double tp = std::fmod(sp.corr_phi.forward(weight.points[k]), 2.0 * kPi);
        if (tp < 0) tp += 2.0 * kPi;
        double tm = std::fmod(sp.corr_psi.forward(weight.points[k]), 2.0 * kPi);
        if (tm < 0) tm += 2.0 * kPi;
        wp.points[k] = tp;
        wm.points[k] = tm;
    }
    const auto unit_circle = CurveSpec::circle(1.0);
    sp.rho_plus_scan = muckenhoupt_scan(wp, unit_circle, scan_n);
    sp.rho_minus_scan = muckenhoupt_scan(wm, unit_circle, scan_n);
    return sp;
}

const FaberPolynomial& SpaceParams::plus_poly(int n) const {
    auto& c = *cache_;
    while (static_cast<int>(c.plus.size()) <= n)
        c.plus.push_back(faber_plus(*phi, p, static_cast<int>(c.plus.size())));
    return c.plus[n];
}

const FaberPolynomial& SpaceParams::minus_poly(int k) const {
    if (k < 1) throw Error(ErrorKind::Config, "minus-side index must be >= 1");
    auto& c = *cache_;
    while (static_cast<int>(c.minus.size()) < k)
        c.minus.push_back(faber_minus(*psi, p, static_cast<int>(c.minus.size()) + 1));
    return c.minus[k - 1];
}

const std::vector<Complex>& SpaceParams::plus_values(int n) const {
    auto& c = *cache_;
    while (static_cast<int>(c.plus_vals.size()) <= n) {
        const auto& poly = plus_poly(static_cast<int>(c.plus_vals.size()));
        std::vector<Complex> vals(curve->size());
        for (int j = 0; j < curve->size(); ++j) vals[j] = poly.evaluate(curve->nodes()[j].z);
        c.plus_vals.push_back(std::move(vals));
    }
    return c.plus_vals[n];
}

const std::vector<Complex>& SpaceParams::minus_values(int k) const {
    auto& c = *cache_;
    while (static_cast<int>(c.minus_vals.size()) < k) {
        const auto& poly = minus_poly(static_cast<int>(c.minus_vals.size()) + 1);
        std::vector<Complex> vals(curve->size());
        for (int j = 0; j < curve->size(); ++j) vals[j] = poly.evaluate(curve->nodes()[j].z);
        c.minus_vals.push_back(std::move(vals));
    }
    return c.minus_vals[k - 1];
}

namespace {

// g samples on the circle path w_k = e^{i theta_k}, theta_k = orient*2pi k/M,
// pulled through the boundary correspondence; exponent_w is the power of w in
// the multiplier and root_scale the power applied to the derivative root.
std::vector<Complex> pullback_plus(const BoundaryFunction& F, const SpaceParams& sp) {
    const int M = sp.curve->size();
    TrigInterp fi(F.samples(), sp.curve->length());
    const auto* c = sp.cache_ptr();
    std::vector<Complex> out(M);
    for (int k = 0; k < M; ++k) out[k] = fi(c->s_plus[k]) * c->mult_plus[k];
    return out;
}

} // namespace

// private cache access for the helpers above
const SpaceParams::Cache* SpaceParams::cache_ptr() const { return cache_.get(); }

BoundaryFunction transplant_plus(const BoundaryFunction& f, const SpaceParams& sp) {
    auto samples = pullback_plus(f, sp);
    return BoundaryFunction(sp.cache_ptr()->circle_grid, samples);
}

namespace {

// minus-side pullback in k-order along w_k = e^{-2 pi i k / M}; kernel = true
// applies w^{2/p} (psi_inv')^{1/p} (the analysis kernel), false applies
// (psi_inv')^{2/p} (the transplant).
std::vector<Complex> pullback_minus(const BoundaryFunction& F, const SpaceParams& sp,
                                    bool kernel) {
    const int M = sp.curve->size();
    TrigInterp fi(F.samples(), sp.curve->length());
    const auto* c = sp.cache_ptr();
    std::vector<Complex> out(M);
    for (int k = 0; k < M; ++k)
        out[k] = fi(c->s_minus[k]) *
                 (kernel ? c->mult_minus_kernel[k] : c->mult_minus_transplant[k]);
    return out;
}

} // namespace

BoundaryFunction transplant_minus(const BoundaryFunction& f, const SpaceParams& sp) {
    const int M = sp.curve->size();
    auto korder = pullback_minus(f, sp, false);
    std::vector<Complex> aligned(M);
    for (int k = 0; k < M; ++k) aligned[(M - k) % M] = korder[k];
    return BoundaryFunction(sp.cache_ptr()->circle_grid, aligned);
}

namespace {

std::vector<Complex> expand_plus_impl(const BoundaryFunction& F, const SpaceParams& sp,
                                      int M1, double purity_tol, double* purity_out) {
    if (M1 < 0 || M1 > sp.curve->size() / 2 - 2)
        throw Error(ErrorKind::Config, "plus truncation outside the reliable band");
    auto [fp, fm] = plemelj_values(F);
    const double scale = l2(F.samples());
    const double purity = scale > 0.0 ? l2(fm.samples()) / scale : 0.0;
    if (purity_out) *purity_out = purity;
    if (purity > purity_tol)
        throw Error(ErrorKind::Data, "input is not a plus-side trace (minus part " +
                                         std::to_string(purity) + ")");
    const auto samples = pullback_plus(F, sp);
    const auto coeffs = fourier_coefficients(samples);
    std::vector<Complex> out(M1 + 1);
    for (int n = 0; n <= M1; ++n) out[n] = fourier_mode(coeffs, n);
    // undo the n = 0 normalization: the basis element is 1, not gamma^{1/p}
    out[0] *= sp.plus_poly(0).dropped_factor;
    return out;
}

std::vector<Complex> expand_minus_impl(const BoundaryFunction& F, const SpaceParams& sp,
                                       int M2, double purity_tol, double g0_tol,
                                       double* purity_out, double* g0_out) {
    if (M2 < 0 || M2 > sp.curve->size() / 2 - 2)
        throw Error(ErrorKind::Config, "minus truncation outside the reliable band");
    auto [fp, fm] = plemelj_values(F);
    const double scale = l2(F.samples());
    const double purity = scale > 0.0 ? l2(fp.samples()) / scale : 0.0;
    if (purity_out) *purity_out = purity;
    if (purity > purity_tol)
        throw Error(ErrorKind::Data, "input is not a minus-side trace (plus part " +
                                         std::to_string(purity) + ")");
    // decay at infinity: the exterior extension of a minus trace is the
    // negated Cauchy integral, probed far outside the curve.  (The constant
    // mode of the pulled-back samples also carries the remainder transplant
    // of the basis elements, so it is not usable as a decay detector.)
    const double diam = sp.curve->diameter();
    const Complex far(20.0 * diam, 7.0 * diam);
    const double rms = scale / std::sqrt(double(F.size()));
    const double g0 = scale > 0.0 ? std::abs(cauchy_integral(F, far)) / rms : 0.0;
    if (g0_out) *g0_out = g0;
    if (g0 > g0_tol)
        throw Error(ErrorKind::Data, "trace does not vanish at infinity (far-field " +
                                         std::to_string(g0) + ")");
    const auto samples = pullback_minus(F, sp, true);
    const auto coeffs = fourier_coefficients(samples);
    std::vector<Complex> out(M2); // out[k-1] holds index k
    for (int k = 1; k <= M2; ++k)
        out[k - 1] = fourier_mode(coeffs, -k); // w_k = e^{-2 pi i k/M} path ordering
    return out;
}

} // namespace

std::vector<Complex> expand_smirnov_plus(const BoundaryFunction& F, const SpaceParams& sp,
                                         int M1, double purity_tol) {
    return expand_plus_impl(F, sp, M1, purity_tol, nullptr);
}

std::vector<Complex> expand_smirnov_minus(const BoundaryFunction& F, const SpaceParams& sp,
                                          int M2, double purity_tol, double g0_tol) {
    return expand_minus_impl(F, sp, M2, purity_tol, g0_tol, nullptr, nullptr);
}

DoubleExpansion expand_double(const BoundaryFunction& f, const CoefficientPair& pair,
                              const SpaceParams& sp, int M1, int M2, bool strict) {
    const auto sol = solve_nonhomogeneous(pair, sp.weight, sp.p, f, -1, true, strict);
    DoubleExpansion exp;
    exp.f = f;
    exp.f_norm = weighted_norm(f.samples(), *sp.curve, sp.weight, sp.p);
    exp.warnings = sol.warnings;
    const double inf = std::numeric_limits<double>::infinity();
    exp.plus_coeffs = expand_plus_impl(sol.plus_trace, sp, M1, inf, &exp.plus_purity);
    exp.minus_coeffs =
        expand_minus_impl(sol.minus_trace, sp, M2, inf, inf, &exp.minus_purity, &exp.g0_defect);
    const int mmax = std::min(M1, M2);
    exp.residual_history.resize(mmax + 1);
    for (int m = 0; m <= mmax; ++m)
        exp.residual_history[m] = reconstruct(exp, pair, sp, m, m).second;
    return exp;
}

DoubleExpansion expand_phase_system(const BoundaryFunction& f, double alpha,
                                    const SpaceParams& sp, int M1, int M2, bool strict) {
    const int n = sp.curve->size();
    std::vector<Complex> a(n), b(n);
    for (int j = 0; j < n; ++j) {
        a[j] = std::exp(Complex(0.0, alpha * sp.arg_xi[j]));
        b[j] = std::exp(Complex(0.0, -alpha * sp.arg_xi[j]));
    }
    CoefficientPair pair;
    pair.A = BoundaryFunction(sp.curve, a);
    pair.B = BoundaryFunction(sp.curve, b);
    // theta = -2 alpha arg xi drops by 4 pi alpha over the loop, so the start
    // point carries the compensating jump
    pair.jump_sites = {0.0};
    pair.jump_sizes = {4.0 * kPi * alpha};
    return expand_double(f, pair, sp, M1, M2, strict);
}

std::pair<BoundaryFunction, double> reconstruct(const DoubleExpansion& exp,
                                                const CoefficientPair& pair,
                                                const SpaceParams& sp, int M1, int M2) {
    if (M1 >= static_cast<int>(exp.plus_coeffs.size()) ||
        M2 > static_cast<int>(exp.minus_coeffs.size()))
        throw Error(ErrorKind::Config, "truncation exceeds the stored expansion");
    const int n = sp.curve->size();
    std::vector<Complex> plus_sum(n, Complex(0.0, 0.0)), minus_sum(n, Complex(0.0, 0.0));
    for (int m = 0; m <= M1; ++m) {
        const auto& vals = sp.plus_values(m);
        for (int j = 0; j < n; ++j) plus_sum[j] += exp.plus_coeffs[m] * vals[j];
    }
    for (int k = 1; k <= M2; ++k) {
        const auto& vals = sp.minus_values(k);
        for (int j = 0; j < n; ++j) minus_sum[j] += exp.minus_coeffs[k - 1] * vals[j];
    }
    std::vector<Complex> s(n), r(n);
    for (int j = 0; j < n; ++j) {
        s[j] = pair.A[j] * plus_sum[j] + pair.B[j] * minus_sum[j];
        r[j] = exp.f[j] - s[j];
    }
    const double res = weighted_norm(r, *sp.curve, sp.weight, sp.p);
    const double rel = exp.f_norm > 0.0 ? res / exp.f_norm : res;
    return {BoundaryFunction(sp.curve, s), rel};
}

double decay_slope(const std::vector<double>& residuals) {
    std::vector<std::pair<double, double>> pts;
    for (size_t m = residuals.size() / 2; m < residuals.size(); ++m)
        if (residuals[m] > 0.0 && std::isfinite(residuals[m]))
            pts.emplace_back(double(m), std::log10(residuals[m]));
    if (pts.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : pts) {
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double nn = double(pts.size());
    return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

} // namespace faberlab
