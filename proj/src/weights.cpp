#include "faberlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace faberlab {

void WeightSpec::validate(double total_length) const {
    if (points.size() != alphas.size())
        throw Error(ErrorKind::Config, "weight points/alphas length mismatch");
    if (!(p > 1.0) || !std::isfinite(p))
        throw Error(ErrorKind::Config, "weight requires 1 < p < inf");
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i] <= 0.0 || points[i] >= total_length)
            throw Error(ErrorKind::Config, "weight singular point outside (0, S)");
        for (size_t j = i + 1; j < points.size(); ++j)
            if (std::abs(points[i] - points[j]) < 1e-9 * total_length)
                throw Error(ErrorKind::Config, "weight singular points must be distinct");
    }
}

double weight_eval(const WeightSpec& w, double s) {
    double v = 1.0;
    for (size_t k = 0; k < w.points.size(); ++k) {
        const double d = std::abs(s - w.points[k]);
        if (d == 0.0) {
            if (w.alphas[k] < 0.0)
                throw Error(ErrorKind::Data, "weight evaluated at a singular point with negative exponent");
            if (w.alphas[k] > 0.0) return 0.0;
            continue; // alpha = 0 contributes factor 1
        }
        v *= std::pow(d, w.alphas[k]);
    }
    return v;
}

double weight_eval_offset(const WeightSpec& w, double s, double half_step) {
    for (size_t k = 0; k < w.points.size(); ++k) {
        if (std::abs(s - w.points[k]) < 0.5 * half_step) {
            // push off the singularity
            return weight_eval(w, s + half_step);
        }
    }
    return weight_eval(w, s);
}

namespace {

double scan_once(const WeightSpec& w, const DiscretizedCurve& curve,
                 int n_centers, int n_radii) {
    const auto& nodes = curve.nodes();
    const int n = curve.size();
    const double h = curve.spacing();
    const double exponent = -1.0 / (w.p - 1.0);

    // centers: spread subset plus the nodes nearest each singular point
    std::vector<int> centers;
    const int step = std::max(1, n / n_centers);
    for (int j = 0; j < n; j += step) centers.push_back(j);
    for (double t : w.points) {
        int best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            const double d = std::abs(nodes[j].s - t);
            if (d < bd) { bd = d; best = j; }
        }
        centers.push_back(best);
    }

    std::vector<double> radii(n_radii);
    {
        const double lo = h, hi = curve.diameter();
        const double qr = std::pow(hi / lo, 1.0 / (n_radii - 1));
        double r = lo;
        for (int i = 0; i < n_radii; ++i, r *= qr) radii[i] = r;
    }

    // node weights, computed once with the half-step offset rule
    std::vector<double> rho(n), rho_dual(n), arc(n);
    for (int j = 0; j < n; ++j) {
        rho[j] = weight_eval_offset(w, nodes[j].s, 0.5 * h);
        rho_dual[j] = std::pow(rho[j], exponent);
        arc[j] = h * std::abs(nodes[j].dz);
    }

    double sup = 0.0;
    for (int c : centers) {
        const Complex zc = nodes[c].z;
        for (double r : radii) {
            double m1 = 0.0, m2 = 0.0;
            for (int j = 0; j < n; ++j) {
                if (std::abs(nodes[j].z - zc) < r) {
                    m1 += rho[j] * arc[j];
                    m2 += rho_dual[j] * arc[j];
                }
            }
            if (m1 == 0.0 || m2 == 0.0) continue;
            const double quot = (m1 / r) * std::pow(m2 / r, w.p - 1.0);
            sup = std::max(sup, quot);
        }
    }
    return sup;
}

} // namespace

MuckenhouptReport muckenhoupt_scan(const WeightSpec& w, const CurveSpec& spec, int n,
                                   int n_centers, int n_radii) {
    w.validate(spec.length());
    MuckenhouptReport rep;
    rep.ap_estimate = scan_once(w, resample(spec, n), n_centers, n_radii);
    rep.refined_estimate = scan_once(w, resample(spec, 2 * n), n_centers, n_radii);
    rep.in_class = std::isfinite(rep.ap_estimate) &&
                   rep.refined_estimate < 1.10 * rep.ap_estimate;
    return rep;
}

AdmissibilityReport beta_exponents(const WeightSpec& w,
                                   const std::vector<std::pair<double, double>>& jumps,
                                   double p, double total_length) {
    const double merge_tol = 1e-9 * total_length;
    AdmissibilityReport rep;

    std::vector<double> pts;
    for (const auto& [s, h] : jumps) { (void)h; pts.push_back(s); }
    for (double t : w.points) pts.push_back(t);
    std::sort(pts.begin(), pts.end());
    for (double t : pts) {
        if (rep.merged_points.empty() || t - rep.merged_points.back() > merge_tol)
            rep.merged_points.push_back(t);
    }

    const double q = p / (p - 1.0);
    rep.betas.resize(rep.merged_points.size(), 0.0);
    rep.disjoint = true;
    for (size_t k = 0; k < rep.merged_points.size(); ++k) {
        const double tau = rep.merged_points[k];
        bool has_jump = false, has_weight = false;
        for (const auto& [s, h] : jumps)
            if (std::abs(s - tau) <= merge_tol) { rep.betas[k] += -(p / (2.0 * kPi)) * h; has_jump = true; }
        for (size_t i = 0; i < w.points.size(); ++i)
            if (std::abs(w.points[i] - tau) <= merge_tol) { rep.betas[k] += w.alphas[i]; has_weight = true; }
        if (has_jump && has_weight) rep.disjoint = false;
    }

    rep.window_ok = true;
    for (double b : rep.betas)
        if (!(b > -1.0 && b < p / q)) rep.window_ok = false;

    if (rep.disjoint) {
        rep.cor43_ok = true;
        rep.cor43_literal = true;
        for (const auto& [s, h] : jumps) {
            (void)s;
            const double ratio = h / (2.0 * kPi);
            if (!(ratio > -1.0 / q && ratio < 1.0 / p)) { rep.cor43_ok = false; rep.cor43_literal = false; }
        }
        for (double a : w.alphas) {
            if (!(a > -1.0 && a < p / q)) rep.cor43_ok = false;         // A_p-consistent bound
            if (!(a > -1.0 && a < q / p)) rep.cor43_literal = false;    // bound as printed
        }
    }
    return rep;
}

double weighted_norm(const std::vector<Complex>& samples, const DiscretizedCurve& curve,
                     const WeightSpec& w, double p) {
    const int n = curve.size();
    if (static_cast<int>(samples.size()) != n)
        throw Error(ErrorKind::Data, "sample count does not match curve nodes");
    const double h = curve.spacing();
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const Complex f = samples[j];
        if (!std::isfinite(f.real()) || !std::isfinite(f.imag()))
            throw Error(ErrorKind::Data, "non-finite boundary sample");
        const double rho = weight_eval_offset(w, curve[j].s, 0.5 * h);
        sum += std::pow(std::abs(f), p) * rho * std::abs(curve[j].dz) * h;
    }
    return std::pow(sum, 1.0 / p);
}

} // namespace faberlab
