#include "faberlab/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace faberlab {

namespace {

double principal(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a > kPi) a -= 2.0 * kPi;
    if (a < -kPi) a += 2.0 * kPi;
    return a;
}

} // namespace

CoefficientPair CoefficientPair::from_callables(std::shared_ptr<const DiscretizedCurve> curve,
                                                const std::function<Complex(Complex)>& a,
                                                const std::function<Complex(Complex)>& b) {
    CoefficientPair pair;
    pair.A = BoundaryFunction::from_callable(curve, a);
    pair.B = BoundaryFunction::from_callable(curve, b);
    return pair;
}

JumpData jump_data(const CoefficientPair& pair) {
    auto curve = pair.A.curve_ptr();
    const int n = pair.A.size();
    if (pair.B.size() != n)
        throw Error(ErrorKind::Sizing, "coefficient samples disagree in size");
    const double S = curve->length();

    // condition i: |A|, |B| bounded above and away from zero on the grid
    double amax = 0.0, amin = 1e300, bmax = 0.0, bmin = 1e300;
    for (int j = 0; j < n; ++j) {
        amax = std::max(amax, std::abs(pair.A[j]));
        amin = std::min(amin, std::abs(pair.A[j]));
        bmax = std::max(bmax, std::abs(pair.B[j]));
        bmin = std::min(bmin, std::abs(pair.B[j]));
    }
    if (amin < 1e-12 * std::max(amax, 1.0) || bmin < 1e-12 * std::max(bmax, 1.0))
        throw Error(ErrorKind::Condition, "|A| or |B| degenerates at a node (condition i)");

    JumpData jd;
    jd.curve = curve;
    std::vector<Complex> d(n);
    for (int j = 0; j < n; ++j) d[j] = -pair.B[j] / pair.A[j];
    jd.D = BoundaryFunction(curve, d);

    // declared jump size falling in the half-open arc (s_lo, s_hi]
    auto declared_in = [&](double s_lo, double s_hi) {
        double h = 0.0;
        for (size_t k = 0; k < pair.jump_sites.size(); ++k) {
            double t = std::fmod(pair.jump_sites[k], S);
            if (t < 0) t += S;
            if (t > s_lo && t <= s_hi) h += pair.jump_sizes[k];
        }
        return h;
    };
    double start_jump_declared = 0.0;
    for (size_t k = 0; k < pair.jump_sites.size(); ++k) {
        double t = std::fmod(pair.jump_sites[k], S);
        if (t < 0) t += S;
        if (t < 1e-12 * S || t > S - 1e-12 * S) start_jump_declared += pair.jump_sizes[k];
    }

    jd.omega.resize(n);
    jd.omega[0] = std::arg(d[0]);
    const auto& nodes = curve->nodes();
    std::vector<double> interval_jump(n, 0.0); // continued increment over (s_{j-1}, s_j]
    for (int j = 1; j < n; ++j) {
        const double raw = std::arg(d[j] / d[j - 1]);
        const double hdecl = declared_in(nodes[j - 1].s, nodes[j].s);
        const double delta = hdecl + principal(raw - hdecl);
        interval_jump[j] = delta;
        jd.omega[j] = jd.omega[j - 1] + delta;
    }
    // wrap: smooth continuation to S-0, then the start-point jump h_0
    const double raw_wrap = std::arg(d[0] / d[n - 1]);
    const double d_cont = principal(raw_wrap - start_jump_declared);
    const double omega_S = jd.omega[n - 1] + d_cont;
    const double h0 = jd.omega[0] - omega_S;

    if (std::abs(h0) > 1e-9) jd.jumps.emplace_back(0.0, h0);
    for (size_t k = 0; k < pair.jump_sites.size(); ++k) {
        double t = std::fmod(pair.jump_sites[k], S);
        if (t < 0) t += S;
        if (t < 1e-12 * S || t > S - 1e-12 * S) continue; // folded into h_0
        // read the jump back from the continued increment over its interval
        int j = 1;
        while (j < n - 1 && nodes[j].s < t - 1e-15) ++j;
        jd.jumps.emplace_back(t, interval_jump[j]);
    }

    jd.sigma.resize(n, 1.0);
    for (int j = 0; j < n; ++j) {
        double v = 1.0;
        for (const auto& [sk, hk] : jd.jumps) {
            const double dist = std::abs(curve->spec().point(sk) - nodes[j].z);
            if (dist < 1e-14) { v = 0.0; break; } // singular node marker
            v *= std::pow(dist, -hk / (2.0 * kPi));
        }
        jd.sigma[j] = v;
    }

    std::vector<Complex> u(n);
    for (int j = 0; j < n; ++j) u[j] = Complex(std::log(std::abs(d[j])), jd.omega[j]);
    jd.exponent = BoundaryFunction(curve, u);
    return jd;
}

Complex CanonicalSolution::evaluate(Complex z) const {
    return std::exp(cauchy_integral(jd.exponent, z));
}

CanonicalSolution canonical_solution(const JumpData& jd) {
    CanonicalSolution cs;
    cs.jd = jd;
    auto [up, um] = plemelj_values(jd.exponent);
    const int n = jd.exponent.size();
    std::vector<Complex> zp(n), zm(n);
    for (int j = 0; j < n; ++j) {
        zp[j] = std::exp(up[j]);
        zm[j] = std::exp(um[j]);
    }
    cs.z_plus = BoundaryFunction(jd.curve, zp);
    cs.z_minus = BoundaryFunction(jd.curve, zm);
    return cs;
}

AdmissibilityReport pair_admissibility(const JumpData& jd, const WeightSpec& weight, double p) {
    return beta_exponents(weight, jd.jumps, p, jd.curve->length());
}

namespace {

std::vector<std::string> admissibility_gate(const JumpData& jd, const WeightSpec& weight,
                                            double p, bool strict) {
    const auto rep = pair_admissibility(jd, weight, p);
    std::vector<std::string> warnings;
    if (!rep.window_ok) {
        std::string msg = "weight/jump exponents leave the admissible window:";
        for (size_t k = 0; k < rep.betas.size(); ++k)
            msg += " beta(" + std::to_string(rep.merged_points[k]) + ")=" +
                   std::to_string(rep.betas[k]);
        if (strict) throw Error(ErrorKind::Condition, msg);
        warnings.push_back(msg);
    }
    return warnings;
}

double relative_residual(const CoefficientPair& pair, const BoundaryFunction& fp,
                         const BoundaryFunction& fm, const BoundaryFunction& f,
                         const WeightSpec& weight, double p) {
    const int n = f.size();
    std::vector<Complex> r(n);
    for (int j = 0; j < n; ++j) r[j] = pair.A[j] * fp[j] + pair.B[j] * fm[j] - f[j];
    const double num = weighted_norm(r, f.curve(), weight, p);
    const double den = weighted_norm(f.samples(), f.curve(), weight, p);
    return den > 0.0 ? num / den : num;
}

} // namespace

std::vector<RiemannSolution> solve_homogeneous(const CoefficientPair& pair,
                                               const WeightSpec& weight, double p, int m,
                                               bool strict) {
    const JumpData jd = jump_data(pair);
    auto warnings = admissibility_gate(jd, weight, p, strict);
    std::vector<RiemannSolution> family;
    if (m < 0) return family;

    auto cs = std::make_shared<CanonicalSolution>(canonical_solution(jd));
    auto curve = jd.curve;
    const int n = curve->size();
    for (int k = 0; k <= m; ++k) {
        RiemannSolution sol;
        sol.m = m;
        sol.warnings = warnings;
        std::vector<Complex> fp(n), fm(n);
        for (int j = 0; j < n; ++j) {
            const Complex zk = std::pow(curve->nodes()[j].z, double(k));
            fp[j] = cs->z_plus[j] * zk;
            fm[j] = cs->z_minus[j] * zk;
        }
        sol.plus_trace = BoundaryFunction(curve, fp);
        sol.minus_trace = BoundaryFunction(curve, fm);
        sol.evaluate = [cs, k](Complex z) {
            return cs->evaluate(z) * std::pow(z, double(k));
        };
        std::vector<Complex> zero(n, Complex(0.0, 0.0));
        sol.boundary_residual = relative_residual(pair, sol.plus_trace, sol.minus_trace,
                                                  BoundaryFunction(curve, zero), weight, p);
        family.push_back(std::move(sol));
    }
    return family;
}

RiemannSolution solve_nonhomogeneous(const CoefficientPair& pair, const WeightSpec& weight,
                                     double p, const BoundaryFunction& f, int m,
                                     bool vanish_at_infinity, bool strict) {
    const JumpData jd = jump_data(pair);
    auto warnings = admissibility_gate(jd, weight, p, strict);
    auto cs = std::make_shared<CanonicalSolution>(canonical_solution(jd));
    auto curve = jd.curve;
    const int n = curve->size();

    // normalize to F+ - D F- = g, then divide by the canonical traces
    std::vector<Complex> g(n);
    for (int j = 0; j < n; ++j) {
        if (std::abs(cs->z_plus[j]) < 1e-13)
            throw Error(ErrorKind::Condition, "canonical trace Z+ vanishes at a node");
        g[j] = f[j] / pair.A[j] / cs->z_plus[j];
    }
    auto density = std::make_shared<BoundaryFunction>(curve, g);
    auto [gp, gm] = plemelj_values(*density);

    RiemannSolution sol;
    sol.m = vanish_at_infinity ? -1 : m;
    sol.warnings = warnings;
    std::vector<Complex> fp(n), fm(n);
    for (int j = 0; j < n; ++j) {
        fp[j] = cs->z_plus[j] * gp[j];
        fm[j] = cs->z_minus[j] * gm[j];
    }
    sol.plus_trace = BoundaryFunction(curve, fp);
    sol.minus_trace = BoundaryFunction(curve, fm);
    sol.evaluate = [cs, density](Complex z) {
        return cs->evaluate(z) * cauchy_integral(*density, z);
    };
    sol.boundary_residual = relative_residual(pair, sol.plus_trace, sol.minus_trace, f, weight, p);
    return sol;
}

} // namespace faberlab
