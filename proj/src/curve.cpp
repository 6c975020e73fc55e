#include "faberlab/curve.hpp"

#include <algorithm>
#include <cmath>

namespace faberlab {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

// speed |dz/dt| of the angle parametrization of an ellipse
double ellipse_speed(double a, double b, double t) {
    const double sa = a * std::sin(t), cb = b * std::cos(t);
    return std::sqrt(sa * sa + cb * cb);
}

constexpr int kArcTableSize = 1 << 14;

} // namespace

CurveSpec CurveSpec::circle(double radius) {
    if (radius <= 0.0) throw Error(ErrorKind::Config, "circle radius must be positive");
    CurveSpec c;
    c.kind_ = CurveKind::Circle;
    c.radius_ = radius;
    c.length_ = 2.0 * kPi * radius;
    const double R = radius;
    c.point_ = [R](double s) { return R * std::exp(Complex(0.0, s / R)); };
    c.derivative_ = [R](double s) { return Complex(0.0, 1.0) * std::exp(Complex(0.0, s / R)); };
    return c;
}

CurveSpec CurveSpec::ellipse(double a, double b) {
    if (a <= 0.0 || b <= 0.0) throw Error(ErrorKind::Config, "ellipse semi-axes must be positive");
    CurveSpec c;
    c.kind_ = CurveKind::Ellipse;
    c.a_ = a;
    c.b_ = b;

    // cumulative arc length over the angle parameter, trapezoid on a fine grid
    auto table = std::make_shared<std::vector<double>>(kArcTableSize + 1);
    const double dt = 2.0 * kPi / kArcTableSize;
    (*table)[0] = 0.0;
    double prev = ellipse_speed(a, b, 0.0);
    for (int i = 1; i <= kArcTableSize; ++i) {
        const double v = ellipse_speed(a, b, i * dt);
        (*table)[i] = (*table)[i - 1] + 0.5 * (prev + v) * dt;
        prev = v;
    }
    c.arc_table_ = table;
    c.length_ = table->back();

    // arc-length parametrization through the inverted table
    const CurveSpec* self = nullptr; // filled below via copies of needed state
    auto tbl = c.arc_table_;
    const double S = c.length_;
    auto angle_of = [tbl, S, a, b](double s) {
        s = std::fmod(s, S);
        if (s < 0.0) s += S;
        // binary search + Newton polish
        const auto& T = *tbl;
        auto it = std::upper_bound(T.begin(), T.end(), s);
        int i = std::max<int>(1, static_cast<int>(it - T.begin())) - 1;
        const double dt = 2.0 * kPi / kArcTableSize;
        double t = i * dt + (s - T[i]) / std::max(ellipse_speed(a, b, i * dt), 1e-300);
        for (int k = 0; k < 4; ++k) {
            // L(t) - s via local trapezoid correction from the table anchor
            const double t0 = i * dt;
            const double mid = 0.5 * (t0 + t);
            const double L = T[i] + (t - t0) / 6.0 *
                (ellipse_speed(a, b, t0) + 4.0 * ellipse_speed(a, b, mid) + ellipse_speed(a, b, t));
            t -= (L - s) / std::max(ellipse_speed(a, b, t), 1e-300);
        }
        return t;
    };
    (void)self;
    c.point_ = [angle_of, a, b](double s) {
        const double t = angle_of(s);
        return Complex(a * std::cos(t), b * std::sin(t));
    };
    c.derivative_ = [angle_of, a, b](double s) {
        const double t = angle_of(s);
        const Complex dz(-a * std::sin(t), b * std::cos(t));
        return dz / ellipse_speed(a, b, t);
    };
    return c;
}

CurveSpec CurveSpec::custom(std::function<Complex(double)> point,
                            std::function<Complex(double)> derivative,
                            double total_length) {
    if (total_length <= 0.0) throw Error(ErrorKind::Config, "total length must be positive");
    CurveSpec c;
    c.kind_ = CurveKind::Custom;
    c.length_ = total_length;
    c.point_ = std::move(point);
    c.derivative_ = std::move(derivative);
    return c;
}

double CurveSpec::ellipse_angle(double s) const {
    if (kind_ != CurveKind::Ellipse) throw Error(ErrorKind::Config, "ellipse_angle on non-ellipse");
    return angle_from_arc(s);
}

double CurveSpec::angle_from_arc(double s) const {
    const auto& T = *arc_table_;
    const double S = length_;
    s = std::fmod(s, S);
    if (s < 0.0) s += S;
    auto it = std::upper_bound(T.begin(), T.end(), s);
    int i = std::max<int>(1, static_cast<int>(it - T.begin())) - 1;
    const double dt = 2.0 * kPi / kArcTableSize;
    double t = i * dt + (s - T[i]) / std::max(ellipse_speed(a_, b_, i * dt), 1e-300);
    for (int k = 0; k < 4; ++k) {
        const double t0 = i * dt;
        const double mid = 0.5 * (t0 + t);
        const double L = T[i] + (t - t0) / 6.0 *
            (ellipse_speed(a_, b_, t0) + 4.0 * ellipse_speed(a_, b_, mid) + ellipse_speed(a_, b_, t));
        t -= (L - s) / std::max(ellipse_speed(a_, b_, t), 1e-300);
    }
    return t;
}

DiscretizedCurve::DiscretizedCurve(CurveSpec spec, std::vector<CurveNode> nodes)
    : spec_(std::move(spec)), nodes_(std::move(nodes)) {
    h_ = spec_.length() / static_cast<double>(nodes_.size());
    double d = 0.0;
    const int n = size();
    // diameter estimate over a coarse node subset
    const int step = std::max(1, n / 128);
    for (int i = 0; i < n; i += step)
        for (int j = i + step; j < n; j += step)
            d = std::max(d, std::abs(nodes_[i].z - nodes_[j].z));
    diameter_ = d;
}

double DiscretizedCurve::winding_number(Complex z0) const {
    double total = 0.0;
    const int n = size();
    for (int j = 0; j < n; ++j) {
        const Complex a = nodes_[j].z - z0;
        const Complex b = nodes_[(j + 1) % n].z - z0;
        total += std::arg(b / a);
    }
    return total / (2.0 * kPi);
}

double DiscretizedCurve::distance_to(Complex z0) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& nd : nodes_) d = std::min(d, std::abs(nd.z - z0));
    return d;
}

DiscretizedCurve resample(const CurveSpec& spec, int n) {
    if (!is_power_of_two(n) || n < 4)
        throw Error(ErrorKind::Sizing, "node count must be a power of two >= 4");
    const double S = spec.length();
    const double h = S / n;
    std::vector<CurveNode> nodes(n);
    for (int j = 0; j < n; ++j) {
        const double s = j * h;
        nodes[j] = {s, spec.point(s), spec.derivative(s)};
        if (std::abs(nodes[j].dz) < 1e-12)
            throw Error(ErrorKind::Config, "cusp: z'(s) vanishes at a grid node");
    }
    // closure and injectivity spot-check
    if (std::abs(spec.point(S) - spec.point(0.0)) > 1e-8 * (std::abs(spec.point(0.0)) + 1.0))
        throw Error(ErrorKind::Config, "curve is not closed: z(S) != z(0)");
    DiscretizedCurve curve(spec, std::move(nodes));
    const double min_sep = 0.25 * h;
    const auto& nd = curve.nodes();
    for (int i = 0; i < n; ++i) {
        const int jnext = (i + 1) % n;
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (std::abs(nd[i].z - nd[j].z) < min_sep && j != jnext)
                throw Error(ErrorKind::Config, "self-intersection among grid nodes");
        }
        if (n > 512) break; // full O(n^2) check only on coarse grids
    }
    return curve;
}

double carleson_sup_ratio(const DiscretizedCurve& curve,
                          const std::vector<int>& center_nodes,
                          const std::vector<double>& radii) {
    if (radii.empty()) throw Error(ErrorKind::Config, "empty radii grid");
    const auto& nodes = curve.nodes();
    const double h = curve.spacing();
    double sup = 0.0;
    for (int c : center_nodes) {
        const Complex zc = nodes[c].z;
        for (double r : radii) {
            double arc = 0.0;
            for (const auto& nd : nodes)
                if (std::abs(nd.z - zc) < r) arc += h * std::abs(nd.dz);
            sup = std::max(sup, arc / r);
        }
    }
    return sup;
}

namespace {

std::vector<int> spread_centers(int n, int count) {
    std::vector<int> centers;
    const int step = std::max(1, n / count);
    for (int j = 0; j < n; j += step) centers.push_back(j);
    return centers;
}

std::vector<double> geometric_radii(double lo, double hi, int count) {
    std::vector<double> radii(count);
    const double q = std::pow(hi / lo, 1.0 / (count - 1));
    double r = lo;
    for (int i = 0; i < count; ++i, r *= q) radii[i] = r;
    return radii;
}

} // namespace

CarlesonReport check_regular(const CurveSpec& spec, int n, int n_centers, int n_radii) {
    if (n_radii < 2) throw Error(ErrorKind::Config, "radii grid needs at least 2 entries");
    const DiscretizedCurve coarse = resample(spec, n);
    const DiscretizedCurve fine = resample(spec, 2 * n);

    // the radii family is held fixed while N doubles, so the stability gate
    // measures discretization convergence rather than a change of candidates
    auto radii = geometric_radii(coarse.spacing(), coarse.diameter(), n_radii);
    CarlesonReport rep;
    rep.sup_ratio = carleson_sup_ratio(coarse, spread_centers(n, n_centers), radii);
    rep.refined_ratio = carleson_sup_ratio(fine, spread_centers(2 * n, n_centers), radii);

    rep.is_regular = std::isfinite(rep.sup_ratio) &&
                     std::abs(rep.refined_ratio - rep.sup_ratio) < 0.05 * rep.sup_ratio;
    return rep;
}

} // namespace faberlab
