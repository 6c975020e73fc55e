#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "faberlab/error.hpp"

namespace faberlab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

enum class CurveKind { Circle, Ellipse, Custom };

// Parametric Jordan curve in arc-length parametrization, positively oriented
// (interior on the left).  Catalog curves (circle, ellipse) are built through
// the factory functions below; custom curves supply z(s) and z'(s) directly
// with |z'| == 1.
class CurveSpec {
public:
    static CurveSpec circle(double radius);
    static CurveSpec ellipse(double a, double b);
    static CurveSpec custom(std::function<Complex(double)> point,
                            std::function<Complex(double)> derivative,
                            double total_length);

    CurveKind kind() const { return kind_; }
    double length() const { return length_; }
    double radius() const { return radius_; }
    double semi_axis_a() const { return a_; }
    double semi_axis_b() const { return b_; }

    Complex point(double s) const { return point_(s); }
    Complex derivative(double s) const { return derivative_(s); }

    // For the ellipse: angle parameter t with z = (a cos t, b sin t) at arc
    // length s.  Used by the conformal module.
    double ellipse_angle(double s) const;

    CurveSpec() = default; // empty spec; filled in by the factories

private:
    CurveKind kind_ = CurveKind::Custom;
    double length_ = 0.0;
    double radius_ = 0.0, a_ = 0.0, b_ = 0.0;
    std::function<Complex(double)> point_;
    std::function<Complex(double)> derivative_;
    // cumulative arc length table for the ellipse reparametrization
    std::shared_ptr<const std::vector<double>> arc_table_;
    double angle_from_arc(double s) const;
};

struct CurveNode {
    double s;
    Complex z;
    Complex dz; // z'(s), unit modulus in arc-length parametrization
};

class DiscretizedCurve {
public:
    DiscretizedCurve() = default;
    DiscretizedCurve(CurveSpec spec, std::vector<CurveNode> nodes);

    const CurveSpec& spec() const { return spec_; }
    const std::vector<CurveNode>& nodes() const { return nodes_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    double spacing() const { return h_; }
    double length() const { return spec_.length(); }
    double diameter() const { return diameter_; }

    const CurveNode& operator[](int j) const { return nodes_[j]; }

    // winding number of the grid polygon about z0 (expects +1 for interior points)
    double winding_number(Complex z0) const;
    double distance_to(Complex z0) const;

private:
    CurveSpec spec_;
    std::vector<CurveNode> nodes_;
    double h_ = 0.0;
    double diameter_ = 0.0;
};

// n must be a power of two, n >= 4.  Throws Sizing on bad n, Branch-free cusp
// check: |z'| must stay positive on the grid.
DiscretizedCurve resample(const CurveSpec& spec, int n);

struct CarlesonReport {
    double sup_ratio = 0.0;
    bool is_regular = false;
    double refined_ratio = 0.0; // sup ratio on the doubled grid
};

// Estimates sup over (center, radius) of |Gamma ∩ O_r(z)| / r by summing grid
// arc lengths inside the disc.  Radii form a geometric grid in [h, diam];
// regularity = the estimate moves < 5% when the node count doubles.
CarlesonReport check_regular(const CurveSpec& spec, int n,
                             int n_centers = 64, int n_radii = 48);

// lower-level scan on a fixed grid
double carleson_sup_ratio(const DiscretizedCurve& curve,
                          const std::vector<int>& center_nodes,
                          const std::vector<double>& radii);

bool is_power_of_two(int n);

} // namespace faberlab
