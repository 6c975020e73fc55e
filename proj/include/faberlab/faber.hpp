#pragma once

#include <vector>

#include "faberlab/conformal.hpp"

namespace faberlab {

enum class FaberSide { Plus, Minus };

// Principal-part polynomial of phi(z)^n (phi')^{1/p} at infinity (plus side)
// or of psi(z)^{n-2/p} (psi')^{1/p} at its pole 0 (minus side).
struct FaberPolynomial {
    FaberSide side = FaberSide::Plus;
    int n = 0;
    double p = 2.0;
    // Plus: coeffs[m] multiplies z^m, m = 0..n.
    // Minus: coeffs[k] multiplies z^{-(k+1)}, k = 0..n-1 (no constant term).
    std::vector<Complex> coeffs;
    double extraction_radius = 0.0;
    double residual = 0.0;        // largest coefficient beyond the principal part
    Complex dropped_factor = 1.0; // gamma^{1/p} absorbed by the n = 0 convention

    int degree() const { return side == FaberSide::Plus ? n : -n; }
    Complex evaluate(Complex z) const;
};

// Plus-side construction: samples w on |w| = R (R > 1), maps through the
// inverse of phi so the contour always encloses the curve, branch-continues
// (phi')^{1/p} along the loop (anchor principal, positive on the real axis
// for catalog maps), and reads Laurent coefficients from contour integrals.
// The n = 0 polynomial is normalized to the constant 1; the dropped constant
// gamma^{1/p} is recorded in dropped_factor.
FaberPolynomial faber_plus(const LaurentMap& phi, double p, int n, double radius = 1.5,
                           int samples = 2048);

// Minus-side construction on the image of |w| = R under the inverse of psi
// (a closed loop around 0 inside the curve).  psi^{n-2/p} and (psi')^{1/p}
// are branch-continued separately; their product must close up over the loop
// (endpoint/startpoint ratio 1 within 1e-8) or the extraction is rejected.
FaberPolynomial faber_minus(const LaurentMap& psi, double p, int n, double radius = 1.5,
                            int samples = 2048);

// Two-radius extraction with a relative agreement check (< 1e-8); Accuracy
// error on disagreement.
FaberPolynomial faber_plus_checked(const LaurentMap& phi, double p, int n,
                                   double r1 = 1.5, double r2 = 2.0);
FaberPolynomial faber_minus_checked(const LaurentMap& psi, double p, int n,
                                    double r1 = 1.5, double r2 = 2.0);

// Remainder E = (full product) - (principal part) at an off-curve probe; the
// branch of the product is fixed by continuation from the extraction anchor.
Complex faber_remainder(const LaurentMap& map, const FaberPolynomial& poly, Complex z);

// Branch-consistent value of the defining product at a point of the map's
// domain: phi(z)^n (phi'(z))^{1/p} or psi(z)^{n-2/p} (psi'(z))^{1/p}.
Complex faber_product(const LaurentMap& map, double p, int n, Complex z);

} // namespace faberlab
