#pragma once

#include <iosfwd>

#include "coxspec/bipoly.hpp"
#include "coxspec/curves.hpp"
#include "coxspec/dihedral.hpp"

namespace coxspec {

// Normalized defining polynomial of a curve: lines have constant term -1,
// ellipses read 1 - x1^2 - x2^2 - 2cos(2*pi*q)*x1*x2.
BiPoly curve_poly(const Curve& c);

// Spectrum of a labeled representation: each irreducible contributes its
// curve with the term's multiplicity.
CurveSet spectrum_of_spec(const RepSpec& spec);

struct PairSpectrum {
    BiPoly f;           // det(-I + x1*A + x2*B)
    CurveSet curves;    // full factorization with multiplicities
    int product_order;  // detected order of A*B
    int catalog_n;      // dihedral parameter used for the candidate curves (>= 2)
};

// Spectrum from raw generator matrices: detect the order of A*B, compute the
// pencil determinant and factor it exhaustively over the finite curve
// catalog of the detected group. The residual quotient must be exactly 1.
PairSpectrum spectrum_of_matrices(const CycMatrix& a, const CycMatrix& b, int max_order);

// Draw the curves over [-range, range]^2 with axes, as deterministic SVG.
void emit_svg(const CurveSet& curves, double range, std::ostream& out);

}  // namespace coxspec
