#pragma once

#include <vector>

#include "gheights/interval.hpp"
#include "gheights/matrix.hpp"

namespace gheights {

// Dense univariate polynomials, coefficients low degree first, trailing zeros trimmed.
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

int degree(const ZPoly& f);  // -1 for the zero polynomial
int degree(const QPoly& f);

void trim(ZPoly& f);
void trim(QPoly& f);

QPoly to_qpoly(const ZPoly& f);
bool is_monic(const ZPoly& f);

QPoly q_add(const QPoly& a, const QPoly& b);
QPoly q_sub(const QPoly& a, const QPoly& b);
QPoly q_mul(const QPoly& a, const QPoly& b);
QPoly q_scale(const QPoly& a, const Rat& c);

ZPoly z_derivative(const ZPoly& f);
QPoly q_derivative(const QPoly& f);

Rat q_eval(const QPoly& f, const Rat& x);
Rat z_eval(const ZPoly& f, const Rat& x);
RealInterval z_eval(const ZPoly& f, const RealInterval& x);
ComplexEnclosure z_eval(const ZPoly& f, const ComplexEnclosure& x);

/// Quotient and remainder of a by b over Q; b nonzero.
std::pair<QPoly, QPoly> q_divmod(const QPoly& a, const QPoly& b);

/// Monic gcd over Q.
QPoly q_gcd(QPoly a, QPoly b);

/// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
std::tuple<QPoly, QPoly, QPoly> q_xgcd(const QPoly& a, const QPoly& b);

bool is_squarefree(const ZPoly& f);

/// Resultant of two integer polynomials, computed as the determinant of the
/// Sylvester matrix by fraction-free elimination.
Int resultant(const ZPoly& f, const ZPoly& g);

/// Discriminant via the resultant of f and f'; DegreeError for constants.
Rat poly_discriminant(const ZPoly& f);

/// Fraction-free (Bareiss) determinant of an integer matrix.
Int z_det(const ZMat& m);

/// Number of real roots of a squarefree f in the half-open interval (a, b].
int sturm_count(const ZPoly& f, const Rat& a, const Rat& b);

/// Number of real roots of a squarefree f on the whole line.
int sturm_count_all(const ZPoly& f);

/// Cauchy-style bound: all complex roots have |z| < bound.
Rat root_bound(const ZPoly& f);

}  // namespace gheights
