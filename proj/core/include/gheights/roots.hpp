#pragma once

#include <vector>

#include "gheights/interval.hpp"
#include "gheights/poly.hpp"

namespace gheights {

/// Certified enclosures of all complex roots of a squarefree integer polynomial.
///
/// Returns deg(f) pairwise-disjoint boxes, each of radius at most target_radius
/// and each containing exactly one root. Real roots (counted exactly by Sturm)
/// come first in ascending order with zero-width imaginary part; strictly
/// complex roots follow in conjugate pairs, sorted by real then imaginary part.
///
/// SquarefreeError if gcd(f, f') is nonconstant. PrecisionError if the
/// refinement loop hits its doubling cap (20) before certifying.
std::vector<ComplexEnclosure> complex_roots(const ZPoly& f, const Rat& target_radius);

/// Enclosures of the real roots only, in ascending order.
std::vector<RealInterval> real_roots(const ZPoly& f, const Rat& target_radius);

}  // namespace gheights
