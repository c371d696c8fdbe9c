#pragma once

#include "gheights/lattice.hpp"

namespace gheights {

/// The p-radical of an order: elements nilpotent modulo p, as a sublattice
/// containing pT. Computed from the kernel of the Frobenius power map on T/pT.
KLattice p_radical(const Order& t, const Int& p);

/// Pohst-Zassenhaus test: T is p-maximal iff the multiplier ring of its
/// p-radical is T itself.
bool is_p_maximal(const Order& t, const Int& p);

/// Maximal order by p-radical saturation at every prime whose square divides
/// the equation-order discriminant. Memoized per field. ScaleError when
/// |disc(f)| exceeds 10^12 (the hint path is required beyond that).
Order maximal_order(const FieldPtr& field);

/// Verify a claimed maximal-order basis: it must be an order containing the
/// equation order, its discriminant must account for disc(f) through the index
/// squared, and it must be p-maximal at every p with p^2 dividing its
/// discriminant. NotMaximalError on any failure.
Order maximal_order(const FieldPtr& field, const QMat& hint_basis);

}  // namespace gheights
