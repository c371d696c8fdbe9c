#pragma once

#include <memory>
#include <vector>

#include "gheights/hnf.hpp"
#include "gheights/number_field.hpp"

namespace gheights {

/// Full-rank Z-lattice inside a number field, held in canonical HNF over the
/// power basis. Equality is structural.
class KLattice {
public:
    KLattice(FieldPtr field, HNFBasis basis);

    static KLattice span(FieldPtr field, const std::vector<FieldElement>& generators);
    static KLattice from_rows(FieldPtr field, const QMat& rows);
    /// The lattice Z[t] spanned by the power basis.
    static KLattice power_lattice(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const HNFBasis& basis() const { return basis_; }
    QMat rational_basis() const { return basis_.rational_basis(); }
    std::size_t dim() const { return basis_.dim(); }

    bool contains(const FieldElement& x) const;
    std::vector<FieldElement> basis_elements() const;

    KLattice scale(const Rat& c) const;

    bool operator==(const KLattice& o) const {
        return field_->same_field(*o.field_) && basis_ == o.basis_;
    }

private:
    FieldPtr field_;
    HNFBasis basis_;
};

/// Colon lattice (I : J) = {a in K : aJ contained in I}.
KLattice colon(const KLattice& i, const KLattice& j);

/// Z-span of all pairwise products of basis elements.
KLattice lattice_product(const KLattice& i, const KLattice& j);

KLattice lattice_add(const KLattice& i, const KLattice& j);

/// Trace dual {a : Tr(a I) contained in Z}.
KLattice trace_dual(const KLattice& lat);

/// Determinant of the trace-form Gram matrix of any basis; basis independent.
Rat disc_lattice(const KLattice& lat);

/// An order: a lattice containing 1 that is closed under multiplication.
/// Construction validates both properties on the basis.
class Order {
public:
    explicit Order(KLattice lattice);

    /// The equation order Z[t].
    static Order equation_order(FieldPtr field);

    const KLattice& lattice() const { return lat_; }
    const FieldPtr& field() const { return lat_.field(); }
    Rat discriminant() const { return disc_lattice(lat_); }

    bool operator==(const Order& o) const { return lat_ == o.lat_; }

private:
    KLattice lat_;
};

/// Ring of multipliers (L : L); always an order.
Order multiplier_ring(const KLattice& lat);

/// The lattice c T of a principal fractional ideal; ZeroError for c = 0.
KLattice principal_lattice(const Order& t, const FieldElement& c);

/// Fractional ideal carrying its order explicitly; T*I <= I is validated.
class FractionalIdeal {
public:
    FractionalIdeal(Order order, KLattice lattice);

    const Order& order() const { return order_; }
    const KLattice& lattice() const { return lat_; }

    bool operator==(const FractionalIdeal& o) const {
        return order_ == o.order_ && lat_ == o.lat_;
    }

private:
    Order order_;
    KLattice lat_;
};

/// Generalized index [T : I], an exact positive rational, multiplicative on
/// invertible ideals.
Rat ideal_norm(const Order& t, const FractionalIdeal& i);
Rat lattice_index(const KLattice& sup, const KLattice& sub);  // [sup : sub]

/// Largest ideal of the larger order contained in the smaller: (T : O).
/// ContainmentError unless T is contained in O. Returned as a T-ideal.
FractionalIdeal conductor(const Order& t, const Order& o);

/// The different (T : T^dual), as a T-ideal.
FractionalIdeal different(const Order& t);

/// dis(I) = N_O(O I) / N_T(I) against the maximal order O of the field.
Rat discrepancy(const Order& t, const FractionalIdeal& i, const Order& maximal);
Rat discrepancy(const Order& t, const FractionalIdeal& i);

/// I * (T : I) == T.
bool is_invertible(const Order& t, const FractionalIdeal& i);

/// dis(D_T) == 1.
bool is_gorenstein(const Order& t, const Order& maximal);
bool is_gorenstein(const Order& t);

}  // namespace gheights
