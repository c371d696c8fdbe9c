#pragma once

#include <optional>
#include <vector>

#include "gheights/galois.hpp"
#include "gheights/group_algebra.hpp"
#include "gheights/lattice.hpp"

namespace gheights {

/// A Galois algebra over Q in one of the two supported shapes: the split
/// algebra of functions G -> Q, or a Galois field with an explicit verified
/// G-action. Either way the coefficient field K_L (Q itself for split) is
/// exposed for the lattice machinery.
class GAlgebra {
public:
    static GAlgebra split(std::shared_ptr<const FiniteGroup> group);
    static GAlgebra galois_field(FieldPtr field, GaloisAction action);

    bool is_split() const { return split_; }
    const FiniteGroup& group() const { return *group_; }
    const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
    /// K_L: the field factor; the rationals (degree one) for the split algebra.
    const FieldPtr& coefficient_field() const { return field_; }
    const GaloisAction& action() const;

    bool operator==(const GAlgebra& o) const;

private:
    GAlgebra(bool split, std::shared_ptr<const FiniteGroup> group, FieldPtr field,
             std::optional<GaloisAction> action);
    bool split_;
    std::shared_ptr<const FiniteGroup> group_;
    FieldPtr field_;
    std::optional<GaloisAction> action_;
};

/// A pair (L, x). Construction validates normality (trace one and independent
/// conjugates); NotNormalError otherwise. For the split algebra x is the value
/// vector indexed by the group, for a field it is power-basis coordinates.
class Pair {
public:
    Pair(GAlgebra algebra, std::vector<Rat> x);

    const GAlgebra& algebra() const { return algebra_; }
    const std::vector<Rat>& x() const { return x_; }

    /// x as an element of K_L; only for field pairs.
    FieldElement x_element() const;

    bool operator==(const Pair& o) const { return algebra_ == o.algebra_ && x_ == o.x_; }

private:
    GAlgebra algebra_;
    std::vector<Rat> x_;
};

/// Trace of x in L over Q.
Rat pair_trace(const GAlgebra& algebra, const std::vector<Rat>& x);

/// Trace one and the G-conjugates form a Q-basis.
bool is_normal_element(const GAlgebra& algebra, const std::vector<Rat>& x);
bool is_normal(const Pair& pair);

/// Tr(x g(x)) = 1 for the identity and 0 otherwise; NotNormalError on
/// non-normal input.
bool is_self_dual(const Pair& pair);

/// The images of x under all Q-algebra homomorphisms L -> K_L, as elements of
/// K_L. For a field these are the Galois conjugates; for the split algebra the
/// evaluation values.
std::vector<FieldElement> conjugates(const Pair& pair);

/// Z-span of the conjugates inside K_L.
KLattice conjugate_lattice(const Pair& pair);

/// The unit sum_g phi(g(x)) [g^-1] over K_L lying above the pair; the embedding
/// choice phi is parametrized by a group element (phi = eval at w for split,
/// phi = sigma_w for fields).
GroupAlgebraElement<FieldElement> fiber_unit(const Pair& pair, std::size_t embedding_choice);
GroupAlgebraElement<FieldElement> fiber_unit(const Pair& pair);

/// The moduli action u (L, x) = (L, sum_g a_g g(x)); NotUnitError unless u is
/// in U_G(Q).
Pair act(const GroupAlgebraElement<Rat>& u, const Pair& pair);

/// The unique u in U_G(Q) with act(u, from) == to; both pairs must live on the
/// same algebra.
GroupAlgebraElement<Rat> transporter(const Pair& from, const Pair& to);

/// Cached algebraic invariants of a pair, all recomputable from it.
struct PairInvariants {
    KLattice lambda;          // conjugate lattice
    Order multiplier;         // T = (lambda : lambda)
    Order maximal;            // ring of integers of K_L
    Rat disc_multiplier;      // disc T
    Rat disc_lambda;          // disc of the conjugate lattice
    Rat dis;                  // discrepancy of lambda as a T-ideal
    int field_degree;         // d = [K_L : Q]
    std::size_t group_order;  // |G|
};

PairInvariants pair_invariants(const Pair& pair);

/// Exhaustive deterministic search box for self-dual elements.
struct SearchBox {
    Int coefficient_bound{1};
    Int denominator_bound{1};
    /// Field pairs only: restrict x to this lattice (integer combinations of
    /// its basis, clipped to the trace-form ellipsoid Tr(x^2) = 1).
    std::optional<KLattice> restrict_to;
};

/// All self-dual normal elements inside the box, exactly verified, in
/// deterministic lexicographic order. Workers may split the box when
/// parallelism > 1; the merged order does not depend on it.
std::vector<Pair> selfdual_search(const GAlgebra& algebra, const SearchBox& box,
                                  int parallelism = 1);

}  // namespace gheights
