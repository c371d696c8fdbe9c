// Shared test fixtures: the standard small fields with their Galois actions,
// and the deterministic random samplers used by the property suites.
#pragma once

#include <random>

#include "gheights/heights.hpp"
#include "gheights/maximal_order.hpp"

namespace gheights::fixtures {

inline FieldPtr sqrt2_field() { return NumberField::create({Int(-2), Int(0), Int(1)}); }
inline FieldPtr sqrt5_field() { return NumberField::create({Int(-5), Int(0), Int(1)}); }
inline FieldPtr sqrt_minus3_field() { return NumberField::create({Int(3), Int(0), Int(1)}); }
/// Real subfield of the 7th cyclotomic field, t = zeta + zeta^-1.
inline FieldPtr zeta7_plus_field() {
    return NumberField::create({Int(-1), Int(-2), Int(1), Int(1)});
}
/// Cubic field with a common index divisor at 2 (non-monogenic maximal order).
inline FieldPtr dedekind_field() {
    return NumberField::create({Int(-8), Int(-2), Int(-1), Int(1)});
}

/// C2 action t -> -t on a quadratic field.
inline GaloisAction quadratic_action(const FieldPtr& field) {
    auto c2 = FiniteGroup::cyclic(2);
    FieldElement t = FieldElement::generator(field);
    return GaloisAction(c2, {t, -t});
}

/// C3 action t -> t^2 - 2 on the real cyclotomic cubic.
inline GaloisAction zeta7_plus_action(const FieldPtr& field) {
    auto c3 = FiniteGroup::cyclic(3);
    FieldElement t = FieldElement::generator(field);
    FieldElement s1 = t * t - FieldElement::from_rational(field, 2);
    FieldElement s2 = s1 * s1 - FieldElement::from_rational(field, 2);
    return GaloisAction(c3, {t, s1, s2});
}

inline GAlgebra sqrt2_algebra() {
    auto f = sqrt2_field();
    return GAlgebra::galois_field(f, quadratic_action(f));
}

inline GAlgebra zeta7_plus_algebra() {
    auto f = zeta7_plus_field();
    return GAlgebra::galois_field(f, zeta7_plus_action(f));
}

/// Deterministic full-rank lattice sampler: integer entries in [-50, 50],
/// denominator in [1, 20].
inline KLattice random_lattice(const FieldPtr& field, std::mt19937& rng) {
    std::uniform_int_distribution<long> entry(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    std::size_t d = field->degree();
    while (true) {
        QMat m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m.at(i, j) = Rat(entry(rng));
        if (m.det() == 0) continue;
        Rat scale(1, den(rng));
        return KLattice::from_rows(field, m * scale);
    }
}

/// Random fractional ideal of T: random lattice saturated by T until stable.
inline FractionalIdeal random_ideal(const Order& t, std::mt19937& rng) {
    KLattice lat = random_lattice(t.field(), rng);
    while (true) {
        KLattice next = lattice_add(lat, lattice_product(t.lattice(), lat));
        if (next == lat) break;
        lat = next;
    }
    return FractionalIdeal(t, lat);
}

/// Random nonzero element of an order (for principal-ideal sampling).
inline FieldElement random_element(const Order& t, std::mt19937& rng) {
    std::uniform_int_distribution<long> entry(-5, 5);
    auto basis = t.lattice().basis_elements();
    while (true) {
        FieldElement x = FieldElement::zero(t.field());
        for (const auto& b : basis) x = x + b * Rat(entry(rng));
        if (!x.is_zero()) return x;
    }
}

/// A handful of non-maximal orders across the fixture fields.
std::vector<Order> nonmaximal_orders();

}  // namespace gheights::fixtures
