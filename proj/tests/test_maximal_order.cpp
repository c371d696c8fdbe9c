#include <doctest.h>

#include "fixtures.hpp"

using namespace gheights;
using namespace gheights::fixtures;

TEST_CASE("Z[sqrt 2] is already maximal") {
    Order o = maximal_order(sqrt2_field());
    CHECK(o.lattice() == KLattice::power_lattice(sqrt2_field()));
    CHECK(o.discriminant() == 8);
}

TEST_CASE("saturation at 2 enlarges Z[sqrt(-3)]") {
    auto f = sqrt_minus3_field();
    Order o = maximal_order(f);
    CHECK(o.discriminant() == -3);
    CHECK(lattice_index(o.lattice(), KLattice::power_lattice(f)) == 2);
    // (1 + sqrt(-3))/2 is an algebraic integer living in the enlarged order.
    FieldElement half_sum(f, {Rat(1, 2), Rat(1, 2)});
    CHECK(o.lattice().contains(half_sum));
    CHECK(!KLattice::power_lattice(f).contains(half_sum));
}

TEST_CASE("the real cyclotomic cubic has a maximal equation order") {
    auto f = zeta7_plus_field();
    Order o = maximal_order(f);
    CHECK(o.lattice() == KLattice::power_lattice(f));
    CHECK(o.discriminant() == 49);
    CHECK(is_p_maximal(Order::equation_order(f), Int(7)));
}

TEST_CASE("golden ratio order") {
    Order o = maximal_order(sqrt5_field());
    CHECK(o.discriminant() == 5);
    FieldElement golden(sqrt5_field(), {Rat(1, 2), Rat(1, 2)});
    CHECK(o.lattice().contains(golden));
}

TEST_CASE("index-two enlargement in the Dedekind cubic") {
    auto f = dedekind_field();
    CHECK(poly_discriminant(f->min_poly()) == -2012);  // -2^2 * 503
    Order o = maximal_order(f);
    CHECK(o.discriminant() == -503);
    CHECK(lattice_index(o.lattice(), KLattice::power_lattice(f)) == 2);
    CHECK(!is_p_maximal(Order::equation_order(f), Int(2)));
    CHECK(is_p_maximal(o, Int(2)));
}

TEST_CASE("hint path verifies and rejects") {
    auto f = sqrt_minus3_field();
    Order o = maximal_order(f);
    CHECK(maximal_order(f, o.lattice().rational_basis()) == o);
    // The equation order is a valid order but not maximal: rejected.
    CHECK_THROWS_AS(maximal_order(f, KLattice::power_lattice(f).rational_basis()),
                    NotMaximalError);
    // A lattice that is not a ring at all: rejected.
    QMat bad{{1, 0}, {0, 1}};
    bad.at(1, 1) = Rat(1, 3);
    CHECK_THROWS_AS(maximal_order(f, bad), NotMaximalError);
}

TEST_CASE("desk-scale caps are enforced") {
    // Degree cap on fields.
    ZPoly big(14, Int(0));
    big[0] = 2;
    big[13] = 1;
    CHECK_THROWS_AS(NumberField::create(big), ScaleError);
    // Discriminant cap on the saturation path: t^2 - 10^13.
    auto f = NumberField::create({Int("-10000000000000"), Int(0), Int(1)});
    CHECK_THROWS_AS(maximal_order(f), ScaleError);
}

TEST_CASE("p-radical is a proper sublattice containing pT") {
    auto f = sqrt_minus3_field();
    Order t = Order::equation_order(f);
    KLattice rad = p_radical(t, Int(2));
    CHECK(sublattice_of(t.lattice().scale(Rat(2)).basis(), rad.basis()));
    CHECK(sublattice_of(rad.basis(), t.lattice().basis()));
    // sqrt(-3) + 1 squares to 2(sqrt(-3) - 1), so it is nilpotent mod 2.
    FieldElement u(f, {Rat(1), Rat(1)});
    CHECK(rad.contains(u));
}
