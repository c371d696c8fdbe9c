#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gheights/galois.hpp"

using namespace gheights;
using namespace gheights::fixtures;

TEST_CASE("irreducibility screening at construction") {
    CHECK_NOTHROW(NumberField::create({Int(-2), Int(0), Int(1)}));
    CHECK_NOTHROW(NumberField::create({Int(1), Int(0), Int(0), Int(0), Int(1)}));  // t^4 + 1
    CHECK_THROWS_AS(NumberField::create({Int(-1), Int(0), Int(1)}), IrreducibilityError);
    // t^4 + 4 factors with no rational root.
    CHECK_THROWS_AS(NumberField::create({Int(4), Int(0), Int(0), Int(0), Int(1)}),
                    IrreducibilityError);
    CHECK_THROWS_AS(NumberField::create({Int(1), Int(2), Int(1)}), IrreducibilityError);
    CHECK_THROWS_AS(NumberField::create({Int(5)}), DegreeError);
    CHECK_THROWS_AS(NumberField::create({Int(1), Int(2)}), PreconditionError);  // not monic
}

TEST_CASE("element arithmetic in Q(sqrt 2)") {
    auto f = sqrt2_field();
    FieldElement t = FieldElement::generator(f);
    CHECK((t * t) == FieldElement::from_rational(f, 2));
    FieldElement one_plus_t = FieldElement::one(f) + t;
    FieldElement inv = one_plus_t.inverse();
    CHECK(inv.coords()[0] == -1);
    CHECK(inv.coords()[1] == 1);
    CHECK(is_one(one_plus_t * inv));
    CHECK_THROWS_AS(FieldElement::zero(f).inverse(), DivisionByZero);
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int i = 0; i < 10; ++i) {
        FieldElement x(f, {Rat(entry(rng)), Rat(entry(rng))});
        if (x.is_zero()) continue;
        CHECK(is_one(x * x.inverse()));
    }
}

TEST_CASE("trace and norm from the companion structure") {
    auto f = zeta7_plus_field();  // t^3 + t^2 - 2t - 1
    FieldElement one = FieldElement::one(f);
    FieldElement t = FieldElement::generator(f);
    CHECK(one.trace() == 3);
    CHECK(t.trace() == -1);                 // minus the t^2 coefficient
    CHECK(t.norm() == 1);                   // (-1)^3 f(0)
    CHECK((t * t).trace() == 5);            // power sums: s2 = s1^2 - 2 e2 = 1 + 4
    auto d = dedekind_field();              // t^3 - t^2 - 2t - 8
    CHECK(FieldElement::generator(d).norm() == 8);
}

TEST_CASE("galois action on the real cyclotomic cubic") {
    auto f = zeta7_plus_field();
    GaloisAction action = zeta7_plus_action(f);
    FieldElement t = FieldElement::generator(f);
    CHECK(action.apply(0, t) == t);
    // sigma has order three: applying it along the table returns t.
    FieldElement s = action.image(1);
    FieldElement s2 = action.apply(1, s);
    FieldElement s3 = action.apply(1, s2);
    CHECK(s2 == action.image(2));
    CHECK(s3 == t);
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int i = 0; i < 8; ++i) {
        FieldElement x(f, {Rat(entry(rng)), Rat(entry(rng)), Rat(entry(rng))});
        CHECK(action.apply(1, x).trace() == x.trace());
        CHECK(action.apply(2, x).norm() == x.norm());
        // Composition realizes the table on elements.
        CHECK(action.apply(1, action.apply(2, x)) == action.apply(0, x));
        // The orbit sum is the rational trace when |G| equals the degree.
        FieldElement orbit_sum = FieldElement::zero(f);
        for (std::size_t g = 0; g < 3; ++g) orbit_sum = orbit_sum + action.apply(g, x);
        CHECK(orbit_sum.is_rational());
        CHECK(orbit_sum.coords()[0] == x.trace());
    }
}

TEST_CASE("verify_galois accepts the right actions and rejects the wrong ones") {
    auto f = zeta7_plus_field();
    CHECK(verify_galois(*f, zeta7_plus_action(f)));
    auto q = NumberField::create({Int(0), Int(1)});
    GaloisAction trivial(FiniteGroup::cyclic(1), {FieldElement::generator(q)});
    CHECK(verify_galois(*q, trivial));
    // Order mismatch: C2 cannot act faithfully with fixed field Q on a cubic.
    FieldElement t = FieldElement::generator(f);
    GaloisAction wrong(FiniteGroup::cyclic(2), {t, t});
    CHECK(!verify_galois(*f, wrong));
    // Right group, broken image.
    auto c3 = FiniteGroup::cyclic(3);
    GaloisAction broken(c3, {t, t * Rat(2), t * Rat(3)});
    CHECK(!verify_galois(*f, broken));
}

TEST_CASE("generator extension through the table") {
    auto f = zeta7_plus_field();
    auto c3 = FiniteGroup::cyclic(3);
    FieldElement t = FieldElement::generator(f);
    FieldElement s1 = t * t - FieldElement::from_rational(f, 2);
    auto action = GaloisAction::from_generators(c3, f, {{1, s1}});
    CHECK(verify_galois(*f, action));
    CHECK(action.image(2) == action.apply(1, s1));
    CHECK_THROWS_AS(GaloisAction::from_generators(FiniteGroup::klein_four(), f, {}), GroupError);
}

TEST_CASE("embeddings evaluate coordinates on certified roots") {
    auto f = sqrt2_field();
    Rat radius(1, Int(1) << 20);
    FieldElement one = FieldElement::one(f);
    auto ones = embeddings(one, radius);
    REQUIRE(ones.size() == 2);
    for (const auto& e : ones) {
        CHECK(e.real().contains(Rat(1)));
        CHECK(e.imaginary().contains(Rat(0)));
        CHECK(e.radius() <= radius);
    }
    FieldElement t = FieldElement::generator(f);
    auto ts = embeddings(t, radius);
    RealInterval sumsq;
    for (const auto& e : ts) sumsq = sumsq + e.abs_square();
    CHECK(sumsq.contains(Rat(4)));  // 2 + 2
}

TEST_CASE("totally real detection") {
    CHECK(sqrt2_field()->is_totally_real());
    CHECK(zeta7_plus_field()->is_totally_real());
    CHECK(!sqrt_minus3_field()->is_totally_real());
    CHECK(!dedekind_field()->is_totally_real());
}
