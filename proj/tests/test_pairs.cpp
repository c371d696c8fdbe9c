#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"

using namespace gheights;
using namespace gheights::fixtures;

namespace {
std::vector<Rat> R(std::initializer_list<Rat> xs) { return xs; }

Pair indicator_pair(const std::shared_ptr<const FiniteGroup>& g, std::size_t at) {
    std::vector<Rat> x(g->order(), Rat(0));
    x[at] = 1;
    return Pair(GAlgebra::split(g), x);
}
}  // namespace

TEST_CASE("normality of split elements") {
    auto c3 = FiniteGroup::cyclic(3);
    GAlgebra alg = GAlgebra::split(c3);
    CHECK(is_normal_element(alg, R({Rat(1), Rat(0), Rat(0)})));
    CHECK(!is_normal_element(alg, R({Rat(1, 3), Rat(1, 3), Rat(1, 3)})));  // singular
    CHECK(!is_normal_element(alg, R({Rat(1), Rat(1), Rat(0)})));           // trace 2
    auto c2 = FiniteGroup::cyclic(2);
    CHECK(is_normal_element(GAlgebra::split(c2), R({Rat(2), Rat(-1)})));
    CHECK_THROWS_AS(Pair(alg, R({Rat(1, 3), Rat(1, 3), Rat(1, 3)})), NotNormalError);
}

TEST_CASE("normality in the field case") {
    GAlgebra alg = sqrt2_algebra();
    // x = 1/2 + b t is normal for any b != 0.
    CHECK(is_normal_element(alg, R({Rat(1, 2), Rat(1)})));
    CHECK(is_normal_element(alg, R({Rat(1, 2), Rat(-3, 2)})));
    CHECK(!is_normal_element(alg, R({Rat(1, 2), Rat(0)})));  // conjugates coincide
    CHECK(!is_normal_element(alg, R({Rat(1), Rat(1)})));     // trace 2
}

TEST_CASE("self-duality for split pairs") {
    auto c2 = FiniteGroup::cyclic(2);
    GAlgebra alg = GAlgebra::split(c2);
    CHECK(is_self_dual(Pair(alg, R({Rat(1), Rat(0)}))));
    CHECK(is_self_dual(Pair(alg, R({Rat(0), Rat(1)}))));
    CHECK(!is_self_dual(Pair(alg, R({Rat(2), Rat(-1)}))));
    auto c3 = FiniteGroup::cyclic(3);
    GAlgebra alg3 = GAlgebra::split(c3);
    CHECK(is_self_dual(Pair(alg3, R({Rat(-1, 3), Rat(2, 3), Rat(2, 3)}))));
}

TEST_CASE("quadratic fields have no self-dual elements") {
    GAlgebra alg = sqrt2_algebra();
    // Normal elements are 1/2 + b t; Tr(x^2) = 1/2 + 4 b^2 != 1 whenever it
    // needs to be 1 with Tr(x g(x)) = 0 simultaneously; check a sample box.
    for (long num = -6; num <= 6; ++num)
        for (long den = 1; den <= 3; ++den) {
            if (num == 0) continue;
            Pair p(alg, R({Rat(1, 2), Rat(num, den)}));
            CHECK(!is_self_dual(p));
        }
}

TEST_CASE("conjugate lattices") {
    auto c2 = FiniteGroup::cyclic(2);
    GAlgebra alg = GAlgebra::split(c2);
    // Content lattice of a self-dual split pair.
    Pair p(alg, R({Rat(1), Rat(0)}));
    KLattice lam = conjugate_lattice(p);
    CHECK(lam.basis().denominator == 1);
    CHECK(lam.basis().basis.at(0, 0) == 1);  // the lattice Z inside Q
    Pair q(alg, R({Rat(3, 5), Rat(2, 5)}));
    KLattice lam_q = conjugate_lattice(q);
    // Content of {3/5, 2/5} is 1/5.
    CHECK(lam_q.rational_basis().at(0, 0) == Rat(1, 5));
    // Field case: conjugates of a normal element span full rank.
    GAlgebra z7 = zeta7_plus_algebra();
    Pair fp(z7, R({Rat(0), Rat(-1), Rat(0)}));  // x = -t, trace 1
    CHECK(pair_trace(z7, fp.x()) == 1);
    CHECK(conjugate_lattice(fp).dim() == 3);
}

TEST_CASE("fiber units") {
    auto c2 = FiniteGroup::cyclic(2);
    GAlgebra alg = GAlgebra::split(c2);
    Pair p(alg, R({Rat(2), Rat(-1)}));
    auto u = fiber_unit(p);
    CHECK(is_one(augmentation(u)));
    CHECK(!is_zero(group_determinant(u)));
    CHECK(in_U_G(u));
    // Identity pair gives the identity unit.
    auto e = fiber_unit(indicator_pair(c2, 0));
    CHECK(is_one(e.coeff(0)));
    CHECK(is_zero(e.coeff(1)));
    // Self-dual pairs give unitary units.
    CHECK(in_SU_G(fiber_unit(indicator_pair(c2, 1))));
    auto c3 = FiniteGroup::cyclic(3);
    Pair sd(GAlgebra::split(c3), R({Rat(-1, 3), Rat(2, 3), Rat(2, 3)}));
    CHECK(in_SU_G(fiber_unit(sd)));
    // Coefficient multiset equals the conjugate multiset for every choice.
    for (std::size_t w = 0; w < 3; ++w) {
        auto uw = fiber_unit(sd, w);
        std::vector<Rat> coeffs;
        for (std::size_t g = 0; g < 3; ++g) coeffs.push_back(uw.coeff(g).coords()[0]);
        std::sort(coeffs.begin(), coeffs.end());
        std::vector<Rat> expect{Rat(-1, 3), Rat(2, 3), Rat(2, 3)};
        std::sort(expect.begin(), expect.end());
        CHECK(coeffs == expect);
    }
}

TEST_CASE("fiber unit of a self-dual field pair is unitary") {
    GAlgebra z7 = zeta7_plus_algebra();
    Order o = maximal_order(z7.coefficient_field());
    // D^(-1/2): inverse of the ramified prime above 7.
    KLattice dual = trace_dual(o.lattice());
    // Find the square root of the inverse different by searching the self-dual
    // elements it contains.
    SearchBox box;
    box.coefficient_bound = 8;
    box.denominator_bound = 7;
    FieldElement t = FieldElement::generator(z7.coefficient_field());
    FieldElement pi = t - FieldElement::from_rational(z7.coefficient_field(), 2);
    KLattice p = lattice_add(o.lattice().scale(Rat(7)), principal_lattice(o, pi));
    KLattice p_inv = colon(o.lattice(), p);
    CHECK(lattice_product(p_inv, p_inv) == dual);  // (p^-1)^2 = D^-1
    box.restrict_to = p_inv;
    auto found = selfdual_search(z7, box);
    REQUIRE(!found.empty());
    for (const auto& pr : found) {
        CHECK(is_self_dual(pr));
        CHECK(in_SU_G(fiber_unit(pr)));
        auto uu = multiply(fiber_unit(pr), involution(fiber_unit(pr)));
        CHECK(is_one(uu.coeff(0)));
        // The coefficient multiset of the fiber unit is the conjugate multiset,
        // for every embedding choice.
        auto conj = conjugates(pr);
        auto key = [](const FieldElement& e) {
            std::string s;
            for (const auto& c : e.coords()) s += format_rat(c) + ",";
            return s;
        };
        std::vector<std::string> conj_keys;
        for (const auto& c : conj) conj_keys.push_back(key(c));
        std::sort(conj_keys.begin(), conj_keys.end());
        for (std::size_t w = 0; w < 3; ++w) {
            auto uw = fiber_unit(pr, w);
            std::vector<std::string> coeff_keys;
            for (std::size_t g = 0; g < 3; ++g) coeff_keys.push_back(key(uw.coeff(g)));
            std::sort(coeff_keys.begin(), coeff_keys.end());
            CHECK(coeff_keys == conj_keys);
        }
    }
}

TEST_CASE("moduli action") {
    auto c3 = FiniteGroup::cyclic(3);
    GAlgebra alg = GAlgebra::split(c3);
    Pair p(alg, R({Rat(2), Rat(-2), Rat(1)}));
    CHECK(act(basis_element(c3, 0), p) == p);
    // act by [g] rotates the value vector: x'(h) = x(hg).
    Pair rotated = act(basis_element(c3, 1), p);
    CHECK(rotated.x()[0] == p.x()[1]);
    CHECK(rotated.x()[1] == p.x()[2]);
    CHECK(rotated.x()[2] == p.x()[0]);
    // Composition law act(uv, p) = act(u, act(v, p)).
    std::mt19937 rng(61);
    std::uniform_int_distribution<long> entry(-3, 3);
    auto random_unit = [&] {
        while (true) {
            std::vector<Rat> c(3);
            Rat sum(0);
            for (auto& v : c) {
                v = Rat(entry(rng));
                sum += v;
            }
            if (sum == 0) continue;
            for (auto& v : c) v /= sum;
            GroupAlgebraElement<Rat> u(c3, c);
            if (in_U_G(u)) return u;
        }
    };
    for (int i = 0; i < 10; ++i) {
        auto u = random_unit();
        auto v = random_unit();
        CHECK(act(multiply(u, v), p) == act(u, act(v, p)));
    }
    CHECK_THROWS_AS(act(GroupAlgebraElement<Rat>(c3, {Rat(1, 3), Rat(1, 3), Rat(1, 3)}), p),
                    NotUnitError);
}

TEST_CASE("the action is free and transitive on normal elements") {
    auto c2 = FiniteGroup::cyclic(2);
    GAlgebra alg = GAlgebra::split(c2);
    std::vector<Pair> normals;
    for (long a_num = -4; a_num <= 4; ++a_num)
        for (long den = 1; den <= 2; ++den) {
            Rat a(a_num, den);
            a.canonicalize();
            Rat b = Rat(1) - a;
            std::vector<Rat> x{a, b};
            if (is_normal_element(alg, x)) normals.emplace_back(alg, x);
        }
    REQUIRE(normals.size() >= 4);
    for (const auto& from : normals)
        for (const auto& to : normals) {
            auto u = transporter(from, to);
            CHECK(in_U_G(u));
            CHECK(act(u, from) == to);
        }
}

TEST_CASE("conjugate lattice is unchanged by group translates") {
    GAlgebra z7 = zeta7_plus_algebra();
    Pair p(z7, R({Rat(0), Rat(-1), Rat(0)}));
    KLattice lam = conjugate_lattice(p);
    for (std::size_t g = 0; g < 3; ++g) {
        Pair moved = act(basis_element(z7.group_ptr(), g), p);
        CHECK(conjugate_lattice(moved) == lam);
    }
}

TEST_CASE("self-dual search on split algebras") {
    auto c2 = FiniteGroup::cyclic(2);
    SearchBox box;
    box.coefficient_bound = 2;
    box.denominator_bound = 1;
    auto found = selfdual_search(GAlgebra::split(c2), box);
    REQUIRE(found.size() == 2);
    CHECK(found[0].x() == R({Rat(0), Rat(1)}));
    CHECK(found[1].x() == R({Rat(1), Rat(0)}));

    auto c3 = FiniteGroup::cyclic(3);
    SearchBox box3;
    box3.coefficient_bound = 1;
    box3.denominator_bound = 3;
    auto found3 = selfdual_search(GAlgebra::split(c3), box3);
    // Three indicators plus the three permutations of (-1/3, 2/3, 2/3).
    CHECK(found3.size() == 6);
    std::size_t indicators = 0;
    for (const auto& p : found3)
        if (std::count(p.x().begin(), p.x().end(), Rat(1)) == 1) ++indicators;
    CHECK(indicators == 3);
    // Parallel search returns the same list in the same order.
    auto found3_par = selfdual_search(GAlgebra::split(c3), box3, 4);
    REQUIRE(found3_par.size() == found3.size());
    for (std::size_t i = 0; i < found3.size(); ++i) CHECK(found3_par[i] == found3[i]);
    // Empty box.
    SearchBox empty;
    empty.coefficient_bound = 0;
    empty.denominator_bound = 1;
    CHECK(selfdual_search(GAlgebra::split(c2), empty).empty());
    // Desk-scale cap.
    SearchBox huge;
    huge.coefficient_bound = Int("10000000");
    huge.denominator_bound = 1;
    CHECK_THROWS_AS(selfdual_search(GAlgebra::split(c2), huge), ScaleError);
}

TEST_CASE("field search over an indefinite trace form returns empty") {
    // Complex quadratic fields carry no self-dual elements; the search must
    // come back empty rather than fail on the indefinite form.
    auto f = sqrt_minus3_field();
    GAlgebra alg = GAlgebra::galois_field(f, quadratic_action(f));
    SearchBox box;
    box.coefficient_bound = 3;
    box.denominator_bound = 6;
    box.restrict_to = trace_dual(maximal_order(f).lattice());
    CHECK(selfdual_search(alg, box).empty());
}

TEST_CASE("fiber units intertwine the action up to translates") {
    auto c3 = FiniteGroup::cyclic(3);
    GAlgebra alg = GAlgebra::split(c3);
    Pair p(alg, R({Rat(2), Rat(-2), Rat(1)}));
    std::vector<Rat> uc{Rat(1, 2), Rat(1, 4), Rat(1, 4)};
    GroupAlgebraElement<Rat> u(c3, uc);
    REQUIRE(in_U_G(u));
    Pair moved = act(u, p);
    // Lift u into the coefficient field and multiply the fiber unit.
    FieldPtr k = alg.coefficient_field();
    std::vector<FieldElement> lifted;
    for (std::size_t g = 0; g < 3; ++g) lifted.emplace_back(k, std::vector<Rat>{u.coeff(g)});
    GroupAlgebraElement<FieldElement> u_k(c3, lifted);
    auto lhs = fiber_unit(moved);
    auto rhs = multiply(u_k, fiber_unit(p));
    std::vector<Rat> lc, rc;
    for (std::size_t g = 0; g < 3; ++g) {
        lc.push_back(lhs.coeff(g).coords()[0]);
        rc.push_back(rhs.coeff(g).coords()[0]);
    }
    std::sort(lc.begin(), lc.end());
    std::sort(rc.begin(), rc.end());
    CHECK(lc == rc);
}
