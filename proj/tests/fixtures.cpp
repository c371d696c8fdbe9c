#include "fixtures.hpp"

namespace gheights::fixtures {

std::vector<Order> nonmaximal_orders() {
    std::vector<Order> out;
    // Equation orders that are strictly smaller than the maximal order.
    out.push_back(Order::equation_order(sqrt_minus3_field()));  // Z[sqrt(-3)]
    out.push_back(Order::equation_order(sqrt5_field()));        // Z[sqrt(5)]
    out.push_back(Order::equation_order(dedekind_field()));     // index 2 below maximal
    // Z + fO for small conductors f.
    {
        auto field = sqrt2_field();
        FieldElement t = FieldElement::generator(field);
        std::vector<FieldElement> gens{FieldElement::one(field), t * Rat(2)};
        out.push_back(Order(KLattice::span(field, gens)));  // Z[2 sqrt 2]
    }
    {
        auto field = zeta7_plus_field();
        Order maximal = maximal_order(field);
        QMat b = maximal.lattice().rational_basis();
        QMat scaled(b.rows() + 1, b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) scaled.at(0, j) = (j == 0) ? Rat(1) : Rat(0);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) scaled.at(i + 1, j) = b.at(i, j) * 2;
        out.push_back(Order(KLattice::from_rows(field, scaled)));  // Z + 2 O
    }
    {
        auto field = zeta7_plus_field();
        Order maximal = maximal_order(field);
        QMat b = maximal.lattice().rational_basis();
        QMat scaled(b.rows() + 1, b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) scaled.at(0, j) = (j == 0) ? Rat(1) : Rat(0);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) scaled.at(i + 1, j) = b.at(i, j) * 3;
        out.push_back(Order(KLattice::from_rows(field, scaled)));  // Z + 3 O
    }
    return out;
}

}  // namespace gheights::fixtures
