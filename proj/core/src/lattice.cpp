#include "gheights/lattice.hpp"

#include "gheights/errors.hpp"
#include "gheights/maximal_order.hpp"

namespace gheights {

KLattice::KLattice(FieldPtr field, HNFBasis basis)
    : field_(std::move(field)), basis_(std::move(basis)) {
    if (!field_) throw PreconditionError("lattice: null field");
    if (basis_.dim() != static_cast<std::size_t>(field_->degree()))
        throw RankError("lattice: basis is not full rank in the field");
}

KLattice KLattice::span(FieldPtr field, const std::vector<FieldElement>& generators) {
    if (generators.empty()) throw RankError("lattice span: no generators");
    QMat rows(generators.size(), field->degree());
    for (std::size_t i = 0; i < generators.size(); ++i) rows.set_row(i, generators[i].coords());
    return from_rows(std::move(field), rows);
}

KLattice KLattice::from_rows(FieldPtr field, const QMat& rows) {
    return KLattice(std::move(field), hnf_rational(rows));
}

KLattice KLattice::power_lattice(FieldPtr field) {
    std::size_t d = field->degree();
    return KLattice(std::move(field), HNFBasis{ZMat::identity(d), Int(1)});
}

bool KLattice::contains(const FieldElement& x) const {
    if (!field_->same_field(*x.field())) throw PreconditionError("lattice contains: field mismatch");
    return basis_.contains(x.coords());
}

std::vector<FieldElement> KLattice::basis_elements() const {
    std::vector<FieldElement> out;
    QMat b = rational_basis();
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) out.emplace_back(field_, b.row(i));
    return out;
}

KLattice KLattice::scale(const Rat& c) const {
    if (c == 0) throw ZeroError("lattice scale: zero multiplier");
    return KLattice(field_, hnf_rational(rational_basis() * c));
}

KLattice colon(const KLattice& i, const KLattice& j) {
    if (!i.field()->same_field(*j.field())) throw PreconditionError("colon: field mismatch");
    HNFBasis acc;
    bool first = true;
    for (const auto& v : j.basis_elements()) {
        QMat rows = i.rational_basis() * v.multiplication_matrix().inverse();
        HNFBasis layer = hnf_rational(rows);
        acc = first ? layer : lattice_intersect(acc, layer);
        first = false;
    }
    return KLattice(i.field(), acc);
}

KLattice lattice_product(const KLattice& i, const KLattice& j) {
    if (!i.field()->same_field(*j.field()))
        throw PreconditionError("lattice product: field mismatch");
    auto bi = i.basis_elements();
    auto bj = j.basis_elements();
    std::vector<FieldElement> gens;
    gens.reserve(bi.size() * bj.size());
    for (const auto& x : bi)
        for (const auto& y : bj) gens.push_back(x * y);
    return KLattice::span(i.field(), gens);
}

KLattice lattice_add(const KLattice& i, const KLattice& j) {
    if (!i.field()->same_field(*j.field())) throw PreconditionError("lattice add: field mismatch");
    return KLattice(i.field(), lattice_sum(i.basis(), j.basis()));
}

namespace {
// Gram of the trace form on the power basis: S[i][j] = Tr(t^(i+j)).
QMat power_trace_gram(const FieldPtr& field) {
    std::size_t d = field->degree();
    std::vector<Rat> s(2 * d - 1);
    FieldElement p = FieldElement::one(field);
    FieldElement t = FieldElement::generator(field);
    for (std::size_t k = 0; k < 2 * d - 1; ++k) {
        s[k] = p.trace();
        if (k + 1 < 2 * d - 1) p = p * t;
    }
    QMat g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g.at(i, j) = s[i + j];
    return g;
}
}  // namespace

KLattice trace_dual(const KLattice& lat) {
    QMat b = lat.rational_basis();
    QMat gram = b * power_trace_gram(lat.field()) * b.transpose();
    return KLattice::from_rows(lat.field(), gram.inverse() * b);
}

Rat disc_lattice(const KLattice& lat) {
    QMat b = lat.rational_basis();
    QMat gram = b * power_trace_gram(lat.field()) * b.transpose();
    return gram.det();
}

Order::Order(KLattice lattice) : lat_(std::move(lattice)) {
    if (!lat_.contains(FieldElement::one(lat_.field())))
        throw OrderError("order: lattice does not contain 1");
    auto basis = lat_.basis_elements();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (!lat_.contains(basis[i] * basis[j]))
                throw OrderError("order: lattice not closed under multiplication");
}

Order Order::equation_order(FieldPtr field) {
    return Order(KLattice::power_lattice(std::move(field)));
}

Order multiplier_ring(const KLattice& lat) {
    return Order(colon(lat, lat));
}

KLattice principal_lattice(const Order& t, const FieldElement& c) {
    if (c.is_zero()) throw ZeroError("principal_lattice: zero generator");
    std::vector<FieldElement> gens;
    for (const auto& b : t.lattice().basis_elements()) gens.push_back(b * c);
    return KLattice::span(t.field(), gens);
}

FractionalIdeal::FractionalIdeal(Order order, KLattice lattice)
    : order_(std::move(order)), lat_(std::move(lattice)) {
    if (!order_.field()->same_field(*lat_.field()))
        throw OrderError("fractional ideal: order and lattice in different fields");
    for (const auto& b : order_.lattice().basis_elements())
        for (const auto& c : lat_.basis_elements())
            if (!lat_.contains(b * c))
                throw OrderError("fractional ideal: lattice is not stable under the order");
}

Rat lattice_index(const KLattice& sup, const KLattice& sub) {
    return generalized_index(sub.basis(), sup.basis());
}

Rat ideal_norm(const Order& t, const FractionalIdeal& i) {
    if (!(i.order() == t)) throw OrderError("ideal_norm: ideal attached to a different order");
    return lattice_index(t.lattice(), i.lattice());
}

FractionalIdeal conductor(const Order& t, const Order& o) {
    if (!sublattice_of(t.lattice().basis(), o.lattice().basis()))
        throw ContainmentError("conductor: first order is not contained in the second");
    return FractionalIdeal(t, colon(t.lattice(), o.lattice()));
}

FractionalIdeal different(const Order& t) {
    return FractionalIdeal(t, colon(t.lattice(), trace_dual(t.lattice())));
}

Rat discrepancy(const Order& t, const FractionalIdeal& i, const Order& maximal) {
    KLattice extended = lattice_product(maximal.lattice(), i.lattice());
    Rat n_max = lattice_index(maximal.lattice(), extended);
    Rat n_t = ideal_norm(t, i);
    Rat d = n_max / n_t;
    d.canonicalize();
    return d;
}

Rat discrepancy(const Order& t, const FractionalIdeal& i) {
    return discrepancy(t, i, maximal_order(t.field()));
}

bool is_invertible(const Order& t, const FractionalIdeal& i) {
    KLattice inv = colon(t.lattice(), i.lattice());
    return lattice_product(i.lattice(), inv) == t.lattice();
}

bool is_gorenstein(const Order& t, const Order& maximal) {
    return discrepancy(t, different(t), maximal) == 1;
}

bool is_gorenstein(const Order& t) {
    return is_gorenstein(t, maximal_order(t.field()));
}

}  // namespace gheights
