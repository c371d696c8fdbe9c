#include "gheights/pairs.hpp"

#include <algorithm>
#include <thread>

#include "gheights/maximal_order.hpp"

namespace gheights {

namespace {
FieldPtr rational_field() {
    // Q as the degree-one field Q[t]/(t).
    return NumberField::create(ZPoly{Int(0), Int(1)});
}
}  // namespace

GAlgebra::GAlgebra(bool split, std::shared_ptr<const FiniteGroup> group, FieldPtr field,
                   std::optional<GaloisAction> action)
    : split_(split), group_(std::move(group)), field_(std::move(field)),
      action_(std::move(action)) {}

GAlgebra GAlgebra::split(std::shared_ptr<const FiniteGroup> group) {
    if (!group) throw GroupError("split algebra: null group");
    return GAlgebra(true, std::move(group), rational_field(), std::nullopt);
}

GAlgebra GAlgebra::galois_field(FieldPtr field, GaloisAction action) {
    if (!verify_galois(*field, action))
        throw PreconditionError("galois_field: the action is not a Galois action with fixed field Q");
    auto group = action.group_ptr();
    return GAlgebra(false, std::move(group), std::move(field), std::move(action));
}

const GaloisAction& GAlgebra::action() const {
    if (split_) throw PreconditionError("split algebra has no field action");
    return *action_;
}

bool GAlgebra::operator==(const GAlgebra& o) const {
    if (split_ != o.split_) return false;
    if (!group_->same_table(*o.group_)) return false;
    if (split_) return true;
    if (!field_->same_field(*o.field_)) return false;
    for (std::size_t g = 0; g < group_->order(); ++g)
        if (!(action_->image(g) == o.action_->image(g))) return false;
    return true;
}

Pair::Pair(GAlgebra algebra, std::vector<Rat> x)
    : algebra_(std::move(algebra)), x_(std::move(x)) {
    std::size_t expected = algebra_.is_split()
                               ? algebra_.group().order()
                               : static_cast<std::size_t>(algebra_.coefficient_field()->degree());
    if (x_.size() != expected) throw DimensionError("pair: coordinate length mismatch");
    if (!is_normal_element(algebra_, x_)) throw NotNormalError("pair: element is not normal");
}

FieldElement Pair::x_element() const {
    if (algebra_.is_split()) throw PreconditionError("x_element: split pair");
    return FieldElement(algebra_.coefficient_field(), x_);
}

Rat pair_trace(const GAlgebra& algebra, const std::vector<Rat>& x) {
    if (algebra.is_split()) {
        Rat s(0);
        for (const auto& v : x) s += v;
        return s;
    }
    return FieldElement(algebra.coefficient_field(), x).trace();
}

bool is_normal_element(const GAlgebra& algebra, const std::vector<Rat>& x) {
    if (pair_trace(algebra, x) != 1) return false;
    std::size_t n = algebra.group().order();
    if (algebra.is_split()) {
        // Conjugate matrix rows are right translates; its determinant is the
        // group determinant of the value vector.
        GroupAlgebraElement<Rat> u(algebra.group_ptr(), x);
        return group_determinant(u) != 0;
    }
    const auto& action = algebra.action();
    FieldElement xe(algebra.coefficient_field(), x);
    QMat conj(n, n);
    for (std::size_t g = 0; g < n; ++g) conj.set_row(g, action.apply(g, xe).coords());
    return conj.det() != 0;
}

bool is_normal(const Pair& pair) { return is_normal_element(pair.algebra(), pair.x()); }

bool is_self_dual(const Pair& pair) {
    if (!is_normal(pair)) throw NotNormalError("is_self_dual: pair is not normal");
    const auto& g = pair.algebra().group();
    std::size_t n = g.order();
    if (pair.algebra().is_split()) {
        const auto& x = pair.x();
        for (std::size_t h = 0; h < n; ++h) {
            Rat s(0);
            for (std::size_t k = 0; k < n; ++k) s += x[k] * x[g.mul(k, h)];
            if (s != (h == g.identity() ? 1 : 0)) return false;
        }
        return true;
    }
    const auto& action = pair.algebra().action();
    FieldElement xe = pair.x_element();
    for (std::size_t h = 0; h < n; ++h) {
        Rat s = (xe * action.apply(h, xe)).trace();
        if (s != (h == g.identity() ? 1 : 0)) return false;
    }
    return true;
}

std::vector<FieldElement> conjugates(const Pair& pair) {
    const auto& alg = pair.algebra();
    std::size_t n = alg.group().order();
    std::vector<FieldElement> out;
    out.reserve(n);
    if (alg.is_split()) {
        for (std::size_t g = 0; g < n; ++g)
            out.push_back(FieldElement(alg.coefficient_field(), {pair.x()[g]}));
        return out;
    }
    FieldElement xe = pair.x_element();
    for (std::size_t g = 0; g < n; ++g) out.push_back(alg.action().apply(g, xe));
    return out;
}

KLattice conjugate_lattice(const Pair& pair) {
    return KLattice::span(pair.algebra().coefficient_field(), conjugates(pair));
}

GroupAlgebraElement<FieldElement> fiber_unit(const Pair& pair, std::size_t embedding_choice) {
    const auto& alg = pair.algebra();
    const auto& grp = alg.group();
    std::size_t n = grp.order();
    if (embedding_choice >= n) throw GroupError("fiber_unit: embedding choice out of range");
    FieldPtr k = alg.coefficient_field();
    std::vector<FieldElement> coeffs(n, FieldElement::zero(k));
    if (alg.is_split()) {
        // phi = evaluation at w: phi(g(x)) = x(w g).
        for (std::size_t g = 0; g < n; ++g)
            coeffs[grp.inverse(g)] =
                FieldElement(k, {pair.x()[grp.mul(embedding_choice, g)]});
    } else {
        const auto& action = alg.action();
        FieldElement xe = pair.x_element();
        for (std::size_t g = 0; g < n; ++g)
            coeffs[grp.inverse(g)] = action.apply(embedding_choice, action.apply(g, xe));
    }
    return {alg.group_ptr(), std::move(coeffs)};
}

GroupAlgebraElement<FieldElement> fiber_unit(const Pair& pair) {
    return fiber_unit(pair, pair.algebra().group().identity());
}

namespace {
std::vector<Rat> act_on_coords(const GroupAlgebraElement<Rat>& u, const GAlgebra& alg,
                               const std::vector<Rat>& x) {
    const auto& grp = alg.group();
    std::size_t n = grp.order();
    if (alg.is_split()) {
        // (sum a_g g(x))(h) = sum_g a_g x(h g).
        std::vector<Rat> out(n, Rat(0));
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t g = 0; g < n; ++g) out[h] += u.coeff(g) * x[grp.mul(h, g)];
        return out;
    }
    FieldElement acc = FieldElement::zero(alg.coefficient_field());
    FieldElement xe(alg.coefficient_field(), x);
    for (std::size_t g = 0; g < n; ++g) {
        if (u.coeff(g) == 0) continue;
        acc = acc + alg.action().apply(g, xe) * u.coeff(g);
    }
    return acc.coords();
}
}  // namespace

Pair act(const GroupAlgebraElement<Rat>& u, const Pair& pair) {
    if (!u.group().same_table(pair.algebra().group()))
        throw GroupError("act: unit and pair have different groups");
    if (!in_U_G(u)) throw NotUnitError("act: element is not in U_G");
    return Pair(pair.algebra(), act_on_coords(u, pair.algebra(), pair.x()));
}

GroupAlgebraElement<Rat> transporter(const Pair& from, const Pair& to) {
    if (!(from.algebra() == to.algebra()))
        throw PreconditionError("transporter: pairs on different algebras");
    const auto& alg = from.algebra();
    std::size_t n = alg.group().order();
    // Solve sum_g a_g g(x) = x' coordinatewise: rows of M are the coordinate
    // vectors of the g(x).
    QMat m(n, n);
    if (alg.is_split()) {
        const auto& grp = alg.group();
        for (std::size_t g = 0; g < n; ++g) {
            std::vector<Rat> row(n);
            for (std::size_t h = 0; h < n; ++h) row[h] = from.x()[grp.mul(h, g)];
            m.set_row(g, row);
        }
    } else {
        FieldElement xe = from.x_element();
        for (std::size_t g = 0; g < n; ++g) m.set_row(g, alg.action().apply(g, xe).coords());
    }
    std::vector<Rat> a = m.solve_left(to.x());
    GroupAlgebraElement<Rat> u(alg.group_ptr(), std::move(a));
    if (!in_U_G(u)) throw InternalInvariantError("transporter: solution is not in U_G");
    return u;
}

PairInvariants pair_invariants(const Pair& pair) {
    KLattice lambda = conjugate_lattice(pair);
    Order t = multiplier_ring(lambda);
    Order o = maximal_order(lambda.field());
    FractionalIdeal ideal(t, lambda);
    Rat dis = discrepancy(t, ideal, o);
    return PairInvariants{lambda,
                          t,
                          o,
                          disc_lattice(t.lattice()),
                          disc_lattice(lambda),
                          dis,
                          lambda.field()->degree(),
                          pair.algebra().group().order()};
}

namespace {

// Enumerate split-algebra candidates x = p/q for one fixed denominator q.
void split_search_range(const GAlgebra& alg, const Int& q, const Int& bound, long lo_first,
                        long hi_first, std::vector<Pair>& out) {
    std::size_t n = alg.group().order();
    Int lim = bound * q;
    long lim_l = static_cast<long>(lim.get_si());
    std::vector<long> p(n, 0);
    std::vector<Rat> x(n);
    auto emit = [&]() {
        Int g = q;
        for (std::size_t i = 0; i < n; ++i) g = gcd(g, Int(p[i]));
        if (g != 1) return;  // not the reduced denominator
        Rat sum(0);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = Rat(Int(p[i]), q);
            x[i].canonicalize();
            sum += x[i];
        }
        if (sum != 1) return;
        if (!is_normal_element(alg, x)) return;
        Pair candidate(alg, x);
        if (is_self_dual(candidate)) out.push_back(std::move(candidate));
    };
    // Odometer over the box, first coordinate restricted to [lo_first, hi_first].
    std::vector<long> lo(n, -lim_l), hi(n, lim_l);
    lo[0] = lo_first;
    hi[0] = hi_first;
    if (lo[0] > hi[0]) return;
    for (std::size_t i = 0; i < n; ++i) p[i] = lo[i];
    while (true) {
        emit();
        std::size_t i = n;
        while (i-- > 0) {
            if (p[i] < hi[i]) {
                ++p[i];
                for (std::size_t j = i + 1; j < n; ++j) p[j] = lo[j];
                break;
            }
            if (i == 0) return;
        }
    }
}

std::vector<Pair> selfdual_search_split(const GAlgebra& alg, const SearchBox& box,
                                        int parallelism) {
    std::vector<Pair> out;
    for (Int q(1); q <= box.denominator_bound; ++q) {
        Int lim = box.coefficient_bound * q;
        long lim_l = static_cast<long>(lim.get_si());
        int workers = std::max(1, parallelism);
        std::vector<std::vector<Pair>> partial(workers);
        if (workers == 1) {
            split_search_range(alg, q, box.coefficient_bound, -lim_l, lim_l, partial[0]);
        } else {
            std::vector<std::thread> pool;
            long total = 2 * lim_l + 1;
            for (int w = 0; w < workers; ++w) {
                long lo = -lim_l + total * w / workers;
                long hi = -lim_l + total * (w + 1) / workers - 1;
                pool.emplace_back([&, lo, hi, w] {
                    split_search_range(alg, q, box.coefficient_bound, lo, hi, partial[w]);
                });
            }
            for (auto& th : pool) th.join();
        }
        for (auto& chunk : partial)
            for (auto& pr : chunk) out.push_back(std::move(pr));
    }
    return out;
}

std::vector<Pair> selfdual_search_field(const GAlgebra& alg, const SearchBox& box) {
    const auto& lat = *box.restrict_to;
    if (!lat.field()->same_field(*alg.coefficient_field()))
        throw PreconditionError("selfdual_search: restriction lattice in a different field");
    if (lat.basis().denominator > box.denominator_bound)
        throw PreconditionError("selfdual_search: lattice denominator exceeds the bound");
    std::size_t d = lat.dim();
    auto basis = lat.basis_elements();
    // Gram of the trace form on the lattice basis; when the form is positive
    // definite, c^T G c = 1 clips the box to the ellipsoid |c_i| <=
    // sqrt((G^-1)_ii). Indefinite forms (complex embeddings) fall back to the
    // caller's box alone.
    QMat gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gram.at(i, j) = (basis[i] * basis[j]).trace();
    bool definite = true;
    for (std::size_t k = 1; k <= d && definite; ++k) {
        QMat minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = gram.at(i, j);
        definite = minor.det() > 0;
    }
    std::vector<long> hi(d, static_cast<long>(box.coefficient_bound.get_si()));
    if (definite) {
        QMat ginv = gram.inverse();
        for (std::size_t i = 0; i < d; ++i) {
            Int b = isqrt(ginv.at(i, i).get_num() / ginv.at(i, i).get_den()) + 1;
            if (Rat(b) > Rat(box.coefficient_bound)) b = box.coefficient_bound;
            hi[i] = static_cast<long>(b.get_si());
        }
    }
    std::vector<Pair> out;
    std::vector<long> c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = -hi[i];
    while (true) {
        // Tr(x^2) = 1 filter before building the element.
        Rat q(0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                q += gram.at(i, j) * Rat(static_cast<long>(c[i])) * Rat(static_cast<long>(c[j]));
        if (q == 1) {
            FieldElement x = FieldElement::zero(lat.field());
            for (std::size_t i = 0; i < d; ++i)
                x = x + basis[i] * Rat(static_cast<long>(c[i]));
            if (x.trace() == 1 && is_normal_element(alg, x.coords())) {
                Pair candidate(alg, x.coords());
                if (is_self_dual(candidate)) out.push_back(std::move(candidate));
            }
        }
        std::size_t i = d;
        bool done = true;
        while (i-- > 0) {
            if (c[i] < hi[i]) {
                ++c[i];
                for (std::size_t j = i + 1; j < d; ++j) c[j] = -hi[j];
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

}  // namespace

std::vector<Pair> selfdual_search(const GAlgebra& algebra, const SearchBox& box,
                                  int parallelism) {
    if (box.coefficient_bound < 0 || box.denominator_bound < 1)
        throw PreconditionError("selfdual_search: invalid box");
    if (box.coefficient_bound * box.denominator_bound > 1000000)
        throw ScaleError("selfdual_search: box edge exceeds the desk-scale cap");
    if (algebra.is_split()) return selfdual_search_split(algebra, box, parallelism);
    if (!box.restrict_to)
        throw PreconditionError("selfdual_search: field search requires a restriction lattice");
    return selfdual_search_field(algebra, box);
}

}  // namespace gheights
