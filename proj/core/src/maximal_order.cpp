#include "gheights/maximal_order.hpp"

#include <map>
#include <mutex>
#include <string>

#include "gheights/errors.hpp"

namespace gheights {

namespace {

Int mod_p(const Int& a, const Int& p) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

Int inv_mod_p(const Int& a, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InternalInvariantError("inv_mod_p: not invertible");
    return r;
}

// Basis of the right kernel {v : M v = 0 mod p}; entries reduced into [0, p).
std::vector<std::vector<Int>> right_kernel_mod_p(ZMat m, const Int& p) {
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = mod_p(m.at(i, j), p);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t k = r;
        while (k < rows && m.at(k, c) == 0) ++k;
        if (k == rows) continue;
        m.swap_rows(k, r);
        Int inv = inv_mod_p(m.at(r, c), p);
        for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = mod_p(m.at(r, j) * inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Int f = m.at(i, c);
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = mod_p(m.at(i, j) - f * m.at(r, j), p);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Int>> kernel;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Int> v(cols, Int(0));
        v[free_c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = mod_p(-m.at(i, free_c), p);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Coordinates of a field element with respect to the order basis, reduced mod p.
std::vector<Int> order_coords_mod_p(const FieldElement& x, const QMat& basis_inv, const Int& p) {
    std::vector<Rat> c = mul_row(x.coords(), basis_inv);
    std::vector<Int> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].get_den() != 1)
            throw InternalInvariantError("order coordinates are not integral");
        out[i] = mod_p(c[i].get_num(), p);
    }
    return out;
}

}  // namespace

KLattice p_radical(const Order& t, const Int& p) {
    const auto& field = t.field();
    std::size_t d = t.lattice().dim();
    unsigned long k = 0;
    Int pk(1);
    while (pk < static_cast<long>(d)) {
        pk *= p;
        ++k;
    }
    if (k == 0) k = 1;

    QMat basis = t.lattice().rational_basis();
    QMat basis_inv = basis.inverse();
    auto elements = t.lattice().basis_elements();

    // Row i: order coordinates of b_i^(p^k) mod p.
    ZMat frob(d, d);
    unsigned long pul = mpz_get_ui(p.get_mpz_t());
    for (std::size_t i = 0; i < d; ++i) {
        FieldElement x = elements[i];
        for (unsigned long step = 0; step < k; ++step) {
            x = x.pow(pul);
            // Reduce mod p in order coordinates to keep sizes bounded.
            auto c = order_coords_mod_p(x, basis_inv, p);
            std::vector<Rat> reduced(d, Rat(0));
            for (std::size_t j = 0; j < d; ++j) reduced[j] = Rat(c[j]);
            x = FieldElement(field, mul_row(reduced, basis));
        }
        auto c = order_coords_mod_p(x, basis_inv, p);
        for (std::size_t j = 0; j < d; ++j) frob.at(i, j) = c[j];
    }

    // Left kernel of frob = right kernel of its transpose.
    auto kernel = right_kernel_mod_p(frob.transpose(), p);

    // Lattice generated by lifted kernel vectors and p*T.
    QMat gens(kernel.size() + d, d);
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        std::vector<Rat> coeffs(d);
        for (std::size_t j = 0; j < d; ++j) coeffs[j] = Rat(kernel[i][j]);
        gens.set_row(i, mul_row(coeffs, basis));
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rat> row = basis.row(i);
        for (auto& v : row) v *= Rat(p);
        gens.set_row(kernel.size() + i, row);
    }
    return KLattice::from_rows(field, gens);
}

bool is_p_maximal(const Order& t, const Int& p) {
    KLattice rad = p_radical(t, p);
    return colon(rad, rad) == t.lattice();
}

namespace {

Order saturate(Order t) {
    Rat disc = t.discriminant();
    if (disc.get_den() != 1)
        throw InternalInvariantError("saturate: order discriminant not integral");
    for (const Int& p : prime_factors(disc.get_num())) {
        if (disc.get_num() % (p * p) != 0) continue;  // already p-maximal
        while (true) {
            KLattice rad = p_radical(t, p);
            KLattice ring = colon(rad, rad);
            if (ring == t.lattice()) break;
            t = Order(ring);
        }
    }
    return t;
}

std::string field_key(const FieldPtr& field) {
    std::string k;
    for (const auto& c : field->min_poly()) k += c.get_str() + ",";
    return k;
}

std::mutex cache_mutex;
std::map<std::string, Order>& order_cache() {
    static std::map<std::string, Order> cache;
    return cache;
}

}  // namespace

Order maximal_order(const FieldPtr& field) {
    std::string key = field_key(field);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = order_cache().find(key);
        if (it != order_cache().end()) return it->second;
    }
    Rat disc = poly_discriminant(field->min_poly());
    if (abs(disc) > Rat(Int("1000000000000")))
        throw ScaleError("maximal_order: |disc(f)| exceeds 10^12; supply a verified basis");
    Order result = saturate(Order::equation_order(field));
    std::lock_guard<std::mutex> lock(cache_mutex);
    order_cache().emplace(key, result);
    return result;
}

Order maximal_order(const FieldPtr& field, const QMat& hint_basis) {
    Order t = [&] {
        try {
            return Order(KLattice::from_rows(field, hint_basis));
        } catch (const Error& e) {
            throw NotMaximalError(std::string("maximal_order hint: not an order: ") + e.what());
        }
    }();
    KLattice power = KLattice::power_lattice(field);
    if (!sublattice_of(power.basis(), t.lattice().basis()))
        throw NotMaximalError("maximal_order hint: does not contain the equation order");
    Rat idx = lattice_index(t.lattice(), power);
    Rat disc_hint = t.discriminant();
    if (disc_hint * idx * idx != poly_discriminant(field->min_poly()))
        throw NotMaximalError("maximal_order hint: discriminant accounting fails");
    if (disc_hint.get_den() != 1)
        throw InternalInvariantError("maximal_order hint: non-integral discriminant");
    for (const Int& p : prime_factors(disc_hint.get_num())) {
        if (disc_hint.get_num() % pow_int(p, 2) != 0) continue;
        if (!is_p_maximal(t, p))
            throw NotMaximalError("maximal_order hint: not maximal at p = " + p.get_str());
    }
    return t;
}

}  // namespace gheights
