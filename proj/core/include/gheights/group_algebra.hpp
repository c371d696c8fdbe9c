#pragma once

#include <memory>
#include <vector>

#include "gheights/group.hpp"
#include "gheights/numeric.hpp"

namespace gheights {

inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_one(const Rat& x) { return x == 1; }
inline Rat inverse(const Rat& x) {
    if (x == 0) throw DivisionByZero("rational inverse of zero");
    return Rat(1) / x;
}

/// Determinant by Gaussian elimination over an arbitrary exact field scalar.
/// Requires free functions is_zero(S) and inverse(S) plus ring operators.
template <typename S>
S det_generic(std::vector<std::vector<S>> m) {
    std::size_t n = m.size();
    if (n == 0) throw DimensionError("det_generic: empty matrix");
    S zero = m[0][0] - m[0][0];
    S det = zero;
    bool neg = false, started = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(m[pivot][col])) ++pivot;
        if (pivot == n) return zero;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            neg = !neg;
        }
        det = started ? det * m[col][col] : m[col][col];
        started = true;
        S inv = inverse(m[col][col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(m[i][col])) continue;
            S f = m[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    return neg ? zero - det : det;
}

/// Element of the group algebra of G with exact scalar coefficients
/// (rationals, or number-field elements for fiber units).
template <typename S>
class GroupAlgebraElement {
public:
    GroupAlgebraElement(std::shared_ptr<const FiniteGroup> group, std::vector<S> coeffs)
        : group_(std::move(group)), a_(std::move(coeffs)) {
        if (!group_ || a_.size() != group_->order())
            throw GroupError("group algebra element: coefficient length mismatch");
    }

    const FiniteGroup& group() const { return *group_; }
    const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
    const std::vector<S>& coefficients() const { return a_; }
    const S& coeff(std::size_t g) const { return a_[g]; }

    bool operator==(const GroupAlgebraElement& o) const {
        return group_->same_table(*o.group_) && a_ == o.a_;
    }

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<S> a_;
};

/// Convolution product in the group algebra.
template <typename S>
GroupAlgebraElement<S> multiply(const GroupAlgebraElement<S>& u, const GroupAlgebraElement<S>& v) {
    if (!u.group().same_table(v.group()))
        throw GroupError("multiply: elements of different groups");
    const auto& g = u.group();
    std::size_t n = g.order();
    S zero = u.coeff(0) - u.coeff(0);
    std::vector<S> c(n, zero);
    for (std::size_t x = 0; x < n; ++x) {
        if (is_zero(u.coeff(x))) continue;
        for (std::size_t y = 0; y < n; ++y) {
            if (is_zero(v.coeff(y))) continue;
            std::size_t k = g.mul(x, y);
            c[k] = c[k] + u.coeff(x) * v.coeff(y);
        }
    }
    return {u.group_ptr(), std::move(c)};
}

/// Sum of coefficients.
template <typename S>
S augmentation(const GroupAlgebraElement<S>& u) {
    S s = u.coeff(0);
    for (std::size_t g = 1; g < u.group().order(); ++g) s = s + u.coeff(g);
    return s;
}

/// The anti-involution sending [g] to [g^-1].
template <typename S>
GroupAlgebraElement<S> involution(const GroupAlgebraElement<S>& u) {
    std::size_t n = u.group().order();
    std::vector<S> c;
    c.reserve(n);
    for (std::size_t g = 0; g < n; ++g) c.push_back(u.coeff(u.group().inverse(g)));
    return {u.group_ptr(), std::move(c)};
}

/// Determinant of the regular-representation matrix, (g,h) entry the
/// coefficient of g h^-1. Multiplicative under convolution, one on [1], and
/// nonzero exactly when the element is invertible.
template <typename S>
S group_determinant(const GroupAlgebraElement<S>& u) {
    std::size_t n = u.group().order();
    std::vector<std::vector<S>> m(n);
    for (std::size_t g = 0; g < n; ++g) {
        m[g].reserve(n);
        for (std::size_t h = 0; h < n; ++h)
            m[g].push_back(u.coeff(u.group().mul(g, u.group().inverse(h))));
    }
    return det_generic(std::move(m));
}

/// Augmentation one and invertible: the unit-group membership test.
template <typename S>
bool in_U_G(const GroupAlgebraElement<S>& u) {
    return is_one(augmentation(u)) && !is_zero(group_determinant(u));
}

/// Unitary units: u * involution(u) == [1]. NotUnitError when u is not in U_G.
template <typename S>
bool in_SU_G(const GroupAlgebraElement<S>& u) {
    if (!in_U_G(u)) throw NotUnitError("in_SU_G: element is not in U_G");
    auto prod = multiply(u, involution(u));
    const auto& g = u.group();
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (x == g.identity()) continue;
        if (!is_zero(prod.coeff(x))) return false;
    }
    return is_one(prod.coeff(g.identity()));
}

/// Basis element [g].
inline GroupAlgebraElement<Rat> basis_element(std::shared_ptr<const FiniteGroup> group,
                                              std::size_t g) {
    std::vector<Rat> c(group->order(), Rat(0));
    c[g] = 1;
    return {std::move(group), std::move(c)};
}

}  // namespace gheights
