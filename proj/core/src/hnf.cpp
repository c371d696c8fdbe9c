#include "gheights/hnf.hpp"

#include "gheights/errors.hpp"

namespace gheights {

QMat HNFBasis::rational_basis() const {
    QMat m(basis.rows(), basis.cols());
    Rat d(1, denominator);
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j) m.at(i, j) = Rat(basis.at(i, j)) * d;
    return m;
}

Rat HNFBasis::covolume() const {
    Int p(1);
    for (std::size_t i = 0; i < basis.rows(); ++i) p *= basis.at(i, i);
    Rat r(p, pow_int(denominator, basis.rows()));
    r.canonicalize();
    return r;
}

bool HNFBasis::contains(const std::vector<Rat>& x) const {
    std::size_t n = dim();
    if (x.size() != n) throw DimensionError("HNFBasis::contains: length mismatch");
    // Forward substitution against the triangular basis: only row i touches
    // column i among rows >= i, so c * basis == denominator * x resolves left
    // to right.
    std::vector<Rat> rem(n);
    for (std::size_t j = 0; j < n; ++j) rem[j] = x[j] * Rat(denominator);
    for (std::size_t i = 0; i < n; ++i) {
        Rat c = rem[i] / Rat(basis.at(i, i));
        c.canonicalize();
        if (c.get_den() != 1) return false;
        for (std::size_t j = i; j < n; ++j) rem[j] -= c * Rat(basis.at(i, j));
    }
    return true;
}

ZMat row_hnf(ZMat m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        // Reduce entries below the pivot position to zero by gcd steps.
        while (true) {
            std::size_t k = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (m.at(i, col) == 0) continue;
                if (k == rows || abs(m.at(i, col)) < abs(m.at(k, col))) k = i;
            }
            if (k == rows) break;  // column is zero from r downward
            if (k != r) m.swap_rows(k, r);
            if (m.at(r, col) < 0)
                for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
            bool cleared = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(), m.at(r, col).get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(r, j);
                if (m.at(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m.at(r, col) == 0) continue;
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(), m.at(r, col).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(r, j);
        }
        ++r;
    }
    ZMat out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

HNFBasis hnf(const ZMat& m) {
    ZMat h = row_hnf(m);
    if (h.rows() != m.cols())
        throw RankError("hnf: rows do not span a full-rank lattice");
    return HNFBasis{h, Int(1)};
}

HNFBasis hnf_rational(const QMat& m) {
    auto [den, zm] = m.clear_denominators();
    ZMat h = row_hnf(zm);
    if (h.rows() != m.cols())
        throw RankError("hnf_rational: rows do not span a full-rank lattice");
    Int g = gcd(h.content(), den);
    if (g > 1) {
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < h.cols(); ++j) h.at(i, j) /= g;
        den /= g;
    }
    return HNFBasis{h, den};
}

HNFBasis lattice_sum(const HNFBasis& a, const HNFBasis& b) {
    if (a.dim() != b.dim()) throw DimensionError("lattice_sum: ambient dimension mismatch");
    return hnf_rational(a.rational_basis().vstack(b.rational_basis()));
}

HNFBasis standard_dual(const HNFBasis& a) {
    QMat inv_t = a.rational_basis().inverse().transpose();
    return hnf_rational(inv_t);
}

HNFBasis lattice_intersect(const HNFBasis& a, const HNFBasis& b) {
    if (a.dim() != b.dim()) throw DimensionError("lattice_intersect: ambient dimension mismatch");
    return standard_dual(lattice_sum(standard_dual(a), standard_dual(b)));
}

bool sublattice_of(const HNFBasis& a, const HNFBasis& b) {
    if (a.dim() != b.dim()) throw DimensionError("sublattice_of: ambient dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!b.contains(a.rational_basis().row(i))) return false;
    return true;
}

// Index of a full-rank sublattice: product of the HNF diagonal of the
// coordinate matrix of sub in terms of sup.
static Int sublattice_index(const HNFBasis& sub, const HNFBasis& sup) {
    QMat coords = sub.rational_basis() * sup.rational_basis().inverse();
    auto [den, zm] = coords.clear_denominators();
    if (den != 1) throw InternalInvariantError("sublattice_index: non-integral coordinates");
    ZMat h = row_hnf(zm);
    if (h.rows() != zm.cols()) throw RankError("sublattice_index: rank deficient");
    Int p(1);
    for (std::size_t i = 0; i < h.rows(); ++i) p *= h.at(i, i);
    return p;
}

Rat generalized_index(const HNFBasis& a, const HNFBasis& b) {
    if (a.dim() != b.dim()) throw DimensionError("generalized_index: ambient dimension mismatch");
    HNFBasis c = lattice_intersect(a, b);
    Rat r(sublattice_index(c, b), sublattice_index(c, a));
    r.canonicalize();
    return r;
}

}  // namespace gheights
