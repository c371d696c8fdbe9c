#include "gheights/matrix.hpp"

#include "gheights/errors.hpp"

namespace gheights {

ZMat::ZMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ZMat: ragged initializer");
        for (long v : r) a_.emplace_back(v);
    }
}

ZMat ZMat::identity(std::size_t n) {
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::operator*(const ZMat& o) const {
    if (cols_ != o.rows_) throw DimensionError("ZMat multiply: dimension mismatch");
    ZMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

ZMat ZMat::transpose() const {
    ZMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Int ZMat::content() const {
    Int g(0);
    for (const auto& x : a_) g = gcd(g, x);
    return g;
}

void ZMat::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

std::vector<Int> ZMat::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

QMat::QMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("QMat: ragged initializer");
        for (long v : r) a_.emplace_back(v);
    }
}

QMat::QMat(const ZMat& m) : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = Rat(m.at(i, j));
}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw DimensionError("QMat multiply: dimension mismatch");
    QMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

QMat QMat::operator+(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("QMat add: shape mismatch");
    QMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QMat QMat::operator*(const Rat& c) const {
    QMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Rat> QMat::row(std::size_t i) const {
    std::vector<Rat> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void QMat::set_row(std::size_t i, const std::vector<Rat>& r) {
    if (r.size() != cols_) throw DimensionError("QMat::set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
}

QMat QMat::vstack(const QMat& o) const {
    if (cols_ != o.cols_) throw DimensionError("QMat::vstack: column mismatch");
    QMat r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

// Gaussian elimination with exact pivoting; returns (echelon matrix, det, rank).
namespace {
struct Echelon {
    QMat m;
    Rat det;
    std::size_t rank;
};

Echelon echelonize(QMat m) {
    Rat det(1);
    std::size_t rank = 0;
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) {
            det = 0;
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            det = -det;
        }
        det *= m.at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / m.at(rank, col);
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return {std::move(m), det, rank};
}
}  // namespace

Rat QMat::det() const {
    if (rows_ != cols_) throw DimensionError("det: matrix not square");
    if (rows_ == 0) return Rat(1);
    Echelon e = echelonize(*this);
    return e.rank == rows_ ? e.det : Rat(0);
}

std::size_t QMat::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return echelonize(*this).rank;
}

QMat QMat::inverse() const {
    if (rows_ != cols_) throw DimensionError("inverse: matrix not square");
    std::size_t n = rows_;
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw RankError("inverse: matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(pivot, j), aug.at(col, j));
        Rat p = aug.at(col, col);
        for (std::size_t j = 0; j < 2 * n; ++j) aug.at(col, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug.at(i, col) == 0) continue;
            Rat f = aug.at(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(col, j);
        }
    }
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<Rat> QMat::solve_left(const std::vector<Rat>& b) const {
    if (rows_ != cols_) throw DimensionError("solve_left: matrix not square");
    if (b.size() != cols_) throw DimensionError("solve_left: rhs length mismatch");
    QMat inv = inverse();
    std::vector<Rat> x(rows_, Rat(0));
    for (std::size_t j = 0; j < rows_; ++j)
        for (std::size_t k = 0; k < cols_; ++k) x[j] += b[k] * inv.at(k, j);
    return x;
}

std::pair<Int, ZMat> QMat::clear_denominators() const {
    Int den(1);
    for (const auto& x : a_) den = lcm(den, x.get_den());
    ZMat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Rat v = at(i, j) * Rat(den);
            m.at(i, j) = v.get_num();
        }
    return {den, m};
}

std::vector<Rat> mul_row(const std::vector<Rat>& v, const QMat& m) {
    if (v.size() != m.rows()) throw DimensionError("mul_row: length mismatch");
    std::vector<Rat> r(m.cols(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

}  // namespace gheights
