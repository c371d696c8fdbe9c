#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gheights/numeric.hpp"

namespace gheights {

/// Dense matrix over Z, row major.
class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    ZMat(std::initializer_list<std::initializer_list<long>> rows);

    static ZMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ZMat operator*(const ZMat& o) const;
    ZMat transpose() const;
    bool operator==(const ZMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    /// gcd of all entries (nonnegative; zero for the zero matrix).
    Int content() const;

    void swap_rows(std::size_t i, std::size_t j);
    std::vector<Int> row(std::size_t i) const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Dense matrix over Q, row major. Entries are exact rationals; no operation rounds.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    QMat(std::initializer_list<std::initializer_list<long>> rows);
    explicit QMat(const ZMat& m);

    static QMat identity(std::size_t n);
    static QMat from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator*(const Rat& c) const;
    QMat transpose() const;
    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    std::vector<Rat> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Rat>& r);

    /// Stack the rows of 'o' below this matrix.
    QMat vstack(const QMat& o) const;

    Rat det() const;
    /// Inverse of a square nonsingular matrix; throws RankError when singular.
    QMat inverse() const;
    std::size_t rank() const;

    /// Row vector x with x * this == b; requires square nonsingular.
    std::vector<Rat> solve_left(const std::vector<Rat>& b) const;

    /// Smallest positive integer D with D * this integral, plus the integral matrix.
    std::pair<Int, ZMat> clear_denominators() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

std::vector<Rat> mul_row(const std::vector<Rat>& v, const QMat& m);

}  // namespace gheights
