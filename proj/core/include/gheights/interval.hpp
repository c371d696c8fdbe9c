#pragma once

#include <string>
#include <vector>

#include "gheights/numeric.hpp"

namespace gheights {

/// Closed real interval with exact rational endpoints. All arithmetic is exact;
/// coarsen() snaps endpoints outward onto a dyadic grid to bound operand growth
/// inside refinement loops.
class RealInterval {
public:
    RealInterval() : lo_(0), hi_(0) {}
    explicit RealInterval(const Rat& point) : lo_(point), hi_(point) {}
    RealInterval(Rat lo, Rat hi);

    static RealInterval from_mid_rad(const Rat& mid, const Rat& rad);

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat midpoint() const { return (lo_ + hi_) / 2; }
    Rat radius() const { return (hi_ - lo_) / 2; }
    Rat width() const { return hi_ - lo_; }

    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
    bool contains(const RealInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool strictly_contains(const RealInterval& other) const {
        return lo_ < other.lo_ && other.hi_ < hi_;
    }
    bool disjoint(const RealInterval& other) const { return hi_ < other.lo_ || other.hi_ < lo_; }

    RealInterval operator-() const { return RealInterval(-hi_, -lo_); }
    RealInterval operator+(const RealInterval& o) const {
        return RealInterval(lo_ + o.lo_, hi_ + o.hi_);
    }
    RealInterval operator-(const RealInterval& o) const {
        return RealInterval(lo_ - o.hi_, hi_ - o.lo_);
    }
    RealInterval operator*(const RealInterval& o) const;

    /// Reciprocal; the interval must not contain zero.
    RealInterval inverse() const;
    RealInterval operator/(const RealInterval& o) const { return *this * o.inverse(); }

    RealInterval square() const;
    RealInterval pow(unsigned long e) const;

    /// Outward enclosure of the square root at 'prec' fractional bits.
    /// Exact (zero-widening) when both endpoints are rational squares.
    RealInterval sqrt_outward(long prec) const;

    /// Snap endpoints outward to multiples of 2^-prec.
    RealInterval coarsen(long prec) const;

    RealInterval hull(const RealInterval& o) const;
    RealInterval intersect(const RealInterval& o) const;

    bool operator==(const RealInterval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
    Rat lo_, hi_;
};

/// Certified box around one complex number.
class ComplexEnclosure {
public:
    ComplexEnclosure() = default;
    ComplexEnclosure(RealInterval re, RealInterval im)
        : re_(std::move(re)), im_(std::move(im)) {}

    const RealInterval& real() const { return re_; }
    const RealInterval& imaginary() const { return im_; }

    bool is_real() const { return im_.is_point() && im_.lo() == 0; }
    bool disjoint(const ComplexEnclosure& o) const {
        return re_.disjoint(o.re_) || im_.disjoint(o.im_);
    }

    ComplexEnclosure operator+(const ComplexEnclosure& o) const {
        return {re_ + o.re_, im_ + o.im_};
    }
    ComplexEnclosure operator-(const ComplexEnclosure& o) const {
        return {re_ - o.re_, im_ - o.im_};
    }
    ComplexEnclosure operator*(const ComplexEnclosure& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    ComplexEnclosure conj() const { return {re_, -im_}; }

    /// Enclosure of |z|^2 = re^2 + im^2.
    RealInterval abs_square() const { return re_.square() + im_.square(); }

    /// Division by a box that excludes zero.
    ComplexEnclosure operator/(const ComplexEnclosure& o) const;

    ComplexEnclosure coarsen(long prec) const { return {re_.coarsen(prec), im_.coarsen(prec)}; }

    /// Max of the two component radii.
    Rat radius() const;

private:
    RealInterval re_, im_;
};

/// Directed dyadic square roots on rationals, prec fractional bits.
Rat sqrt_lower(const Rat& q, long prec);
Rat sqrt_upper(const Rat& q, long prec);

}  // namespace gheights
