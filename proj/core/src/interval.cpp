#include "gheights/interval.hpp"

#include <algorithm>

namespace gheights {

RealInterval::RealInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw InternalInvariantError("RealInterval: lo > hi");
}

RealInterval RealInterval::from_mid_rad(const Rat& mid, const Rat& rad) {
    if (rad < 0) throw InternalInvariantError("RealInterval: negative radius");
    return RealInterval(mid - rad, mid + rad);
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
    Rat a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
    return RealInterval(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

RealInterval RealInterval::inverse() const {
    if (contains_zero()) throw DivisionByZero("RealInterval::inverse: interval contains zero");
    return RealInterval(Rat(1) / hi_, Rat(1) / lo_);
}

RealInterval RealInterval::square() const {
    if (lo_ >= 0) return RealInterval(lo_ * lo_, hi_ * hi_);
    if (hi_ <= 0) return RealInterval(hi_ * hi_, lo_ * lo_);
    return RealInterval(Rat(0), std::max(Rat(lo_ * lo_), Rat(hi_ * hi_)));
}

RealInterval RealInterval::pow(unsigned long e) const {
    RealInterval r{Rat(1)};
    RealInterval base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base.square();
        e >>= 1;
    }
    return r;
}

Rat sqrt_lower(const Rat& q, long prec) {
    if (q < 0) throw PreconditionError("sqrt of negative rational");
    if (auto s = exact_sqrt(q)) return *s;
    // floor(sqrt(q * 4^prec)) / 2^prec
    Int scale = pow_int(Int(2), static_cast<unsigned long>(2 * prec));
    Int t;
    mpz_fdiv_q(t.get_mpz_t(), Int(q.get_num() * scale).get_mpz_t(), q.get_den().get_mpz_t());
    Rat r(isqrt(t), pow_int(Int(2), static_cast<unsigned long>(prec)));
    r.canonicalize();
    return r;
}

Rat sqrt_upper(const Rat& q, long prec) {
    if (q < 0) throw PreconditionError("sqrt of negative rational");
    if (auto s = exact_sqrt(q)) return *s;
    Rat lo = sqrt_lower(q, prec);
    return lo + Rat(1, pow_int(Int(2), static_cast<unsigned long>(prec)));
}

RealInterval RealInterval::sqrt_outward(long prec) const {
    if (lo_ < 0) throw PreconditionError("sqrt_outward: interval extends below zero");
    return RealInterval(sqrt_lower(lo_, prec), sqrt_upper(hi_, prec));
}

static Rat round_down_dyadic(const Rat& x, long prec) {
    Int scale = pow_int(Int(2), static_cast<unsigned long>(prec));
    Int t;
    mpz_fdiv_q(t.get_mpz_t(), Int(x.get_num() * scale).get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(t, scale);
    r.canonicalize();
    return r;
}

static Rat round_up_dyadic(const Rat& x, long prec) {
    Int scale = pow_int(Int(2), static_cast<unsigned long>(prec));
    Int t;
    mpz_cdiv_q(t.get_mpz_t(), Int(x.get_num() * scale).get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(t, scale);
    r.canonicalize();
    return r;
}

RealInterval RealInterval::coarsen(long prec) const {
    return RealInterval(round_down_dyadic(lo_, prec), round_up_dyadic(hi_, prec));
}

RealInterval RealInterval::hull(const RealInterval& o) const {
    return RealInterval(std::min(lo_, o.lo_), std::max(hi_, o.hi_));
}

RealInterval RealInterval::intersect(const RealInterval& o) const {
    if (disjoint(o)) throw PreconditionError("intersect: disjoint intervals");
    return RealInterval(std::max(lo_, o.lo_), std::min(hi_, o.hi_));
}

ComplexEnclosure ComplexEnclosure::operator/(const ComplexEnclosure& o) const {
    RealInterval n = o.abs_square();
    if (n.contains_zero()) throw DivisionByZero("ComplexEnclosure division: box contains zero");
    ComplexEnclosure num = *this * o.conj();
    RealInterval inv = n.inverse();
    return {num.re_ * inv, num.im_ * inv};
}

Rat ComplexEnclosure::radius() const { return std::max(re_.radius(), im_.radius()); }

}  // namespace gheights
