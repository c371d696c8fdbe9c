#include "gheights/roots.hpp"

#include <algorithm>
#include <complex>

#include "gheights/errors.hpp"

namespace gheights {

namespace {

constexpr int kDoublingCap = 20;

struct QComplex {
    Rat re, im;
};

QComplex eval_exact(const ZPoly& f, const QComplex& z) {
    QComplex r{Rat(0), Rat(0)};
    for (std::size_t i = f.size(); i-- > 0;) {
        Rat nre = r.re * z.re - r.im * z.im + Rat(f[i]);
        Rat nim = r.re * z.im + r.im * z.re;
        r = {nre, nim};
    }
    return r;
}

// Exact bisection refinement of a sign-change interval down to the target width.
RealInterval bisect_root(const ZPoly& f, Rat lo, Rat hi, const Rat& target_width) {
    int slo = z_eval(f, lo) > 0 ? 1 : -1;
    while (hi - lo > target_width) {
        Rat mid = (lo + hi) / 2;
        Rat v = z_eval(f, mid);
        if (v == 0) return RealInterval(mid, mid);
        if ((v > 0 ? 1 : -1) == slo)
            lo = mid;
        else
            hi = mid;
    }
    return RealInterval(lo, hi);
}

std::vector<RealInterval> isolate_real_roots(const ZPoly& f, const Rat& target_radius) {
    int total = sturm_count_all(f);
    std::vector<RealInterval> out;
    if (total == 0) return out;
    Rat bound = root_bound(f);
    // Nudge endpoints off potential rational roots.
    Rat lo = -bound, hi = bound;
    while (z_eval(f, lo) == 0) lo -= 1;
    while (z_eval(f, hi) == 0) hi += 1;

    std::vector<std::pair<Rat, Rat>> stack{{lo, hi}}, isolated;
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int count = sturm_count(f, a, b);
        if (count == 0) continue;
        if (count == 1) {
            isolated.emplace_back(a, b);
            continue;
        }
        Rat mid = (a + b) / 2;
        if (z_eval(f, mid) == 0) {
            // Rational root exactly at the midpoint: peel it off with a tiny gap.
            Rat eps = (b - a) / 1024;
            Rat ml = mid - eps, mr = mid + eps;
            while (z_eval(f, ml) == 0) ml -= eps;
            while (z_eval(f, mr) == 0) mr += eps;
            if (sturm_count(f, ml, mr) != 1)
                throw InternalInvariantError("isolate_real_roots: midpoint peel failed");
            isolated.emplace_back(ml, mr);
            stack.emplace_back(a, ml);
            stack.emplace_back(mr, b);
        } else {
            stack.emplace_back(a, mid);
            stack.emplace_back(mid, b);
        }
    }
    if (static_cast<int>(isolated.size()) != total)
        throw InternalInvariantError("isolate_real_roots: count mismatch");

    for (auto& [a, b] : isolated) {
        // An isolating interval either changes sign or brackets a rational root hit
        // exactly during refinement.
        out.push_back(bisect_root(f, a, b, target_radius * 2));
    }
    std::sort(out.begin(), out.end(),
              [](const RealInterval& x, const RealInterval& y) { return x.lo() < y.lo(); });
    return out;
}

std::vector<std::complex<double>> aberth(const ZPoly& f) {
    int n = degree(f);
    std::vector<double> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = f[i].get_d();
    double r = root_bound(f).get_d();
    std::vector<std::complex<double>> z(n);
    for (int k = 0; k < n; ++k) {
        double angle = 2.0 * 3.14159265358979323846 * (k + 0.25) / n + 0.4;
        z[k] = std::polar(0.7 * r, angle);
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0, d = 0;
        for (int i = n; i >= 0; --i) {
            d = d * x + v;
            v = v * x + c[i];
        }
        return std::pair{v, d};
    };
    for (int iter = 0; iter < 400; ++iter) {
        double moved = 0;
        for (int k = 0; k < n; ++k) {
            auto [v, d] = eval(z[k]);
            std::complex<double> newton = (d == 0.0) ? std::complex<double>(1e-3, 1e-3) : v / d;
            std::complex<double> sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            std::complex<double> denom = 1.0 - newton * sum;
            std::complex<double> step = (denom == 0.0) ? newton : newton / denom;
            z[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14) break;
    }
    return z;
}

Rat rat_of_double(double x) {
    Rat r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

// One certified interval-Newton contraction test around a candidate box.
// On success the returned box contains exactly one root of f.
bool newton_certify(const ZPoly& f, const ZPoly& fp, ComplexEnclosure& box) {
    ComplexEnclosure dfx = z_eval(fp, box);
    if (dfx.abs_square().contains_zero()) return false;
    QComplex m{box.real().midpoint(), box.imaginary().midpoint()};
    QComplex fm = eval_exact(f, m);
    ComplexEnclosure fmid(RealInterval(fm.re), RealInterval(fm.im));
    ComplexEnclosure mid(RealInterval(m.re), RealInterval(m.im));
    ComplexEnclosure n = mid - fmid / dfx;
    if (box.real().strictly_contains(n.real()) && box.imaginary().strictly_contains(n.imaginary())) {
        box = n;
        return true;
    }
    return false;
}

// Shrink a certified box below target_radius by repeated contraction.
ComplexEnclosure newton_refine(const ZPoly& f, const ZPoly& fp, ComplexEnclosure box,
                               const Rat& target_radius) {
    long prec = 64;
    int doublings = 0;
    while (box.radius() > target_radius) {
        ComplexEnclosure next = box;
        if (newton_certify(f, fp, next)) {
            next = ComplexEnclosure(next.real().intersect(box.real()),
                                    next.imaginary().intersect(box.imaginary()))
                       .coarsen(prec);
            if (next.radius() <= box.radius() * Rat(3, 4)) {
                box = next;
                continue;
            }
        }
        if (++doublings > kDoublingCap)
            throw PrecisionError("newton_refine: doubling cap reached");
        prec *= 2;
    }
    return box;
}

}  // namespace

std::vector<RealInterval> real_roots(const ZPoly& f, const Rat& target_radius) {
    if (!is_squarefree(f)) throw SquarefreeError("real_roots: polynomial not squarefree");
    if (target_radius <= 0) throw PreconditionError("real_roots: target radius must be positive");
    return isolate_real_roots(f, target_radius);
}

std::vector<ComplexEnclosure> complex_roots(const ZPoly& f, const Rat& target_radius) {
    if (!is_squarefree(f)) throw SquarefreeError("complex_roots: polynomial not squarefree");
    if (target_radius <= 0)
        throw PreconditionError("complex_roots: target radius must be positive");
    int n = degree(f);
    std::vector<ComplexEnclosure> out;
    if (n == 1) {
        Rat r(-Rat(f[0]) / Rat(f[1]));
        out.emplace_back(RealInterval(r), RealInterval(Rat(0)));
        return out;
    }

    auto reals = isolate_real_roots(f, target_radius);
    for (const auto& iv : reals) out.emplace_back(iv, RealInterval(Rat(0)));

    int pairs = (n - static_cast<int>(reals.size())) / 2;
    if (pairs > 0) {
        ZPoly fp = z_derivative(f);
        auto approx = aberth(f);
        std::sort(approx.begin(), approx.end(),
                  [](const auto& a, const auto& b) { return a.imag() > b.imag(); });

        std::vector<ComplexEnclosure> upper;
        for (int k = 0; k < pairs; ++k) {
            const auto& z = approx[k];
            ComplexEnclosure certified;
            bool ok = false;
            // Widen the seed box until the contraction test certifies, then shrink.
            Rat radius(1, 1073741824);  // 2^-30
            for (int attempt = 0; attempt <= kDoublingCap && !ok; ++attempt) {
                ComplexEnclosure box(
                    RealInterval::from_mid_rad(rat_of_double(z.real()), radius).coarsen(96),
                    RealInterval::from_mid_rad(rat_of_double(z.imag()), radius).coarsen(96));
                ComplexEnclosure trial = box;
                if (newton_certify(f, fp, trial)) {
                    certified = ComplexEnclosure(trial.real().intersect(box.real()),
                                                 trial.imaginary().intersect(box.imaginary()));
                    ok = true;
                }
                radius *= 64;
            }
            if (!ok) throw PrecisionError("complex_roots: certification failed");
            certified = newton_refine(f, fp, certified, target_radius);
            // Shrink further until the box is strictly off the real axis.
            while (certified.imaginary().contains_zero())
                certified = newton_refine(f, fp, certified, certified.radius() / 16);
            upper.push_back(certified);
        }
        std::sort(upper.begin(), upper.end(), [](const ComplexEnclosure& a, const ComplexEnclosure& b) {
            return a.real().lo() != b.real().lo() ? a.real().lo() < b.real().lo()
                                                  : a.imaginary().lo() < b.imaginary().lo();
        });
        for (const auto& box : upper) {
            ComplexEnclosure mirror(box.real(), -box.imaginary());
            out.push_back(box.imaginary().lo() > 0 ? mirror : box);
            out.push_back(box.imaginary().lo() > 0 ? box : mirror);
        }
    }

    if (static_cast<int>(out.size()) != n)
        throw InternalInvariantError("complex_roots: enclosure count mismatch");
    // Certified boxes around distinct roots separate once small enough; shrink
    // any overlapping pair and retry, erroring only at the doubling cap.
    ZPoly fp = z_derivative(f);
    for (int attempt = 0;; ++attempt) {
        bool disjoint = true;
        for (std::size_t i = 0; i < out.size() && disjoint; ++i)
            for (std::size_t j = i + 1; j < out.size() && disjoint; ++j) {
                if (out[i].disjoint(out[j])) continue;
                disjoint = false;
                if (attempt >= kDoublingCap)
                    throw PrecisionError("complex_roots: enclosures not pairwise disjoint");
                Rat tighter = std::min(out[i].radius(), out[j].radius()) / 16;
                if (out[i].is_real()) {
                    RealInterval iv = bisect_root(f, out[i].real().lo(), out[i].real().hi(),
                                                  tighter * 2);
                    out[i] = ComplexEnclosure(iv, RealInterval(Rat(0)));
                } else {
                    out[i] = newton_refine(f, fp, out[i], tighter);
                }
                if (out[j].is_real()) {
                    RealInterval iv = bisect_root(f, out[j].real().lo(), out[j].real().hi(),
                                                  tighter * 2);
                    out[j] = ComplexEnclosure(iv, RealInterval(Rat(0)));
                } else {
                    out[j] = newton_refine(f, fp, out[j], tighter);
                }
            }
        if (disjoint) break;
    }
    return out;
}

}  // namespace gheights
