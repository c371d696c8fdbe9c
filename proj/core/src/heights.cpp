#include "gheights/heights.hpp"

#include <algorithm>
#include <thread>

#include "gheights/maximal_order.hpp"

namespace gheights {

Rat default_target_radius() {
    return Rat(1, pow_int(Int(2), kDefaultPrecisionBits));
}

RealInterval archimedean_sum(const Pair& pair, const Rat& target_radius) {
    if (target_radius <= 0)
        throw PreconditionError("archimedean_sum: target radius must be positive");
    const auto& alg = pair.algebra();
    if (alg.is_split()) {
        Rat s(0);
        for (const auto& v : pair.x()) s += v * v;
        return RealInterval(s);  // exact
    }
    FieldElement xe = pair.x_element();
    int d = alg.coefficient_field()->degree();
    Rat per_embedding = target_radius / (4 * d);
    for (int attempt = 0; attempt < 24; ++attempt) {
        auto embs = embeddings(xe, per_embedding);
        RealInterval sum;
        for (const auto& e : embs) sum = sum + e.abs_square();
        if (sum.radius() <= target_radius) {
            if (alg.coefficient_field()->is_totally_real()) {
                Rat tr = (xe * xe).trace();
                if (!sum.contains(tr))
                    throw InternalInvariantError(
                        "archimedean_sum: enclosure misses Tr(x^2) on a totally real field");
            }
            return sum;
        }
        per_embedding /= 1024;
    }
    throw PrecisionError("archimedean_sum: refinement cap reached");
}

Rat finite_part_invariant(const Pair& pair) {
    PairInvariants inv = pair_invariants(pair);
    Rat ratio = abs(inv.disc_lambda) / abs(inv.disc_multiplier);
    auto root = exact_sqrt(ratio);
    if (!root)
        throw InternalInvariantError(
            "finite_part_invariant: |disc Lambda / disc T| is not a rational square");
    Rat n_t = lattice_index(inv.multiplier.lattice(), inv.lambda);
    if (*root != n_t)
        throw InternalInvariantError(
            "finite_part_invariant: index does not match the discriminant square root");
    Rat result = Rat(1) / (*root * inv.dis);
    result.canonicalize();
    return result;
}

Rat finite_part_direct(const Pair& pair) {
    KLattice lambda = conjugate_lattice(pair);
    Order maximal = maximal_order(lambda.field());
    KLattice extended = lattice_product(maximal.lattice(), lambda);
    Rat result = Rat(1) / lattice_index(maximal.lattice(), extended);
    result.canonicalize();
    return result;
}

namespace {

// A^(n/2) with outward rounding: exact when n is even, an interval square root
// otherwise.
RealInterval half_power(const RealInterval& a, std::size_t n, long prec) {
    if (n % 2 == 0) return a.pow(n / 2);
    return a.pow(n).sqrt_outward(prec);
}

long prec_for_radius(const Rat& target) {
    long prec = 8;
    Rat grid(1, 256);
    while (grid > target && prec < 1 << 20) {
        prec *= 2;
        grid = grid * grid;
    }
    return prec + 16;
}

}  // namespace

HeightReport height(const Pair& pair, const Rat& target_radius) {
    if (target_radius <= 0) throw PreconditionError("height: target radius must be positive");
    PairInvariants inv = pair_invariants(pair);
    std::size_t n = inv.group_order;
    int d = inv.field_degree;
    if (n % static_cast<std::size_t>(d) != 0)
        throw InternalInvariantError("height: field degree does not divide the group order");

    Rat fin_inv = finite_part_invariant(pair);
    Rat fin_dir = finite_part_direct(pair);
    if (fin_inv != fin_dir)
        throw InternalInvariantError("height: the two finite-part routes disagree");
    Rat fin_pow = pow_rat(fin_inv, static_cast<long>(n / d));

    Rat arch_target = target_radius / 4;
    long prec = prec_for_radius(target_radius) + 8;
    for (int attempt = 0; attempt < 24; ++attempt) {
        RealInterval arch = archimedean_sum(pair, arch_target);
        RealInterval arch_pow = half_power(arch, n, prec);
        RealInterval h = arch_pow * RealInterval(fin_pow);
        if (h.radius() <= target_radius) {
            HeightReport rep{arch,
                             fin_inv,
                             fin_dir,
                             Rat(Int(n), Int(2)),
                             Rat(Int(n), Int(d)),
                             h,
                             std::move(inv)};
            rep.exponent_archimedean.canonicalize();
            rep.exponent_finite.canonicalize();
            return rep;
        }
        arch_target /= 1024;
        prec *= 2;
    }
    throw PrecisionError("height: refinement cap reached");
}

HeightReport height(const Pair& pair) { return height(pair, default_target_radius()); }

RealInterval standard_projective_height(const std::vector<Rat>& coords, unsigned long exponent,
                                        const Rat& target_radius) {
    if (exponent == 0) throw PreconditionError("standard_projective_height: exponent must be positive");
    Rat content = rational_content(coords);
    if (content == 0) throw ZeroError("standard_projective_height: zero vector");
    Rat s(0);
    for (const auto& c : coords) {
        Rat y = c / content;
        if (y.get_den() != 1)
            throw InternalInvariantError("standard_projective_height: clearing failed");
        s += y * y;
    }
    // s is a positive integer; H = s^(exponent/2).
    if (exponent % 2 == 0) return RealInterval(pow_rat(s, static_cast<long>(exponent / 2)));
    Rat s_pow = pow_rat(s, static_cast<long>(exponent));
    if (auto root = exact_sqrt(s_pow)) return RealInterval(*root);
    long prec = prec_for_radius(target_radius);
    RealInterval h = RealInterval(s_pow).sqrt_outward(prec);
    while (h.radius() > target_radius) {
        prec *= 2;
        if (prec > (1 << 22))
            throw PrecisionError("standard_projective_height: refinement cap reached");
        h = RealInterval(s_pow).sqrt_outward(prec);
    }
    return h;
}

RealInterval standard_projective_height(const std::vector<Rat>& coords, unsigned long exponent) {
    return standard_projective_height(coords, exponent, default_target_radius());
}

namespace {

// Largest integer s with s^n <= b^2, i.e. the integer cap on sum y_i^2.
Int sum_square_cap(const Rat& b, std::size_t n) {
    if (b <= 0) return Int(-1);
    Rat b2 = b * b;
    Int s(0);
    while (pow_rat(Rat(s + 1), static_cast<long>(n)) <= b2) ++s;
    return s;
}

struct RawPoint {
    std::vector<Int> y;
    Int sum_squares;
};

void enumerate_range(const std::shared_ptr<const FiniteGroup>& group, const Int& cap,
                     long lo_first, long hi_first, std::vector<RawPoint>& out) {
    std::size_t n = group->order();
    long ymax = static_cast<long>(isqrt(cap).get_si());
    if (lo_first > hi_first) return;
    std::vector<long> y(n);
    std::vector<long> lo(n, -ymax), hi(n, ymax);
    lo[0] = lo_first;
    hi[0] = hi_first;
    for (std::size_t i = 0; i < n; ++i) y[i] = lo[i];
    std::vector<Rat> coeffs(n);
    while (true) {
        Int sum(0), sum_sq(0), content(0);
        for (std::size_t i = 0; i < n; ++i) {
            sum += y[i];
            sum_sq += Int(y[i]) * Int(y[i]);
            content = gcd(content, Int(y[i]));
        }
        if (sum > 0 && content == 1 && sum_sq <= cap) {
            for (std::size_t i = 0; i < n; ++i) coeffs[i] = Rat(y[i]);
            GroupAlgebraElement<Rat> u(group, coeffs);
            if (group_determinant(u) != 0) {
                std::vector<Int> v(n);
                for (std::size_t i = 0; i < n; ++i) v[i] = y[i];
                out.push_back(RawPoint{std::move(v), sum_sq});
            }
        }
        std::size_t i = n;
        bool done = true;
        while (i-- > 0) {
            if (y[i] < hi[i]) {
                ++y[i];
                for (std::size_t j = i + 1; j < n; ++j) y[j] = lo[j];
                done = false;
                break;
            }
        }
        if (done) return;
    }
}

}  // namespace

EnumerationResult enumerate_split_points(std::shared_ptr<const FiniteGroup> group,
                                         const Rat& height_bound, int parallelism) {
    if (height_bound <= 0) throw PreconditionError("enumerate_split_points: bound must be positive");
    std::size_t n = group->order();
    Int cap = sum_square_cap(height_bound, n);
    EnumerationResult result;

    std::vector<RawPoint> raw;
    if (cap >= 1) {
        if (isqrt(cap) > 1000000)
            throw ScaleError("enumerate_split_points: bound exceeds the desk-scale search cap");
        long ymax = static_cast<long>(isqrt(cap).get_si());
        int workers = std::max(1, parallelism);
        std::vector<std::vector<RawPoint>> partial(workers);
        if (workers == 1) {
            enumerate_range(group, cap, -ymax, ymax, partial[0]);
        } else {
            std::vector<std::thread> pool;
            long total = 2 * ymax + 1;
            for (int w = 0; w < workers; ++w) {
                long lo = -ymax + total * w / workers;
                long hi = -ymax + total * (w + 1) / workers - 1;
                pool.emplace_back(
                    [&, lo, hi, w] { enumerate_range(group, cap, lo, hi, partial[w]); });
            }
            for (auto& th : pool) th.join();
        }
        for (auto& chunk : partial)
            for (auto& p : chunk) raw.push_back(std::move(p));
    }

    GAlgebra alg = GAlgebra::split(group);
    for (auto& p : raw) {
        Rat sum(0);
        for (const auto& v : p.y) sum += Rat(v);
        std::vector<Rat> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = Rat(p.y[i]) / sum;
            x[i].canonicalize();
        }
        Pair pr(alg, x);
        result.points.push_back(EnumeratedPoint{p.y, pr, height(pr)});
    }

    // Geometric checkpoints B, B/2, B/4, ... down to 1, reported ascending.
    std::vector<Rat> bounds;
    for (Rat b = height_bound; b >= 1; b /= 2) bounds.push_back(b);
    std::reverse(bounds.begin(), bounds.end());
    for (const auto& b : bounds) {
        Rat b2 = b * b;
        std::size_t count = 0;
        for (const auto& p : result.points) {
            Int ss(0);
            for (const auto& v : p.primitive) ss += v * v;
            if (pow_rat(Rat(ss), static_cast<long>(n)) <= b2) ++count;
        }
        result.checkpoints.push_back(EnumerationCheckpoint{b, count});
    }
    return result;
}

}  // namespace gheights
