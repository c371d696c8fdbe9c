#include "gheights/molien.hpp"

#include <algorithm>
#include <functional>

namespace gheights {

namespace {

// All exponent vectors of length n summing to total, lexicographic.
void for_each_monomial(std::size_t n, unsigned total,
                       const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> e(n, 0);
    // Compositions of 'total' into n slots.
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
        if (pos + 1 == n) {
            e[pos] = left;
            fn(e);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            e[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n > 0) rec(0, total);
}

// Exponent vector transported by g: e'_k = e_{kg}.
std::vector<unsigned> permute_monomial(const FiniteGroup& grp, const std::vector<unsigned>& e,
                                       std::size_t g) {
    std::vector<unsigned> out(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) out[k] = e[grp.mul(k, g)];
    return out;
}

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

InvariantPolynomial::InvariantPolynomial(std::shared_ptr<const FiniteGroup> group,
                                         std::map<Monomial, Rat> terms)
    : group_(std::move(group)), terms_(std::move(terms)), degree_(0) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        if (mono.size() != group_->order())
            throw DimensionError("invariant polynomial: monomial length mismatch");
        unsigned deg = 0;
        for (unsigned v : mono) deg += v;
        if (first) {
            degree_ = deg;
            first = false;
        } else if (deg != degree_) {
            throw PreconditionError("invariant polynomial: not homogeneous");
        }
    }
    // Exhaustive invariance check.
    for (std::size_t g = 0; g < group_->order(); ++g) {
        for (const auto& [mono, coeff] : terms_) {
            auto moved = permute_monomial(*group_, mono, g);
            auto it = terms_.find(moved);
            if (it == terms_.end() || it->second != coeff)
                throw PreconditionError("invariant polynomial: not G-invariant");
        }
    }
}

Rat InvariantPolynomial::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != group_->order())
        throw DimensionError("invariant polynomial evaluate: point length mismatch");
    Rat total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rat term = coeff;
        for (std::size_t i = 0; i < mono.size(); ++i)
            for (unsigned k = 0; k < mono[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

unsigned long invariant_dimension_bruteforce(const FiniteGroup& group) {
    std::size_t n = group.order();
    if (n > 10) throw ScaleError("invariant_dimension_bruteforce: |G| exceeds 10");
    // Burnside: average over g of the number of degree-n monomials fixed by g.
    Int total(0);
    for_each_monomial(n, static_cast<unsigned>(n), [&](const std::vector<unsigned>& e) {
        for (std::size_t g = 0; g < n; ++g) {
            bool fixed = true;
            for (std::size_t k = 0; k < n && fixed; ++k) fixed = e[group.mul(k, g)] == e[k];
            if (fixed) total += 1;
        }
    });
    if (total % Int(static_cast<long>(n)) != 0)
        throw InternalInvariantError("invariant_dimension_bruteforce: Burnside sum not divisible");
    Int result = total / Int(static_cast<long>(n));
    return mpz_get_ui(result.get_mpz_t());
}

unsigned long invariant_dimension_formula_unnormalized(const FiniteGroup& group) {
    std::size_t n = group.order();
    std::vector<unsigned long> order_count(n + 1, 0);
    for (std::size_t g = 0; g < n; ++g) ++order_count[group.element_order(g)];
    Int total(0);
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        unsigned long o = order_count[n / d];
        if (o == 0) continue;
        total += Int(static_cast<long>(o)) * binom(2 * d - 1, d);
    }
    return mpz_get_ui(total.get_mpz_t());
}

unsigned long invariant_dimension_formula(const FiniteGroup& group) {
    std::size_t n = group.order();
    Int total(static_cast<long>(invariant_dimension_formula_unnormalized(group)));
    if (total % Int(static_cast<long>(n)) != 0)
        throw InternalInvariantError("invariant_dimension_formula: sum not divisible by |G|");
    Int result = total / Int(static_cast<long>(n));
    return mpz_get_ui(result.get_mpz_t());
}

InvariantPolynomial invariant_section(std::shared_ptr<const FiniteGroup> group,
                                      const std::vector<Rat>& linear_form) {
    std::size_t n = group->order();
    if (linear_form.size() != n) throw DimensionError("invariant_section: form length mismatch");
    if (std::all_of(linear_form.begin(), linear_form.end(), [](const Rat& c) { return c == 0; }))
        throw ZeroError("invariant_section: zero form");
    // Multiply the translates one at a time; the g-translate of sum c_h X_h has
    // X_k coefficient c_{kg}.
    std::map<std::vector<unsigned>, Rat> acc;
    acc.emplace(std::vector<unsigned>(n, 0), Rat(1));
    for (std::size_t g = 0; g < n; ++g) {
        std::map<std::vector<unsigned>, Rat> next;
        for (const auto& [mono, coeff] : acc) {
            for (std::size_t k = 0; k < n; ++k) {
                Rat c = linear_form[group->mul(k, g)];
                if (c == 0) continue;
                auto m = mono;
                ++m[k];
                next[m] += coeff * c;
            }
        }
        acc = std::move(next);
    }
    return InvariantPolynomial(std::move(group), std::move(acc));
}

namespace {

// Is p projectively equal to some translate of q?
bool same_projective_orbit(const FiniteGroup& grp, const std::vector<Rat>& p,
                           const std::vector<Rat>& q) {
    std::size_t n = grp.order();
    for (std::size_t g = 0; g < n; ++g) {
        // translate t_h = q_{hg}
        std::vector<Rat> t(n);
        for (std::size_t h = 0; h < n; ++h) t[h] = q[grp.mul(h, g)];
        // proportionality p = lambda t
        Rat lambda(0);
        bool ok = true;
        for (std::size_t h = 0; h < n && ok; ++h) {
            if (t[h] == 0) {
                ok = p[h] == 0;
            } else {
                Rat l = p[h] / t[h];
                if (lambda == 0)
                    lambda = l;
                else
                    ok = l == lambda;
            }
        }
        if (ok && lambda != 0) return true;
    }
    return false;
}

}  // namespace

SeparationWitness separates(std::shared_ptr<const FiniteGroup> group, const std::vector<Rat>& p,
                            const std::vector<Rat>& q) {
    std::size_t n = group->order();
    if (p.size() != n || q.size() != n) throw DimensionError("separates: point length mismatch");
    auto nonzero = [](const std::vector<Rat>& v) {
        return std::any_of(v.begin(), v.end(), [](const Rat& c) { return c != 0; });
    };
    if (!nonzero(p) || !nonzero(q)) throw ZeroError("separates: zero point");
    if (same_projective_orbit(*group, p, q))
        throw SameOrbitError("separates: the points lie in the same orbit");

    // Deterministic search over integer forms by increasing max-norm shell,
    // lexicographic inside each shell.
    constexpr long kCap = 10000;
    long seen = 0;
    for (long shell = 1;; ++shell) {
        std::vector<long> c(n, -shell);
        while (true) {
            bool on_shell = false;
            for (long v : c)
                if (v == shell || v == -shell) on_shell = true;
            if (on_shell) {
                if (++seen > kCap) throw SearchCapError("separates: hyperplane search cap");
                Rat at_p(0);
                for (std::size_t h = 0; h < n; ++h) at_p += Rat(c[h]) * p[h];
                if (at_p == 0) {
                    bool misses_orbit = true;
                    for (std::size_t g = 0; g < n && misses_orbit; ++g) {
                        Rat v(0);
                        for (std::size_t h = 0; h < n; ++h) v += Rat(c[h]) * q[group->mul(h, g)];
                        misses_orbit = v != 0;
                    }
                    if (misses_orbit) {
                        std::vector<Rat> form(n);
                        for (std::size_t h = 0; h < n; ++h) form[h] = Rat(c[h]);
                        auto section = invariant_section(group, form);
                        if (section.evaluate(p) != 0)
                            throw InternalInvariantError("separates: witness fails at p");
                        if (section.evaluate(q) == 0)
                            throw InternalInvariantError("separates: witness vanishes at q");
                        return SeparationWitness{form, std::move(section)};
                    }
                }
            }
            std::size_t i = n;
            bool done = true;
            while (i-- > 0) {
                if (c[i] < shell) {
                    ++c[i];
                    for (std::size_t j = i + 1; j < n; ++j) c[j] = -shell;
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
}

}  // namespace gheights
