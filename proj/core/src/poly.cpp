#include "gheights/poly.hpp"

#include <algorithm>
#include <tuple>

#include "gheights/errors.hpp"

namespace gheights {

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
void trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly to_qpoly(const ZPoly& f) {
    QPoly g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = Rat(f[i]);
    return g;
}

bool is_monic(const ZPoly& f) { return !f.empty() && f.back() == 1; }

QPoly q_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly q_scale(const QPoly& a, const Rat& c) {
    if (c == 0) return {};
    QPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

ZPoly z_derivative(const ZPoly& f) {
    if (f.size() <= 1) return {};
    ZPoly g(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) g[i - 1] = f[i] * Int(static_cast<long>(i));
    trim(g);
    return g;
}

QPoly q_derivative(const QPoly& f) {
    if (f.size() <= 1) return {};
    QPoly g(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) g[i - 1] = f[i] * Rat(static_cast<long>(i));
    trim(g);
    return g;
}

Rat q_eval(const QPoly& f, const Rat& x) {
    Rat r(0);
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

Rat z_eval(const ZPoly& f, const Rat& x) {
    Rat r(0);
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + Rat(f[i]);
    return r;
}

RealInterval z_eval(const ZPoly& f, const RealInterval& x) {
    RealInterval r{Rat(0)};
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + RealInterval(Rat(f[i]));
    return r;
}

ComplexEnclosure z_eval(const ZPoly& f, const ComplexEnclosure& x) {
    ComplexEnclosure r;
    for (std::size_t i = f.size(); i-- > 0;)
        r = r * x + ComplexEnclosure(RealInterval(Rat(f[i])), RealInterval(Rat(0)));
    return r;
}

std::pair<QPoly, QPoly> q_divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw DivisionByZero("q_divmod: division by zero polynomial");
    QPoly rem = a, quot;
    trim(rem);
    int db = degree(b);
    if (degree(rem) >= db) quot.assign(rem.size() - b.size() + 1, Rat(0));
    while (degree(rem) >= db) {
        int k = degree(rem) - db;
        Rat c = rem.back() / b.back();
        quot[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

QPoly q_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = q_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) a = q_scale(a, Rat(1) / a.back());
    return a;
}

std::tuple<QPoly, QPoly, QPoly> q_xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    trim(r0);
    trim(r1);
    QPoly u0{Rat(1)}, u1{}, v0{}, v1{Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = q_divmod(r0, r1);
        QPoly u = q_sub(u0, q_mul(q, u1));
        QPoly v = q_sub(v0, q_mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u);
        v0 = std::move(v1);
        v1 = std::move(v);
    }
    if (!r0.empty() && r0.back() != 1) {
        Rat inv = Rat(1) / r0.back();
        r0 = q_scale(r0, inv);
        u0 = q_scale(u0, inv);
        v0 = q_scale(v0, inv);
    }
    return {r0, u0, v0};
}

bool is_squarefree(const ZPoly& f) {
    if (degree(f) <= 0) return false;
    return degree(q_gcd(to_qpoly(f), to_qpoly(z_derivative(f)))) == 0;
}

Int z_det(const ZMat& m) {
    if (m.rows() != m.cols()) throw DimensionError("z_det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return Int(1);
    ZMat a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return Int(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

Int resultant(const ZPoly& f, const ZPoly& g) {
    int m = degree(f), n = degree(g);
    if (m < 0 || n < 0) return Int(0);
    if (m == 0) return pow_int(f[0], static_cast<unsigned long>(n));
    if (n == 0) return pow_int(g[0], static_cast<unsigned long>(m));
    ZMat s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = g[n - j];
    return z_det(s);
}

Rat poly_discriminant(const ZPoly& f) {
    int n = degree(f);
    if (n < 1) throw DegreeError("poly_discriminant: constant polynomial");
    if (n == 1) return Rat(1);
    Int res = resultant(f, z_derivative(f));
    int sign = ((static_cast<long>(n) * (n - 1) / 2) % 2 == 0) ? 1 : -1;
    Rat d(res, f.back());
    d.canonicalize();
    return sign > 0 ? d : Rat(-d);
}

namespace {
std::vector<QPoly> sturm_chain(const ZPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(to_qpoly(f));
    chain.push_back(to_qpoly(z_derivative(f)));
    while (!chain.back().empty() && degree(chain.back()) > 0) {
        auto [q, r] = q_divmod(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        chain.push_back(q_scale(r, Rat(-1)));
    }
    return chain;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_of(q_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int variations_at_infinity(const std::vector<QPoly>& chain, int dir) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sign_of(p.back());
        if (dir < 0 && degree(p) % 2 == 1) s = -s;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}
}  // namespace

int sturm_count(const ZPoly& f, const Rat& a, const Rat& b) {
    if (!is_squarefree(f)) throw SquarefreeError("sturm_count: polynomial not squarefree");
    auto chain = sturm_chain(f);
    return variations_at(chain, a) - variations_at(chain, b);
}

int sturm_count_all(const ZPoly& f) {
    if (!is_squarefree(f)) throw SquarefreeError("sturm_count_all: polynomial not squarefree");
    auto chain = sturm_chain(f);
    return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

Rat root_bound(const ZPoly& f) {
    int n = degree(f);
    if (n < 1) throw DegreeError("root_bound: constant polynomial");
    Rat bound(0);
    for (int i = 0; i < n; ++i) {
        Rat c = abs(Rat(f[i], f[n]));
        if (c > bound) bound = c;
    }
    return bound + 1;
}

}  // namespace gheights
