#include "gheights/numeric.hpp"

#include <algorithm>

namespace gheights {

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw DivisionByZero("pow_rat: zero base with negative exponent");
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), b.get_num().get_mpz_t(), k);
    mpz_pow_ui(r.get_den().get_mpz_t(), b.get_den().get_mpz_t(), k);
    r.canonicalize();
    return r;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (!is_perfect_square(q.get_num()) || !is_perfect_square(q.get_den())) return std::nullopt;
    return Rat(isqrt(q.get_num()), isqrt(q.get_den()));
}

Rat rational_content(const std::vector<Rat>& xs) {
    Int den(1);
    for (const auto& x : xs) den = lcm(den, x.get_den());
    Int num(0);
    for (const auto& x : xs) num = gcd(num, Int(x.get_num() * (den / x.get_den())));
    Rat c(num, den);
    c.canonicalize();
    return c;
}

Rat parse_rat(const std::string& s) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw SchemaError("cannot parse rational: '" + s + "'");
    if (q.get_den() == 0) throw SchemaError("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string format_rat(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string decimal_string(const Rat& q, int digits) {
    bool neg = q < 0;
    Rat a = abs(q);
    Int scale = pow_int(Int(10), static_cast<unsigned long>(digits));
    Int t;
    mpz_fdiv_q(t.get_mpz_t(), Int(a.get_num() * scale).get_mpz_t(), a.get_den().get_mpz_t());
    std::string s = t.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (neg && t != 0) s.insert(0, "-");
    return s;
}

std::vector<Int> prime_factors(Int n) {
    n = abs(n);
    if (n > Int("1000000000000"))
        throw ScaleError("prime_factors: |n| exceeds the 10^12 desk-scale cap");
    std::vector<Int> out;
    if (n <= 1) return out;
    for (Int p(2); p * p <= n && p <= 1000000; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    // Any cofactor below the cap with no factor <= 10^6 is prime.
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace gheights
