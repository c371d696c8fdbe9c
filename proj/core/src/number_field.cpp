#include "gheights/number_field.hpp"

#include <algorithm>

#include "gheights/errors.hpp"

namespace gheights {

namespace {

// Exact reducibility test: a monic integer factor of degree k <= d/2 would have
// coefficients equal to (signed) elementary symmetric functions of a k-subset of
// the roots. Certified enclosures narrower than 1/2 pin each candidate
// coefficient to at most one integer, and exact division decides.
bool has_proper_factor(const ZPoly& f) {
    int d = degree(f);
    if (d <= 1) return false;
    Rat radius(1, Int("1208925819614629174706176"));  // 2^-80
    for (int attempt = 0; attempt < 6; ++attempt) {
        auto roots = complex_roots(f, radius);
        bool too_wide = false;
        std::vector<int> idx;
        // Iterate subsets of size 1..d/2 via combination indices.
        for (int k = 1; k <= d / 2 && !too_wide; ++k) {
            idx.resize(k);
            for (int i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                // Product polynomial prod (X - r_i), ascending coefficient enclosures.
                std::vector<ComplexEnclosure> coeffs(k + 1);
                coeffs[0] = ComplexEnclosure(RealInterval(Rat(1)), RealInterval(Rat(0)));
                int used = 0;
                for (int i : idx) {
                    for (int j = used + 1; j >= 0; --j) {
                        ComplexEnclosure prev = (j > 0) ? coeffs[j - 1] : ComplexEnclosure();
                        ComplexEnclosure cur =
                            (j <= used) ? coeffs[j] : ComplexEnclosure();
                        coeffs[j] = prev - cur * roots[i];
                    }
                    ++used;
                }
                bool candidate = true;
                ZPoly g(k + 1);
                for (int j = 0; j <= k && candidate; ++j) {
                    const auto& re = coeffs[j].real();
                    const auto& im = coeffs[j].imaginary();
                    if (re.width() >= 1 || im.width() >= 1) {
                        too_wide = true;
                        candidate = false;
                        break;
                    }
                    if (!im.contains(Rat(0))) {
                        candidate = false;
                        break;
                    }
                    Int c;
                    mpz_cdiv_q(c.get_mpz_t(), re.lo().get_num().get_mpz_t(),
                               re.lo().get_den().get_mpz_t());
                    if (!re.contains(Rat(c))) {
                        candidate = false;
                        break;
                    }
                    g[j] = c;
                }
                if (too_wide) break;
                if (candidate) {
                    auto [q, r] = q_divmod(to_qpoly(f), to_qpoly(g));
                    (void)q;
                    if (r.empty()) return true;
                }
                // next combination
                int i = k - 1;
                while (i >= 0 && idx[i] == d - k + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        if (!too_wide) return false;
        radius /= pow_int(Int(2), 40);
    }
    throw PrecisionError("irreducibility check: could not pin factor coefficients");
}

}  // namespace

NumberField::NumberField(ZPoly f) : f_(std::move(f)) {
    trim(f_);
    d_ = gheights::degree(f_);
    if (d_ < 1) throw DegreeError("number field: minimal polynomial must be nonconstant");
    if (!is_monic(f_)) throw PreconditionError("number field: minimal polynomial must be monic");
    if (d_ > 12) throw ScaleError("number field: degree exceeds the desk-scale cap of 12");
    if (d_ > 1) {
        if (!is_squarefree(f_))
            throw IrreducibilityError("number field: minimal polynomial is not squarefree");
        if (has_proper_factor(f_))
            throw IrreducibilityError("number field: minimal polynomial is reducible");
    }
    totally_real_ = (d_ == 1) || (sturm_count_all(f_) == d_);
}

std::shared_ptr<const NumberField> NumberField::create(ZPoly min_poly) {
    return std::shared_ptr<const NumberField>(new NumberField(std::move(min_poly)));
}

QPoly NumberField::reduce(QPoly p) const {
    trim(p);
    if (gheights::degree(p) < d_) return p;
    auto [q, r] = q_divmod(p, to_qpoly(f_));
    (void)q;
    return r;
}

std::vector<ComplexEnclosure> NumberField::root_enclosures(const Rat& target_radius) const {
    return complex_roots(f_, target_radius);
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw PreconditionError("field element: null field");
    if (coords_.size() != static_cast<std::size_t>(field_->degree()))
        throw DimensionError("field element: coordinate length mismatch");
}

FieldElement FieldElement::from_poly(FieldPtr field, const QPoly& p) {
    QPoly r = field->reduce(p);
    std::vector<Rat> c(field->degree(), Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i) c[i] = r[i];
    return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::zero(FieldPtr field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::one(FieldPtr field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[0] = 1;
    return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::generator(FieldPtr field) {
    if (field->degree() == 1) {
        // t is congruent to the rational root of the degree-one minimal polynomial.
        Rat r(-Rat(field->min_poly()[0]));
        return FieldElement(std::move(field), {r});
    }
    std::vector<Rat> c(field->degree(), Rat(0));
    c[1] = 1;
    return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::from_rational(FieldPtr field, const Rat& c) {
    std::vector<Rat> v(field->degree(), Rat(0));
    v[0] = c;
    return FieldElement(std::move(field), std::move(v));
}

QPoly FieldElement::as_poly() const {
    QPoly p = coords_;
    trim(p);
    return p;
}

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (!field_->same_field(*o.field_)) throw PreconditionError("field element add: field mismatch");
    std::vector<Rat> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (!field_->same_field(*o.field_)) throw PreconditionError("field element sub: field mismatch");
    std::vector<Rat> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (!field_->same_field(*o.field_)) throw PreconditionError("field element mul: field mismatch");
    return from_poly(field_, q_mul(as_poly(), o.as_poly()));
}

FieldElement FieldElement::operator*(const Rat& c) const {
    std::vector<Rat> v(coords_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] * c;
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rat> v(coords_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coords_[i];
    return FieldElement(field_, std::move(v));
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_->same_field(*o.field_) && coords_ == o.coords_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("field element inverse of zero");
    auto [g, u, v] = q_xgcd(as_poly(), to_qpoly(field_->min_poly()));
    (void)v;
    if (degree(g) != 0)
        throw InternalInvariantError("field element inverse: gcd with minimal polynomial not 1");
    return from_poly(field_, q_scale(u, Rat(1) / g[0]));
}

QMat FieldElement::multiplication_matrix() const {
    std::size_t d = coords_.size();
    QMat m(d, d);
    FieldElement cur = *this;
    FieldElement t = FieldElement::generator(field_);
    for (std::size_t i = 0; i < d; ++i) {
        m.set_row(i, cur.coords());
        if (i + 1 < d) cur = cur * t;
    }
    return m;
}

Rat FieldElement::trace() const {
    QMat m = multiplication_matrix();
    Rat t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

Rat FieldElement::norm() const { return multiplication_matrix().det(); }

FieldElement FieldElement::pow(unsigned long e) const {
    FieldElement r = FieldElement::one(field_);
    FieldElement b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool is_one(const FieldElement& x) {
    const auto& c = x.coords();
    if (c.empty() || c[0] != 1) return false;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

std::vector<ComplexEnclosure> embeddings(const FieldElement& x, const Rat& target_radius) {
    if (target_radius <= 0) throw PreconditionError("embeddings: target radius must be positive");
    const auto& field = *x.field();
    QPoly p = x.as_poly();
    // Scale the root radius down until every evaluated enclosure is tight enough.
    Rat root_radius = target_radius / 4;
    for (int attempt = 0; attempt < 24; ++attempt) {
        auto roots = field.root_enclosures(root_radius);
        std::vector<ComplexEnclosure> out;
        out.reserve(roots.size());
        bool ok = true;
        for (const auto& r : roots) {
            ComplexEnclosure v;
            for (std::size_t i = p.size(); i-- > 0;) {
                ComplexEnclosure c(RealInterval(p[i]), RealInterval(Rat(0)));
                v = v * r + c;
            }
            if (p.empty()) v = ComplexEnclosure();
            if (v.radius() > target_radius) {
                ok = false;
                break;
            }
            out.push_back(v);
        }
        if (ok) return out;
        root_radius /= 1024;
    }
    throw PrecisionError("embeddings: refinement cap reached");
}

}  // namespace gheights
