#pragma once

#include <memory>
#include <vector>

#include "gheights/matrix.hpp"
#include "gheights/poly.hpp"
#include "gheights/roots.hpp"

namespace gheights {

/// Number field Q[t]/(f) for a monic irreducible integer polynomial f.
/// Irreducibility is verified at construction (squarefreeness plus an exact
/// factor search over certified root subsets up to degree d/2).
class NumberField {
public:
    static std::shared_ptr<const NumberField> create(ZPoly min_poly);

    int degree() const { return d_; }
    const ZPoly& min_poly() const { return f_; }

    /// Reduce a rational polynomial modulo f.
    QPoly reduce(QPoly p) const;

    bool same_field(const NumberField& o) const { return f_ == o.f_; }
    bool is_totally_real() const { return totally_real_; }

    /// Certified enclosures of the roots of f, refined to the given radius.
    std::vector<ComplexEnclosure> root_enclosures(const Rat& target_radius) const;

private:
    explicit NumberField(ZPoly f);
    ZPoly f_;
    int d_;
    bool totally_real_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field in power-basis coordinates 1, t, ..., t^(d-1).
class FieldElement {
public:
    FieldElement(FieldPtr field, std::vector<Rat> coords);
    static FieldElement from_poly(FieldPtr field, const QPoly& p);
    static FieldElement zero(FieldPtr field);
    static FieldElement one(FieldPtr field);
    static FieldElement generator(FieldPtr field);  // the class of t
    static FieldElement from_rational(FieldPtr field, const Rat& c);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }
    QPoly as_poly() const;

    bool is_zero() const;
    bool is_rational() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rat& c) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;

    /// Multiplicative inverse via the extended gcd with the minimal polynomial.
    FieldElement inverse() const;

    /// Matrix of multiplication by this element; row i holds the coordinates
    /// of t^i * x, so coords(u * x) = coords(u) * matrix.
    QMat multiplication_matrix() const;

    Rat trace() const;
    Rat norm() const;

    FieldElement pow(unsigned long e) const;

private:
    FieldPtr field_;
    std::vector<Rat> coords_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
bool is_one(const FieldElement& x);
inline FieldElement inverse(const FieldElement& x) { return x.inverse(); }

/// The d values of x under all complex embeddings, each refined until its
/// enclosure radius is at most target_radius.
std::vector<ComplexEnclosure> embeddings(const FieldElement& x, const Rat& target_radius);

}  // namespace gheights
