#pragma once

#include <map>
#include <memory>
#include <vector>

#include "gheights/group.hpp"
#include "gheights/numeric.hpp"

namespace gheights {

/// Homogeneous polynomial in variables X_g indexed by the group, stored as a
/// map from exponent vectors to rational coefficients. Invariance under the
/// variable permutation g(X_h) = X_{h g^-1} is checked exhaustively at
/// construction.
class InvariantPolynomial {
public:
    using Monomial = std::vector<unsigned>;

    InvariantPolynomial(std::shared_ptr<const FiniteGroup> group,
                        std::map<Monomial, Rat> terms);

    const FiniteGroup& group() const { return *group_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    unsigned degree() const { return degree_; }

    Rat evaluate(const std::vector<Rat>& point) const;

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::map<Monomial, Rat> terms_;
    unsigned degree_;
};

/// Dimension of the degree-|G| invariants, counted as G-orbits on monomials by
/// an explicit Burnside enumeration of fixed monomials. ScaleError when
/// |G| > 10.
unsigned long invariant_dimension_bruteforce(const FiniteGroup& group);

/// Same dimension from the closed form (1/|G|) sum_d o(|G|/d) binom(2d-1, d),
/// where o(k) counts elements of exact order k; InternalInvariantError if the
/// sum is not divisible by |G|.
unsigned long invariant_dimension_formula(const FiniteGroup& group);

/// The same sum without the 1/|G| normalization.
unsigned long invariant_dimension_formula_unnormalized(const FiniteGroup& group);

/// The product of the G-translates of a nonzero linear form: an invariant of
/// degree |G| vanishing exactly on the orbit of the form's hyperplane.
InvariantPolynomial invariant_section(std::shared_ptr<const FiniteGroup> group,
                                      const std::vector<Rat>& linear_form);

struct SeparationWitness {
    std::vector<Rat> hyperplane;  // the linear form found by the search
    InvariantPolynomial section;
};

/// Find an invariant section vanishing at p but nonzero on the orbit of q.
/// SameOrbitError when p lies on the projective orbit of q; SearchCapError
/// after 10^4 candidate hyperplanes (which valid inputs never reach).
SeparationWitness separates(std::shared_ptr<const FiniteGroup> group, const std::vector<Rat>& p,
                            const std::vector<Rat>& q);

}  // namespace gheights
