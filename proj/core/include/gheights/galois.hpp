#pragma once

#include <map>
#include <memory>
#include <vector>

#include "gheights/group.hpp"
#include "gheights/number_field.hpp"

namespace gheights {

/// Explicit action of a finite group on a number field: one image of the
/// power-basis generator per group element. Supplied in the input and verified,
/// never discovered.
class GaloisAction {
public:
    /// All images given explicitly, indexed by group element.
    GaloisAction(std::shared_ptr<const FiniteGroup> group, std::vector<FieldElement> images);

    /// Images given on a generating set and extended through the
    /// multiplication table; GroupError if the set does not generate.
    static GaloisAction from_generators(std::shared_ptr<const FiniteGroup> group, FieldPtr field,
                                        const std::map<std::size_t, FieldElement>& generator_images);

    const FiniteGroup& group() const { return *group_; }
    const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
    const FieldElement& image(std::size_t g) const { return images_[g]; }
    const FieldPtr& field() const { return images_[0].field(); }

    /// sigma_g(x): substitute the image of t into the coordinate polynomial of x.
    FieldElement apply(std::size_t g, const FieldElement& x) const;

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<FieldElement> images_;
};

/// True iff the action is a faithful Galois action with fixed field Q:
/// every image is a root of the minimal polynomial, composition realizes the
/// multiplication table, the identity fixes t, |G| equals the degree, and the
/// simultaneous fixed space is the rationals.
bool verify_galois(const NumberField& field, const GaloisAction& action);

}  // namespace gheights
