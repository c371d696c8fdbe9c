#include "gheights/galois.hpp"

#include "gheights/errors.hpp"

namespace gheights {

GaloisAction::GaloisAction(std::shared_ptr<const FiniteGroup> group,
                           std::vector<FieldElement> images)
    : group_(std::move(group)), images_(std::move(images)) {
    if (!group_ || images_.size() != group_->order())
        throw GroupError("galois action: one image per group element required");
}

GaloisAction GaloisAction::from_generators(
    std::shared_ptr<const FiniteGroup> group, FieldPtr field,
    const std::map<std::size_t, FieldElement>& generator_images) {
    std::size_t n = group->order();
    FieldElement t = FieldElement::generator(field);
    std::vector<FieldElement> images(n, t);
    std::vector<bool> known(n, false);
    known[group->identity()] = true;
    for (const auto& [g, img] : generator_images) {
        if (g >= n) throw GroupError("galois action: generator index out of range");
        images[g] = img;
        known[g] = true;
    }
    GaloisAction partial(group, images);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a) {
            if (!known[a]) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (!known[b]) continue;
                std::size_t ab = group->mul(a, b);
                if (known[ab]) continue;
                images[ab] = partial.apply(a, images[b]);
                known[ab] = true;
                partial = GaloisAction(group, images);
                changed = true;
            }
        }
    }
    for (std::size_t g = 0; g < n; ++g)
        if (!known[g]) throw GroupError("galois action: generator images do not generate");
    return GaloisAction(group, std::move(images));
}

FieldElement GaloisAction::apply(std::size_t g, const FieldElement& x) const {
    const FieldElement& img = images_[g];
    FieldElement acc = FieldElement::zero(x.field());
    const auto& c = x.coords();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * img;
        acc = acc + FieldElement::from_rational(x.field(), c[i]);
    }
    return acc;
}

bool verify_galois(const NumberField& field, const GaloisAction& action) {
    std::size_t n = action.group().order();
    if (static_cast<int>(n) != field.degree()) return false;
    FieldElement t = FieldElement::generator(action.field());
    if (!action.field()->same_field(field)) return false;
    // Identity fixes t.
    if (!(action.image(action.group().identity()) == t)) return false;
    // Every image is a root of the minimal polynomial.
    for (std::size_t g = 0; g < n; ++g) {
        const FieldElement& img = action.image(g);
        FieldElement v = FieldElement::zero(action.field());
        const ZPoly& f = field.min_poly();
        for (std::size_t i = f.size(); i-- > 0;)
            v = v * img + FieldElement::from_rational(action.field(), Rat(f[i]));
        if (!v.is_zero()) return false;
    }
    // Faithful: images pairwise distinct.
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = g + 1; h < n; ++h)
            if (action.image(g) == action.image(h)) return false;
    // Composition realizes the table.
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (!(action.apply(g, action.image(h)) == action.image(action.group().mul(g, h))))
                return false;
    // Fixed field is Q: the simultaneous fixed space of all sigma is spanned by 1.
    // Fixed row vectors x satisfy x (M_g - I) = 0 for all g, so the left kernel of
    // the horizontally stacked blocks must have dimension one.
    if (n == 1) return field.degree() == 1;
    std::size_t d = n;
    QMat stacked(0, d);
    for (std::size_t g = 0; g < n; ++g) {
        if (g == action.group().identity()) continue;
        QMat m(d, d);
        FieldElement p = FieldElement::one(action.field());
        for (std::size_t i = 0; i < d; ++i) {
            m.set_row(i, action.apply(g, p).coords());
            p = p * t;
        }
        QMat diff_t = (m + QMat::identity(d) * Rat(-1)).transpose();
        stacked = stacked.rows() == 0 ? diff_t : stacked.vstack(diff_t);
    }
    return stacked.rank() == d - 1;
}

}  // namespace gheights
