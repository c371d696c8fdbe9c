#pragma once

#include "gheights/pairs.hpp"

namespace gheights {

/// Everything the height computation produces: the certified archimedean sum,
/// both finite-part routes (asserted equal), the exact exponents, and the
/// assembled anticanonical height enclosure.
struct HeightReport {
    RealInterval archimedean_sum;  // sum over embeddings of |phi(x)|^2
    Rat finite_part_invariant;
    Rat finite_part_direct;
    Rat exponent_archimedean;  // |G| / 2
    Rat exponent_finite;       // |G| / d
    RealInterval height;
    PairInvariants invariants;
};

inline constexpr long kDefaultPrecisionBits = 40;
Rat default_target_radius();  // 2^-40

/// Certified enclosure of sum_phi |phi(x)|^2. Exact (zero radius) for split
/// pairs; for totally real fields the enclosure is checked to contain the
/// exact rational Tr(x^2).
RealInterval archimedean_sum(const Pair& pair, const Rat& target_radius);

/// Finite part through the algebraic invariants: the exact square root of
/// |disc T / disc Lambda| times dis(Lambda)^-1, cross-asserted against the
/// generalized index N_T(Lambda).
Rat finite_part_invariant(const Pair& pair);

/// Finite part through one generalized index: N_O(O Lambda)^-1, independent of
/// the discriminant and discrepancy code paths.
Rat finite_part_direct(const Pair& pair);

/// The anticanonical height H(L, x) = (sum |phi(x)|^2)^(|G|/2) * finite^(|G|/d)
/// with both finite routes computed and asserted equal.
HeightReport height(const Pair& pair, const Rat& target_radius);
HeightReport height(const Pair& pair);

/// Standard height of a rational projective point, raised to the exponent:
/// after clearing to coprime integers, sqrt(sum x_i^2)^exponent.
RealInterval standard_projective_height(const std::vector<Rat>& coords, unsigned long exponent,
                                        const Rat& target_radius);
RealInterval standard_projective_height(const std::vector<Rat>& coords, unsigned long exponent);

/// One enumerated rational point of the split moduli space.
struct EnumeratedPoint {
    std::vector<Int> primitive;  // coprime integer representative with positive sum
    Pair pair;
    HeightReport report;
};

struct EnumerationCheckpoint {
    Rat bound;
    std::size_t count;
};

struct EnumerationResult {
    std::vector<EnumeratedPoint> points;
    std::vector<EnumerationCheckpoint> checkpoints;  // geometric bounds, ascending
};

/// Every normal split pair of height at most the bound, each exactly verified,
/// in deterministic lexicographic order of the primitive representative.
/// The output is identical for every parallelism degree.
EnumerationResult enumerate_split_points(std::shared_ptr<const FiniteGroup> group,
                                         const Rat& height_bound, int parallelism = 1);

}  // namespace gheights
