#pragma once

#include <vector>

#include "gheights/matrix.hpp"

namespace gheights {

/// Canonical basis of a full-rank lattice in Q^n: (1/denominator) * basis, where
/// basis is a square integer matrix in row Hermite normal form (upper triangular,
/// positive diagonal, entries above each pivot reduced into [0, pivot)) and the
/// denominator is minimal. Two lattices are equal iff their HNFBasis compare equal.
struct HNFBasis {
    ZMat basis;
    Int denominator{1};

    std::size_t dim() const { return basis.rows(); }
    bool operator==(const HNFBasis& o) const {
        return denominator == o.denominator && basis == o.basis;
    }

    QMat rational_basis() const;
    /// Covolume |det| of the lattice, a positive rational.
    Rat covolume() const;
    bool contains(const std::vector<Rat>& x) const;
};

/// Row Hermite normal form of an arbitrary integer matrix; zero rows dropped,
/// so the result has one row per lattice basis vector.
ZMat row_hnf(ZMat m);

/// Canonical HNF basis of the row lattice of an integer matrix.
/// The rows must span a rank-cols sublattice; otherwise RankError.
HNFBasis hnf(const ZMat& m);

/// Canonical HNF basis of the Z-span of the rows of a rational matrix.
HNFBasis hnf_rational(const QMat& m);

/// Lattice sum A + B.
HNFBasis lattice_sum(const HNFBasis& a, const HNFBasis& b);

/// Lattice intersection, computed through duals with respect to the standard
/// inner product.
HNFBasis lattice_intersect(const HNFBasis& a, const HNFBasis& b);

/// Dual lattice {x : <x, a> in Z for all a in A} for the standard inner product.
HNFBasis standard_dual(const HNFBasis& a);

bool sublattice_of(const HNFBasis& a, const HNFBasis& b);

/// Generalized index [B : A] = [B : C] / [A : C] with C = A intersect B,
/// an exact positive rational, multiplicative in chains.
Rat generalized_index(const HNFBasis& a, const HNFBasis& b);

}  // namespace gheights
