#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gheights/errors.hpp"

namespace gheights {

/// Finite group given by an explicit multiplication table over element indices
/// 0..n-1. Construction validates closure, associativity (exhaustively),
/// a two-sided identity and two-sided inverses; GroupError otherwise.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});

    static std::shared_ptr<const FiniteGroup> cyclic(std::size_t n);
    static std::shared_ptr<const FiniteGroup> klein_four();
    static std::shared_ptr<const FiniteGroup> dihedral(std::size_t n);    // order 2n
    static std::shared_ptr<const FiniteGroup> symmetric(std::size_t k);   // order k!
    static std::shared_ptr<const FiniteGroup> direct_product(const FiniteGroup& a,
                                                             const FiniteGroup& b);

    std::size_t order() const { return n_; }
    std::size_t identity() const { return id_; }
    std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
    std::size_t inverse(std::size_t g) const { return inv_[g]; }
    std::size_t element_order(std::size_t g) const;
    const std::string& name(std::size_t g) const { return names_[g]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    bool same_table(const FiniteGroup& o) const { return table_ == o.table_; }

private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inv_;
    std::size_t id_;
    std::vector<std::string> names_;
};

}  // namespace gheights
