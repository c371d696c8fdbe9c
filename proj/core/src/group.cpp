#include "gheights/group.hpp"

#include <algorithm>
#include <numeric>

namespace gheights {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table,
                         std::vector<std::string> names)
    : n_(table.size()), table_(std::move(table)), names_(std::move(names)) {
    if (n_ == 0) throw GroupError("group: empty table");
    for (const auto& row : table_) {
        if (row.size() != n_) throw GroupError("group: table not square");
        for (std::size_t v : row)
            if (v >= n_) throw GroupError("group: entry out of range");
    }
    // Two-sided identity.
    id_ = n_;
    for (std::size_t e = 0; e < n_; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n_ && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
        if (ok) {
            id_ = e;
            break;
        }
    }
    if (id_ == n_) throw GroupError("group: no two-sided identity");
    // Two-sided inverses.
    inv_.assign(n_, n_);
    for (std::size_t g = 0; g < n_; ++g) {
        for (std::size_t h = 0; h < n_; ++h) {
            if (table_[g][h] == id_ && table_[h][g] == id_) {
                inv_[g] = h;
                break;
            }
        }
        if (inv_[g] == n_) throw GroupError("group: missing inverse");
    }
    // Exhaustive associativity.
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            for (std::size_t c = 0; c < n_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw GroupError("group: table not associative");
    if (names_.empty()) {
        names_.resize(n_);
        for (std::size_t g = 0; g < n_; ++g) names_[g] = "g" + std::to_string(g);
    }
    if (names_.size() != n_) throw GroupError("group: wrong number of names");
}

std::size_t FiniteGroup::element_order(std::size_t g) const {
    std::size_t k = 1, x = g;
    while (x != id_) {
        x = mul(x, g);
        ++k;
    }
    return k;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return std::make_shared<const FiniteGroup>(std::move(t));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::klein_four() {
    auto c2 = cyclic(2);
    return std::make_shared<const FiniteGroup>(*direct_product(*c2, *c2));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::dihedral(std::size_t n) {
    // Elements r^i s^j, index i + n*j.
    std::size_t m = 2 * n;
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    auto idx = [n](std::size_t i, std::size_t j) { return i + n * j; };
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t j1 = 0; j1 < 2; ++j1)
            for (std::size_t i2 = 0; i2 < n; ++i2)
                for (std::size_t j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2*(-1)^j1) s^(j1+j2)
                    std::size_t i = j1 == 0 ? (i1 + i2) % n : (i1 + n - i2 % n) % n;
                    t[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
                }
    return std::make_shared<const FiniteGroup>(std::move(t));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric(std::size_t k) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::size_t m = perms.size();
    auto rank = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(
            std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<std::size_t> c(k);
            for (std::size_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = rank(c);
        }
    return std::make_shared<const FiniteGroup>(std::move(t));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::direct_product(const FiniteGroup& a,
                                                               const FiniteGroup& b) {
    std::size_t na = a.order(), nb = b.order(), m = na * nb;
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    for (std::size_t g1 = 0; g1 < na; ++g1)
        for (std::size_t h1 = 0; h1 < nb; ++h1)
            for (std::size_t g2 = 0; g2 < na; ++g2)
                for (std::size_t h2 = 0; h2 < nb; ++h2)
                    t[g1 * nb + h1][g2 * nb + h2] = a.mul(g1, g2) * nb + b.mul(h1, h2);
    return std::make_shared<const FiniteGroup>(std::move(t));
}

}  // namespace gheights
