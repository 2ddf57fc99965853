#pragma once

#include <vector>

#include "shintani/matrix.hpp"

namespace shintani {

// Finite abelian group Z^k / R Z^r in Smith form: x -> (U x) mod (n_1, ..., n_s), n_i | n_{i+1}.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    // Relations are the columns of R (k rows). Throws InfiniteGroup if R has rank < k.
    static FiniteAbelianGroup from_relations(std::size_t generators, const IntMatrix& R);
    static FiniteAbelianGroup cyclic(i64 n);

    std::size_t presentation_rank() const noexcept { return k_; }
    // Nontrivial invariant factors.
    const std::vector<i64>& invariants() const noexcept { return n_; }
    std::size_t rank() const noexcept { return n_.size(); }
    i64 order() const noexcept { return order_; }
    i64 exponent() const noexcept { return n_.empty() ? 1 : n_.back(); }

    // Smith coordinates of an element given in presentation coordinates.
    std::vector<i64> reduce(const std::vector<Int>& x) const;
    std::vector<i64> reduce(const std::vector<i64>& x) const;
    // Presentation coordinates of Smith generator i.
    std::vector<Int> generator(std::size_t i) const;

    std::vector<i64> add(const std::vector<i64>& a, const std::vector<i64>& b) const;
    std::vector<i64> neg(const std::vector<i64>& a) const;
    std::vector<i64> scale(const std::vector<i64>& a, i64 k) const;
    std::vector<i64> zero() const { return std::vector<i64>(n_.size(), 0); }
    bool is_zero(const std::vector<i64>& a) const;

    // Mixed-radix enumeration of elements, 0 <= index < order().
    i64 index(const std::vector<i64>& a) const;
    std::vector<i64> element(i64 index) const;

private:
    std::size_t k_ = 0;
    std::vector<i64> n_;
    i64 order_ = 1;
    std::size_t skip_ = 0;  // leading unit invariants dropped
    IntMatrix U_;            // full Smith row transform
    IntMatrix Uinv_;
};

// Homomorphism to Z/N given by its values on presentation generators, as values on Smith generators.
std::vector<i64> transport_to_smith(const FiniteAbelianGroup& G, const std::vector<i64>& values, i64 N);

} // namespace shintani
