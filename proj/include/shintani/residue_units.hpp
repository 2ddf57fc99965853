#pragma once

#include <cstdint>
#include <vector>

#include "shintani/abelian.hpp"
#include "shintani/ideal.hpp"

namespace shintani {

// O / m for an integral ideal m, elements as canonical integral-basis coordinates.
class ResidueRing {
public:
    ResidueRing() = default;
    explicit ResidueRing(const Ideal& m);

    const Ideal& modulus() const noexcept { return m_; }
    int degree() const noexcept { return d_; }
    i64 size() const noexcept { return size_; }
    // Positive generator of m ∩ Z.
    i64 characteristic() const noexcept { return n_; }

    std::vector<i64> reduce(std::vector<i64> v) const;
    std::vector<i64> reduce(const std::vector<Int>& v) const;
    std::vector<i64> one() const;
    std::vector<i64> add(const std::vector<i64>& a, const std::vector<i64>& b) const;
    std::vector<i64> sub(const std::vector<i64>& a, const std::vector<i64>& b) const;
    std::vector<i64> mul(const std::vector<i64>& a, const std::vector<i64>& b) const;
    std::vector<i64> pow(std::vector<i64> a, u64 e) const;
    bool is_zero(const std::vector<i64>& a) const;

    i64 index(const std::vector<i64>& canonical) const;
    // index(reduce(y)) without allocating, for integral coordinates |y_i| < 2^62.
    i64 index_of(const std::vector<i64>& y) const;
    std::vector<i64> element(i64 index) const;

private:
    Ideal m_;
    int d_ = 0;
    i64 n_ = 1, size_ = 1;
    std::vector<i64> H_;  // d x d, row-major
    std::vector<i64> C_;  // d^3 structure constants
};

// (O/m)^* presented by residue-field generators and filtration generators 1 + pi^k b at each
// prime power P^e || m, each lifted to be 1 modulo the other prime powers.
class ResidueUnitGroup {
public:
    explicit ResidueUnitGroup(const Ideal& m);

    const ResidueRing& ring() const noexcept { return R_; }
    const FiniteAbelianGroup& group() const noexcept { return G_; }
    const std::vector<std::vector<i64>>& generators() const noexcept { return gens_; }
    const IntMatrix& relations() const noexcept { return rel_; }
    // Number of prime-power blocks and the generator positions of each.
    struct Block {
        PrimeIdeal prime;
        int e = 1;
        std::size_t first = 0;       // index of the residue-field generator
        std::vector<int> level;      // filtration level of each generator in the block (0 for g)
    };
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    bool is_unit(const std::vector<i64>& y) const;
    // Presentation coordinates of a unit y (any integral coordinates).
    std::vector<i64> dlog(const std::vector<i64>& y) const;
    std::vector<i64> dlog(const std::vector<Int>& y) const;
    i64 unit_count() const { return G_.order(); }

    // Table over all residues: index of the image class in target, or -1 for non-units.
    std::vector<std::int32_t> image_table(const FiniteAbelianGroup& target,
                                          const std::vector<std::vector<i64>>& images) const;
    // Order of the subgroup generated by the given residues, by closure in O/m.
    i64 subgroup_order(const std::vector<std::vector<i64>>& elems) const;

private:
    struct Local {
        ResidueRing Pe, P;
        std::vector<i64> field_log;            // index in O/P -> exponent of g, -1 for 0
        i64 q = 1;                             // N(P)
        i64 p = 1;
        std::vector<i64> g;                    // local generator coordinates
        std::vector<std::vector<i64>> filt;    // 1 + pi^k b_j, grouped by level
        std::vector<int> filt_level;
        std::vector<ResidueRing> Pk;           // P^{k+1} for k = 1..e-1
        std::vector<std::vector<std::vector<i64>>> basis_k;  // pi^k b_j per level
        u64 unit_order = 1;
        std::size_t f = 1;
    };
    std::vector<i64> local_dlog(const Local& L, std::vector<i64> y) const;

    ResidueRing R_;
    std::vector<Local> locals_;
    std::vector<Block> blocks_;
    std::vector<std::vector<i64>> gens_;
    IntMatrix rel_;
    FiniteAbelianGroup G_;
};

} // namespace shintani
