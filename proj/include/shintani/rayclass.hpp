#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "shintani/classgroup.hpp"
#include "shintani/residue_units.hpp"

namespace shintani {

// Narrow ray class group Cl+(m) = I(m) / P+(m) of a real quadratic field, presented as
// (O/m)^* x Z^h modulo the images of E_+ and of the relations of Cl+(1).
class RayClassGroup {
public:
    RayClassGroup(const NumberField& K, const Ideal& m, const UnitGroupData& units,
                  std::shared_ptr<const NarrowClassGroup> narrow = nullptr);

    const NumberField& field() const { return *K_; }
    const Ideal& modulus() const noexcept { return m_; }
    const FiniteAbelianGroup& group() const noexcept { return G_; }
    i64 order() const noexcept { return G_.order(); }
    const ResidueUnitGroup& residues() const noexcept { return U_; }
    const NarrowClassGroup& narrow() const noexcept { return *narrow_; }
    std::shared_ptr<const NarrowClassGroup> narrow_ptr() const noexcept { return narrow_; }
    const UnitGroupData& units() const noexcept { return units_; }

    // Smith coordinates of the class of a fractional ideal coprime to m.
    std::vector<i64> dlog(const Ideal& a) const;
    // Class of (x) for a totally positive x coprime to m (integral coordinates).
    std::vector<i64> element_class(const std::vector<i64>& x) const;
    // Class index for every residue mod m (of a totally positive lift), -1 for non-units.
    const std::vector<std::int32_t>& residue_table() const;
    // Integral ideal coprime to m representing Smith generator i.
    Ideal generator_ideal(std::size_t i) const;
    // Integral ideal coprime to m in the class with Smith coordinates c.
    Ideal class_ideal(const std::vector<i64>& c) const;

    // Totally positive x with a * prod g_i^{-c_i} = (x) and x == 1 mod m, or nullopt.
    std::optional<FieldElement> dlog_witness(const Ideal& a, const std::vector<i64>& c) const;
    // |(O/m)^*| 2^d h / |image of O^* in (O/m)^* x {+-1}^d|, by closure.
    i64 cardinality_formula() const;

private:
    std::vector<i64> residue_presentation(const std::vector<i64>& x) const;
    // Residue mod m of an m-unit x, as integral coordinates of some y == x mod m.
    std::vector<i64> unit_residue(const FieldElement& x) const;

    const NumberField* K_;
    Ideal m_;
    UnitGroupData units_;
    std::shared_ptr<const NarrowClassGroup> narrow_;
    ResidueUnitGroup U_;
    std::size_t kr_ = 0;                 // residue generators
    std::vector<Ideal> class_gens_;      // R_l for the Smith generators of Cl+(1)
    std::vector<std::vector<i64>> class_beta_;  // residues of beta_l with R_l^{h_l} = (beta_l)
    FiniteAbelianGroup G_;
    std::vector<std::int32_t> table_;
};

// Images of the Smith generators of src in dst (dst modulus dividing src modulus).
struct RayProjection {
    std::vector<std::vector<i64>> images;
    std::vector<i64> apply(const FiniteAbelianGroup& dst, const std::vector<i64>& c) const;
};
RayProjection ray_projection(const RayClassGroup& src, const RayClassGroup& dst);

// Absolute norm of the classes of Cl+(p^n) modulo p^n, as values on Smith generators.
std::vector<i64> cyclotomic_character_values(const RayClassGroup& G, i64 p, int n);
i64 cyclotomic_char(const std::vector<i64>& values, const std::vector<i64>& c, i64 pn);

RayClassGroup narrow_ray_class_group(const NumberField& K, const Ideal& m);

} // namespace shintani
