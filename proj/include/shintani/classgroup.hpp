#pragma once

#include <optional>
#include <vector>

#include "shintani/abelian.hpp"
#include "shintani/ideal.hpp"
#include "shintani/units.hpp"

namespace shintani {

// Totally positive generator of a fractional ideal of a real quadratic field, if one exists.
std::optional<FieldElement> totally_positive_generator(const Ideal& a, const UnitGroupData& units);

// Integral ideals coprime to avoid, in order of (norm, HNF), with norm <= bound.
std::vector<Ideal> integral_ideals_up_to(const NumberField& K, i64 bound, const Int& avoid);

// Narrow class group Cl+(F) of a real quadratic field.
class NarrowClassGroup {
public:
    NarrowClassGroup(const NumberField& K, const UnitGroupData& units);

    const NumberField& field() const { return *K_; }
    const UnitGroupData& units() const noexcept { return units_; }
    const FiniteAbelianGroup& group() const noexcept { return G_; }
    i64 order() const noexcept { return G_.order(); }

    // Smith coordinates of the class of a fractional ideal.
    std::vector<i64> dlog(const Ideal& a) const;
    // Integral ideal coprime to avoid in the class of index c, of least norm.
    Ideal representative(i64 c, const Int& avoid) const;
    // One least-norm integral representative per class (indexed by class index), coprime to avoid.
    std::vector<Ideal> representatives(const Int& avoid) const;

private:
    const NumberField* K_;
    UnitGroupData units_;
    std::vector<Ideal> gens_;
    std::vector<Ideal> reps_;                 // by BFS order
    std::vector<std::vector<i64>> rep_class_;  // Smith coordinates of reps_
    FiniteAbelianGroup G_;
};

} // namespace shintani
