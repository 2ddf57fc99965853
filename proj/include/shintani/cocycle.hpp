#pragma once

#include <random>
#include <string>
#include <vector>

#include "shintani/cones.hpp"
#include "shintani/units.hpp"

namespace shintani {

struct CappedShintaniClass {
    ConeFunction rep;
    UnitGroupData units;
    int normalization = 1;  // global sign applied after the unit cap
};

// Classical half-open domain 1_{C(1, eps)} + 1_{C(1)} for d = 2.
ConeFunction shintani_d2(const NumberField& K, const UnitGroupData& units);

// Cap of the cocycle with the orientation cycle of E_+, sign-normalized so translate sums are 1.
// For d = 3 the unit basis may be replaced by a unimodular change satisfying the sign condition.
CappedShintaniClass cap_with_units(const PerturbationContext& ctx, const UnitGroupData& units);

// Sum over eps in E_+ of (eps A)(v) = A(eps^{-1} v).
int translate_sum(const ConeFunction& A, const UnitGroupData& units, const FieldElement& v);

struct CheckReport {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> witnesses;
    bool ok() const { return failures == 0; }
    void record(bool pass, const std::string& witness);
};

// Translate sums at random totally positive points must all equal 1.
CheckReport verify_psi(const ConeFunction& A, const UnitGroupData& units, int samples, std::mt19937_64& rng,
                       int height = 20);

// sum_i (-1)^i z(u_0, .., u_i omitted, .., u_d)(v) = 0 at each v.
CheckReport cocycle_identity_check(const PerturbationContext& ctx, const std::vector<FieldElement>& u,
                                   const std::vector<FieldElement>& points);
// z(g u)(g v) = z(u)(v) for totally positive g.
CheckReport equivariance_check(const PerturbationContext& ctx, const std::vector<FieldElement>& u,
                               const FieldElement& g, const std::vector<FieldElement>& points);

// Random element of E_+ with exponents in [-range, range].
FieldElement random_positive_unit(const UnitGroupData& units, int range, std::mt19937_64& rng);

} // namespace shintani
