#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "shintani/character.hpp"
#include "shintani/cones.hpp"
#include "shintani/cyclotomic.hpp"

namespace shintani {

// Auxiliary degree-one prime Q above q with the residue map O -> O/Q = Z/q.
struct SmoothingData {
    i64 q = 0;
    PrimeIdeal Q;
    std::vector<i64> basis_residues;  // r_q of the integral basis

    i64 residue(const std::vector<i64>& coords) const;
    // r_q of a q-integral element.
    i64 residue(const FieldElement& x) const;
};

SmoothingData make_smoothing_data(const NumberField& K, i64 q);

// Least admissible q: q != p, unramified, prime to N(f) and avoid, with a degree-one prime Q
// such that 1 - chi(Q) <q> is nonzero modulo p^M.
SmoothingData choose_smoothing_prime(const HeckeCharacter& chi, i64 p, int M, const Int& avoid = 1,
                                     i64 start = 2);

// T(a) = sum_{j=1}^{q-1} zeta_q^{ja} / prod_i (1 - zeta_q^{j r_i}), a in [0, q), all r_i nonzero mod q.
std::vector<Rat> smoothing_table(const std::vector<i64>& r, i64 q);

// Phi_0(y) on points y of the support ideal a: zeta_N^{exponent} or zero, periodic modulo constancy.
struct TestFunction {
    Ideal support;
    Ideal constancy;
    int level = 1;
    std::function<std::optional<i64>(const std::vector<i64>&)> exponent;
};

// y -> xi((y) a^{-1}) on y coprime to the moduli of xi and of the optional p-power group,
// restricted to the class target of (y) a^{-1} in that group when given.
TestFunction ideal_test_function(const Ideal& a, const HeckeCharacter& xi,
                                 std::shared_ptr<const RayClassGroup> congruence = nullptr,
                                 std::optional<i64> target = std::nullopt);
// The indicator of the support ideal, periodic modulo the given ideal.
TestFunction trivial_test_function(const Ideal& a, const Ideal& constancy);

// M_i x_i with M_i the least positive integer putting x_i in the constancy ideal.
std::vector<FieldElement> rescale_generators(const std::vector<FieldElement>& x, const Ideal& constancy,
                                             const SmoothingData& sm);

// ev_0 of the smoothed pairing on the open cone over x, by the rational closed form.
CyclotomicNumber smoothed_cone_ev0(const std::vector<FieldElement>& x, const TestFunction& tf,
                                   const SmoothingData& sm);
// Same value as the explicit sum over j in Q(zeta_{qN}).
CyclotomicNumber smoothed_cone_ev0_direct(const std::vector<FieldElement>& x, const TestFunction& tf,
                                          const SmoothingData& sm);
// Weighted sum over every included face of every cone of A.
CyclotomicNumber smoothed_zeta0(const ConeFunction& A, const TestFunction& tf, const SmoothingData& sm);

// Smoothed values binned by the classes of b = (y) a_i^{-1} in Cl+(f) x Cl+(p^n), summed over
// the cones of A and the class representatives a_i.
struct ClassWeights {
    std::shared_ptr<const RayClassGroup> Gf, Gp;
    std::vector<Rat> W;  // index cf * |Gp| + cp
    i64 points = 0;
    const Rat& at(i64 cf, i64 cp) const { return W[static_cast<std::size_t>(cf * Gp->order() + cp)]; }
};

struct EvaluationOptions {
    i64 budget = 50'000'000;  // enumerated lattice points
    int jobs = 1;
};

ClassWeights class_weights(std::shared_ptr<const RayClassGroup> Gf, std::shared_ptr<const RayClassGroup> Gp,
                           const SmoothingData& sm, const ConeFunction& A, const std::vector<Ideal>& reps,
                           const EvaluationOptions& opt = {});

// Class representatives of Cl+(F) prime to p, f and q.
std::vector<Ideal> class_representatives(const HeckeCharacter& chi, i64 p, const SmoothingData& sm);

// (1 - chi(Q) q) L_{S_p}(chi, 0) from the weights.
CyclotomicNumber lvalue_from_weights(const HeckeCharacter& chi, const ClassWeights& w);
// mu(c) = sum_{c_f} chi^{-1}(c_f) W[c_f][c^{-1}], indexed by the class index of Cl+(p^n).
std::vector<CyclotomicNumber> measure_from_weights(const HeckeCharacter& chi, const ClassWeights& w);

CyclotomicNumber lvalue_smoothed(const HeckeCharacter& chi, i64 p, const SmoothingData& sm, const ConeFunction& A,
                                 const std::vector<Ideal>& reps, const EvaluationOptions& opt = {});
CyclotomicNumber measure_coset(const HeckeCharacter& chi, i64 p, int n, const SmoothingData& sm,
                               const ConeFunction& A, const std::vector<Ideal>& reps, i64 c,
                               const EvaluationOptions& opt = {});

// Independent evaluation of sum_c eta(c) mu(c) by binning over Cl+(f p^n).
class MomentEvaluator {
public:
    MomentEvaluator(const HeckeCharacter& chi, std::shared_ptr<const RayClassGroup> Gp, const SmoothingData& sm,
                    const ConeFunction& A, const std::vector<Ideal>& reps, const EvaluationOptions& opt = {});
    // (1 - (chi eta)^{-1}(Q) q) L_{S_p}((chi eta)^{-1}, 0).
    CyclotomicNumber moment(const HeckeCharacter& eta) const;

private:
    HeckeCharacter chi_;
    std::shared_ptr<const RayClassGroup> Gp_, Gfp_;
    RayProjection to_f_, to_p_;
    ClassWeights w_;
};

CyclotomicNumber moment_character(const HeckeCharacter& chi, const HeckeCharacter& eta, const SmoothingData& sm,
                                  const ConeFunction& A, const std::vector<Ideal>& reps,
                                  const EvaluationOptions& opt = {});

} // namespace shintani
