#pragma once

#include <random>
#include <vector>

#include "shintani/field.hpp"

namespace shintani {

// Sign of the lexicographically first nonzero coefficient of det(B(t)), where column j of
// B is sum_k t_j^k cols[j][k]. Returns 0 if the determinant vanishes identically.
int lex_det_sign(const std::vector<std::vector<std::vector<Rat>>>& cols);

// Symbolic perturbation u_j -> u_j b(x, t_j) with x the power basis (x_1 = 1).
class PerturbationContext {
public:
    explicit PerturbationContext(const NumberField& K) : K_(&K) {}
    const NumberField& field() const { return *K_; }

    // Coefficient columns of u b(x, t): coordinates of u theta^k, k = 0..d-1.
    std::vector<std::vector<Rat>> expansion(const FieldElement& u) const;

private:
    const NumberField* K_;
};

// sign omega(u_1 b(x, t_1), ..., u_d b(x, t_d)); throws DegenerateSystem if zero.
int cocycle_orientation(const PerturbationContext& ctx, const std::vector<FieldElement>& u);
// v in the open cone spanned by the perturbed vectors.
bool perturbed_membership(const PerturbationContext& ctx, const std::vector<FieldElement>& u,
                          const FieldElement& v);
// z(u)(v) = orientation * membership.
int z_eval(const PerturbationContext& ctx, const std::vector<FieldElement>& u, const FieldElement& v);

// Cone over linearly independent generators together with the set of open faces it contains.
class HalfOpenCone {
public:
    HalfOpenCone() = default;
    // included[mask] for nonempty masks over generator indices; included[0] is ignored.
    HalfOpenCone(std::vector<FieldElement> gens, std::vector<bool> included);
    static HalfOpenCone open(std::vector<FieldElement> gens);
    static HalfOpenCone closed(std::vector<FieldElement> gens);

    const std::vector<FieldElement>& generators() const noexcept { return gens_; }
    const std::vector<bool>& faces() const noexcept { return included_; }
    bool face_included(unsigned mask) const { return included_.at(mask); }
    std::size_t dimension() const noexcept { return gens_.size(); }

    // Coordinates of v in the generator basis (requires full dimension).
    std::vector<Rat> coordinates(const FieldElement& v) const;
    bool contains(const FieldElement& v) const;
    HalfOpenCone translated(const FieldElement& g) const;

private:
    std::vector<FieldElement> gens_;
    std::vector<bool> included_;
    RatMatrix inv_;
};

// Faces of C[u] contained in the perturbed cone, decided at face barycenters.
HalfOpenCone face_decompose(const PerturbationContext& ctx, const std::vector<FieldElement>& u);

// Samples random relative-interior points of every face and checks they agree with the
// decomposition and with perturbed membership. Returns the number of disagreements.
int verify_face_homogeneity(const PerturbationContext& ctx, const std::vector<FieldElement>& u,
                            const HalfOpenCone& cone, int samples_per_face, std::mt19937_64& rng);

struct WeightedCone {
    int weight = 1;
    HalfOpenCone cone;
};

// Finite Z-linear combination of half-open cone indicators.
class ConeFunction {
public:
    ConeFunction() = default;
    explicit ConeFunction(std::vector<WeightedCone> terms) : terms_(std::move(terms)) {}

    const std::vector<WeightedCone>& terms() const noexcept { return terms_; }
    void add(int weight, HalfOpenCone cone) { terms_.push_back({weight, std::move(cone)}); }
    int evaluate(const FieldElement& v) const;
    // (g . f)(y) = f(g^{-1} y)
    ConeFunction translated(const FieldElement& g) const;
    ConeFunction negated() const;

private:
    std::vector<WeightedCone> terms_;
};

// Random totally positive element with integral-basis coordinates in [-height, height].
FieldElement random_totally_positive(const NumberField& K, int height, std::mt19937_64& rng);
// Random point in the relative interior of the face of C[gens] given by mask.
FieldElement random_face_point(const std::vector<FieldElement>& gens, unsigned mask, std::mt19937_64& rng);

} // namespace shintani
