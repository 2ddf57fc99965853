#pragma once

#include <optional>
#include <vector>

#include "shintani/cyclotomic.hpp"
#include "shintani/numeric.hpp"

namespace shintani {

// Kronecker symbol (a / n).
int kronecker(i64 a, i64 n);

// Generators of (Z/m)^* (least primitive roots lifted by CRT; -1 and 5 at powers of 2) and their orders.
struct UnitGenerators {
    std::vector<i64> gens;
    std::vector<i64> orders;
};
UnitGenerators dirichlet_generators(i64 m);

// Dirichlet character a -> zeta_N^{e(a)} modulo m.
class DirichletCharacter {
public:
    DirichletCharacter() : DirichletCharacter(1, 1, std::vector<i64>{0}) {}
    // Quadratic character of the fundamental discriminant D.
    static DirichletCharacter kronecker(i64 D);
    // psi(g_j) = exp(2 pi i v_j / ord(g_j)) on dirichlet_generators(m).
    static DirichletCharacter from_generators(i64 m, const std::vector<i64>& v);
    static DirichletCharacter trivial() { return {}; }

    i64 modulus() const noexcept { return m_; }
    i64 order() const noexcept { return N_; }
    // Exponent of zeta_N at a, or nullopt when gcd(a, m) > 1.
    std::optional<i64> exponent(i64 a) const;
    CyclotomicNumber value(i64 a) const;
    bool is_trivial() const;
    bool is_odd() const;
    i64 conductor() const;
    DirichletCharacter primitive() const;
    DirichletCharacter inverse() const;
    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
    // Values on dirichlet_generators(modulus()) as in from_generators.
    std::vector<i64> generator_values() const;

private:
    DirichletCharacter(i64 m, i64 N, std::vector<i64> e);
    DirichletCharacter reduced_order() const;
    i64 m_, N_;
    std::vector<i64> e_;  // -1 off the units
};

// B_{1,psi} = (1/m) sum_{a=1}^{m} a psi(a) at the character's own modulus.
CyclotomicNumber bernoulli_b1(const DirichletCharacter& psi);
// L(psi, 0) for the primitive character attached to psi.
CyclotomicNumber dirichlet_l0(const DirichletCharacter& psi);

} // namespace shintani
