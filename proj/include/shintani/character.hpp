#pragma once

#include <memory>
#include <vector>

#include "shintani/cyclotomic.hpp"
#include "shintani/dirichlet.hpp"
#include "shintani/rayclass.hpp"

namespace shintani {

struct LocalSplit {
    std::vector<PrimeIdeal> S1, S2;
    int r = 0;
};

// Finite-order character of a narrow ray class group: chi(g_i) = zeta_N^{e_i} on Smith generators.
class HeckeCharacter {
public:
    HeckeCharacter(std::shared_ptr<const RayClassGroup> G, i64 N, std::vector<i64> exponents);
    static HeckeCharacter trivial(std::shared_ptr<const RayClassGroup> G);

    const RayClassGroup& group() const { return *G_; }
    std::shared_ptr<const RayClassGroup> group_ptr() const noexcept { return G_; }
    i64 order() const noexcept { return N_; }
    const std::vector<i64>& exponents() const noexcept { return e_; }

    // chi(c) = zeta_N^{exponent(c)}.
    i64 exponent(const std::vector<i64>& c) const;
    i64 exponent(const Ideal& a) const { return exponent(G_->dlog(a)); }
    CyclotomicNumber value(const std::vector<i64>& c) const;
    CyclotomicNumber value(const Ideal& a) const { return value(G_->dlog(a)); }
    bool is_trivial() const;
    HeckeCharacter inverse() const;

    // Finite part of the conductor.
    Ideal conductor() const;
    // chi at the sign-flip class of each real place (exponent 0 or N/2).
    std::vector<int> infinity_signs() const;
    bool is_totally_odd() const;
    // Primes of the conductor.
    std::vector<PrimeIdeal> ramified_primes() const;

private:
    std::shared_ptr<const RayClassGroup> G_;
    i64 N_;
    std::vector<i64> e_;
};

// chi = psi o Norm on Cl+((m_0)).
HeckeCharacter norm_induced_character(const NumberField& K, const DirichletCharacter& psi,
                                      const UnitGroupData& units,
                                      std::shared_ptr<const NarrowClassGroup> narrow = nullptr);

LocalSplit local_split_at_p(const HeckeCharacter& chi, i64 p);
bool is_totally_odd(const HeckeCharacter& chi);

// Every character of G, indexed by group element: N = exponent, e_i = a_i N / n_i.
std::vector<HeckeCharacter> all_characters(std::shared_ptr<const RayClassGroup> G);

} // namespace shintani
