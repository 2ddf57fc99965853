#pragma once

#include "shintani/character.hpp"
#include "shintani/dirichlet.hpp"

namespace shintani {

// L_F(psi o N, 0) for a real quadratic F: L(psi, 0) L(phi, 0) prod_{l | m_0} (1 - phi(l)),
// phi the primitive character attached to psi chi_D.
CyclotomicNumber norm_induced_l0(const NumberField& K, const DirichletCharacter& psi);

// prod_{v | p} (1 - chi(v)).
CyclotomicNumber euler_factor_at_p(const HeckeCharacter& chi, i64 p);

} // namespace shintani
