#include "shintani/oracle.hpp"
#include "shintani/errors.hpp"

namespace shintani {

CyclotomicNumber norm_induced_l0(const NumberField& K, const DirichletCharacter& psi)
{
    if (K.degree() != 2)
        math_error("UnsupportedDegree", "norm-induced oracle needs d = 2");
    const DirichletCharacter phi = (psi * DirichletCharacter::kronecker(K.discriminant().get_si())).primitive();
    CyclotomicNumber v = dirichlet_l0(psi) * dirichlet_l0(phi);
    for (auto [l, e] : factor_integer(psi.modulus()))
        v = v * (CyclotomicNumber::rational(1) - phi.value(l));
    return v.reduced();
}

CyclotomicNumber euler_factor_at_p(const HeckeCharacter& chi, i64 p)
{
    CyclotomicNumber v = CyclotomicNumber::rational(1);
    for (const auto& P : factor_rational_prime(chi.group().field(), Int(static_cast<long>(p))))
        v = v * (CyclotomicNumber::rational(1) - chi.value(P.ideal));
    return v.reduced();
}

} // namespace shintani
