#include "shintani/character.hpp"
#include "shintani/errors.hpp"

namespace shintani {

HeckeCharacter::HeckeCharacter(std::shared_ptr<const RayClassGroup> G, i64 N, std::vector<i64> exponents)
    : G_(std::move(G)), N_(N), e_(std::move(exponents))
{
    if (N_ <= 0)
        config_error("BadCharacter", "character order must be positive");
    const auto& n = G_->group().invariants();
    if (e_.size() != n.size())
        config_error("BadCharacter", "need one exponent per Smith generator");
    for (std::size_t i = 0; i < n.size(); ++i) {
        e_[i] = mod64(e_[i], N_);
        if (static_cast<i128>(e_[i]) * n[i] % N_ != 0)
            config_error("BadCharacter", "exponent inconsistent with generator order");
    }
}

HeckeCharacter HeckeCharacter::trivial(std::shared_ptr<const RayClassGroup> G)
{
    const std::size_t r = G->group().rank();
    return HeckeCharacter(std::move(G), 1, std::vector<i64>(r, 0));
}

i64 HeckeCharacter::exponent(const std::vector<i64>& c) const
{
    i128 s = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        s += static_cast<i128>(e_[i]) * c[i];
    return static_cast<i64>(s % N_);
}

CyclotomicNumber HeckeCharacter::value(const std::vector<i64>& c) const
{
    return CyclotomicNumber::zeta(static_cast<int>(N_), exponent(c));
}

bool HeckeCharacter::is_trivial() const
{
    for (i64 x : e_)
        if (x)
            return false;
    return true;
}

HeckeCharacter HeckeCharacter::inverse() const
{
    std::vector<i64> e;
    for (i64 x : e_)
        e.push_back(mod64(-x, N_));
    return HeckeCharacter(G_, N_, std::move(e));
}

Ideal HeckeCharacter::conductor() const
{
    const ResidueUnitGroup& U = G_->residues();
    const ResidueRing& R = U.ring();
    const auto& table = G_->residue_table();
    const FiniteAbelianGroup& A = G_->group();
    Ideal f = G_->modulus();
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (const auto& [P, e] : factor_ideal(f)) {
            Ideal g = f * P.ideal.inverse();
            ResidueRing Rg(g);
            bool trivial_on_kernel = true;
            for (i64 idx = 0; idx < R.size() && trivial_on_kernel; ++idx) {
                if (table[idx] < 0)
                    continue;
                auto x = R.element(idx);
                auto y = Rg.sub(Rg.reduce(x), Rg.one());
                if (!Rg.is_zero(y))
                    continue;
                if (exponent(A.element(table[idx])) != 0)
                    trivial_on_kernel = false;
            }
            if (trivial_on_kernel) {
                f = g;
                shrunk = true;
                break;
            }
        }
    }
    return f;
}

std::vector<int> HeckeCharacter::infinity_signs() const
{
    const NumberField& K = G_->field();
    const i64 n = G_->residues().ring().characteristic();
    const FieldElement w = quadratic_order_generator(K);
    std::vector<int> out;
    for (int place = 0; place < K.degree(); ++place) {
        std::optional<FieldElement> alpha;
        for (int h = 1; h <= 64 && !alpha; ++h)
            for (int b = -h; b <= h && !alpha; ++b)
                for (int a = -h; a <= h && !alpha; ++a) {
                    FieldElement x = K.one() + Rat(static_cast<long>(n)) * (K.from_rational(a) + Rat(b) * w);
                    if (x.is_zero())
                        continue;
                    auto s = x.signs();
                    bool ok = true;
                    for (int i = 0; i < K.degree(); ++i)
                        if ((s[i] < 0) != (i == place))
                            ok = false;
                    if (ok)
                        alpha = x;
                }
        invariant(alpha.has_value(), "found a sign-flip element");
        const i64 e = exponent(G_->dlog(Ideal::principal(*alpha)));
        invariant(e == 0 || 2 * e == N_, "sign-flip class has order dividing 2");
        out.push_back(e == 0 ? 1 : -1);
    }
    return out;
}

bool HeckeCharacter::is_totally_odd() const
{
    for (int s : infinity_signs())
        if (s != -1)
            return false;
    return true;
}

std::vector<PrimeIdeal> HeckeCharacter::ramified_primes() const
{
    std::vector<PrimeIdeal> out;
    for (auto& [P, e] : factor_ideal(conductor()))
        out.push_back(P);
    return out;
}

HeckeCharacter norm_induced_character(const NumberField& K, const DirichletCharacter& psi,
                                      const UnitGroupData& units, std::shared_ptr<const NarrowClassGroup> narrow)
{
    const i64 m0 = psi.modulus();
    auto G = std::make_shared<const RayClassGroup>(K, Ideal::from_integer(K, Int(static_cast<long>(m0))), units,
                                                   std::move(narrow));
    std::vector<i64> e;
    for (std::size_t i = 0; i < G->group().rank(); ++i) {
        const Int N = G->generator_ideal(i).norm().get_num();
        auto x = psi.exponent(mod(N, Int(static_cast<long>(m0))).get_si());
        invariant(x.has_value(), "generator norm is prime to the modulus");
        e.push_back(*x);
    }
    return HeckeCharacter(G, psi.order(), std::move(e));
}

LocalSplit local_split_at_p(const HeckeCharacter& chi, i64 p)
{
    const NumberField& K = chi.group().field();
    LocalSplit out;
    const Ideal& m = chi.group().modulus();
    for (auto& P : factor_rational_prime(K, Int(static_cast<long>(p)))) {
        if (ideal_valuation(m, P) > 0)
            math_error("RamifiedAtP", "character modulus is divisible by a prime above p");
        if (chi.exponent(P.ideal) == 0)
            out.S1.push_back(P);
        else
            out.S2.push_back(P);
    }
    out.r = static_cast<int>(out.S1.size());
    return out;
}

bool is_totally_odd(const HeckeCharacter& chi) { return chi.is_totally_odd(); }

std::vector<HeckeCharacter> all_characters(std::shared_ptr<const RayClassGroup> G)
{
    const FiniteAbelianGroup& A = G->group();
    const i64 N = A.exponent();
    std::vector<HeckeCharacter> out;
    for (i64 idx = 0; idx < A.order(); ++idx) {
        auto a = A.element(idx);
        std::vector<i64> e;
        for (std::size_t i = 0; i < a.size(); ++i)
            e.push_back(a[i] * (N / A.invariants()[i]));
        out.emplace_back(G, N, std::move(e));
    }
    return out;
}

} // namespace shintani
