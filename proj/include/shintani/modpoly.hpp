#pragma once

#include <vector>

#include "shintani/numeric.hpp"
#include "shintani/poly.hpp"

namespace shintani {

// Dense polynomial over Z/m (m < 2^62), coefficients low to high, no trailing zeros.
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(std::vector<i64> c, i64 m);
    static ModPoly from_qpoly(const QPoly& f, i64 m);
    static ModPoly x_power(int k, i64 m);

    i64 modulus() const noexcept { return m_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<i64>& coeffs() const noexcept { return c_; }
    i64 coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }
    i64 lead() const { return c_.empty() ? 0 : c_.back(); }
    i64 eval(i64 x) const;

    ModPoly derivative() const;
    // Requires an invertible leading coefficient.
    ModPoly monic() const;
    ModPoly with_modulus(i64 m) const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(i64 s, const ModPoly& a);
    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
    friend bool operator<(const ModPoly& a, const ModPoly& b);

    // Divisor must have invertible leading coefficient.
    static void divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
    friend ModPoly operator%(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator/(const ModPoly& a, const ModPoly& b);
    static ModPoly powmod(const ModPoly& base, Int e, const ModPoly& mod);

    // Field-only operations (prime modulus).
    static ModPoly gcd(ModPoly a, ModPoly b);
    // s, t with s a + t b = gcd(a, b) (monic).
    static void ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s, ModPoly& t);

private:
    void trim();
    std::vector<i64> c_;
    i64 m_ = 0;
};

struct ModFactor {
    ModPoly f;
    int multiplicity = 1;
};

// Complete factorization of a nonzero polynomial over F_p into monic irreducibles, sorted
// by degree and then lexicographically by coefficients.
std::vector<ModFactor> factor_mod_p(const ModPoly& f);

// Lift f == g h (mod p), g monic, gcd(g, h) = 1 mod p, to a factorization mod p^k.
// Returns the lifted g (monic, modulus p^k).
ModPoly hensel_lift(const QPoly& f, const ModPoly& g, i64 p, int k);

} // namespace shintani
