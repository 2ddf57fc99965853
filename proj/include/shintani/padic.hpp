#pragma once

#include <memory>
#include <string>
#include <vector>

#include "shintani/cyclotomic.hpp"
#include "shintani/modpoly.hpp"
#include "shintani/numeric.hpp"

namespace shintani {

// Fixed embedding of Z[zeta_L] into (Z/p^M)[X]/(G), p not dividing L.
class PAdicContext {
public:
    static std::shared_ptr<const PAdicContext> get(i64 p, int M, int L);

    i64 prime() const noexcept { return p_; }
    int precision() const noexcept { return M_; }
    int level() const noexcept { return L_; }
    i64 modulus() const noexcept { return pM_; }
    int residue_degree() const noexcept { return f_; }
    const ModPoly& defining_polynomial() const noexcept { return G_; }
    // Image of zeta_L^k, k in [0, L).
    const std::vector<i64>& zeta_power(int k) const { return zpow_[k]; }

    std::vector<i64> multiply(const std::vector<i64>& a, const std::vector<i64>& b) const;

private:
    PAdicContext() = default;
    i64 p_ = 0, pM_ = 0;
    int M_ = 0, L_ = 1, f_ = 1;
    ModPoly G_;
    std::vector<std::vector<i64>> zpow_;
};

class PAdicCyclotomic {
public:
    PAdicCyclotomic() = default;
    PAdicCyclotomic(std::shared_ptr<const PAdicContext> ctx, std::vector<i64> c);
    static PAdicCyclotomic integer(std::shared_ptr<const PAdicContext> ctx, const Int& a);

    const PAdicContext& context() const { return *ctx_; }
    const std::vector<i64>& coeffs() const noexcept { return c_; }
    // Valuation, or precision() when indistinguishable from zero.
    int valuation() const;
    bool is_zero() const { return valuation() >= ctx_->precision(); }
    // Coordinates of p^{-v} x, meaningful modulo p^{M - v}.
    std::vector<i64> unit_part() const;
    // x == y modulo p^k.
    bool congruent(const PAdicCyclotomic& y, int k) const;

    friend PAdicCyclotomic operator+(const PAdicCyclotomic& a, const PAdicCyclotomic& b);
    friend PAdicCyclotomic operator-(const PAdicCyclotomic& a, const PAdicCyclotomic& b);
    friend PAdicCyclotomic operator*(const PAdicCyclotomic& a, const PAdicCyclotomic& b);
    friend bool operator==(const PAdicCyclotomic& a, const PAdicCyclotomic& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    std::shared_ptr<const PAdicContext> ctx_;
    std::vector<i64> c_;
};

// Image of a p-integral cyclotomic number of level dividing L. Throws PDenominator / RamifiedLevel.
PAdicCyclotomic padic_embed(const CyclotomicNumber& v, i64 p, int M, int L = 0);

// Iwasawa logarithm log_p(u) mod p^M for a p-adic unit u (integer), p odd.
Int padic_log(const Int& u, i64 p, int M);
// exp_p(x) mod p^M for x == 0 mod p, p odd.
Int padic_exp(const Int& x, i64 p, int M);
// Teichmuller representative of u mod p^M.
Int teichmuller(const Int& u, i64 p, int M);

i64 least_primitive_root(i64 p);

} // namespace shintani
