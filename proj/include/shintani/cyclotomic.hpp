#pragma once

#include <string>
#include <vector>

#include "shintani/numeric.hpp"
#include "shintani/poly.hpp"

namespace shintani {

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
class CyclotomicNumber {
public:
    CyclotomicNumber() : CyclotomicNumber(1) {}
    explicit CyclotomicNumber(int level);
    CyclotomicNumber(int level, std::vector<Rat> coeffs);

    static CyclotomicNumber rational(const Rat& a, int level = 1);
    static CyclotomicNumber zeta(int level, i64 k = 1);
    // sum_e bins[e] zeta^e, e in [0, level).
    static CyclotomicNumber from_bins(int level, const std::vector<Rat>& bins);
    static CyclotomicNumber from_bins(int level, const std::vector<Int>& bins);

    int level() const noexcept { return n_; }
    int dimension() const noexcept { return static_cast<int>(c_.size()); }
    const std::vector<Rat>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws unless rational

    CyclotomicNumber lift_to(int level) const;
    CyclotomicNumber inverse() const;
    // zeta -> zeta^a, gcd(a, N) = 1.
    CyclotomicNumber galois(i64 a) const;
    CyclotomicNumber conj() const { return galois(-1); }
    Rat trace() const;
    // Lowest level at which the element is representable (divisor of level()).
    CyclotomicNumber reduced() const;

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const Rat& s, const CyclotomicNumber& a);
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }
    CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }

    std::string to_string() const;

private:
    int n_;
    std::vector<Rat> c_;
};

int lcm_level(int a, int b);
// Power-basis coordinates of zeta_N^k for k in [0, N).
const std::vector<std::vector<Int>>& cyclotomic_reduction_table(int N);

} // namespace shintani
