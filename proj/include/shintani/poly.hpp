#pragma once

#include <vector>

#include "shintani/numeric.hpp"

namespace shintani {

// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    static QPoly monomial(int k, const Rat& a = 1);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rat>& coeffs() const noexcept { return c_; }
    Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return sgn(eval(x)); }
    QPoly derivative() const;
    QPoly monic() const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rat& s, const QPoly& a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    // Division with remainder: a = q b + r, deg r < deg b.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
    friend QPoly operator%(const QPoly& a, const QPoly& b);
    friend QPoly operator/(const QPoly& a, const QPoly& b);
    static QPoly gcd(QPoly a, QPoly b);
    // Returns s with s a == g (mod b), where g = gcd(a, b) monic.
    static QPoly inverse_mod(const QPoly& a, const QPoly& b);

private:
    void trim();
    std::vector<Rat> c_;
};

// Number of sign changes of the Sturm sequence evaluated at x.
int sturm_variations(const std::vector<QPoly>& seq, const Rat& x);
std::vector<QPoly> sturm_sequence(const QPoly& f);

struct RationalInterval {
    Rat lo, hi;
};

// Disjoint isolating intervals of the real roots of a squarefree polynomial, ascending.
// Endpoints are never roots.
std::vector<RationalInterval> isolate_real_roots(const QPoly& f);

// Halve an isolating interval of a simple root of f (endpoints non-roots, sign change).
RationalInterval bisect_root(const QPoly& f, const RationalInterval& iv);

Int cauchy_bound(const QPoly& f);

// Cyclotomic polynomial over Z, cached.
const QPoly& cyclotomic_polynomial(int n);

} // namespace shintani
