#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace shintani {

using Int = mpz_class;
using Rat = mpq_class;
using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

std::string to_string(const Int& x);
std::string to_string(const Rat& x);
Rat parse_rational(const std::string& s);
Int parse_integer(const std::string& s);

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

// Canonicalized n / d.
inline Rat make_rat(const Int& n, const Int& d)
{
    Rat r(n, d);
    r.canonicalize();
    return r;
}

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Least nonnegative residue.
Int mod(const Int& a, const Int& m);
// Returns (g, s, t) with s a + t b = g = gcd(a, b) >= 0.
struct ExtGcd {
    Int g, s, t;
};
ExtGcd ext_gcd(const Int& a, const Int& b);

bool fits_i64(const Int& x);
i64 to_i64(const Int& x);

// p-adic valuation of a nonzero integer (or rational).
int valuation(const Int& x, const Int& p);
int valuation(const Rat& x, const Int& p);

// Machine word modular helpers.
i64 mod64(i64 a, i64 m);
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 a, u64 e, i64 m);
i64 invmod(i64 a, i64 m);
i64 gcd64(i64 a, i64 b);
i64 ipow(i64 b, unsigned e);

bool is_prime(i64 n);
// Prime factorization by trial division: (prime, exponent) pairs in increasing order.
std::vector<std::pair<i64, int>> factor_integer(i64 n);
std::vector<std::pair<Int, int>> factor_integer(const Int& n);

// Rational reconstruction helpers for mod arithmetic of rationals with p-free denominator.
i64 rat_mod(const Rat& x, i64 m);

int moebius(i64 n);
i64 euler_phi(i64 n);

} // namespace shintani
