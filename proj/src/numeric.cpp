#include "shintani/numeric.hpp"
#include "shintani/errors.hpp"

#include <cctype>

namespace shintani {

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int parse_integer(const std::string& s)
{
    if (s.empty())
        config_error("ParseError", "empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        config_error("ParseError", "bad integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            config_error("ParseError", "bad integer '" + s + "'");
    Int r;
    r.set_str(s[0] == '+' ? s.substr(1) : s, 10);
    return r;
}

Rat parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(parse_integer(s));
    Int n = parse_integer(s.substr(0, slash));
    Int d = parse_integer(s.substr(slash + 1));
    if (d == 0)
        config_error("ParseError", "zero denominator in '" + s + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

Int floor_rat(const Rat& x)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil_rat(const Rat& x)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int mod(const Int& a, const Int& m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

ExtGcd ext_gcd(const Int& a, const Int& b)
{
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool fits_i64(const Int& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

i64 to_i64(const Int& x)
{
    if (!fits_i64(x))
        math_error("Overflow", "integer does not fit in 64 bits: " + x.get_str());
    return x.get_si();
}

int valuation(const Int& x, const Int& p)
{
    if (x == 0)
        math_error("ZeroElement", "valuation of zero");
    Int y = x;
    int v = 0;
    while (mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
        y /= p;
        ++v;
    }
    return v;
}

int valuation(const Rat& x, const Int& p)
{
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

i64 mod64(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mulmod(i64 a, i64 b, i64 m)
{
    return static_cast<i64>(mod64(static_cast<i64>((static_cast<i128>(a) * b) % m), m));
}

i64 powmod(i64 a, u64 e, i64 m)
{
    i64 r = 1 % m;
    a = mod64(a, m);
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

i64 gcd64(i64 a, i64 b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 invmod(i64 a, i64 m)
{
    i64 g = m, x = 0, x1 = 1, r = mod64(a, m);
    while (r) {
        i64 q = g / r;
        i64 t = g - q * r;
        g = r;
        r = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1)
        math_error("NotInvertible", std::to_string(a) + " mod " + std::to_string(m));
    return mod64(x, m);
}

i64 ipow(i64 b, unsigned e)
{
    i64 r = 1;
    while (e--)
        r *= b;
    return r;
}

bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<i64, int>> factor_integer(i64 n)
{
    std::vector<std::pair<i64, int>> out;
    if (n < 0)
        n = -n;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d)
            continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::pair<Int, int>> factor_integer(const Int& n)
{
    std::vector<std::pair<Int, int>> out;
    Int m = abs(n);
    for (Int d = 2; d * d <= m; ++d) {
        if (!mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()))
            continue;
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            m /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (m > 1)
        out.emplace_back(m, 1);
    return out;
}

i64 rat_mod(const Rat& x, i64 m)
{
    Int mm(static_cast<long>(m));
    Int num = mod(x.get_num(), mm);
    Int den = mod(x.get_den(), mm);
    return mulmod(num.get_si(), invmod(den.get_si(), m), m);
}

int moebius(i64 n)
{
    int mu = 1;
    for (auto [p, e] : factor_integer(n)) {
        if (e > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

i64 euler_phi(i64 n)
{
    i64 r = n;
    for (auto [p, e] : factor_integer(n))
        r = r / p * (p - 1);
    return r;
}

} // namespace shintani
