#include "shintani/modpoly.hpp"
#include "shintani/errors.hpp"

#include <algorithm>
#include <random>

namespace shintani {

ModPoly::ModPoly(std::vector<i64> c, i64 m) : c_(std::move(c)), m_(m)
{
    for (auto& x : c_)
        x = mod64(x, m_);
    trim();
}

void ModPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

ModPoly ModPoly::from_qpoly(const QPoly& f, i64 m)
{
    std::vector<i64> c;
    for (const auto& a : f.coeffs())
        c.push_back(rat_mod(a, m));
    return ModPoly(std::move(c), m);
}

ModPoly ModPoly::x_power(int k, i64 m)
{
    std::vector<i64> c(k + 1, 0);
    c[k] = 1;
    return ModPoly(std::move(c), m);
}

i64 ModPoly::eval(i64 x) const
{
    i64 r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = mod64(mulmod(r, x, m_) + *it, m_);
    return r;
}

ModPoly ModPoly::derivative() const
{
    std::vector<i64> d;
    for (std::size_t k = 1; k < c_.size(); ++k)
        d.push_back(mulmod(c_[k], static_cast<i64>(k) % m_, m_));
    return ModPoly(std::move(d), m_);
}

ModPoly ModPoly::monic() const
{
    if (c_.empty())
        return *this;
    return invmod(lead(), m_) * *this;
}

ModPoly ModPoly::with_modulus(i64 m) const
{
    return ModPoly(c_, m);
}

ModPoly operator+(const ModPoly& a, const ModPoly& b)
{
    std::vector<i64> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod64(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)), a.m_);
    return ModPoly(std::move(c), a.m_);
}

ModPoly operator-(const ModPoly& a, const ModPoly& b)
{
    std::vector<i64> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod64(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)), a.m_);
    return ModPoly(std::move(c), a.m_);
}

ModPoly operator*(const ModPoly& a, const ModPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return ModPoly({}, a.m_);
    std::vector<i64> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = mod64(c[i + j] + mulmod(a.c_[i], b.c_[j], a.m_), a.m_);
    return ModPoly(std::move(c), a.m_);
}

ModPoly operator*(i64 s, const ModPoly& a)
{
    std::vector<i64> c = a.c_;
    for (auto& x : c)
        x = mulmod(x, s, a.m_);
    return ModPoly(std::move(c), a.m_);
}

bool operator<(const ModPoly& a, const ModPoly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.c_ < b.c_;
}

void ModPoly::divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r)
{
    if (b.is_zero())
        math_error("DivisionByZero", "polynomial division by zero mod m");
    const i64 m = a.m_;
    std::vector<i64> rem = a.c_;
    const int db = b.degree();
    std::vector<i64> quo(std::max(0, a.degree() - db + 1), 0);
    const i64 inv = invmod(b.lead(), m);
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0)
            continue;
        i64 f = mulmod(rem[k], inv, m);
        quo[k - db] = f;
        for (int j = 0; j <= db; ++j)
            rem[k - db + j] = mod64(rem[k - db + j] - mulmod(f, b.c_[j], m), m);
    }
    q = ModPoly(std::move(quo), m);
    r = ModPoly(std::move(rem), m);
}

ModPoly operator%(const ModPoly& a, const ModPoly& b)
{
    ModPoly q, r;
    ModPoly::divmod(a, b, q, r);
    return r;
}

ModPoly operator/(const ModPoly& a, const ModPoly& b)
{
    ModPoly q, r;
    ModPoly::divmod(a, b, q, r);
    return q;
}

ModPoly ModPoly::powmod(const ModPoly& base, Int e, const ModPoly& mod)
{
    ModPoly r({1}, base.m_);
    r = r % mod;
    ModPoly b = base % mod;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b)
{
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

void ModPoly::ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s, ModPoly& t)
{
    const i64 m = a.m_;
    ModPoly r0 = a, r1 = b, s0({1}, m), s1({}, m), t0({}, m), t1({1}, m);
    while (!r1.is_zero()) {
        ModPoly q, r;
        divmod(r0, r1, q, r);
        ModPoly sn = s0 - q * s1, tn = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(sn);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    const i64 inv = invmod(r0.lead(), m);
    g = inv * r0;
    s = inv * s0;
    t = inv * t0;
}

namespace {

void squarefree(const ModPoly& f, int mult, std::vector<ModFactor>& out)
{
    const i64 p = f.modulus();
    ModPoly one({1}, p);
    ModPoly c = ModPoly::gcd(f, f.derivative());
    ModPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = ModPoly::gcd(w, c);
        ModPoly z = w / y;
        if (z.degree() > 0)
            out.push_back({z.monic(), i * mult});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        std::vector<i64> root;
        for (int k = 0; k <= c.degree(); k += static_cast<int>(p))
            root.push_back(c.coeff(k));
        squarefree(ModPoly(std::move(root), p), mult * static_cast<int>(p), out);
    }
}

void equal_degree(const ModPoly& g, int d, std::vector<ModPoly>& out, std::mt19937_64& rng)
{
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const i64 p = g.modulus();
    std::uniform_int_distribution<i64> dist(0, p - 1);
    for (;;) {
        std::vector<i64> a(g.degree());
        for (auto& x : a)
            x = dist(rng);
        ModPoly A(std::move(a), p);
        if (A.degree() < 1)
            continue;
        ModPoly B;
        if (p == 2) {
            B = A % g;
            ModPoly sq = B;
            for (int k = 1; k < d; ++k) {
                sq = (sq * sq) % g;
                B = B + sq;
            }
        } else {
            Int e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            B = ModPoly::powmod(A, e, g) - ModPoly({1}, p);
        }
        ModPoly h = ModPoly::gcd(B, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, out, rng);
            equal_degree(g / h, d, out, rng);
            return;
        }
    }
}

} // namespace

std::vector<ModFactor> factor_mod_p(const ModPoly& f0)
{
    if (f0.is_zero())
        math_error("ZeroElement", "factoring the zero polynomial");
    const i64 p = f0.modulus();
    std::vector<ModFactor> sqf;
    ModPoly f = f0.monic();
    if (f.degree() > 0)
        squarefree(f, 1, sqf);
    std::mt19937_64 rng(0x5eed + static_cast<u64>(p));
    std::vector<ModFactor> out;
    for (const auto& [g0, mult] : sqf) {
        ModPoly g = g0;
        ModPoly x = ModPoly::x_power(1, p);
        ModPoly h = x % g;
        for (int d = 1; g.degree() >= 2 * d; ++d) {
            h = ModPoly::powmod(h, Int(static_cast<long>(p)), g);
            ModPoly fac = ModPoly::gcd(h - x, g);
            if (fac.degree() > 0) {
                std::vector<ModPoly> parts;
                equal_degree(fac, d, parts, rng);
                for (auto& q : parts)
                    out.push_back({q, mult});
                g = g / fac;
                h = h % g;
            }
        }
        if (g.degree() > 0)
            out.push_back({g.monic(), mult});
    }
    std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) { return a.f < b.f; });
    return out;
}

ModPoly hensel_lift(const QPoly& f, const ModPoly& g0, i64 p, int k)
{
    ModPoly fp = ModPoly::from_qpoly(f, p);
    ModPoly g = g0.monic();
    ModPoly h = fp / g;
    if (!(fp % g).is_zero())
        math_error("InvariantViolation", "hensel_lift: g does not divide f mod p");
    ModPoly gg, s, t;
    ModPoly::ext_gcd(g, h, gg, s, t);
    if (gg.degree() != 0)
        math_error("InvariantViolation", "hensel_lift: factors not coprime mod p");
    i64 pk = p;
    for (int level = 1; level < k; ++level) {
        const i64 pk1 = pk * p;
        ModPoly G = g.with_modulus(pk1), H = h.with_modulus(pk1);
        ModPoly err = ModPoly::from_qpoly(f, pk1) - G * H;
        std::vector<i64> ec;
        for (i64 c : err.coeffs()) {
            if (c % pk != 0)
                math_error("InvariantViolation", "hensel_lift: lifting error not divisible");
            ec.push_back(c / pk);
        }
        ModPoly e(std::move(ec), p);
        ModPoly dg = (t * e) % g.with_modulus(p);
        ModPoly dh = (e - dg * h.with_modulus(p)) / g.with_modulus(p);
        std::vector<i64> gc(G.coeffs()), hc(H.coeffs());
        gc.resize(std::max<std::size_t>(gc.size(), dg.coeffs().size()), 0);
        hc.resize(std::max<std::size_t>(hc.size(), dh.coeffs().size()), 0);
        for (std::size_t i = 0; i < dg.coeffs().size(); ++i)
            gc[i] += mulmod(dg.coeffs()[i], pk, pk1);
        for (std::size_t i = 0; i < dh.coeffs().size(); ++i)
            hc[i] += mulmod(dh.coeffs()[i], pk, pk1);
        g = ModPoly(std::move(gc), pk1);
        h = ModPoly(std::move(hc), pk1);
        pk = pk1;
    }
    return g;
}

} // namespace shintani
