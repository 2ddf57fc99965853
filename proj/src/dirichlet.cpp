#include "shintani/dirichlet.hpp"
#include "shintani/errors.hpp"

#include <deque>
#include <numeric>

namespace shintani {

int kronecker(i64 a, i64 n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int s = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            s = -s;
    }
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v > 0) {
        if (a % 2 == 0)
            return 0;
        const i64 r = mod64(a, 8);
        if (v % 2 == 1 && (r == 3 || r == 5))
            s = -s;
    }
    a = mod64(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const i64 r = n % 8;
            if (r == 3 || r == 5)
                s = -s;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            s = -s;
        a %= n;
    }
    return n == 1 ? s : 0;
}

UnitGenerators dirichlet_generators(i64 m)
{
    UnitGenerators out;
    if (m <= 0)
        config_error("BadCharacter", "modulus must be positive");
    auto lift = [m](i64 g, i64 pk) {
        // x == g mod pk, x == 1 mod m / pk
        const i64 rest = m / pk;
        if (rest == 1)
            return mod64(g, m);
        const i64 t = mulmod(mod64(g - 1, pk), invmod(rest % pk, pk), pk);
        return mod64(1 + rest * t, m);
    };
    for (auto [p, k] : factor_integer(m)) {
        const i64 pk = ipow(p, static_cast<unsigned>(k));
        if (p == 2) {
            if (k >= 2) {
                out.gens.push_back(lift(-1, pk));
                out.orders.push_back(2);
            }
            if (k >= 3) {
                out.gens.push_back(lift(5, pk));
                out.orders.push_back(pk / 4);
            }
            continue;
        }
        i64 g = 2;
        for (;; ++g) {
            if (g % p == 0)
                continue;
            bool prim = true;
            for (auto [l, e] : factor_integer(p - 1))
                if (powmod(g, static_cast<u64>((p - 1) / l), p) == 1) {
                    prim = false;
                    break;
                }
            if (prim)
                break;
        }
        if (k >= 2 && powmod(g, static_cast<u64>(p - 1), p * p) == 1)
            g += p;
        out.gens.push_back(lift(g, pk));
        out.orders.push_back(pk / p * (p - 1));
    }
    return out;
}

DirichletCharacter::DirichletCharacter(i64 m, i64 N, std::vector<i64> e) : m_(m), N_(N), e_(std::move(e)) {}

DirichletCharacter DirichletCharacter::reduced_order() const
{
    i64 g = N_;
    for (i64 x : e_)
        if (x > 0)
            g = std::gcd(g, x);
    if (g == 1)
        return *this;
    std::vector<i64> e = e_;
    for (auto& x : e)
        if (x > 0)
            x /= g;
    return DirichletCharacter(m_, N_ / g, std::move(e));
}

DirichletCharacter DirichletCharacter::kronecker(i64 D)
{
    if (D == 1)
        return trivial();
    const i64 m = D < 0 ? -D : D;
    std::vector<i64> e(m);
    for (i64 a = 0; a < m; ++a) {
        const int k = shintani::kronecker(D, a);
        e[a] = k == 1 ? 0 : (k == -1 ? 1 : -1);
    }
    return DirichletCharacter(m, 2, std::move(e)).reduced_order();
}

DirichletCharacter DirichletCharacter::from_generators(i64 m, const std::vector<i64>& v)
{
    auto G = dirichlet_generators(m);
    if (v.size() != G.gens.size())
        config_error("BadCharacter", "need one exponent per generator of (Z/m)^*");
    i64 N = 1;
    for (i64 o : G.orders)
        N = std::lcm(N, o);
    std::vector<i64> eg;
    for (std::size_t j = 0; j < v.size(); ++j)
        eg.push_back(mod64(v[j], G.orders[j]) * (N / G.orders[j]));
    std::vector<i64> e(m, -1);
    e[1 % m] = 0;
    std::deque<i64> queue{1 % m};
    while (!queue.empty()) {
        const i64 a = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < G.gens.size(); ++j) {
            const i64 b = mulmod(a, G.gens[j], m);
            if (e[b] < 0) {
                e[b] = (e[a] + eg[j]) % N;
                queue.push_back(b);
            }
        }
    }
    return DirichletCharacter(m, N, std::move(e)).reduced_order();
}

std::optional<i64> DirichletCharacter::exponent(i64 a) const
{
    const i64 x = e_[mod64(a, m_)];
    if (x < 0)
        return std::nullopt;
    return x;
}

CyclotomicNumber DirichletCharacter::value(i64 a) const
{
    auto e = exponent(a);
    if (!e)
        return CyclotomicNumber(static_cast<int>(N_));
    return CyclotomicNumber::zeta(static_cast<int>(N_), *e);
}

bool DirichletCharacter::is_trivial() const
{
    for (i64 x : e_)
        if (x > 0)
            return false;
    return true;
}

bool DirichletCharacter::is_odd() const
{
    if (m_ <= 2)
        return false;
    return 2 * e_[m_ - 1] == N_;
}

i64 DirichletCharacter::conductor() const
{
    for (i64 f = 1; f <= m_; ++f) {
        if (m_ % f != 0)
            continue;
        bool ok = true;
        for (i64 a = 1; a < m_ && ok; a += f)
            if (e_[a] > 0)
                ok = false;
        if (ok)
            return f;
    }
    return m_;
}

DirichletCharacter DirichletCharacter::primitive() const
{
    const i64 f = conductor();
    if (f == m_)
        return *this;
    std::vector<i64> e(f, -1);
    for (i64 b = 0; b < f; ++b) {
        if (std::gcd(b, f) != 1)
            continue;
        for (i64 a = b; a < m_; a += f)
            if (e_[a] >= 0) {
                e[b] = e_[a];
                break;
            }
    }
    if (f == 1)
        e[0] = 0;
    return DirichletCharacter(f, N_, std::move(e)).reduced_order();
}

DirichletCharacter DirichletCharacter::inverse() const
{
    std::vector<i64> e = e_;
    for (auto& x : e)
        if (x > 0)
            x = N_ - x;
    return DirichletCharacter(m_, N_, std::move(e));
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b)
{
    const i64 m = std::lcm(a.m_, b.m_);
    const i64 N = std::lcm(a.N_, b.N_);
    std::vector<i64> e(m);
    for (i64 x = 0; x < m; ++x) {
        const i64 u = a.e_[x % a.m_], v = b.e_[x % b.m_];
        e[x] = (u < 0 || v < 0) ? -1 : (u * (N / a.N_) + v * (N / b.N_)) % N;
    }
    return DirichletCharacter(m, N, std::move(e)).reduced_order();
}

std::vector<i64> DirichletCharacter::generator_values() const
{
    auto G = dirichlet_generators(m_);
    std::vector<i64> v;
    for (std::size_t j = 0; j < G.gens.size(); ++j)
        v.push_back(e_[G.gens[j]] * G.orders[j] / N_);
    return v;
}

CyclotomicNumber bernoulli_b1(const DirichletCharacter& psi)
{
    std::vector<Rat> bins(psi.order());
    for (i64 a = 1; a <= psi.modulus(); ++a)
        if (auto e = psi.exponent(a))
            bins[*e] += Rat(static_cast<long>(a));
    return make_rat(1, Int(static_cast<long>(psi.modulus()))) *
           CyclotomicNumber::from_bins(static_cast<int>(psi.order()), bins);
}

CyclotomicNumber dirichlet_l0(const DirichletCharacter& psi)
{
    const DirichletCharacter phi = psi.primitive();
    if (phi.modulus() == 1)
        return CyclotomicNumber::rational(make_rat(-1, 2));
    return -bernoulli_b1(phi);
}

} // namespace shintani
