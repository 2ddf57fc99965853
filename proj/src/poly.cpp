#include "shintani/poly.hpp"
#include "shintani/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace shintani {

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

QPoly QPoly::monomial(int k, const Rat& a)
{
    std::vector<Rat> c(k + 1);
    c[k] = a;
    return QPoly(std::move(c));
}

Rat QPoly::eval(const Rat& x) const
{
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

QPoly QPoly::derivative() const
{
    std::vector<Rat> d;
    for (std::size_t k = 1; k < c_.size(); ++k)
        d.push_back(c_[k] * static_cast<long>(k));
    return QPoly(std::move(d));
}

QPoly QPoly::monic() const
{
    if (c_.empty())
        return *this;
    return (1 / lead()) * *this;
}

QPoly operator+(const QPoly& a, const QPoly& b)
{
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b)
{
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
}

QPoly operator*(const Rat& s, const QPoly& a)
{
    std::vector<Rat> c = a.c_;
    for (auto& x : c)
        x *= s;
    return QPoly(std::move(c));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r)
{
    if (b.is_zero())
        math_error("DivisionByZero", "polynomial division by zero");
    std::vector<Rat> rem = a.c_;
    const int db = b.degree();
    std::vector<Rat> quo(std::max(0, a.degree() - db + 1));
    const Rat lb = b.lead();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0)
            continue;
        Rat f = rem[k] / lb;
        quo[k - db] = f;
        for (int j = 0; j <= db; ++j)
            rem[k - db + j] -= f * b.c_[j];
    }
    q = QPoly(std::move(quo));
    r = QPoly(std::move(rem));
}

QPoly operator%(const QPoly& a, const QPoly& b)
{
    QPoly q, r;
    QPoly::divmod(a, b, q, r);
    return r;
}

QPoly operator/(const QPoly& a, const QPoly& b)
{
    QPoly q, r;
    QPoly::divmod(a, b, q, r);
    return q;
}

QPoly QPoly::gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly QPoly::inverse_mod(const QPoly& a, const QPoly& b)
{
    QPoly r0 = b, r1 = a % b, s0, s1 = QPoly({Rat(1)});
    while (!r1.is_zero()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0)
        math_error("NotInvertible", "polynomial is not invertible modulo the modulus");
    return (1 / r0.lead()) * s0;
}

std::vector<QPoly> sturm_sequence(const QPoly& f)
{
    std::vector<QPoly> seq{f, f.derivative()};
    while (!seq.back().is_zero()) {
        QPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero())
            break;
        seq.push_back(Rat(-1) * r);
    }
    return seq;
}

int sturm_variations(const std::vector<QPoly>& seq, const Rat& x)
{
    int v = 0, last = 0;
    for (const auto& p : seq) {
        int s = p.sign_at(x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

Int cauchy_bound(const QPoly& f)
{
    Rat m = 0;
    for (int k = 0; k < f.degree(); ++k) {
        Rat a = abs(f.coeff(k) / f.lead());
        if (a > m)
            m = a;
    }
    return ceil_rat(m) + 1;
}

std::vector<RationalInterval> isolate_real_roots(const QPoly& f)
{
    const auto seq = sturm_sequence(f);
    const Rat B(cauchy_bound(f));
    std::vector<RationalInterval> out;
    std::vector<RationalInterval> work{{-B, B}};
    while (!work.empty()) {
        RationalInterval iv = work.back();
        work.pop_back();
        int n = sturm_variations(seq, iv.lo) - sturm_variations(seq, iv.hi);
        if (n == 0)
            continue;
        if (n == 1 && f.sign_at(iv.lo) != 0 && f.sign_at(iv.hi) != 0) {
            out.push_back(iv);
            continue;
        }
        Rat mid = (iv.lo + iv.hi) / 2;
        // Nudge the split point off a root.
        Rat step = (iv.hi - iv.lo) / 7;
        while (f.sign_at(mid) == 0)
            mid += step /= 2;
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

RationalInterval bisect_root(const QPoly& f, const RationalInterval& iv)
{
    Rat mid = (iv.lo + iv.hi) / 2;
    int sm = f.sign_at(mid);
    if (sm == 0) {
        Rat w = (iv.hi - iv.lo) / 8;
        return {mid - w, mid + w};
    }
    if (sm == f.sign_at(iv.lo))
        return {mid, iv.hi};
    return {iv.lo, mid};
}

const QPoly& cyclotomic_polynomial(int n)
{
    static std::mutex mu;
    static std::map<int, QPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed without recursion into the lock.
    std::map<int, QPoly> local;
    for (int d = 1; d <= n; ++d) {
        if (n % d)
            continue;
        QPoly p = QPoly::monomial(d) - QPoly({Rat(1)});
        for (auto& [e, q] : local)
            if (d % e == 0)
                p = p / q;
        local.emplace(d, p);
    }
    return cache.emplace(n, local.at(n)).first->second;
}

} // namespace shintani
