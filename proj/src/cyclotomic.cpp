#include "shintani/cyclotomic.hpp"
#include "shintani/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace shintani {

int lcm_level(int a, int b) { return std::lcm(a, b); }

const std::vector<std::vector<Int>>& cyclotomic_reduction_table(int N)
{
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<Int>>> cache;
    const QPoly& phi = cyclotomic_polynomial(N);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end())
        return it->second;
    const int D = phi.degree();
    std::vector<std::vector<Int>> tab(N, std::vector<Int>(D));
    std::vector<Int> cur(D);
    cur[0] = 1;
    for (int k = 0; k < N; ++k) {
        tab[k] = cur;
        // multiply by x and reduce with the monic Phi_N
        std::vector<Int> nxt(D);
        Int top = cur[D - 1];
        for (int i = D - 1; i >= 1; --i)
            nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (int i = 0; i < D; ++i)
                nxt[i] -= top * phi.coeff(i).get_num();
        cur = std::move(nxt);
    }
    return cache.emplace(N, std::move(tab)).first->second;
}

CyclotomicNumber::CyclotomicNumber(int level) : n_(level)
{
    if (level < 1)
        math_error("BadLevel", "cyclotomic level must be positive");
    c_.assign(static_cast<std::size_t>(euler_phi(level)), Rat(0));
}

CyclotomicNumber::CyclotomicNumber(int level, std::vector<Rat> coeffs) : n_(level), c_(std::move(coeffs))
{
    if (static_cast<i64>(c_.size()) != euler_phi(level))
        math_error("BadLevel", "coefficient vector has wrong length");
}

CyclotomicNumber CyclotomicNumber::rational(const Rat& a, int level)
{
    CyclotomicNumber r(level);
    r.c_[0] = a;
    return r;
}

CyclotomicNumber CyclotomicNumber::zeta(int level, i64 k)
{
    const auto& tab = cyclotomic_reduction_table(level);
    const auto& row = tab[mod64(k, level)];
    return CyclotomicNumber(level, std::vector<Rat>(row.begin(), row.end()));
}

CyclotomicNumber CyclotomicNumber::from_bins(int level, const std::vector<Rat>& bins)
{
    const auto& tab = cyclotomic_reduction_table(level);
    CyclotomicNumber r(level);
    for (int e = 0; e < level; ++e) {
        if (bins[e] == 0)
            continue;
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            if (tab[e][i] != 0)
                r.c_[i] += bins[e] * Rat(tab[e][i]);
    }
    return r;
}

CyclotomicNumber CyclotomicNumber::from_bins(int level, const std::vector<Int>& bins)
{
    const auto& tab = cyclotomic_reduction_table(level);
    std::vector<Int> acc(static_cast<std::size_t>(euler_phi(level)));
    for (int e = 0; e < level; ++e) {
        if (bins[e] == 0)
            continue;
        for (std::size_t i = 0; i < acc.size(); ++i)
            if (tab[e][i] != 0)
                acc[i] += bins[e] * tab[e][i];
    }
    return CyclotomicNumber(level, std::vector<Rat>(acc.begin(), acc.end()));
}

bool CyclotomicNumber::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

bool CyclotomicNumber::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

Rat CyclotomicNumber::rational_value() const
{
    if (!is_rational())
        math_error("NotRational", "cyclotomic number is not rational: " + to_string());
    return c_[0];
}

CyclotomicNumber CyclotomicNumber::lift_to(int level) const
{
    if (level == n_)
        return *this;
    if (level % n_)
        math_error("BadLevel", "level " + std::to_string(level) + " is not a multiple of " + std::to_string(n_));
    const int step = level / n_;
    std::vector<Rat> bins(level);
    for (std::size_t i = 0; i < c_.size(); ++i)
        bins[(i * step) % level] += c_[i];
    return from_bins(level, bins);
}

CyclotomicNumber CyclotomicNumber::inverse() const
{
    if (is_zero())
        math_error("ZeroElement", "inverse of zero cyclotomic number");
    QPoly a(c_);
    QPoly inv = QPoly::inverse_mod(a, cyclotomic_polynomial(n_));
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = inv.coeff(static_cast<int>(i));
    return CyclotomicNumber(n_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::galois(i64 a) const
{
    if (gcd64(a, n_) != 1)
        math_error("BadLevel", "Galois exponent not coprime to level");
    std::vector<Rat> bins(n_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        bins[mod64(static_cast<i64>(i) * a, n_)] += c_[i];
    return from_bins(n_, bins);
}

Rat CyclotomicNumber::trace() const
{
    // Tr(zeta_N^k) = mu(m) phi(N) / phi(m) with m = N / gcd(k, N).
    Rat s = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0)
            continue;
        i64 m = n_ / gcd64(static_cast<i64>(k), n_);
        s += c_[k] * Rat(euler_phi(n_) / euler_phi(m) * moebius(m));
    }
    return s;
}

CyclotomicNumber CyclotomicNumber::reduced() const
{
    for (int m = 1; m < n_; ++m) {
        if (n_ % m)
            continue;
        // Representable at level m iff fixed by zeta -> zeta^a for all a == 1 mod m.
        bool fixed = true;
        for (i64 a = 1; a < n_ && fixed; a += m)
            if (gcd64(a, n_) == 1 && galois(a) != *this)
                fixed = false;
        if (!fixed)
            continue;
        const int dm = static_cast<int>(euler_phi(m));
        std::vector<CyclotomicNumber> basis;
        for (int i = 0; i < dm; ++i)
            basis.push_back(zeta(m, i).lift_to(n_));
        const int D = dimension();
        std::vector<std::vector<Rat>> A(D, std::vector<Rat>(dm + 1));
        for (int r = 0; r < D; ++r) {
            for (int i = 0; i < dm; ++i)
                A[r][i] = basis[i].c_[r];
            A[r][dm] = c_[r];
        }
        int row = 0;
        std::vector<int> pivcol;
        for (int col = 0; col < dm && row < D; ++col) {
            int p = row;
            while (p < D && A[p][col] == 0)
                ++p;
            if (p == D)
                continue;
            std::swap(A[p], A[row]);
            for (int r = 0; r < D; ++r) {
                if (r == row || A[r][col] == 0)
                    continue;
                Rat f = A[r][col] / A[row][col];
                for (int k = col; k <= dm; ++k)
                    A[r][k] -= f * A[row][k];
            }
            pivcol.push_back(col);
            ++row;
        }
        std::vector<Rat> sol(dm);
        for (int r = 0; r < row; ++r)
            sol[pivcol[r]] = A[r][dm] / A[r][pivcol[r]];
        CyclotomicNumber cand(m, sol);
        if (cand.lift_to(n_) == *this)
            return cand;
    }
    return *this;
}

namespace {

std::pair<CyclotomicNumber, CyclotomicNumber> common(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.level() == b.level())
        return {a, b};
    int L = lcm_level(a.level(), b.level());
    return {a.lift_to(L), b.lift_to(L)};
}

} // namespace

CyclotomicNumber operator+(const CyclotomicNumber& x, const CyclotomicNumber& y)
{
    auto [a, b] = common(x, y);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        a.c_[i] += b.c_[i];
    return a;
}

CyclotomicNumber operator-(const CyclotomicNumber& x, const CyclotomicNumber& y)
{
    auto [a, b] = common(x, y);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        a.c_[i] -= b.c_[i];
    return a;
}

CyclotomicNumber operator-(const CyclotomicNumber& x)
{
    CyclotomicNumber r = x;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y)
{
    auto [a, b] = common(x, y);
    const int N = a.n_;
    std::vector<Rat> bins(N);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0)
                bins[(i + j) % N] += a.c_[i] * b.c_[j];
    }
    return CyclotomicNumber::from_bins(N, bins);
}

CyclotomicNumber operator*(const Rat& s, const CyclotomicNumber& x)
{
    CyclotomicNumber r = x;
    for (auto& c : r.c_)
        c *= s;
    return r;
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    auto [x, y] = common(a, b);
    return x * y.inverse();
}

bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y)
{
    auto [a, b] = common(x, y);
    return a.c_ == b.c_;
}

std::string CyclotomicNumber::to_string() const
{
    std::string s = "Q(zeta_" + std::to_string(n_) + ")[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i)
            s += ", ";
        s += shintani::to_string(c_[i]);
    }
    return s + "]";
}

} // namespace shintani
