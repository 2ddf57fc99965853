#include "shintani/padic.hpp"
#include "shintani/errors.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace shintani {

namespace {

Int pow_int(const Int& b, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Int powm(const Int& b, const Int& e, const Int& m)
{
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int invm(const Int& a, const Int& m)
{
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        math_error("NotInvertible", a.get_str() + " mod " + m.get_str());
    return r;
}

} // namespace

i64 least_primitive_root(i64 p)
{
    auto fac = factor_integer(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : fac)
            if (powmod(g, static_cast<u64>((p - 1) / q), p) == 1) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
    return 1;
}

std::shared_ptr<const PAdicContext> PAdicContext::get(i64 p, int M, int L)
{
    static std::mutex mu;
    static std::map<std::tuple<i64, int, int>, std::shared_ptr<const PAdicContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, M, L);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    if (!is_prime(p) || p == 2)
        config_error("BadPrime", "p must be an odd prime");
    if (L % p == 0)
        math_error("RamifiedLevel", "p divides the cyclotomic level");
    if (M < 1)
        config_error("BadPrecision", "precision must be positive");
    std::shared_ptr<PAdicContext> ctx(new PAdicContext());
    ctx->p_ = p;
    ctx->M_ = M;
    ctx->L_ = L;
    Int pm = pow_int(Int(static_cast<long>(p)), static_cast<unsigned long>(M));
    if (pm >= (Int(1) << 62))
        config_error("BadPrecision", "p^M exceeds 62 bits");
    ctx->pM_ = pm.get_si();
    const i64 pM = ctx->pM_;
    if ((p - 1) % L == 0) {
        ctx->f_ = 1;
        i64 g = least_primitive_root(p);
        i64 r = powmod(g, static_cast<u64>((p - 1) / L), p);
        Int w = teichmuller(Int(static_cast<long>(r)), p, M);
        i64 z = w.get_si();
        ctx->G_ = ModPoly({mod64(-z, pM), 1}, pM);
        i64 cur = 1 % pM;
        for (int k = 0; k < L; ++k) {
            ctx->zpow_.push_back({cur});
            cur = mulmod(cur, z, pM);
        }
    } else {
        const QPoly& phi = cyclotomic_polynomial(L);
        auto fac = factor_mod_p(ModPoly::from_qpoly(phi, p));
        ctx->G_ = hensel_lift(phi, fac.front().f, p, M);
        ctx->f_ = ctx->G_.degree();
        ModPoly x = ModPoly::x_power(1, pM), cur({1}, pM);
        for (int k = 0; k < L; ++k) {
            std::vector<i64> c(ctx->f_, 0);
            for (int i = 0; i <= cur.degree(); ++i)
                c[i] = cur.coeff(i);
            ctx->zpow_.push_back(std::move(c));
            cur = (cur * x) % ctx->G_;
        }
    }
    cache.emplace(key, ctx);
    return ctx;
}

std::vector<i64> PAdicContext::multiply(const std::vector<i64>& a, const std::vector<i64>& b) const
{
    ModPoly pa(a, pM_), pb(b, pM_);
    ModPoly r = (pa * pb) % G_;
    std::vector<i64> c(f_, 0);
    for (int i = 0; i <= r.degree(); ++i)
        c[i] = r.coeff(i);
    return c;
}

PAdicCyclotomic::PAdicCyclotomic(std::shared_ptr<const PAdicContext> ctx, std::vector<i64> c)
    : ctx_(std::move(ctx)), c_(std::move(c))
{
    for (auto& x : c_)
        x = mod64(x, ctx_->modulus());
}

PAdicCyclotomic PAdicCyclotomic::integer(std::shared_ptr<const PAdicContext> ctx, const Int& a)
{
    std::vector<i64> c(ctx->residue_degree(), 0);
    c[0] = mod(a, Int(static_cast<long>(ctx->modulus()))).get_si();
    return PAdicCyclotomic(std::move(ctx), std::move(c));
}

int PAdicCyclotomic::valuation() const
{
    const i64 p = ctx_->prime();
    int v = ctx_->precision();
    for (i64 x : c_) {
        if (x == 0)
            continue;
        int w = 0;
        while (x % p == 0) {
            x /= p;
            ++w;
        }
        v = std::min(v, w);
    }
    return v;
}

std::vector<i64> PAdicCyclotomic::unit_part() const
{
    const int v = valuation();
    const i64 pv = ipow(ctx_->prime(), static_cast<unsigned>(v));
    const i64 m = ctx_->modulus() / pv;
    std::vector<i64> out;
    for (i64 x : c_)
        out.push_back(mod64(x / pv, m));
    return out;
}

bool PAdicCyclotomic::congruent(const PAdicCyclotomic& y, int k) const
{
    const i64 pk = ipow(ctx_->prime(), static_cast<unsigned>(std::min(k, ctx_->precision())));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (mod64(c_[i] - y.c_[i], pk) != 0)
            return false;
    return true;
}

PAdicCyclotomic operator+(const PAdicCyclotomic& a, const PAdicCyclotomic& b)
{
    std::vector<i64> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod64(c[i] + b.c_[i], a.ctx_->modulus());
    return PAdicCyclotomic(a.ctx_, std::move(c));
}

PAdicCyclotomic operator-(const PAdicCyclotomic& a, const PAdicCyclotomic& b)
{
    std::vector<i64> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod64(c[i] - b.c_[i], a.ctx_->modulus());
    return PAdicCyclotomic(a.ctx_, std::move(c));
}

PAdicCyclotomic operator*(const PAdicCyclotomic& a, const PAdicCyclotomic& b)
{
    return PAdicCyclotomic(a.ctx_, a.ctx_->multiply(a.c_, b.c_));
}

std::string PAdicCyclotomic::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i)
            s += ", ";
        s += std::to_string(c_[i]);
    }
    return s + "] mod " + std::to_string(ctx_->prime()) + "^" + std::to_string(ctx_->precision());
}

PAdicCyclotomic padic_embed(const CyclotomicNumber& v, i64 p, int M, int L)
{
    if (L == 0)
        L = v.level();
    if (L % p == 0)
        math_error("RamifiedLevel", "p divides the cyclotomic level");
    auto ctx = PAdicContext::get(p, M, L);
    CyclotomicNumber w = v.lift_to(L);
    const i64 pM = ctx->modulus();
    std::vector<i64> acc(ctx->residue_degree(), 0);
    for (int k = 0; k < w.dimension(); ++k) {
        const Rat& a = w.coeffs()[k];
        if (a == 0)
            continue;
        if (mpz_divisible_ui_p(a.get_den_mpz_t(), static_cast<unsigned long>(p)))
            math_error("PDenominator", "coefficient " + shintani::to_string(a) + " is not p-integral");
        i64 r = rat_mod(a, pM);
        const auto& z = ctx->zeta_power(k);
        for (int i = 0; i < ctx->residue_degree(); ++i)
            acc[i] = mod64(acc[i] + mulmod(r, z[i], pM), pM);
    }
    return PAdicCyclotomic(ctx, std::move(acc));
}

Int teichmuller(const Int& u, i64 p, int M)
{
    Int P(static_cast<long>(p));
    Int pm = pow_int(P, static_cast<unsigned long>(M));
    return powm(mod(u, pm), pow_int(P, static_cast<unsigned long>(M - 1)), pm);
}

Int padic_log(const Int& u, i64 p, int M)
{
    Int P(static_cast<long>(p));
    if (mpz_divisible_p(u.get_mpz_t(), P.get_mpz_t()))
        math_error("NotAUnit", "log_p of a non-unit");
    const int K = 2 * M + 4;
    int vmax = 0;
    for (i64 q = p; q <= K; q *= p)
        ++vmax;
    const Int pW = pow_int(P, static_cast<unsigned long>(M + vmax + 1));
    const Int pM = pow_int(P, static_cast<unsigned long>(M));
    Int x = mod(powm(mod(u, pW), Int(static_cast<long>(p - 1)), pW) - 1, pW);
    Int sum = 0, xk = 1;
    for (int k = 1; k <= K; ++k) {
        xk = mod(xk * x, pW);
        int vk = 0;
        long kk = k;
        while (kk % p == 0) {
            kk /= p;
            ++vk;
        }
        Int t = xk;
        if (vk) {
            Int pv = pow_int(P, static_cast<unsigned long>(vk));
            invariant(mpz_divisible_p(t.get_mpz_t(), pv.get_mpz_t()), "log series term divisibility");
            t /= pv;
        }
        t = mod(t * invm(Int(kk), pM), pM);
        if (k % 2 == 0)
            t = -t;
        sum += t;
    }
    return mod(sum * invm(Int(static_cast<long>(p - 1)), pM), pM);
}

Int padic_exp(const Int& x, i64 p, int M)
{
    Int P(static_cast<long>(p));
    if (!mpz_divisible_p(x.get_mpz_t(), P.get_mpz_t()))
        math_error("Divergent", "exp_p needs x == 0 mod p");
    const int K = 2 * M + 4;
    int vfact = 0;
    for (int k = 1; k <= K; ++k)
        for (long kk = k; kk % p == 0; kk /= p)
            ++vfact;
    const Int pW = pow_int(P, static_cast<unsigned long>(M + vfact + 1));
    const Int pM = pow_int(P, static_cast<unsigned long>(M));
    Int sum = 1, xk = 1, unit_fact = 1;
    int vf = 0;
    for (int k = 1; k <= K; ++k) {
        xk = mod(xk * x, pW);
        long kk = k;
        while (kk % p == 0) {
            kk /= p;
            ++vf;
        }
        unit_fact = mod(unit_fact * kk, pW);
        Int t = xk;
        Int pv = pow_int(P, static_cast<unsigned long>(vf));
        invariant(mpz_divisible_p(t.get_mpz_t(), pv.get_mpz_t()), "exp series term divisibility");
        t /= pv;
        sum += mod(t * invm(unit_fact, pM), pM);
    }
    return mod(sum, pM);
}

} // namespace shintani
