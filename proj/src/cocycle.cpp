#include "shintani/cocycle.hpp"
#include "shintani/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace shintani {

void CheckReport::record(bool pass, const std::string& witness)
{
    ++checks;
    if (!pass) {
        ++failures;
        if (witnesses.size() < 10)
            witnesses.push_back(witness);
    }
}

ConeFunction shintani_d2(const NumberField& K, const UnitGroupData& units)
{
    if (K.degree() != 2)
        math_error("WrongDegree", "classical decomposition needs d = 2");
    std::vector<FieldElement> g{K.one(), units.eps.at(0)};
    ConeFunction A;
    A.add(1, HalfOpenCone::open(g));
    A.add(1, HalfOpenCone(g, {false, true, false, false}));
    return A;
}

namespace {

int permutation_sign(const std::vector<int>& p)
{
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                s = -s;
    return s;
}

// Returns false if some f_tau is degenerate or the signs of omega(f_tau) sign(tau) disagree.
bool colmez_condition(const std::vector<FieldElement>& eps, const FieldElement& one)
{
    std::vector<int> tau(eps.size());
    std::iota(tau.begin(), tau.end(), 0);
    int common = 0;
    do {
        std::vector<FieldElement> f{one};
        for (int t : tau)
            f.push_back(f.back() * eps[t]);
        int s = det_sign(f);
        if (s == 0)
            return false;
        s *= permutation_sign(tau);
        if (common == 0)
            common = s;
        else if (s != common)
            return false;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return true;
}

ConeFunction raw_cap(const PerturbationContext& ctx, const std::vector<FieldElement>& eps, int mu)
{
    std::vector<int> tau(eps.size());
    std::iota(tau.begin(), tau.end(), 0);
    ConeFunction A;
    do {
        std::vector<FieldElement> f{ctx.field().one()};
        for (int t : tau)
            f.push_back(f.back() * eps[t]);
        int w = mu * permutation_sign(tau) * cocycle_orientation(ctx, f);
        A.add(w, face_decompose(ctx, f));
    } while (std::next_permutation(tau.begin(), tau.end()));
    return A;
}

// Unimodular changes of a rank two unit basis, smallest entries first.
std::vector<std::vector<FieldElement>> basis_changes(const std::vector<FieldElement>& eps)
{
    std::vector<std::vector<FieldElement>> out{eps};
    if (eps.size() != 2)
        return out;
    std::vector<std::array<int, 4>> mats;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d)
                    if (std::abs(a * d - b * c) == 1)
                        mats.push_back({a, b, c, d});
    std::stable_sort(mats.begin(), mats.end(), [](const auto& x, const auto& y) {
        auto h = [](const auto& m) { return std::abs(m[0]) + std::abs(m[1]) + std::abs(m[2]) + std::abs(m[3]); };
        return h(x) < h(y);
    });
    for (const auto& m : mats)
        out.push_back({eps[0].pow(m[0]) * eps[1].pow(m[1]), eps[0].pow(m[2]) * eps[1].pow(m[3])});
    return out;
}

struct TranslateWindow {
    std::vector<double> center;
    std::vector<i64> radius;
};

// Bounds on n with eps^{-n} v in the closed cones of A, from a Log-box argument.
class TranslateBounds {
public:
    TranslateBounds(const ConeFunction& A, const UnitGroupData& units)
    {
        const int d = units.eps.empty() ? 1 : units.eps[0].field().degree();
        d_ = d;
        R_ = 0.0;
        for (const auto& t : A.terms()) {
            std::vector<double> lo(d, 1e300), hi(d, -1e300);
            for (const auto& g : t.cone.generators()) {
                auto l = log_embedding(g);
                for (int i = 0; i < d; ++i) {
                    lo[i] = std::min(lo[i], l[i]);
                    hi[i] = std::max(hi[i], l[i]);
                }
            }
            double alo = 0, ahi = 0;
            for (int i = 0; i < d; ++i) {
                alo += lo[i] / d;
                ahi += hi[i] / d;
            }
            for (int i = 0; i < d; ++i)
                R_ = std::max({R_, std::fabs(lo[i] - ahi), std::fabs(hi[i] - alo)});
        }
        const int r = d - 1;
        std::vector<std::vector<double>> L(r, std::vector<double>(r));
        for (int k = 0; k < r; ++k) {
            auto l = log_embedding(units.eps[k]);
            for (int i = 0; i < r; ++i)
                L[i][k] = l[i];
        }
        inv_ = invert(L);
    }

    TranslateWindow window(const FieldElement& v) const
    {
        auto l = log_embedding(v);
        double avg = 0;
        for (double x : l)
            avg += x / d_;
        const int r = d_ - 1;
        TranslateWindow w;
        for (int k = 0; k < r; ++k) {
            double c = 0, spread = 0;
            for (int i = 0; i < r; ++i) {
                c += inv_[k][i] * (l[i] - avg);
                spread += std::fabs(inv_[k][i]);
            }
            w.center.push_back(c);
            w.radius.push_back(static_cast<i64>(std::ceil(spread * R_)) + 2);
        }
        return w;
    }

private:
    static std::vector<std::vector<double>> invert(std::vector<std::vector<double>> A)
    {
        const std::size_t n = A.size();
        std::vector<std::vector<double>> I(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            I[i][i] = 1.0;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < n; ++r)
                if (std::fabs(A[r][c]) > std::fabs(A[piv][c]))
                    piv = r;
            std::swap(A[piv], A[c]);
            std::swap(I[piv], I[c]);
            double p = A[c][c];
            if (std::fabs(p) < 1e-12)
                math_error("DependentUnits", "regulator matrix is singular");
            for (std::size_t k = 0; k < n; ++k) {
                A[c][k] /= p;
                I[c][k] /= p;
            }
            for (std::size_t r = 0; r < n; ++r)
                if (r != c) {
                    double f = A[r][c];
                    for (std::size_t k = 0; k < n; ++k) {
                        A[r][k] -= f * A[c][k];
                        I[r][k] -= f * I[c][k];
                    }
                }
        }
        return I;
    }

    int d_ = 1;
    double R_ = 0;
    std::vector<std::vector<double>> inv_;
};

} // namespace

int translate_sum(const ConeFunction& A, const UnitGroupData& units, const FieldElement& v)
{
    TranslateBounds tb(A, units);
    TranslateWindow w = tb.window(v);
    const std::size_t r = units.eps.size();
    std::vector<i64> lo(r), n(r);
    for (std::size_t k = 0; k < r; ++k) {
        lo[k] = static_cast<i64>(std::floor(w.center[k])) - w.radius[k];
        n[k] = lo[k];
    }
    std::vector<FieldElement> inv;
    for (const auto& e : units.eps)
        inv.push_back(e.inverse());
    int total = 0;
    for (;;) {
        FieldElement y = v;
        for (std::size_t k = 0; k < r; ++k)
            y = y * inv[k].pow(n[k]);
        total += A.evaluate(y);
        std::size_t k = 0;
        while (k < r) {
            if (n[k] < lo[k] + 2 * w.radius[k] + 1) {
                ++n[k];
                break;
            }
            n[k] = lo[k];
            ++k;
        }
        if (k == r)
            break;
    }
    return total;
}

CappedShintaniClass cap_with_units(const PerturbationContext& ctx, const UnitGroupData& units)
{
    const NumberField& K = ctx.field();
    if (static_cast<int>(units.eps.size()) != K.degree() - 1)
        math_error("WrongUnitRank", "need d - 1 totally positive units");
    for (const auto& eps : basis_changes(units.eps)) {
        if (!colmez_condition(eps, K.one()))
            continue;
        UnitGroupData u{eps, log_orientation(eps)};
        ConeFunction A = raw_cap(ctx, u.eps, u.mu);
        FieldElement probe = K.one();
        FieldElement acc = K.one();
        for (const auto& e : u.eps) {
            acc = acc * e;
            probe = probe + acc;
        }
        int s = translate_sum(A, u, probe);
        if (s == 1)
            return {A, u, 1};
        if (s == -1)
            return {A.negated(), u, -1};
    }
    math_error("ColmezViolation", "no unit basis satisfies the sign condition");
}

CheckReport verify_psi(const ConeFunction& A, const UnitGroupData& units, int samples, std::mt19937_64& rng,
                       int height)
{
    CheckReport rep;
    const NumberField& K = units.eps.at(0).field();
    for (int s = 0; s < samples; ++s) {
        FieldElement v = random_totally_positive(K, height, rng);
        int t = translate_sum(A, units, v);
        rep.record(t == 1, v.to_string() + " -> " + std::to_string(t));
    }
    return rep;
}

CheckReport cocycle_identity_check(const PerturbationContext& ctx, const std::vector<FieldElement>& u,
                                   const std::vector<FieldElement>& points)
{
    CheckReport rep;
    for (const auto& v : points) {
        int sum = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            std::vector<FieldElement> w;
            for (std::size_t j = 0; j < u.size(); ++j)
                if (j != i)
                    w.push_back(u[j]);
            sum += (i % 2 == 0 ? 1 : -1) * z_eval(ctx, w, v);
        }
        rep.record(sum == 0, v.to_string() + " -> " + std::to_string(sum));
    }
    return rep;
}

CheckReport equivariance_check(const PerturbationContext& ctx, const std::vector<FieldElement>& u,
                               const FieldElement& g, const std::vector<FieldElement>& points)
{
    CheckReport rep;
    std::vector<FieldElement> gu;
    for (const auto& x : u)
        gu.push_back(g * x);
    for (const auto& v : points) {
        int a = z_eval(ctx, u, v), b = z_eval(ctx, gu, g * v);
        rep.record(a == b, v.to_string() + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
    return rep;
}

FieldElement random_positive_unit(const UnitGroupData& units, int range, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-range, range);
    FieldElement e = units.eps.at(0).field().one();
    for (const auto& u : units.eps)
        e = e * u.pow(dist(rng));
    return e;
}

} // namespace shintani
