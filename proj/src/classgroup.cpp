#include "shintani/classgroup.hpp"
#include "shintani/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

namespace shintani {

std::optional<FieldElement> totally_positive_generator(const Ideal& a, const UnitGroupData& units)
{
    const NumberField& K = a.field();
    if (K.degree() != 2)
        math_error("UnsupportedDegree", "generator search needs d = 2");
    const Rat den(a.denominator());
    const Ideal I = a.scaled(den);
    const Int N = I.norm().get_num();
    const FieldElement& eps = units.eps.at(0);
    const double rho = std::max(eps.embed_approx(0), eps.embed_approx(1));
    const double B = std::sqrt(N.get_d() * rho) * (1 + 1e-9) + 1e-9;
    const auto basis = I.basis();
    double S[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            S[i][j] = basis[j].embed_approx(i);
    const double det = S[0][0] * S[1][1] - S[0][1] * S[1][0];
    const double inv0[2] = {S[1][1] / det, -S[0][1] / det};
    double lo = 0, hi = 0;
    for (double s1 : {0.0, B})
        for (double s2 : {0.0, B}) {
            const double c = inv0[0] * s1 + inv0[1] * s2;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
    const i64 c0lo = static_cast<i64>(std::floor(lo)) - 1, c0hi = static_cast<i64>(std::ceil(hi)) + 1;
    if (c0hi - c0lo > (i64{1} << 28))
        budget_error("totally positive generator search too large");
    for (i64 c0 = c0lo; c0 <= c0hi; ++c0) {
        double ylo = -1e300, yhi = 1e300;
        bool empty = false;
        for (int i = 0; i < 2; ++i) {
            const double base = S[i][0] * static_cast<double>(c0);
            if (std::fabs(S[i][1]) < 1e-300) {
                if (base < -1e-9 * B || base > B * (1 + 1e-9))
                    empty = true;
                continue;
            }
            double u = (0 - base) / S[i][1], v = (B - base) / S[i][1];
            if (u > v)
                std::swap(u, v);
            ylo = std::max(ylo, u);
            yhi = std::min(yhi, v);
        }
        if (empty || ylo > yhi + 2)
            continue;
        for (i64 c1 = static_cast<i64>(std::floor(ylo)) - 1; c1 <= static_cast<i64>(std::ceil(yhi)) + 1; ++c1) {
            FieldElement beta = Rat(static_cast<long>(c0)) * basis[0] + Rat(static_cast<long>(c1)) * basis[1];
            if (beta.is_zero() || !totally_positive(beta))
                continue;
            if (beta.norm() == Rat(N))
                return Rat(1) / den * beta;
        }
    }
    return std::nullopt;
}

std::vector<Ideal> integral_ideals_up_to(const NumberField& K, i64 bound, const Int& avoid)
{
    std::vector<std::pair<Ideal, i64>> primes;
    for (i64 l = 2; l <= bound; ++l) {
        if (!is_prime(l) || mpz_divisible_ui_p(avoid.get_mpz_t(), static_cast<unsigned long>(l)))
            continue;
        for (auto& P : factor_rational_prime(K, Int(static_cast<long>(l)))) {
            const Int n = P.norm();
            if (n <= bound)
                primes.emplace_back(P.ideal, n.get_si());
        }
    }
    std::vector<std::pair<i64, Ideal>> out;
    std::function<void(std::size_t, const Ideal&, i64)> rec = [&](std::size_t i, const Ideal& I, i64 n) {
        out.emplace_back(n, I);
        for (std::size_t j = i; j < primes.size(); ++j) {
            if (static_cast<i128>(n) * primes[j].second > bound)
                continue;
            rec(j, I * primes[j].first, n * primes[j].second);
        }
    };
    rec(0, Ideal::unit(K), 1);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first)
            return x.first < y.first;
        return x.second < y.second;
    });
    std::vector<Ideal> ideals;
    for (auto& [n, I] : out)
        ideals.push_back(std::move(I));
    return ideals;
}

NarrowClassGroup::NarrowClassGroup(const NumberField& K, const UnitGroupData& units) : K_(&K), units_(units)
{
    if (K.degree() != 2)
        math_error("UnsupportedDegree", "narrow class groups are implemented for d = 2");
    const double mink = std::sqrt(std::fabs(K.discriminant().get_d())) / 2;
    const i64 bound = static_cast<i64>(std::floor(mink));
    for (i64 l = 2; l <= bound; ++l) {
        if (!is_prime(l))
            continue;
        for (auto& P : factor_rational_prime(K, Int(static_cast<long>(l))))
            if (P.norm() <= bound)
                gens_.push_back(P.ideal);
    }
    // Principal ideal with a generator of negative norm: the kernel of Cl+ -> Cl.
    const FieldElement w = quadratic_order_generator(K);
    bool have_sign = false;
    for (int b = 1; b <= 8 && !have_sign; ++b)
        for (int a = -8; a <= 8 && !have_sign; ++a) {
            FieldElement x = K.from_rational(a) + Rat(b) * w;
            if (x.norm() < 0) {
                gens_.push_back(Ideal::principal(x));
                have_sign = true;
            }
        }
    invariant(have_sign, "found an element of negative norm");

    const std::size_t k = gens_.size();
    auto equivalent = [&](const Ideal& A, const Ideal& B) {
        return totally_positive_generator(A * B.inverse(), units_).has_value();
    };
    reps_.push_back(Ideal::unit(K));
    std::vector<std::vector<Int>> words{std::vector<Int>(k, Int(0))};
    std::vector<std::vector<Int>> rels;
    for (std::size_t j = 0; j < reps_.size(); ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            Ideal J = reps_[j] * gens_[i];
            std::vector<Int> wd = words[j];
            wd[i] += 1;
            std::size_t t = 0;
            while (t < reps_.size() && !equivalent(J, reps_[t]))
                ++t;
            if (t == reps_.size()) {
                if (reps_.size() > 4096)
                    budget_error("narrow class group too large");
                reps_.push_back(J);
                words.push_back(wd);
                continue;
            }
            for (std::size_t r = 0; r < k; ++r)
                wd[r] -= words[t][r];
            rels.push_back(wd);
        }
    }
    IntMatrix R(k, rels.size());
    for (std::size_t c = 0; c < rels.size(); ++c)
        for (std::size_t r = 0; r < k; ++r)
            R(r, c) = rels[c][r];
    G_ = FiniteAbelianGroup::from_relations(k, R);
    invariant(G_.order() == static_cast<i64>(reps_.size()), "narrow class group order matches enumeration");
    for (const auto& wd : words)
        rep_class_.push_back(G_.reduce(wd));
}

std::vector<i64> NarrowClassGroup::dlog(const Ideal& a) const
{
    for (std::size_t t = 0; t < reps_.size(); ++t)
        if (totally_positive_generator(a * reps_[t].inverse(), units_))
            return rep_class_[t];
    math_error("InvariantViolation", "ideal class not found among representatives");
}

std::vector<Ideal> NarrowClassGroup::representatives(const Int& avoid) const
{
    const i64 h = order();
    std::vector<std::optional<Ideal>> found(h);
    i64 missing = h;
    for (i64 bound = 32; missing > 0; bound *= 4) {
        if (bound > (i64{1} << 24))
            budget_error("no coprime class representatives found");
        for (const auto& I : integral_ideals_up_to(*K_, bound, avoid)) {
            const i64 c = G_.index(dlog(I));
            if (!found[c]) {
                found[c] = I;
                if (--missing == 0)
                    break;
            }
        }
    }
    std::vector<Ideal> out;
    for (auto& f : found)
        out.push_back(*f);
    return out;
}

Ideal NarrowClassGroup::representative(i64 c, const Int& avoid) const { return representatives(avoid).at(c); }

} // namespace shintani
