#include "shintani/suites.hpp"
#include "shintani/errors.hpp"

#include <random>

namespace shintani {

CheckReport cocycle_suite(const NumberField& K, const UnitGroupData& units, int tuples, int points,
                          std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    PerturbationContext ctx(K);
    CheckReport rep;
    for (int t = 0; t < tuples; ++t) {
        std::vector<FieldElement> u;
        for (int i = 0; i <= K.degree(); ++i)
            u.push_back(random_positive_unit(units, 2, rng));
        std::vector<FieldElement> pts;
        for (int i = 0; i < points; ++i)
            pts.push_back(random_totally_positive(K, 10, rng));
        auto a = cocycle_identity_check(ctx, u, pts);
        std::vector<FieldElement> w(u.begin(), u.end() - 1);
        auto b = equivariance_check(ctx, w, random_totally_positive(K, 5, rng), pts);
        for (const auto* r : {&a, &b}) {
            rep.checks += r->checks;
            rep.failures += r->failures;
            rep.witnesses.insert(rep.witnesses.end(), r->witnesses.begin(), r->witnesses.end());
        }
    }
    return rep;
}

CheckReport psi_suite(const NumberField& K, const UnitGroupData& units, int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    PerturbationContext ctx(K);
    const auto cap = cap_with_units(ctx, units);
    CheckReport rep;
    std::optional<ConeFunction> classical;
    if (K.degree() == 2)
        classical = shintani_d2(K, units);
    for (int s = 0; s < samples; ++s) {
        const FieldElement v = random_totally_positive(K, 20, rng);
        const int t = translate_sum(cap.rep, cap.units, v);
        rep.record(t == 1, "cap " + v.to_string() + " -> " + std::to_string(t));
        if (classical) {
            const int c = translate_sum(*classical, units, v);
            rep.record(c == t, "classical " + v.to_string() + " -> " + std::to_string(c));
        }
    }
    return rep;
}

namespace {

FieldElement random_q_unit(const NumberField& K, const SmoothingData& sm, std::mt19937_64& rng)
{
    for (;;) {
        FieldElement x = random_totally_positive(K, 6, rng);
        if (sm.residue(x) != 0)
            return x;
    }
}

} // namespace

CheckReport subdivision_suite(const HeckeCharacter& chi, const SmoothingData& sm, const Ideal& support,
                              int cases, std::uint64_t seed)
{
    const NumberField& K = chi.group().field();
    if (K.degree() != 2)
        config_error("UnsupportedDegree", "subdivision suite is implemented for d = 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(1, 4);
    const TestFunction tf = ideal_test_function(support, chi);
    CheckReport rep;
    for (int t = 0; t < cases;) {
        FieldElement x1 = random_q_unit(K, sm, rng), x2 = random_q_unit(K, sm, rng);
        if (det_sign({x1, x2}) == 0)
            continue;
        ++t;
        if (det_sign({x1, x2}) < 0)
            std::swap(x1, x2);
        ConeFunction whole;
        whole.add(1, HalfOpenCone::open({x1, x2}));
        const CyclotomicNumber base = smoothed_zeta0(whole, tf, sm);

        FieldElement y;
        int a = 0, b = 0;
        do {
            a = small(rng);
            b = small(rng);
            y = Rat(a) * x1 + Rat(b) * x2;
        } while (sm.residue(y) == 0);
        ConeFunction split;
        split.add(1, HalfOpenCone({x1, y}, {false, false, true, true}));
        split.add(1, HalfOpenCone::open({y, x2}));
        const CyclotomicNumber s = smoothed_zeta0(split, tf, sm);
        rep.record(s == base, "split by " + std::to_string(a) + "," + std::to_string(b) + " of " + x1.to_string() +
                                  " " + x2.to_string());

        i64 k = 0;
        do
            k = small(rng) + 1;
        while (k % sm.q == 0);
        ConeFunction scaled;
        scaled.add(1, HalfOpenCone::open({Rat(static_cast<long>(k)) * x1, x2}));
        const CyclotomicNumber r = smoothed_zeta0(scaled, tf, sm);
        rep.record(r == base, "rescale by " + std::to_string(k) + " of " + x1.to_string());
    }
    return rep;
}

CheckReport refinement_suite(const MeasureTable& coarse, const MeasureTable& fine, int M)
{
    CheckReport rep;
    const MeasureTable pushed = aggregate(fine, coarse.G, coarse.n);
    for (std::size_t c = 0; c < coarse.mu.size(); ++c)
        rep.record(pushed.mu[c] == coarse.mu[c].reduced(), "class " + std::to_string(c));
    const LogMoment a = log_moment(coarse, 1, M), b = log_moment(fine, 1, M);
    const int k = std::min(a.precision, b.precision);
    rep.record(a.value.congruent(b.value, k), "m_1 mod p^" + std::to_string(k));
    return rep;
}

} // namespace shintani
