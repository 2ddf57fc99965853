#include "shintani/lseries.hpp"
#include "shintani/errors.hpp"

namespace shintani {

CyclotomicNumber MeasureTable::mass() const
{
    CyclotomicNumber s;
    for (const auto& x : mu)
        s += x;
    return s.reduced();
}

int MeasureTable::max_denominator_exponent() const
{
    int worst = 0;
    for (const auto& x : mu)
        for (const auto& c : x.coeffs()) {
            Int d = c.get_den();
            int v = 0;
            while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
                d /= Int(static_cast<long>(p));
                ++v;
            }
            worst = std::max(worst, v);
        }
    return worst;
}

MeasureTable measure_table_from_weights(const HeckeCharacter& chi, i64 p, int n, const SmoothingData& sm,
                                        const ClassWeights& w)
{
    MeasureTable t;
    t.p = p;
    t.q = sm.q;
    t.n = n;
    t.G = w.Gp;
    t.mu = measure_from_weights(chi, w);
    t.points = w.points;
    if (t.max_denominator_exponent() > 0)
        math_error("InvariantViolation", "measure entry is not p-integral");
    return t;
}

MeasureTable build_measure_table(const HeckeCharacter& chi, i64 p, int n, const SmoothingData& sm,
                                 const ConeFunction& A, const std::vector<Ideal>& reps,
                                 const EvaluationOptions& opt)
{
    if (p == 2)
        config_error("BadPrime", "p must be odd");
    local_split_at_p(chi, p);
    const NumberField& K = chi.group().field();
    Int pn = 1;
    for (int i = 0; i < n; ++i)
        pn *= Int(static_cast<long>(p));
    auto Gp = std::make_shared<const RayClassGroup>(K, Ideal::from_integer(K, pn), chi.group().units(),
                                                    chi.group().narrow_ptr());
    return measure_table_from_weights(chi, p, n, sm, class_weights(chi.group_ptr(), Gp, sm, A, reps, opt));
}

MeasureTable aggregate(const MeasureTable& t, std::shared_ptr<const RayClassGroup> coarse, int n)
{
    MeasureTable out = t;
    out.n = n;
    out.G = coarse;
    out.mu.assign(static_cast<std::size_t>(coarse->order()), CyclotomicNumber());
    const auto proj = ray_projection(*t.G, *coarse);
    const auto& A = t.G->group();
    for (i64 c = 0; c < A.order(); ++c) {
        const i64 d = coarse->group().index(proj.apply(coarse->group(), A.element(c)));
        out.mu[d] += t.mu[c];
    }
    for (auto& x : out.mu)
        x = x.reduced();
    return out;
}

namespace {

int common_level(const MeasureTable& t)
{
    int L = 1;
    for (const auto& x : t.mu)
        L = lcm_level(L, x.level());
    return L;
}

} // namespace

LogMoment log_moment(const MeasureTable& t, int k, int M)
{
    LogMoment out;
    out.k = k;
    const int L = common_level(t);
    auto ctx = PAdicContext::get(t.p, M, L);
    if (k == 0) {
        out.exact = t.mass();
        out.precision = M;
        out.value = padic_embed(*out.exact, t.p, M, L);
        return out;
    }
    out.precision = std::min(M, t.n + k - 1);
    i64 pn = 1;
    for (int i = 0; i < t.n; ++i)
        pn *= t.p;
    const auto values = cyclotomic_character_values(*t.G, t.p, t.n);
    const auto& A = t.G->group();
    PAdicCyclotomic acc = PAdicCyclotomic::integer(ctx, 0);
    for (i64 c = 0; c < A.order(); ++c) {
        if (t.mu[c].is_zero())
            continue;
        const i64 N = cyclotomic_char(values, A.element(c), pn);
        const Int lg = padic_log(Int(static_cast<long>(N)), t.p, M);
        Int pw = 1;
        for (int i = 0; i < k; ++i)
            pw *= lg;
        acc = acc + PAdicCyclotomic::integer(ctx, pw) * padic_embed(t.mu[c], t.p, M, L);
    }
    out.value = acc;
    return out;
}

SmoothingFactor smoothing_factor(const HeckeCharacter& chi, i64 p, int M, const SmoothingData& sm)
{
    SmoothingFactor f;
    f.q = sm.q;
    const int N = static_cast<int>(chi.order());
    f.chi_exponent = chi.exponent(sm.Q.ideal);
    Int pM;
    mpz_ui_pow_ui(pM.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(M));
    Int winv;
    mpz_invert(winv.get_mpz_t(), teichmuller(Int(static_cast<long>(sm.q)), p, M).get_mpz_t(), pM.get_mpz_t());
    f.bracket = mod(Int(static_cast<long>(sm.q)) * winv, pM);
    auto ctx = PAdicContext::get(p, M, N);
    auto one = PAdicCyclotomic::integer(ctx, 1), br = PAdicCyclotomic::integer(ctx, f.bracket);
    f.valuation = (one - br * padic_embed(CyclotomicNumber::zeta(N, f.chi_exponent), p, M, N)).valuation();
    f.valuation_dual = (one - br * padic_embed(CyclotomicNumber::zeta(N, -f.chi_exponent), p, M, N)).valuation();
    return f;
}

ConeFunction pipeline_cone_function(const NumberField& K, const UnitGroupData& units)
{
    PerturbationContext ctx(K);
    return cap_with_units(ctx, units).rep;
}

SmoothingData pipeline_smoothing(const HeckeCharacter& chi, i64 p, int M, std::optional<i64> q)
{
    if (!q)
        return choose_smoothing_prime(chi, p, M);
    SmoothingData sm = choose_smoothing_prime(chi, p, M, 1, *q);
    if (sm.q != *q)
        config_error("BadSmoothingPrime", "q = " + std::to_string(*q) + " is not admissible");
    return sm;
}

VanishingReport vanishing_report(const HeckeCharacter& chi, i64 p, const MeasureTable& t, int M,
                                 const SmoothingData& sm)
{
    VanishingReport rep;
    rep.p = p;
    rep.n = t.n;
    rep.M = M;
    rep.r = local_split_at_p(chi, p).r;
    rep.smoothing = smoothing_factor(chi, p, M, sm);
    rep.mass = t.mass();
    rep.points = t.points;
    rep.pass = true;
    for (int k = 0; k <= rep.r; ++k) {
        rep.moments.push_back(log_moment(t, k, M));
        if (k < rep.r && !rep.moments.back().vanishes())
            rep.pass = false;
    }
    const CyclotomicNumber f = CyclotomicNumber::rational(1) -
                               Rat(static_cast<long>(sm.q)) * chi.inverse().value(sm.Q.ideal);
    rep.lvalue_dual = (rep.mass / f).reduced();
    const int prec = rep.r >= 2 ? rep.moments[rep.r - 1].precision : M;
    if (rep.pass)
        rep.verdict = "ord >= " + std::to_string(rep.r) + " certified to precision p^" + std::to_string(prec);
    else
        rep.verdict = "FAIL: moment below order " + std::to_string(rep.r) + " is nonzero";
    return rep;
}

VanishingReport vanishing_report(const HeckeCharacter& chi, i64 p, const VanishingOptions& opt)
{
    if (!chi.is_totally_odd())
        math_error("NotTotallyOdd", "character is not totally odd");
    const NumberField& K = chi.group().field();
    const SmoothingData sm = pipeline_smoothing(chi, p, opt.M, opt.q);
    const ConeFunction A = pipeline_cone_function(K, chi.group().units());
    const auto reps = class_representatives(chi, p, sm);
    const MeasureTable t = build_measure_table(chi, p, opt.n, sm, A, reps, opt.eval);
    return vanishing_report(chi, p, t, opt.M, sm);
}

CheckReport fourier_consistency(const HeckeCharacter& chi, const MeasureTable& t, const SmoothingData& sm,
                                const ConeFunction& A, const std::vector<Ideal>& reps,
                                const EvaluationOptions& opt, std::size_t max_characters)
{
    CheckReport rep;
    MomentEvaluator ev(chi, t.G, sm, A, reps, opt);
    const auto etas = all_characters(t.G);
    const auto& G = t.G->group();
    const std::size_t count = max_characters ? std::min(max_characters, etas.size()) : etas.size();
    std::vector<CyclotomicNumber> moments;
    for (std::size_t j = 0; j < count; ++j) {
        const auto& eta = etas[j];
        CyclotomicNumber lhs;
        for (i64 c = 0; c < G.order(); ++c)
            lhs += eta.value(G.element(c)) * t.mu[c];
        moments.push_back(ev.moment(eta));
        rep.record(lhs == moments.back(), "eta #" + std::to_string(j));
    }
    if (count == etas.size())
        for (i64 c = 0; c < G.order(); ++c) {
            CyclotomicNumber s;
            for (std::size_t j = 0; j < count; ++j)
                s += etas[j].inverse().value(G.element(c)) * moments[j];
            s = make_rat(1, Int(static_cast<long>(G.order()))) * s;
            rep.record(s == t.mu[c], "inversion at class " + std::to_string(c));
        }
    return rep;
}

} // namespace shintani
