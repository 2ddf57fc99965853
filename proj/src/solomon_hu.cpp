#include "shintani/solomon_hu.hpp"
#include "shintani/errors.hpp"
#include "shintani/padic.hpp"
#include "shintani/parallelepiped.hpp"

#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

namespace shintani {

i64 SmoothingData::residue(const std::vector<i64>& coords) const
{
    i128 s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        s += static_cast<i128>(mod64(coords[i], q)) * basis_residues[i];
    return static_cast<i64>(s % q);
}

i64 SmoothingData::residue(const FieldElement& x) const
{
    const auto c = x.basis_coords();
    Int den = 1;
    for (const auto& v : c)
        den = lcm(den, Int(v.get_den()));
    const Int Q(static_cast<long>(q));
    if (mpz_divisible_p(den.get_mpz_t(), Q.get_mpz_t()))
        math_error("NotQIntegral", "element has q in its denominator");
    i64 s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Int num = c[i].get_num() * (den / Int(c[i].get_den()));
        s = (s + mulmod(mod(num, Q).get_si(), basis_residues[i], q)) % q;
    }
    return mulmod(s, invmod(mod(den, Q).get_si(), q), q);
}

SmoothingData make_smoothing_data(const NumberField& K, i64 q)
{
    if (!is_prime(q))
        config_error("BadSmoothingPrime", "q must be prime");
    std::optional<PrimeIdeal> best;
    for (auto& P : factor_rational_prime(K, Int(static_cast<long>(q))))
        if (P.f == 1 && P.e == 1 && (!best || P.ideal < best->ideal))
            best = P;
    if (!best)
        math_error("BadSmoothingPrime", "q has no unramified degree-one prime");
    SmoothingData sm;
    sm.q = q;
    sm.Q = *best;
    const int d = K.degree();
    for (int i = 0; i < d; ++i) {
        std::vector<Int> e(d, Int(0));
        e[i] = 1;
        i64 r = -1;
        const auto& one = K.one_coords();
        for (i64 c = 0; c < q && r < 0; ++c) {
            auto v = e;
            for (int k = 0; k < d; ++k)
                v[k] -= Int(static_cast<long>(c)) * one[k];
            if (best->ideal.contains_coords(v))
                r = c;
        }
        invariant(r >= 0, "basis element has a residue mod Q");
        sm.basis_residues.push_back(r);
    }
    return sm;
}

SmoothingData choose_smoothing_prime(const HeckeCharacter& chi, i64 p, int M, const Int& avoid, i64 start)
{
    const NumberField& K = chi.group().field();
    const Int bad = K.discriminant() * chi.group().modulus().norm().get_num() * avoid * Int(static_cast<long>(p));
    for (i64 q = std::max<i64>(start, 2); q < 100000; ++q) {
        if (!is_prime(q) || mpz_divisible_ui_p(bad.get_mpz_t(), static_cast<unsigned long>(q)))
            continue;
        SmoothingData sm;
        try {
            sm = make_smoothing_data(K, q);
        } catch (const Error&) {
            continue;
        }
        // <q> = q / omega(q) in Z_p.
        Int pM;
        mpz_ui_pow_ui(pM.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(M));
        Int winv;
        const Int w = teichmuller(Int(static_cast<long>(q)), p, M);
        mpz_invert(winv.get_mpz_t(), w.get_mpz_t(), pM.get_mpz_t());
        const Int bracket = mod(Int(static_cast<long>(q)) * winv, pM);
        const int N = static_cast<int>(chi.order());
        auto ctx = PAdicContext::get(p, M, N);
        const i64 e = chi.exponent(sm.Q.ideal);
        bool ok = true;
        for (i64 ee : {e, mod64(-e, N)}) {
            auto z = padic_embed(CyclotomicNumber::zeta(N, ee), p, M, N);
            auto x = PAdicCyclotomic::integer(ctx, 1) - PAdicCyclotomic::integer(ctx, bracket) * z;
            if (x.is_zero())
                ok = false;
        }
        if (ok)
            return sm;
    }
    math_error("SmoothingFactorVanishes", "no admissible smoothing prime found");
}

std::vector<Rat> smoothing_table(const std::vector<i64>& r, i64 q)
{
    // 1 / (1 - z) = -(1/q) sum_k k z^k for z^q = 1, z != 1; S(e) collects prod k_i over sum r_i k_i == e.
    std::vector<Int> S(q, Int(0));
    S[0] = 1;
    for (i64 ri : r) {
        if (mod64(ri, q) == 0)
            math_error("GeneratorNotUnitAtQ", "generator residue is zero mod q");
        std::vector<Int> next(q, Int(0));
        for (i64 e = 0; e < q; ++e) {
            if (S[e] == 0)
                continue;
            for (i64 k = 1; k < q; ++k)
                next[(e + mulmod(mod64(ri, q), k, q)) % q] += S[e] * Int(static_cast<long>(k));
        }
        S = std::move(next);
    }
    const std::size_t m = r.size();
    Int total = 1, qm = 1;
    for (std::size_t i = 0; i < m; ++i) {
        total *= Int(static_cast<long>(q * (q - 1) / 2));
        qm *= Int(static_cast<long>(q));
    }
    const Int sgn = m % 2 == 0 ? Int(1) : Int(-1);
    std::vector<Rat> T(q);
    for (i64 a = 0; a < q; ++a)
        T[a] = make_rat(sgn * (Int(static_cast<long>(q)) * S[mod64(-a, q)] - total), qm);
    return T;
}

TestFunction ideal_test_function(const Ideal& a, const HeckeCharacter& xi,
                                 std::shared_ptr<const RayClassGroup> congruence, std::optional<i64> target)
{
    auto Gx = xi.group_ptr();
    TestFunction tf;
    tf.support = a;
    Ideal c = a * Gx->modulus();
    if (congruence)
        c = c * congruence->modulus();
    tf.constancy = c;
    tf.level = static_cast<int>(xi.order());
    const auto cx = Gx->dlog(a);
    std::vector<i64> cc;
    if (congruence)
        cc = congruence->dlog(a);
    tf.exponent = [xi, Gx, cx, congruence, cc, target](const std::vector<i64>& y) -> std::optional<i64> {
        const i64 ix = Gx->residue_table()[Gx->residues().ring().index_of(y)];
        if (ix < 0)
            return std::nullopt;
        if (congruence) {
            const i64 ic = congruence->residue_table()[congruence->residues().ring().index_of(y)];
            if (ic < 0)
                return std::nullopt;
            const auto& G = congruence->group();
            if (target && G.index(G.add(G.element(ic), G.neg(cc))) != *target)
                return std::nullopt;
        }
        const auto& G = Gx->group();
        return xi.exponent(G.add(G.element(ix), G.neg(cx)));
    };
    return tf;
}

TestFunction trivial_test_function(const Ideal& a, const Ideal& constancy)
{
    TestFunction tf;
    tf.support = a;
    tf.constancy = constancy;
    tf.level = 1;
    tf.exponent = [](const std::vector<i64>&) -> std::optional<i64> { return 0; };
    return tf;
}

std::vector<FieldElement> rescale_generators(const std::vector<FieldElement>& x, const Ideal& constancy,
                                             const SmoothingData& sm)
{
    std::vector<FieldElement> out;
    for (const auto& xi : x) {
        if (sm.residue(xi) == 0)
            math_error("GeneratorNotUnitAtQ", "cone generator is not a unit at q");
        const Int M = (Ideal::principal(xi).inverse() * constancy).min_rational().get_num();
        if (mpz_divisible_ui_p(M.get_mpz_t(), static_cast<unsigned long>(sm.q)))
            math_error("PeriodDivisibleByQ", "rescaling factor is divisible by q");
        out.push_back(Rat(M) * xi);
    }
    return out;
}

namespace {

struct FaceBins {
    std::vector<i64> r;          // residues of the rescaled generators
    std::vector<Int> counts;     // [exponent][residue]
};

FaceBins bin_face(const std::vector<FieldElement>& x, const TestFunction& tf, const SmoothingData& sm)
{
    if (!tf.constancy.subset_of(tf.support))
        math_error("InvariantViolation", "constancy ideal must lie in the support ideal");
    auto xs = rescale_generators(x, tf.constancy, sm);
    FaceBins b;
    for (const auto& v : xs)
        b.r.push_back(sm.residue(v));
    Parallelepiped P(tf.support, xs);
    if (P.count() > Int(100'000'000))
        budget_error("parallelepiped too large");
    const i64 q = sm.q;
    std::vector<i64> c(static_cast<std::size_t>(tf.level * q), 0);
    P.for_each([&](const std::vector<i64>& y) {
        auto e = tf.exponent(y);
        if (e)
            ++c[static_cast<std::size_t>(*e * q + sm.residue(y))];
    });
    for (i64 v : c)
        b.counts.emplace_back(static_cast<long>(v));
    return b;
}

} // namespace

CyclotomicNumber smoothed_cone_ev0(const std::vector<FieldElement>& x, const TestFunction& tf,
                                   const SmoothingData& sm)
{
    FaceBins b = bin_face(x, tf, sm);
    auto T = smoothing_table(b.r, sm.q);
    std::vector<Rat> bins(tf.level);
    for (int e = 0; e < tf.level; ++e)
        for (i64 r = 0; r < sm.q; ++r)
            if (b.counts[e * sm.q + r] != 0)
                bins[e] -= Rat(b.counts[e * sm.q + r]) * T[r];
    return CyclotomicNumber::from_bins(tf.level, bins);
}

CyclotomicNumber smoothed_cone_ev0_direct(const std::vector<FieldElement>& x, const TestFunction& tf,
                                          const SmoothingData& sm)
{
    FaceBins b = bin_face(x, tf, sm);
    const i64 q = sm.q;
    const int L = static_cast<int>(std::lcm<i64>(q, tf.level));
    CyclotomicNumber total(L);
    for (i64 j = 1; j < q; ++j) {
        std::vector<Rat> bins(L);
        for (int e = 0; e < tf.level; ++e)
            for (i64 r = 0; r < q; ++r)
                if (b.counts[e * q + r] != 0)
                    bins[(e * (L / tf.level) + j * r % q * (L / q)) % L] += Rat(b.counts[e * q + r]);
        CyclotomicNumber den = CyclotomicNumber::rational(1, L);
        for (i64 ri : b.r)
            den = den * (CyclotomicNumber::rational(1, L) - CyclotomicNumber::zeta(L, j * ri % q * (L / q)));
        total += CyclotomicNumber::from_bins(L, bins) / den;
    }
    return (-total).reduced();
}

namespace {

std::vector<FieldElement> face_generators(const HalfOpenCone& C, unsigned mask)
{
    std::vector<FieldElement> g;
    for (std::size_t i = 0; i < C.dimension(); ++i)
        if (mask & (1u << i))
            g.push_back(C.generators()[i]);
    return g;
}

} // namespace

CyclotomicNumber smoothed_zeta0(const ConeFunction& A, const TestFunction& tf, const SmoothingData& sm)
{
    CyclotomicNumber total(tf.level);
    for (const auto& t : A.terms())
        for (unsigned mask = 1; mask < (1u << t.cone.dimension()); ++mask)
            if (t.cone.face_included(mask))
                total += Rat(t.weight) * smoothed_cone_ev0(face_generators(t.cone, mask), tf, sm);
    return total;
}

ClassWeights class_weights(std::shared_ptr<const RayClassGroup> Gf, std::shared_ptr<const RayClassGroup> Gp,
                           const SmoothingData& sm, const ConeFunction& A, const std::vector<Ideal>& reps,
                           const EvaluationOptions& opt)
{
    const i64 nf = Gf->order(), np = Gp->order(), q = sm.q;
    struct Task {
        std::size_t rep;
        int weight;
        std::vector<FieldElement> gens;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (const auto& t : A.terms())
            for (unsigned mask = 1; mask < (1u << t.cone.dimension()); ++mask)
                if (t.cone.face_included(mask))
                    tasks.push_back({i, t.weight, face_generators(t.cone, mask)});

    // Class offsets: class of (y) a^{-1} = class of (y) minus class of a.
    std::vector<std::vector<i64>> subf(reps.size()), subp(reps.size());
    std::vector<Ideal> constancy;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto caf = Gf->dlog(reps[i]), cap = Gp->dlog(reps[i]);
        for (i64 c = 0; c < nf; ++c)
            subf[i].push_back(Gf->group().index(Gf->group().add(Gf->group().element(c), Gf->group().neg(caf))));
        for (i64 c = 0; c < np; ++c)
            subp[i].push_back(Gp->group().index(Gp->group().add(Gp->group().element(c), Gp->group().neg(cap))));
        constancy.push_back(reps[i] * Gf->modulus() * Gp->modulus());
    }

    std::vector<std::vector<FieldElement>> scaled;
    std::vector<Parallelepiped> boxes;
    Int total_points = 0;
    for (const auto& t : tasks) {
        scaled.push_back(rescale_generators(t.gens, constancy[t.rep], sm));
        boxes.emplace_back(reps[t.rep], scaled.back());
        total_points += boxes.back().count();
    }
    if (total_points > Int(static_cast<long>(opt.budget)))
        budget_error("enumeration needs " + total_points.get_str() + " points, budget " +
                     std::to_string(opt.budget));

    ClassWeights out;
    out.Gf = Gf;
    out.Gp = Gp;
    out.W.assign(static_cast<std::size_t>(nf * np), Rat(0));
    out.points = to_i64(total_points);
    const ResidueRing& Rf = Gf->residues().ring();
    const ResidueRing& Rp = Gp->residues().ring();
    const auto& tabf = Gf->residue_table();
    const auto& tabp = Gp->residue_table();

    std::mutex lock;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    auto worker = [&] {
        std::vector<i64> counts;
        for (;;) {
            const std::size_t k = next++;
            if (k >= tasks.size())
                return;
            try {
                counts.assign(static_cast<std::size_t>(nf * np * q), 0);
                boxes[k].for_each([&](const std::vector<i64>& y) {
                    const i64 a = tabf[Rf.index_of(y)];
                    if (a < 0)
                        return;
                    const i64 b = tabp[Rp.index_of(y)];
                    if (b < 0)
                        return;
                    ++counts[static_cast<std::size_t>((a * np + b) * q + sm.residue(y))];
                });
                std::vector<i64> r;
                for (const auto& v : scaled[k])
                    r.push_back(sm.residue(v));
                const auto T = smoothing_table(r, q);
                // q^m T is integral.
                Int qm = 1;
                for (std::size_t i = 0; i < r.size(); ++i)
                    qm *= Int(static_cast<long>(q));
                std::vector<Int> Tq;
                for (const auto& t : T)
                    Tq.push_back(t.get_num() * (qm / Int(t.get_den())));
                std::vector<std::pair<std::size_t, Int>> contrib;
                for (i64 a = 0; a < nf; ++a)
                    for (i64 b = 0; b < np; ++b) {
                        Int s = 0;
                        bool any = false;
                        const i64* c = &counts[static_cast<std::size_t>((a * np + b) * q)];
                        for (i64 rr = 0; rr < q; ++rr)
                            if (c[rr]) {
                                s += Int(static_cast<long>(c[rr])) * Tq[rr];
                                any = true;
                            }
                        if (!any)
                            continue;
                        const Task& t = tasks[k];
                        const std::size_t idx =
                            static_cast<std::size_t>(subf[t.rep][a] * np + subp[t.rep][b]);
                        contrib.emplace_back(idx, -Int(t.weight) * s);
                    }
                std::lock_guard<std::mutex> g(lock);
                for (auto& [idx, v] : contrib)
                    out.W[idx] += make_rat(v, qm);
            } catch (...) {
                std::lock_guard<std::mutex> g(lock);
                if (!failure)
                    failure = std::current_exception();
                return;
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(tasks.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

std::vector<Ideal> class_representatives(const HeckeCharacter& chi, i64 p, const SmoothingData& sm)
{
    const Int avoid = Int(static_cast<long>(p)) * Int(static_cast<long>(sm.q)) *
                      chi.group().modulus().norm().get_num();
    return chi.group().narrow().representatives(avoid);
}

CyclotomicNumber lvalue_from_weights(const HeckeCharacter& chi, const ClassWeights& w)
{
    const int N = static_cast<int>(chi.order());
    std::vector<Rat> bins(N);
    const auto& Af = w.Gf->group();
    for (i64 cf = 0; cf < Af.order(); ++cf) {
        const i64 e = chi.exponent(Af.element(cf));
        for (i64 cp = 0; cp < w.Gp->order(); ++cp)
            bins[e] += w.at(cf, cp);
    }
    return CyclotomicNumber::from_bins(N, bins);
}

std::vector<CyclotomicNumber> measure_from_weights(const HeckeCharacter& chi, const ClassWeights& w)
{
    const int N = static_cast<int>(chi.order());
    const auto& Af = w.Gf->group();
    const auto& Ap = w.Gp->group();
    std::vector<i64> inv_exp;
    for (i64 cf = 0; cf < Af.order(); ++cf)
        inv_exp.push_back(mod64(-chi.exponent(Af.element(cf)), N));
    std::vector<CyclotomicNumber> mu;
    for (i64 c = 0; c < Ap.order(); ++c) {
        const i64 cinv = Ap.index(Ap.neg(Ap.element(c)));
        std::vector<Rat> bins(N);
        for (i64 cf = 0; cf < Af.order(); ++cf)
            bins[inv_exp[cf]] += w.at(cf, cinv);
        mu.push_back(CyclotomicNumber::from_bins(N, bins));
    }
    return mu;
}

namespace {

std::shared_ptr<const RayClassGroup> p_power_group(const HeckeCharacter& chi, i64 p, int n)
{
    const NumberField& K = chi.group().field();
    Int pn = 1;
    for (int i = 0; i < n; ++i)
        pn *= Int(static_cast<long>(p));
    return std::make_shared<const RayClassGroup>(K, Ideal::from_integer(K, pn), chi.group().units(),
                                                 chi.group().narrow_ptr());
}

} // namespace

CyclotomicNumber lvalue_smoothed(const HeckeCharacter& chi, i64 p, const SmoothingData& sm, const ConeFunction& A,
                                 const std::vector<Ideal>& reps, const EvaluationOptions& opt)
{
    if (!chi.is_totally_odd())
        math_error("NotTotallyOdd", "character is not totally odd");
    for (const auto& P : factor_rational_prime(chi.group().field(), Int(static_cast<long>(p))))
        if (ideal_valuation(chi.group().modulus(), P) > 0)
            math_error("RamifiedAtP", "character modulus is divisible by a prime above p");
    auto w = class_weights(chi.group_ptr(), p_power_group(chi, p, 1), sm, A, reps, opt);
    return lvalue_from_weights(chi, w);
}

CyclotomicNumber measure_coset(const HeckeCharacter& chi, i64 p, int n, const SmoothingData& sm,
                               const ConeFunction& A, const std::vector<Ideal>& reps, i64 c,
                               const EvaluationOptions& opt)
{
    auto w = class_weights(chi.group_ptr(), p_power_group(chi, p, n), sm, A, reps, opt);
    return measure_from_weights(chi, w).at(c);
}

MomentEvaluator::MomentEvaluator(const HeckeCharacter& chi, std::shared_ptr<const RayClassGroup> Gp,
                                 const SmoothingData& sm, const ConeFunction& A, const std::vector<Ideal>& reps,
                                 const EvaluationOptions& opt)
    : chi_(chi), Gp_(std::move(Gp))
{
    const NumberField& K = chi.group().field();
    Gfp_ = std::make_shared<const RayClassGroup>(K, chi.group().modulus() * Gp_->modulus(), chi.group().units(),
                                                 chi.group().narrow_ptr());
    to_f_ = ray_projection(*Gfp_, chi.group());
    to_p_ = ray_projection(*Gfp_, *Gp_);
    auto G1 = std::make_shared<const RayClassGroup>(K, Ideal::unit(K), chi.group().units(), chi.group().narrow_ptr());
    w_ = class_weights(Gfp_, G1, sm, A, reps, opt);
}

CyclotomicNumber MomentEvaluator::moment(const HeckeCharacter& eta) const
{
    const i64 Nc = chi_.order(), Ne = eta.order();
    const i64 L = std::lcm(Nc, Ne);
    std::vector<Rat> bins(L);
    const auto& A = Gfp_->group();
    for (i64 c = 0; c < A.order(); ++c) {
        const auto x = A.element(c);
        const i64 e = chi_.exponent(to_f_.apply(chi_.group().group(), x)) * (L / Nc) +
                      eta.exponent(to_p_.apply(Gp_->group(), x)) * (L / Ne);
        Rat s = 0;
        for (i64 c1 = 0; c1 < w_.Gp->order(); ++c1)
            s += w_.at(c, c1);
        bins[mod64(-e, L)] += s;
    }
    return CyclotomicNumber::from_bins(static_cast<int>(L), bins);
}

CyclotomicNumber moment_character(const HeckeCharacter& chi, const HeckeCharacter& eta, const SmoothingData& sm,
                                  const ConeFunction& A, const std::vector<Ideal>& reps,
                                  const EvaluationOptions& opt)
{
    return MomentEvaluator(chi, eta.group_ptr(), sm, A, reps, opt).moment(eta);
}

} // namespace shintani
