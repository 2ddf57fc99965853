#include "shintani/commands.hpp"
#include "shintani/cache.hpp"
#include "shintani/errors.hpp"
#include "shintani/oracle.hpp"
#include "shintani/suites.hpp"

namespace shintani {

namespace {

const HeckeCharacter& need_character(const Session& s)
{
    if (!s.chi)
        config_error("BadConfig", "a character is required");
    return *s.chi;
}

i64 need_p(const RunConfig& cfg)
{
    if (!cfg.p)
        config_error("BadConfig", "--p is required");
    if (*cfg.p == 2 || !is_prime(*cfg.p))
        config_error("BadPrime", "p must be an odd prime");
    return *cfg.p;
}

EvaluationOptions eval_options(const RunConfig& cfg) { return {cfg.budget, cfg.jobs}; }

std::unique_ptr<WeightCache> open_cache(const RunConfig& cfg)
{
    if (cfg.cache_dir.empty())
        return nullptr;
    return std::make_unique<WeightCache>(cfg.cache_dir);
}

std::shared_ptr<const RayClassGroup> power_group(const Session& s, i64 p, int n)
{
    Int pn = 1;
    for (int i = 0; i < n; ++i)
        pn *= Int(static_cast<long>(p));
    return std::make_shared<const RayClassGroup>(*s.K, Ideal::from_integer(*s.K, pn), s.units, s.narrow);
}

// Everything the smoothed evaluations share for one (chi, p).
struct Prepared {
    SmoothingData sm;
    ConeFunction A;
    std::vector<Ideal> reps;
};

Prepared prepare(const Session& s, const RunConfig& cfg, i64 p)
{
    const HeckeCharacter& chi = need_character(s);
    Prepared pr;
    pr.sm = pipeline_smoothing(chi, p, cfg.precision, cfg.q);
    pr.A = pipeline_cone_function(*s.K, s.units);
    pr.reps = class_representatives(chi, p, pr.sm);
    return pr;
}

MeasureTable table_at(const Session& s, const RunConfig& cfg, const Prepared& pr, i64 p, int n,
                      const WeightCache* cache)
{
    const HeckeCharacter& chi = need_character(s);
    local_split_at_p(chi, p);
    auto w = cached_class_weights(cache, chi.group_ptr(), power_group(s, p, n), pr.sm, pr.A, pr.reps,
                                  eval_options(cfg));
    return measure_table_from_weights(chi, p, n, pr.sm, w);
}

SmoothingData least_smoothing_prime(const HeckeCharacter& chi, i64 start)
{
    const NumberField& K = chi.group().field();
    const Int bad = K.discriminant() * chi.group().modulus().norm().get_num();
    for (i64 q = start; q < 100000; ++q) {
        if (!is_prime(q) || mpz_divisible_ui_p(bad.get_mpz_t(), static_cast<unsigned long>(q)))
            continue;
        try {
            return make_smoothing_data(K, q);
        } catch (const Error&) {
        }
    }
    math_error("SmoothingFactorVanishes", "no admissible smoothing prime found");
}

Json smoothing_json(const SmoothingData& sm)
{
    return {{"q", std::to_string(sm.q)}, {"Q", to_json(sm.Q.ideal)}};
}

} // namespace

Json cmd_field(const RunConfig& cfg)
{
    const Session s = open_session(cfg);
    Json j{{"field", field_json(*s.K, s.units)}};
    if (s.narrow)
        j["narrow_class_group"] = to_json(s.narrow->group());
    if (s.chi)
        j["character"] = to_json(*s.chi);
    if (s.chi && cfg.p) {
        const auto split = local_split_at_p(*s.chi, need_p(cfg));
        j["local_split"] = {{"r", std::to_string(split.r)},
                            {"S1", std::to_string(split.S1.size())},
                            {"S2", std::to_string(split.S2.size())}};
    }
    return j;
}

Json cmd_decompose(const RunConfig& cfg)
{
    const Session s = open_session(cfg);
    PerturbationContext ctx(*s.K);
    const auto cap = cap_with_units(ctx, s.units);
    Json eps = Json::array();
    for (const auto& e : cap.units.eps)
        eps.push_back(to_json(e));
    return {{"cones", to_json(cap.rep)},
            {"units", eps},
            {"normalization", std::to_string(cap.normalization)},
            {"psi_report", to_json(psi_suite(*s.K, s.units, 200, 1))}};
}

Json cmd_zeta0(const RunConfig& cfg)
{
    const Session s = open_session(cfg);
    const HeckeCharacter chi = s.chi ? *s.chi : HeckeCharacter::trivial(std::make_shared<const RayClassGroup>(
                                                    *s.K, Ideal::unit(*s.K), s.units, s.narrow));
    const i64 p = cfg.p ? need_p(cfg) : 1;
    const SmoothingData sm = cfg.p ? pipeline_smoothing(chi, p, cfg.precision, cfg.q)
                                   : least_smoothing_prime(chi, cfg.q.value_or(2));
    if (cfg.q && sm.q != *cfg.q)
        config_error("BadSmoothingPrime", "q = " + std::to_string(*cfg.q) + " is not admissible");
    const ConeFunction A = pipeline_cone_function(*s.K, s.units);
    const auto reps = class_representatives(chi, p, sm);
    auto cache = open_cache(cfg);
    auto G1 = std::make_shared<const RayClassGroup>(*s.K, Ideal::unit(*s.K), s.units, s.narrow);
    auto w = cached_class_weights(cache.get(), chi.group_ptr(), G1, sm, A, reps, eval_options(cfg));
    Json classes = Json::array();
    Rat total = 0;
    const auto& G = chi.group().group();
    for (i64 c = 0; c < G.order(); ++c) {
        total += w.at(c, 0);
        classes.push_back({{"class", std::to_string(c)},
                           {"ideal", to_json(chi.group().class_ideal(G.element(c)))},
                           {"smoothed_zeta0", to_json(w.at(c, 0))}});
    }
    return {{"modulus", to_json(chi.group().modulus())},
            {"smoothing", smoothing_json(sm)},
            {"classes", classes},
            {"total", to_json(total)},
            {"points", std::to_string(w.points)}};
}

Json cmd_lvalue(const RunConfig& cfg)
{
    const Session s = open_session(cfg);
    const HeckeCharacter& chi = need_character(s);
    const i64 p = need_p(cfg);
    if (!chi.is_totally_odd())
        math_error("NotTotallyOdd", "character is not totally odd");
    const Prepared pr = prepare(s, cfg, p);
    auto cache = open_cache(cfg);
    auto w = cached_class_weights(cache.get(), chi.group_ptr(), power_group(s, p, 1), pr.sm, pr.A, pr.reps,
                                  eval_options(cfg));
    const CyclotomicNumber smoothed = lvalue_from_weights(chi, w);
    const CyclotomicNumber factor =
        CyclotomicNumber::rational(1) - Rat(static_cast<long>(pr.sm.q)) * chi.value(pr.sm.Q.ideal);
    const CyclotomicNumber lsp = (smoothed / factor).reduced();
    const CyclotomicNumber euler = euler_factor_at_p(chi, p);
    Json j{{"smoothing", smoothing_json(pr.sm)},
           {"smoothed_value", to_json(smoothed)},
           {"smoothing_factor", to_json(factor)},
           {"L_Sp_at_0", to_json(lsp)},
           {"euler_factor", to_json(euler)},
           {"euler_factor_zero", euler.is_zero()}};
    if (!euler.is_zero())
        j["L_at_0"] = to_json((lsp / euler).reduced());
    if (s.psi) {
        const CyclotomicNumber oracle = norm_induced_l0(*s.K, *s.psi);
        j["oracle_L_at_0"] = to_json(oracle);
        j["oracle"] = to_json((oracle * euler).reduced());
        j["match"] = (oracle * euler).reduced() == lsp;
    }
    return j;
}

Json cmd_measure(const RunConfig& cfg)
{
    const Session s = open_session(cfg);
    const i64 p = need_p(cfg);
    const Prepared pr = prepare(s, cfg, p);
    auto cache = open_cache(cfg);
    const MeasureTable t = table_at(s, cfg, pr, p, cfg.level, cache.get());
    Json j = to_json(t);
    j["smoothing"] = smoothing_json(pr.sm);
    j["max_p_denominator_exponent"] = std::to_string(t.max_denominator_exponent());
    return j;
}

Json cmd_lp(const RunConfig& cfg)
{
    const Session s = open_session(cfg);
    const HeckeCharacter& chi = need_character(s);
    const i64 p = need_p(cfg);
    if (!chi.is_totally_odd())
        math_error("NotTotallyOdd", "character is not totally odd");
    const Prepared pr = prepare(s, cfg, p);
    auto cache = open_cache(cfg);
    const MeasureTable t = table_at(s, cfg, pr, p, cfg.level, cache.get());
    return to_json(vanishing_report(chi, p, t, cfg.precision, pr.sm));
}

Json cmd_verify(const RunConfig& cfg, const std::string& suite)
{
    const Session s = open_session(cfg);
    CheckReport rep;
    if (suite == "cocycle") {
        rep = cocycle_suite(*s.K, s.units, 50, 20, 1);
    } else if (suite == "psi") {
        rep = psi_suite(*s.K, s.units, 200, 1);
    } else if (suite == "subdivision") {
        const HeckeCharacter& chi = need_character(s);
        const i64 p = need_p(cfg);
        const Prepared pr = prepare(s, cfg, p);
        rep = subdivision_suite(chi, pr.sm, pr.reps.at(0), 20, 1);
    } else if (suite == "fourier") {
        const HeckeCharacter& chi = need_character(s);
        const i64 p = need_p(cfg);
        const Prepared pr = prepare(s, cfg, p);
        auto cache = open_cache(cfg);
        const MeasureTable t = table_at(s, cfg, pr, p, cfg.level, cache.get());
        rep = fourier_consistency(chi, t, pr.sm, pr.A, pr.reps, eval_options(cfg));
    } else if (suite == "refinement") {
        const i64 p = need_p(cfg);
        const Prepared pr = prepare(s, cfg, p);
        auto cache = open_cache(cfg);
        const MeasureTable a = table_at(s, cfg, pr, p, cfg.level, cache.get());
        const MeasureTable b = table_at(s, cfg, pr, p, cfg.level + 1, cache.get());
        rep = refinement_suite(a, b, cfg.precision);
    } else {
        config_error("BadSuite", "unknown suite '" + suite + "'");
    }
    Json j = to_json(rep);
    j["suite"] = suite;
    return j;
}

Json run_command(const std::string& name, const RunConfig& cfg, const std::string& suite)
{
    if (name == "field")
        return cmd_field(cfg);
    if (name == "decompose")
        return cmd_decompose(cfg);
    if (name == "zeta0")
        return cmd_zeta0(cfg);
    if (name == "lvalue")
        return cmd_lvalue(cfg);
    if (name == "measure")
        return cmd_measure(cfg);
    if (name == "lp")
        return cmd_lp(cfg);
    if (name == "verify")
        return cmd_verify(cfg, suite);
    config_error("BadCommand", "unknown command '" + name + "'");
}

} // namespace shintani
