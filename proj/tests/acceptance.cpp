// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "fields.hpp"
#include "shintani/errors.hpp"
#include "shintani/lseries.hpp"
#include "shintani/oracle.hpp"
#include "shintani/suites.hpp"

using namespace shintani;
using namespace shintani::testing;

namespace {

constexpr double kOracleSeconds = 30;
constexpr double kTwoQSeconds = 60;
constexpr double kTrivialZeroSeconds = 120;
constexpr double kCocycleSeconds = 60;
constexpr int kPrecision = 4;
constexpr int kCocycleTuples = 50;
constexpr int kCocyclePoints = 20;
constexpr int kPsiSamples = 200;
constexpr int kSubdivisionCases = 20;

struct Pipeline {
    FieldPtr K = qsqrt5();
    UnitGroupData units = unit_group(*K);
    DirichletCharacter psi = DirichletCharacter::kronecker(-3);
    HeckeCharacter chi = norm_induced_character(*K, psi, units);
    ConeFunction A = pipeline_cone_function(*K, units);

    struct AtP {
        SmoothingData sm;
        std::vector<Ideal> reps;
    };
    AtP at(i64 p, std::optional<i64> q = std::nullopt) const
    {
        AtP a{pipeline_smoothing(chi, p, kPrecision, q), {}};
        a.reps = class_representatives(chi, p, a.sm);
        return a;
    }
    MeasureTable table(i64 p, int n, const AtP& a) const { return build_measure_table(chi, p, n, a.sm, A, a.reps); }
    CyclotomicNumber lsp(i64 p, const AtP& a) const
    {
        const auto v = lvalue_smoothed(chi, p, a.sm, A, a.reps);
        return (v / (CyclotomicNumber::rational(1) - Rat(static_cast<long>(a.sm.q)) * chi.value(a.sm.Q.ideal)))
            .reduced();
    }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<std::string(bool&)>& body,
               double limit_seconds = 0)
{
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        ok = false;
        detail += " (over time limit)";
    }
    if (!ok)
        ++failures;
    std::printf("%s criterion %d %s: %s [%.2fs]\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
}

std::string str(const CyclotomicNumber& x) { return x.reduced().to_string(); }

} // namespace

int main()
{
    const Pipeline P;

    criterion(1, "classical oracle", [&](bool& ok) {
        const auto a = P.at(11);
        const auto lsp = P.lsp(11, a);
        const auto euler = euler_factor_at_p(P.chi, 11);
        const auto l = (lsp / euler).reduced();
        const auto b3 = bernoulli_b1(DirichletCharacter::kronecker(-3));
        const auto b15 = bernoulli_b1(DirichletCharacter::kronecker(-15));
        const auto bern = ((-b3) * (-b15)).reduced();
        ok = l == bern && bern == norm_induced_l0(*P.K, P.psi) && lsp == CyclotomicNumber::rational(make_rat(8, 3));
        return "L(chi,0) = " + str(l) + ", Bernoulli product " + str(bern) + ", L_Sp = " + str(lsp) + ", q = " +
               std::to_string(a.sm.q);
    }, kOracleSeconds);

    criterion(2, "smoothing-prime independence", [&](bool& ok) {
        const auto a = P.at(11), b = P.at(11, 29);
        const auto la = P.lsp(11, a), lb = P.lsp(11, b);
        ok = a.sm.q != b.sm.q && la == lb;
        return "q = " + std::to_string(a.sm.q) + " -> " + str(la) + ", q = " + std::to_string(b.sm.q) + " -> " +
               str(lb);
    }, kTwoQSeconds);

    criterion(3, "trivial zero r=1 at p=7", [&](bool& ok) {
        const auto a = P.at(7);
        const auto t1 = P.table(7, 1, a);
        const auto rep = vanishing_report(P.chi, 7, t1, kPrecision, a.sm);
        const auto t2 = P.table(7, 2, a);
        const auto m1 = log_moment(t2, 1, kPrecision);
        ok = rep.r == 1 && rep.mass.is_zero() && rep.moments[0].exact->is_zero() && rep.pass && !m1.vanishes();
        return "r = " + std::to_string(rep.r) + ", m0 = " + str(rep.mass) + ", m1 level 1 = " +
               rep.moments[1].value.to_string() + " (prec " + std::to_string(rep.moments[1].precision) +
               "), m1 level 2 = " + m1.value.to_string() + " (prec " + std::to_string(m1.precision) + ", val " +
               std::to_string(m1.value.valuation()) + ")";
    }, kTrivialZeroSeconds);

    criterion(4, "trivial zero r=2 at p=19", [&](bool& ok) {
        const auto a = P.at(19);
        std::string out;
        for (int n : {1, 2}) {
            const auto t = P.table(19, n, a);
            const auto rep = vanishing_report(P.chi, 19, t, kPrecision, a.sm);
            const auto& m1 = rep.moments[1];
            ok = ok && rep.r == 2 && rep.mass.is_zero() && m1.vanishes() && m1.precision >= n && rep.pass;
            out += "level " + std::to_string(n) + ": m0 = " + str(rep.mass) + ", m1 = " + m1.value.to_string() +
                   " == 0 mod 19^" + std::to_string(m1.precision) + "; ";
        }
        return out;
    });

    criterion(5, "p-integrality of the measure", [&](bool& ok) {
        std::string out;
        for (i64 p : {7, 11, 19}) {
            const auto a = P.at(p);
            for (int n : {1, 2}) {
                MeasureTable t;
                try {
                    t = P.table(p, n, a);
                } catch (const Error& e) {
                    ok = false;
                    out += e.what();
                    continue;
                }
                const int v = t.max_denominator_exponent();
                ok = ok && v == 0;
                out += "p=" + std::to_string(p) + " n=" + std::to_string(n) + " classes " +
                       std::to_string(t.mu.size()) + " max p-denominator exponent " + std::to_string(v) + "; ";
            }
        }
        return out;
    });

    criterion(6, "cocycle identities", [&](bool& ok) {
        std::string out;
        for (auto K : {qsqrt5(), qsqrt2(), cubic49()}) {
            const auto r = cocycle_suite(*K, unit_group(*K), kCocycleTuples, kCocyclePoints, 1);
            ok = ok && r.ok() && r.checks >= 2 * kCocycleTuples * kCocyclePoints;
            out += K->name() + " " + std::to_string(r.failures) + "/" + std::to_string(r.checks) + " failures; ";
        }
        return out;
    }, kCocycleSeconds);

    criterion(7, "Shintani cocycle certification", [&](bool& ok) {
        std::string out;
        for (auto K : {qsqrt5(), qsqrt2(), cubic49()}) {
            const auto r = psi_suite(*K, unit_group(*K), kPsiSamples, 2);
            const int expected = kPsiSamples * (K->degree() == 2 ? 2 : 1);
            ok = ok && r.ok() && r.checks == expected;
            out += K->name() + " " + std::to_string(r.failures) + "/" + std::to_string(r.checks) + " failures; ";
        }
        return out;
    });

    criterion(8, "subdivision and rescaling invariance", [&](bool& ok) {
        const auto a = P.at(7);
        int checks = 0, fails = 0;
        for (std::size_t i = 0; i < a.reps.size(); ++i) {
            const auto r = subdivision_suite(P.chi, a.sm, a.reps[i], kSubdivisionCases, 10 + i);
            checks += r.checks;
            fails += r.failures;
        }
        ok = fails == 0 && checks >= kSubdivisionCases;
        return std::to_string(fails) + "/" + std::to_string(checks) + " failures";
    });

    criterion(9, "Fourier duality at level 1", [&](bool& ok) {
        std::string out;
        for (i64 p : {7, 11, 19}) {
            const auto a = P.at(p);
            const auto t = P.table(p, 1, a);
            const auto r = fourier_consistency(P.chi, t, a.sm, P.A, a.reps);
            ok = ok && r.ok() && r.checks == 2 * t.G->order();
            out += "p=" + std::to_string(p) + " " + std::to_string(t.G->order()) + " characters, " +
                   std::to_string(r.failures) + " failures; ";
        }
        return out;
    });

    criterion(10, "refinement coherence", [&](bool& ok) {
        std::string out;
        for (i64 p : {7, 19}) {
            const auto a = P.at(p);
            const auto t1 = P.table(p, 1, a), t2 = P.table(p, 2, a);
            const auto r = refinement_suite(t1, t2, kPrecision);
            ok = ok && r.ok();
            out += "p=" + std::to_string(p) + " " + std::to_string(r.failures) + "/" + std::to_string(r.checks) +
                   " failures; ";
        }
        return out;
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
