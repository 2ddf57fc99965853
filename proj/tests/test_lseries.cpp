#include <doctest.h>

#include "fields.hpp"
#include "shintani/lseries.hpp"
#include "shintani/suites.hpp"

using namespace shintani;
using namespace shintani::testing;

namespace {

struct Run {
    HeckeCharacter chi;
    SmoothingData sm;
    ConeFunction A;
    std::vector<Ideal> reps;
};

Run make_run(i64 p)
{
    auto K = qsqrt5();
    const auto units = unit_group(*K);
    auto chi = norm_induced_character(*K, DirichletCharacter::kronecker(-3), units);
    auto sm = choose_smoothing_prime(chi, p, 4);
    auto reps = class_representatives(chi, p, sm);
    return {chi, sm, pipeline_cone_function(*K, units), reps};
}

} // namespace

TEST_SUITE("lseries") {

TEST_CASE("measure tables")
{
    const Run r = make_run(7);
    const MeasureTable t = build_measure_table(r.chi, 7, 1, r.sm, r.A, r.reps);
    CHECK(t.mu.size() == static_cast<std::size_t>(t.G->order()));
    CHECK(t.mass().is_zero());
    CHECK(t.max_denominator_exponent() == 0);
    bool nonzero = false;
    for (const auto& x : t.mu)
        nonzero = nonzero || !x.is_zero();
    CHECK(nonzero);

    const Run s = make_run(11);
    const MeasureTable u = build_measure_table(s.chi, 11, 1, s.sm, s.A, s.reps);
    const auto f = CyclotomicNumber::rational(1) - Rat(static_cast<long>(s.sm.q)) * s.chi.inverse().value(s.sm.Q.ideal);
    CHECK(u.mass() == (f * CyclotomicNumber::rational(make_rat(8, 3))).reduced());
}

TEST_CASE("log moments")
{
    const Run r = make_run(7);
    const MeasureTable t1 = build_measure_table(r.chi, 7, 1, r.sm, r.A, r.reps);
    const MeasureTable t2 = build_measure_table(r.chi, 7, 2, r.sm, r.A, r.reps);
    const LogMoment m0 = log_moment(t1, 0, 4);
    REQUIRE(m0.exact.has_value());
    CHECK(m0.exact->is_zero());
    CHECK(m0.precision == 4);
    const LogMoment a = log_moment(t1, 1, 4), b = log_moment(t2, 1, 4);
    CHECK(a.precision == 1);
    CHECK(b.precision == 2);
    CHECK(a.value.congruent(b.value, 1));
    CHECK(b.value.valuation() == 1);
    CHECK_FALSE(b.vanishes());
    CHECK(log_moment(t2, 2, 4).precision == 3);
}

TEST_CASE("refinement and duality")
{
    const Run r = make_run(7);
    const MeasureTable t1 = build_measure_table(r.chi, 7, 1, r.sm, r.A, r.reps);
    const MeasureTable t2 = build_measure_table(r.chi, 7, 2, r.sm, r.A, r.reps);
    CHECK(refinement_suite(t1, t2, 4).ok());
    const auto f = fourier_consistency(r.chi, t1, r.sm, r.A, r.reps);
    CHECK(f.checks == 2 * t1.G->order());
    CHECK(f.ok());
    const auto g = fourier_consistency(r.chi, t2, r.sm, r.A, r.reps, {}, 12);
    CHECK(g.checks == 12);
    CHECK(g.ok());
}

TEST_CASE("vanishing reports")
{
    VanishingOptions o;
    o.n = 2;
    auto K = qsqrt5();
    auto chi = norm_induced_character(*K, DirichletCharacter::kronecker(-3), unit_group(*K));
    auto r7 = vanishing_report(chi, 7, o);
    CHECK(r7.r == 1);
    CHECK(r7.pass);
    CHECK(r7.mass.is_zero());
    auto r19 = vanishing_report(chi, 19, o);
    CHECK(r19.r == 2);
    CHECK(r19.pass);
    CHECK(r19.moments[1].precision == 2);
    CHECK(r19.moments[1].vanishes());
    auto r11 = vanishing_report(chi, 11, o);
    CHECK(r11.r == 0);
    CHECK(r11.pass);
    CHECK_FALSE(r11.mass.is_zero());
    CHECK(r11.lvalue_dual == CyclotomicNumber::rational(make_rat(8, 3)));
    o.q = 29;
    auto r11b = vanishing_report(chi, 11, o);
    CHECK(r11b.smoothing.q == 29);
    CHECK(r11b.lvalue_dual == r11.lvalue_dual);
}

}
