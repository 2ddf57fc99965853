#include <doctest.h>

#include <random>

#include "fields.hpp"
#include "shintani/errors.hpp"
#include "shintani/lseries.hpp"
#include "shintani/oracle.hpp"
#include "shintani/suites.hpp"

using namespace shintani;
using namespace shintani::testing;

namespace {

struct Setup {
    FieldPtr K = qsqrt5();
    UnitGroupData units = unit_group(*K);
    HeckeCharacter chi = norm_induced_character(*K, DirichletCharacter::kronecker(-3), units);
    ConeFunction A = pipeline_cone_function(*K, units);
};

const Setup& setup()
{
    static const Setup s;
    return s;
}

CyclotomicNumber lsp(const HeckeCharacter& chi, i64 p, const SmoothingData& sm)
{
    const auto& s = setup();
    const auto reps = class_representatives(chi, p, sm);
    const CyclotomicNumber v = lvalue_smoothed(chi, p, sm, s.A, reps);
    return (v / (CyclotomicNumber::rational(1) - Rat(static_cast<long>(sm.q)) * chi.value(sm.Q.ideal))).reduced();
}

} // namespace

TEST_SUITE("solomon_hu") {

TEST_CASE("classical smoothed zeta(0)")
{
    auto K = qsqrt5();
    const Ideal O = Ideal::unit(*K);
    for (i64 q : {11, 19, 29}) {
        const SmoothingData sm = make_smoothing_data(*K, q);
        const auto tf = trivial_test_function(O, O);
        const auto v = smoothed_cone_ev0({K->one()}, tf, sm);
        CHECK(v == CyclotomicNumber::rational(make_rat(q - 1, 2)));
        CHECK(smoothed_cone_ev0_direct({K->one()}, tf, sm) == v);
    }
    const auto T = smoothing_table({1}, 11);
    CHECK(-T[1] == CyclotomicNumber::rational(5).rational_value());
}

TEST_CASE("closed form against the explicit sum")
{
    const auto& s = setup();
    const SmoothingData sm = make_smoothing_data(*s.K, 11);
    const auto reps = class_representatives(s.chi, 7, sm);
    std::mt19937_64 rng(12);
    int done = 0;
    while (done < 8) {
        FieldElement x1 = random_totally_positive(*s.K, 4, rng), x2 = random_totally_positive(*s.K, 4, rng);
        if (det_sign({x1, x2}) == 0 || sm.residue(x1) == 0 || sm.residue(x2) == 0)
            continue;
        const auto tf = ideal_test_function(reps[0], s.chi);
        CHECK(smoothed_cone_ev0({x1, x2}, tf, sm) == smoothed_cone_ev0_direct({x1, x2}, tf, sm));
        CHECK(smoothed_cone_ev0({x1}, tf, sm) == smoothed_cone_ev0_direct({x1}, tf, sm));
        ++done;
    }
}

TEST_CASE("vanishing test function and generator conditions")
{
    const auto& s = setup();
    const SmoothingData sm = make_smoothing_data(*s.K, 11);
    const Ideal O = Ideal::unit(*s.K);
    TestFunction zero = trivial_test_function(O, O);
    zero.exponent = [](const std::vector<i64>&) -> std::optional<i64> { return std::nullopt; };
    CHECK(smoothed_cone_ev0({s.K->one(), s.units.eps[0]}, zero, sm).is_zero());
    try {
        smoothed_cone_ev0({s.K->from_rational(11)}, trivial_test_function(O, O), sm);
        FAIL("non-unit generator accepted");
    } catch (const Error& e) {
        CHECK(e.code() == "GeneratorNotUnitAtQ");
    }
}

TEST_CASE("subdivision and rescaling")
{
    const auto& s = setup();
    const SmoothingData sm = make_smoothing_data(*s.K, 11);
    const auto reps = class_representatives(s.chi, 7, sm);
    const auto rep = subdivision_suite(s.chi, sm, reps[0], 20, 3);
    CHECK(rep.checks >= 40);
    CHECK(rep.ok());
}

TEST_CASE("decomposition independence and linearity")
{
    const auto& s = setup();
    const SmoothingData sm = make_smoothing_data(*s.K, 11);
    const Ideal O = Ideal::unit(*s.K);
    const auto tf = trivial_test_function(O, O);
    const auto a = smoothed_zeta0(s.A, tf, sm);
    CHECK(a.is_rational());
    CHECK(a == smoothed_zeta0(shintani_d2(*s.K, s.units), tf, sm));
    ConeFunction twice = s.A;
    for (const auto& t : s.A.terms())
        twice.add(t.weight, t.cone);
    CHECK(smoothed_zeta0(twice, tf, sm) == Rat(2) * a);
}

TEST_CASE("S_p-truncated L-values")
{
    const auto& s = setup();
    CHECK(lsp(s.chi, 11, choose_smoothing_prime(s.chi, 11, 4)) == CyclotomicNumber::rational(make_rat(8, 3)));
    CHECK(lsp(s.chi, 7, choose_smoothing_prime(s.chi, 7, 4)).is_zero());
    CHECK(lsp(s.chi, 11, choose_smoothing_prime(s.chi, 11, 4, 19)) == CyclotomicNumber::rational(make_rat(8, 3)));
}

TEST_CASE("higher-order norm-induced character")
{
    const auto& s = setup();
    const auto psi = DirichletCharacter::from_generators(7, {1});
    const auto chi = norm_induced_character(*s.K, psi, s.units);
    REQUIRE(chi.is_totally_odd());
    const i64 p = 11;
    const auto expect = (norm_induced_l0(*s.K, psi) * euler_factor_at_p(chi, p)).reduced();
    CHECK(lsp(chi, p, choose_smoothing_prime(chi, p, 4)) == expect);
    CHECK(lsp(chi.inverse(), p, choose_smoothing_prime(chi, p, 4)) ==
          (norm_induced_l0(*s.K, psi.inverse()) * euler_factor_at_p(chi.inverse(), p)).reduced());
}

TEST_CASE("not totally odd")
{
    const auto& s = setup();
    const auto chi = norm_induced_character(*s.K, DirichletCharacter::kronecker(5), s.units);
    const SmoothingData sm = make_smoothing_data(*s.K, 11);
    try {
        lvalue_smoothed(chi, 7, sm, s.A, class_representatives(chi, 7, sm));
        FAIL("even character accepted");
    } catch (const Error& e) {
        CHECK(e.code() == "NotTotallyOdd");
    }
}

}
