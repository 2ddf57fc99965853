#include <doctest.h>

#include <random>

#include "fields.hpp"
#include "shintani/cocycle.hpp"
#include "shintani/suites.hpp"

using namespace shintani;
using namespace shintani::testing;

TEST_SUITE("cocycle") {

TEST_CASE("evaluation at points")
{
    auto K = qsqrt5();
    PerturbationContext ctx(*K);
    const FieldElement eps = K->theta() * K->theta();
    CHECK(z_eval(ctx, {K->one(), eps}, K->one() + eps) == cocycle_orientation(ctx, {K->one(), eps}));
    CHECK(z_eval(ctx, {K->one(), eps}, -eps) == 0);
}

TEST_CASE("cocycle identities")
{
    auto K = qsqrt5();
    PerturbationContext ctx(*K);
    const FieldElement eps = K->theta() * K->theta();
    std::mt19937_64 rng(2);
    std::vector<FieldElement> pts;
    for (int i = 0; i < 100; ++i)
        pts.push_back(random_totally_positive(*K, 15, rng));
    CHECK(cocycle_identity_check(ctx, {K->one(), eps, eps * eps}, pts).ok());
    CHECK(cocycle_identity_check(ctx, {K->one(), K->one(), eps}, pts).ok());
    for (int i = 0; i < 20; ++i)
        CHECK(equivariance_check(ctx, {K->one(), eps}, random_totally_positive(*K, 5, rng), pts).ok());

    auto C = cubic49();
    CHECK(cocycle_suite(*C, unit_group(*C), 10, 50, 9).ok());
}

TEST_CASE("capped class for real quadratic fields")
{
    auto K = qsqrt5();
    const auto units = unit_group(*K);
    PerturbationContext ctx(*K);
    const auto cap = cap_with_units(ctx, units);
    CHECK(cap.rep.terms().size() == 1);
    const FieldElement eps = cap.units.eps[0];
    CHECK(eps == K->theta() * K->theta());
    CHECK(translate_sum(cap.rep, cap.units, K->one()) == 1);
    CHECK(translate_sum(cap.rep, cap.units, eps) == 1);
    CHECK(translate_sum(cap.rep, cap.units, K->one() + eps) == 1);
    CHECK(psi_suite(*K, units, 200, 4).ok());
}

TEST_CASE("classical domain and broken domains")
{
    auto K = qsqrt5();
    const auto units = unit_group(*K);
    std::mt19937_64 rng(8);
    const ConeFunction A = shintani_d2(*K, units);
    CHECK(verify_psi(A, units, 200, rng).ok());
    ConeFunction broken;
    broken.add(1, HalfOpenCone::open({K->one(), units.eps[0]}));
    CHECK(translate_sum(broken, units, K->one()) == 0);
    ConeFunction twice = A;
    for (const auto& t : A.terms())
        twice.add(t.weight, t.cone);
    CHECK(verify_psi(twice, units, 50, rng).failures == 50);
}

TEST_CASE("cubic field capped class")
{
    auto K = cubic49();
    const auto units = unit_group(*K);
    PerturbationContext ctx(*K);
    const auto cap = cap_with_units(ctx, units);
    CHECK(cap.rep.terms().size() == 2);
    std::mt19937_64 rng(6);
    CHECK(verify_psi(cap.rep, cap.units, 100, rng).ok());
}

}
