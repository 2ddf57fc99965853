#include <doctest.h>

#include <random>

#include "fields.hpp"
#include "shintani/cones.hpp"
#include "shintani/errors.hpp"
#include "shintani/parallelepiped.hpp"
#include "shintani/units.hpp"

using namespace shintani;
using namespace shintani::testing;

TEST_SUITE("cones") {

TEST_CASE("lex signs")
{
    CHECK(lex_det_sign({{{Rat(3)}, {Rat(-7)}}}) == 1);
    CHECK(lex_det_sign({{{Rat(0)}, {Rat(-2)}, {Rat(5)}}}) == -1);
    CHECK(lex_det_sign({{{Rat(0)}}}) == 0);
    // det [[1, t_2], [0, 1 - t_2]] has constant term 1
    CHECK(lex_det_sign({{{Rat(1), Rat(0)}}, {{Rat(0), Rat(1)}, {Rat(1), Rat(-1)}}}) == 1);
}

TEST_CASE("perturbed membership")
{
    auto K = qsqrt5();
    PerturbationContext ctx(*K);
    const FieldElement eps = K->theta() * K->theta();
    const std::vector<FieldElement> u{K->one(), eps};
    CHECK(perturbed_membership(ctx, u, K->one() + eps));
    CHECK_FALSE(perturbed_membership(ctx, u, K->from_rational(-1)));
    // Boundary ray of 1 lies outside the perturbed cone under the ascending embedding order.
    CHECK_FALSE(perturbed_membership(ctx, u, K->one()));
    CHECK(perturbed_membership(ctx, u, eps));
}

TEST_CASE("orientation")
{
    auto K = qsqrt5();
    PerturbationContext ctx(*K);
    const FieldElement eps = K->theta() * K->theta();
    CHECK(cocycle_orientation(ctx, {K->one(), eps}) == det_sign({K->one(), eps}));
    CHECK(cocycle_orientation(ctx, {eps, K->one()}) == -cocycle_orientation(ctx, {K->one(), eps}));
    const int s = cocycle_orientation(ctx, {K->one(), K->one()});
    CHECK((s == 1 || s == -1));
}

TEST_CASE("face decomposition")
{
    auto K = qsqrt5();
    PerturbationContext ctx(*K);
    const FieldElement eps = K->theta() * K->theta();
    auto C = face_decompose(ctx, {K->one(), eps});
    CHECK(C.face_included(3));
    CHECK(C.face_included(1) != C.face_included(2));
    CHECK_THROWS_AS(face_decompose(ctx, {K->one(), K->one()}), Error);

    std::mt19937_64 rng(11);
    CHECK(verify_face_homogeneity(ctx, {K->one(), eps}, C, 50, rng) == 0);
    for (int i = 0; i < 500; ++i) {
        FieldElement v = random_totally_positive(*K, 30, rng);
        const bool open = HalfOpenCone::open({K->one(), eps}).contains(v);
        const bool closed = HalfOpenCone::closed({K->one(), eps}).contains(v);
        const bool pert = perturbed_membership(ctx, {K->one(), eps}, v);
        CHECK((!open || pert));
        CHECK((!pert || closed));
        CHECK(C.contains(v) == pert);
    }
}

TEST_CASE("parallelepiped points")
{
    auto K = qsqrt5();
    const FieldElement eps = K->one() + K->theta();
    const Ideal O = Ideal::unit(*K);
    auto one = enumerate_parallelepiped(O, {K->one(), eps});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == K->one() + eps);
    CHECK(enumerate_parallelepiped(O, {K->from_rational(2), Rat(2) * eps}).size() == 4);
    auto line = enumerate_parallelepiped(O, {K->from_rational(3)});
    REQUIRE(line.size() == 3);
    std::vector<Rat> got;
    for (const auto& x : line)
        got.push_back(x.coords()[0]);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<Rat>{1, 2, 3});
}

TEST_CASE("cone function evaluation")
{
    auto K = qsqrt5();
    const FieldElement eps = K->theta() * K->theta();
    ConeFunction f;
    f.add(1, HalfOpenCone::open({K->one(), eps}));
    CHECK(f.evaluate(K->one()) == 0);
    ConeFunction g;
    g.add(1, HalfOpenCone({K->one(), eps}, {false, true, false, true}));
    CHECK(g.evaluate(K->from_rational(2)) == 1);
    ConeFunction h = f;
    h.add(-1, HalfOpenCone::open({K->one(), eps}));
    CHECK(h.evaluate(K->one() + eps) == 0);
}

}
