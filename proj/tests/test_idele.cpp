#include <doctest.h>

#include <random>

#include "fields.hpp"
#include "shintani/character.hpp"
#include "shintani/errors.hpp"
#include "shintani/oracle.hpp"
#include "shintani/solomon_hu.hpp"

using namespace shintani;
using namespace shintani::testing;

namespace {

std::shared_ptr<const RayClassGroup> ray(FieldPtr K, i64 m)
{
    return std::make_shared<const RayClassGroup>(*K, Ideal::from_integer(*K, m), unit_group(*K));
}

} // namespace

TEST_SUITE("idele") {

TEST_CASE("narrow ray class group orders")
{
    CHECK(ray(qsqrt5(), 3)->order() == 2);
    CHECK(ray(qsqrt5(), 1)->order() == 1);
    CHECK(ray(qsqrt2(), 1)->order() == 1);
    for (i64 m : {2, 3, 4, 5, 7, 9, 11, 12, 49})
        for (auto K : {qsqrt5(), qsqrt2()}) {
            auto G = ray(K, m);
            CHECK(G->order() == G->cardinality_formula());
        }
}

TEST_CASE("discrete logarithms")
{
    auto K = qsqrt5();
    auto G = ray(K, 21);
    for (std::size_t i = 0; i < G->group().rank(); ++i) {
        auto c = G->dlog(G->generator_ideal(i));
        std::vector<i64> e(G->group().rank(), 0);
        e[i] = 1;
        CHECK(c == e);
    }
    const FieldElement alpha = K->one() + Rat(21) * (K->theta() + K->from_rational(3));
    REQUIRE(totally_positive(alpha));
    CHECK(G->group().is_zero(G->dlog(Ideal::principal(alpha))));

    auto ideals = integral_ideals_up_to(*K, 80, 21);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> pick(0, ideals.size() - 1);
    for (int t = 0; t < 30; ++t) {
        const Ideal& a = ideals[pick(rng)];
        const Ideal& b = ideals[pick(rng)];
        const auto ca = G->dlog(a), cb = G->dlog(b);
        CHECK(G->dlog(a * b) == G->group().add(ca, cb));
        CHECK(G->dlog_witness(a, ca).has_value());
    }
    CHECK_THROWS_AS(G->dlog(factor_rational_prime(*K, 3)[0].ideal), Error);
}

TEST_CASE("norm-induced characters")
{
    auto K = qsqrt5();
    const auto units = unit_group(*K);
    auto chi3 = norm_induced_character(*K, DirichletCharacter::kronecker(-3), units);
    CHECK(chi3.order() == 2);
    CHECK(chi3.group().order() == 2);
    CHECK(chi3.conductor().norm() == 9);
    CHECK(chi3.is_totally_odd());
    CHECK_FALSE(chi3.is_trivial());

    auto chi4 = norm_induced_character(*K, DirichletCharacter::kronecker(-4), units);
    CHECK(chi4.order() == 2);
    CHECK(chi4.conductor() == Ideal::from_integer(*K, 4));
    CHECK(chi4.is_totally_odd());

    auto triv = norm_induced_character(*K, DirichletCharacter::trivial(), units);
    CHECK(triv.is_trivial());
    CHECK_FALSE(triv.is_totally_odd());

    auto chi5 = norm_induced_character(*K, DirichletCharacter::kronecker(5), units);
    CHECK_FALSE(chi5.is_totally_odd());
}

TEST_CASE("local splitting at p")
{
    auto K = qsqrt5();
    auto chi = norm_induced_character(*K, DirichletCharacter::kronecker(-3), unit_group(*K));
    CHECK(local_split_at_p(chi, 7).r == 1);
    CHECK(local_split_at_p(chi, 19).r == 2);
    CHECK(local_split_at_p(chi, 11).r == 0);
    CHECK(local_split_at_p(chi, 5).S1.size() + local_split_at_p(chi, 5).S2.size() == 1);
    try {
        local_split_at_p(chi, 3);
        FAIL("ramified p accepted");
    } catch (const Error& e) {
        CHECK(e.code() == "RamifiedAtP");
    }
}

TEST_CASE("cyclotomic character")
{
    auto K = qsqrt5();
    auto G = ray(K, 49);
    const auto values = cyclotomic_character_values(*G, 7, 2);
    const auto& A = G->group();
    for (i64 q : {11, 19, 29}) {
        for (const auto& Q : factor_rational_prime(*K, q)) {
            const i64 expect = mod64(ipow(q, static_cast<unsigned>(Q.f)), 49);
            CHECK(cyclotomic_char(values, G->dlog(Q.ideal), 49) == expect);
        }
    }
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<i64> pick(0, A.order() - 1);
    for (int t = 0; t < 30; ++t) {
        auto a = A.element(pick(rng)), b = A.element(pick(rng));
        CHECK(cyclotomic_char(values, A.add(a, b), 49) ==
              mulmod(cyclotomic_char(values, a, 49), cyclotomic_char(values, b, 49), 49));
    }
}

TEST_CASE("character orthogonality")
{
    auto G = ray(qsqrt5(), 21);
    for (const auto& chi : all_characters(G)) {
        CyclotomicNumber s;
        for (i64 c = 0; c < G->order(); ++c)
            s += chi.value(G->group().element(c));
        if (chi.is_trivial())
            CHECK(s == CyclotomicNumber::rational(Rat(static_cast<long>(G->order()))));
        else
            CHECK(s.is_zero());
    }
}

TEST_CASE("Dirichlet characters and Bernoulli numbers")
{
    CHECK(kronecker(-3, 7) == 1);
    CHECK(kronecker(-3, 5) == -1);
    CHECK(kronecker(5, 2) == -1);
    CHECK(dirichlet_l0(DirichletCharacter::kronecker(-3)) == CyclotomicNumber::rational(make_rat(1, 3)));
    CHECK(dirichlet_l0(DirichletCharacter::kronecker(-4)) == CyclotomicNumber::rational(make_rat(1, 2)));
    CHECK(dirichlet_l0(DirichletCharacter::kronecker(-15)) == CyclotomicNumber::rational(2));
    const auto psi = DirichletCharacter::from_generators(7, {1});
    CHECK(psi.order() == 6);
    CHECK(psi.is_odd());
    CHECK((psi * psi.inverse()).is_trivial());
    CHECK(psi.generator_values() == std::vector<i64>{1});
}

TEST_CASE("norm-induced oracle")
{
    auto K = qsqrt5();
    CHECK(norm_induced_l0(*K, DirichletCharacter::kronecker(-3)) == CyclotomicNumber::rational(make_rat(2, 3)));
}

TEST_CASE("smoothing prime choice")
{
    auto K = qsqrt5();
    auto chi = norm_induced_character(*K, DirichletCharacter::kronecker(-3), unit_group(*K));
    CHECK(choose_smoothing_prime(chi, 7, 4).q == 11);
    CHECK(choose_smoothing_prime(chi, 7, 4, 11).q == 19);
    auto L = qsqrt2();
    auto triv = HeckeCharacter::trivial(ray(L, 1));
    CHECK(choose_smoothing_prime(triv, 3, 4).q == 7);
}

}
