#include <doctest.h>

#include <random>

#include "fields.hpp"
#include "shintani/cyclotomic.hpp"
#include "shintani/errors.hpp"
#include "shintani/ideal.hpp"
#include "shintani/padic.hpp"

using namespace shintani;
using namespace shintani::testing;

TEST_SUITE("algebra") {

TEST_CASE("real embeddings")
{
    FieldSpec s;
    s.minpoly = {-5, 0, 1};
    s.integral_basis = {{1, 0}, {make_rat(1, 2), make_rat(1, 2)}};
    auto K = NumberField::create(s);
    CHECK(K->degree() == 2);
    const auto& r = K->root_intervals();
    REQUIRE(r.size() == 2);
    CHECK(r[0].lo >= -3);
    CHECK(r[0].hi <= -2);
    CHECK(r[1].lo >= 2);
    CHECK(r[1].hi <= 3);
    CHECK(cubic49()->degree() == 3);

    FieldSpec bad;
    bad.minpoly = {1, 0, 1};
    try {
        NumberField::create(bad);
        FAIL("complex field accepted");
    } catch (const Error& e) {
        CHECK(e.code() == "NotTotallyReal");
        CHECK(e.kind() == ErrorKind::Config);
    }
}

TEST_CASE("determinant signs")
{
    auto K = qsqrt5();
    const FieldElement phi = K->theta();
    // sigma_1 is the smaller root, so sigma_1(phi) < 0 < sigma_2(phi).
    CHECK(det_sign({K->one(), phi}) == 1);
    CHECK(det_sign({phi, K->one()}) == -1);
    CHECK(det_sign({K->one(), K->from_rational(2)}) == 0);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int i = 0; i < 50; ++i) {
        FieldElement a = K->from_basis(std::vector<Rat>{c(rng), c(rng)});
        FieldElement b = K->from_basis(std::vector<Rat>{c(rng), c(rng)});
        CHECK(det_sign({a, b}) == det_sign_rational({a, b}));
    }
}

TEST_CASE("total positivity")
{
    auto K = qsqrt5();
    const FieldElement phi = K->theta();
    CHECK_FALSE(totally_positive(phi));
    CHECK(totally_positive(phi * phi));
    CHECK_FALSE(totally_positive(K->from_rational(-1)));
}

TEST_CASE("norms are multiplicative")
{
    auto K = cubic49();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-7, 7);
    for (int i = 0; i < 30; ++i) {
        FieldElement a = K->from_power({c(rng), c(rng), c(rng)});
        FieldElement b = K->from_power({c(rng), c(rng), c(rng)});
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
    CHECK(abs(K->theta().norm()) == 1);
}

TEST_CASE("prime factorization")
{
    auto K = qsqrt5();
    auto p11 = factor_rational_prime(*K, 11);
    REQUIRE(p11.size() == 2);
    CHECK(p11[0].norm() == 11);
    CHECK(p11[1].norm() == 11);
    auto p7 = factor_rational_prime(*K, 7);
    REQUIRE(p7.size() == 1);
    CHECK(p7[0].norm() == 49);
    auto p5 = factor_rational_prime(*K, 5);
    REQUIRE(p5.size() == 1);
    CHECK(p5[0].e == 2);
}

TEST_CASE("ideal arithmetic")
{
    auto K = qsqrt5();
    auto a = Ideal::from_integer(*K, 6);
    auto P = factor_rational_prime(*K, 11)[0].ideal;
    CHECK((a * P).norm() == a.norm() * P.norm());
    CHECK((P * P.inverse()).is_unit());
    CHECK(P.contains(Rat(11) * K->theta()));
    CHECK_FALSE(P.contains(K->one()));
}

TEST_CASE("cyclotomic arithmetic")
{
    for (int q : {5, 7, 12}) {
        CyclotomicNumber s(q);
        for (int j = 0; j < q; ++j)
            s += CyclotomicNumber::zeta(q, j);
        CHECK(s.is_zero());
        CyclotomicNumber t(q);
        for (int j = 1; j < q; ++j)
            if (std::gcd(j, q) == 1)
                t += CyclotomicNumber::zeta(q, j);
        CHECK(t.is_rational());
    }
    const auto z = CyclotomicNumber::zeta(7);
    const auto one = CyclotomicNumber::rational(1, 7);
    CHECK((one - z) * (one - z).inverse() == one);
}

TEST_CASE("p-adic embedding")
{
    auto seven = padic_embed(CyclotomicNumber::rational(7), 7, 3);
    CHECK(seven.valuation() == 1);
    CHECK(seven.unit_part()[0] == 1);
    auto z3 = padic_embed(CyclotomicNumber::zeta(3), 7, 2, 3);
    // least root 2 of x^2 + x + 1 mod 7, lifted
    CHECK(z3.coeffs()[0] == 30);
    auto w = padic_embed(CyclotomicNumber::rational(1, 11) - CyclotomicNumber::zeta(11), 7, 4, 11);
    CHECK(w.valuation() == 0);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-20, 20);
    for (int i = 0; i < 20; ++i) {
        std::vector<Rat> a(4), b(4);
        for (auto& x : a)
            x = c(rng);
        for (auto& x : b)
            x = c(rng);
        CyclotomicNumber u(5, a), v(5, b);
        CHECK(padic_embed(u * v, 11, 4, 5) == padic_embed(u, 11, 4, 5) * padic_embed(v, 11, 4, 5));
    }
}

TEST_CASE("p-adic logarithm")
{
    CHECK(padic_log(1, 7, 4) == 0);
    Int series = 0;
    Int p4 = 2401;
    // log(1 + 7) = sum (-1)^{k+1} 7^k / k, terms k >= 5 vanish mod 7^4 except k = 7 contributes 7^6 / 7.
    for (int k = 1; k <= 12; ++k) {
        Int pk = 1;
        for (int i = 0; i < k; ++i)
            pk *= 7;
        Rat term = make_rat(pk, Int(k));
        if (k % 2 == 0)
            term = -term;
        series += Int(rat_mod(term, 2401));
    }
    CHECK(padic_log(8, 7, 4) == mod(series, p4));
    const Int u = 6;
    const Int l = padic_log(u, 7, 4);
    Int up = 1;
    for (int i = 0; i < 6; ++i)
        up = mod(up * u, p4);
    CHECK(padic_exp(mod(Int(6) * l, p4), 7, 4) == up);
}

}
