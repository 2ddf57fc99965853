#include "shintani/units.hpp"
#include "shintani/errors.hpp"

#include <cmath>

namespace shintani {

bool is_unit(const FieldElement& x)
{
    if (x.is_zero() || !x.is_integral())
        return false;
    Rat n = x.norm();
    return n == 1 || n == -1;
}

std::vector<double> log_embedding(const FieldElement& x)
{
    std::vector<double> out;
    for (int i = 0; i < x.field().degree(); ++i)
        out.push_back(std::log(std::fabs(x.embed_approx(i))));
    return out;
}

FieldElement quadratic_order_generator(const NumberField& K)
{
    if (K.degree() != 2)
        math_error("WrongDegree", "quadratic fields only");
    const auto& one = K.one_coords();
    ExtGcd e = ext_gcd(one[0], one[1]);
    invariant(e.g == 1, "coordinates of 1 are primitive");
    // [[c0, -t], [c1, s]] is unimodular, so (1, w) is a Z-basis of O.
    return K.from_basis(std::vector<Int>{-e.t, e.s});
}

namespace {

bool perfect_square(const Int& n, Int& root)
{
    if (n < 0)
        return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root * root == n;
}

} // namespace

FieldElement fundamental_unit_d2(const NumberField& K, i64 max_b)
{
    const FieldElement w = quadratic_order_generator(K);
    const Rat tr = w.trace(), nm = w.norm();
    invariant(tr.get_den() == 1 && nm.get_den() == 1, "w is integral");
    const Int T = tr.get_num(), n = nm.get_num();
    // N(a + b w) = a^2 + T a b + n b^2.
    for (i64 bi = 1; bi <= max_b; ++bi) {
        const Int b(static_cast<long>(bi));
        for (int s : {-1, 1}) {
            Int disc = T * T * b * b - 4 * (n * b * b - s), r;
            if (!perfect_square(disc, r))
                continue;
            Int num = -T * b + r;
            if (mpz_even_p(num.get_mpz_t()) == 0)
                continue;
            Int a = num / 2;
            FieldElement u = K.from_rational(Rat(a)) + Rat(b) * w;
            invariant(is_unit(u), "Pell solution is a unit");
            return u;
        }
    }
    math_error("ExhaustedSearch", "no fundamental unit found; supply units in the field spec");
}

int log_orientation(const std::vector<FieldElement>& eps)
{
    if (eps.empty())
        return 1;
    const std::size_t d = eps.size() + 1;
    std::vector<std::vector<double>> M(d, std::vector<double>(d, 1.0));
    for (std::size_t k = 0; k + 1 < d; ++k)
        M[k] = log_embedding(eps[k]);
    double det = 1.0, scale = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < d; ++r)
            if (std::fabs(M[r][c]) > std::fabs(M[piv][c]))
                piv = r;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        scale = std::max(scale, std::fabs(M[c][c]));
        if (M[c][c] == 0.0)
            break;
        for (std::size_t r = c + 1; r < d; ++r) {
            double f = M[r][c] / M[c][c];
            for (std::size_t k = c; k < d; ++k)
                M[r][k] -= f * M[c][k];
        }
    }
    if (!(std::fabs(det) > 1e-9))
        math_error("DependentUnits", "units are multiplicatively dependent");
    return det > 0 ? 1 : -1;
}

UnitGroupData totally_positive_units(const NumberField& K, const std::vector<FieldElement>& units)
{
    const int d = K.degree();
    const std::size_t r = units.size();
    if (static_cast<int>(r) != d - 1)
        math_error("WrongUnitRank", "need d - 1 unit generators");
    std::vector<std::vector<int>> sg;
    for (const auto& u : units) {
        if (!is_unit(u))
            math_error("NotAUnit", u.to_string() + " is not a unit");
        sg.push_back(u.signs());
    }
    // Exponent vectors a with prod u^a of constant sign: 2 Z^r plus the subsets that qualify.
    IntMatrix gens(r, r + (std::size_t{1} << r));
    std::size_t col = 0;
    for (std::size_t j = 0; j < r; ++j)
        gens(j, col++) = 2;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        std::vector<int> s(d, 1);
        for (std::size_t j = 0; j < r; ++j)
            if (mask & (1u << j))
                for (int i = 0; i < d; ++i)
                    s[i] *= sg[j][i];
        bool constant = true;
        for (int i = 1; i < d; ++i)
            constant = constant && s[i] == s[0];
        if (constant) {
            for (std::size_t j = 0; j < r; ++j)
                gens(j, col) = (mask >> j) & 1u;
            ++col;
        }
    }
    IntMatrix B = hnf_basis(gens);
    UnitGroupData out;
    for (std::size_t k = 0; k < r; ++k) {
        FieldElement e = K.one();
        for (std::size_t j = 0; j < r; ++j)
            e = e * units[j].pow(B(j, k).get_si());
        if (e.embedding_sign(0) < 0)
            e = -e;
        invariant(totally_positive(e), "E_+ basis element is totally positive");
        out.eps.push_back(e);
    }
    if (d == 2 && out.eps[0].embed_approx(1) < 1.0)
        out.eps[0] = out.eps[0].inverse();
    out.mu = log_orientation(out.eps);
    return out;
}

UnitGroupData unit_group(const NumberField& K)
{
    std::vector<FieldElement> units;
    for (const auto& c : K.spec().units)
        units.push_back(K.from_power(c));
    if (units.empty()) {
        if (K.degree() != 2)
            config_error("UnitsRequired", "units required for fields of degree " + std::to_string(K.degree()));
        units.push_back(fundamental_unit_d2(K));
    }
    return totally_positive_units(K, units);
}

} // namespace shintani
