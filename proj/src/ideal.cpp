#include "shintani/ideal.hpp"
#include "shintani/errors.hpp"
#include "shintani/modpoly.hpp"

#include <algorithm>

namespace shintani {

std::vector<Int> multiply_coords(const NumberField& K, const std::vector<Int>& a, const std::vector<Int>& b)
{
    const int d = K.degree();
    const auto& C = K.structure_constants();
    std::vector<Int> r(d);
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < d; ++j) {
            if (b[j] == 0)
                continue;
            Int ab = a[i] * b[j];
            for (int k = 0; k < d; ++k)
                if (C[i][j][k] != 0)
                    r[k] += ab * C[i][j][k];
        }
    }
    return r;
}

IntMatrix multiplication_matrix_coords(const NumberField& K, const std::vector<Int>& a)
{
    const int d = K.degree();
    IntMatrix M(d, d);
    for (int i = 0; i < d; ++i) {
        std::vector<Int> e(d);
        e[i] = 1;
        auto col = multiply_coords(K, a, e);
        for (int k = 0; k < d; ++k)
            M(k, i) = col[k];
    }
    return M;
}

Ideal::Ideal(const NumberField* K, IntMatrix H, Int den) : K_(K), H_(std::move(H)), den_(std::move(den)) {}

Ideal Ideal::from_integer_columns(const NumberField* K, const IntMatrix& cols, const Int& den)
{
    IntMatrix H = hnf_basis(cols);
    Int g = den;
    for (std::size_t i = 0; i < H.rows(); ++i)
        for (std::size_t j = 0; j < H.cols(); ++j)
            g = gcd(g, H(i, j));
    if (g != 1)
        for (std::size_t i = 0; i < H.rows(); ++i)
            for (std::size_t j = 0; j < H.cols(); ++j)
                H(i, j) /= g;
    return Ideal(K, std::move(H), den / g);
}

Ideal Ideal::unit(const NumberField& K) { return from_integer(K, 1); }

Ideal Ideal::from_integer(const NumberField& K, const Int& n)
{
    const int d = K.degree();
    IntMatrix H(d, d);
    for (int i = 0; i < d; ++i)
        H(i, i) = abs(n);
    if (n == 0)
        math_error("ZeroElement", "zero ideal");
    return Ideal(&K, std::move(H), 1);
}

Ideal Ideal::from_coords(const NumberField& K, const std::vector<std::vector<Rat>>& vecs)
{
    const int d = K.degree();
    Int den = 1;
    for (const auto& v : vecs)
        for (const auto& x : v)
            den = lcm(den, x.get_den());
    IntMatrix cols(d, vecs.size());
    for (std::size_t j = 0; j < vecs.size(); ++j)
        for (int i = 0; i < d; ++i) {
            Rat y = vecs[j][i] * Rat(den);
            cols(i, j) = y.get_num();
        }
    return from_integer_columns(&K, cols, den);
}

Ideal Ideal::from_generators(const NumberField& K, const std::vector<FieldElement>& gens)
{
    const int d = K.degree();
    std::vector<std::vector<Rat>> vecs;
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        for (int i = 0; i < d; ++i) {
            std::vector<Rat> e(d);
            e[i] = 1;
            vecs.push_back((g * K.from_basis(e)).basis_coords());
        }
    }
    if (vecs.empty())
        math_error("ZeroElement", "zero ideal");
    return from_coords(K, vecs);
}

Ideal Ideal::principal(const FieldElement& x) { return from_generators(x.field(), {x}); }

bool Ideal::is_unit() const
{
    if (den_ != 1)
        return false;
    for (std::size_t i = 0; i < H_.rows(); ++i)
        if (H_(i, i) != 1)
            return false;
    return true;
}

Rat Ideal::norm() const
{
    Int det = 1;
    for (std::size_t i = 0; i < H_.rows(); ++i)
        det *= H_(i, i);
    Int dd;
    mpz_pow_ui(dd.get_mpz_t(), den_.get_mpz_t(), H_.rows());
    return make_rat(det, dd);
}

bool Ideal::contains_coords(const std::vector<Rat>& c) const
{
    // Back substitution in the upper triangular basis.
    const int d = static_cast<int>(H_.rows());
    std::vector<Rat> v(d);
    for (int i = 0; i < d; ++i)
        v[i] = c[i] * Rat(den_);
    for (int i = d - 1; i >= 0; --i) {
        Rat y = v[i] / Rat(H_(i, i));
        if (y.get_den() != 1)
            return false;
        for (int k = 0; k <= i; ++k)
            v[k] -= y * Rat(H_(k, i));
    }
    return true;
}

bool Ideal::contains_coords(const std::vector<Int>& c) const
{
    const int d = static_cast<int>(H_.rows());
    std::vector<Int> v(d);
    for (int i = 0; i < d; ++i)
        v[i] = c[i] * den_;
    for (int i = d - 1; i >= 0; --i) {
        if (!mpz_divisible_p(v[i].get_mpz_t(), H_(i, i).get_mpz_t()))
            return false;
        Int y = v[i] / H_(i, i);
        for (int k = 0; k <= i; ++k)
            v[k] -= y * H_(k, i);
    }
    return true;
}

bool Ideal::contains(const FieldElement& x) const { return contains_coords(x.basis_coords()); }

bool Ideal::subset_of(const Ideal& other) const
{
    for (const auto& v : basis_coords())
        if (!other.contains_coords(v))
            return false;
    return true;
}

std::vector<std::vector<Rat>> Ideal::basis_coords() const
{
    std::vector<std::vector<Rat>> out;
    for (std::size_t j = 0; j < H_.cols(); ++j) {
        std::vector<Rat> v(H_.rows());
        for (std::size_t i = 0; i < H_.rows(); ++i)
            v[i] = make_rat(H_(i, j), den_);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<Int>> Ideal::integer_basis_coords() const
{
    if (den_ != 1)
        math_error("NotIntegral", "ideal is not integral");
    std::vector<std::vector<Int>> out;
    for (std::size_t j = 0; j < H_.cols(); ++j)
        out.push_back(H_.column(j));
    return out;
}

std::vector<FieldElement> Ideal::basis() const
{
    std::vector<FieldElement> out;
    for (const auto& v : basis_coords())
        out.push_back(K_->from_basis(v));
    return out;
}

Ideal Ideal::operator*(const Ideal& b) const
{
    const int d = K_->degree();
    IntMatrix cols(d, d * d);
    std::size_t c = 0;
    for (std::size_t i = 0; i < H_.cols(); ++i)
        for (std::size_t j = 0; j < b.H_.cols(); ++j) {
            auto v = multiply_coords(*K_, H_.column(i), b.H_.column(j));
            cols.set_column(c++, v);
        }
    return from_integer_columns(K_, cols, den_ * b.den_);
}

Ideal Ideal::operator+(const Ideal& b) const
{
    const int d = K_->degree();
    Int den = lcm(den_, b.den_);
    IntMatrix cols(d, 2 * d);
    Int fa = den / den_, fb = den / b.den_;
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            cols(i, j) = H_(i, j) * fa;
            cols(i, d + j) = b.H_(i, j) * fb;
        }
    return from_integer_columns(K_, cols, den);
}

Ideal Ideal::inverse() const
{
    const int d = K_->degree();
    // Integral part A = den * this; then this^{-1} = den * A^{-1}.
    Ideal A(K_, H_, 1);
    Int n = A.min_rational().get_num();
    IntMatrix stack(d * d, d);
    for (int j = 0; j < d; ++j) {
        IntMatrix M = multiplication_matrix_coords(*K_, H_.column(j));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                stack(j * d + r, c) = M(r, c);
    }
    SmithResult s = smith(stack);
    IntMatrix cols(d, d);
    for (int j = 0; j < d; ++j) {
        Int g = gcd(n, s.D(j, j));
        Int f = n / g;
        for (int i = 0; i < d; ++i)
            cols(i, j) = s.V(i, j) * f;
    }
    // (n A^{-1}) has basis cols; A^{-1} = cols / n; this^{-1} = den * cols / n.
    Rat scale(den_, n);
    scale.canonicalize();
    Ideal nAinv = from_integer_columns(K_, cols, 1);
    return nAinv.scaled(scale);
}

Ideal Ideal::scaled(const Rat& s) const
{
    if (s == 0)
        math_error("ZeroElement", "scaling ideal by zero");
    Rat a = abs(s);
    IntMatrix H = H_;
    for (std::size_t i = 0; i < H.rows(); ++i)
        for (std::size_t j = 0; j < H.cols(); ++j)
            H(i, j) *= a.get_num();
    return from_integer_columns(K_, H, den_ * a.get_den());
}

Ideal Ideal::intersect(const Ideal& b) const { return (inverse() + b.inverse()).inverse(); }

Ideal Ideal::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Ideal r = unit(*K_), base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rat Ideal::min_rational() const
{
    const int d = K_->degree();
    // Solve H y = den * one; the least n with n y integral is the lcm of denominators.
    std::vector<Rat> v(d);
    for (int i = 0; i < d; ++i)
        v[i] = Rat(K_->one_coords()[i]);
    std::vector<Rat> y(d);
    for (int i = d - 1; i >= 0; --i) {
        y[i] = v[i] / Rat(H_(i, i));
        for (int k = 0; k <= i; ++k)
            v[k] -= y[i] * Rat(H_(k, i));
    }
    // one = (1/den) H (den y)  =>  n one in ideal iff n den y integral.
    Int l = 1;
    for (const auto& x : y) {
        Rat z = x * Rat(den_);
        l = lcm(l, z.get_den());
    }
    Rat r(l);
    return r;
}

bool operator<(const Ideal& a, const Ideal& b)
{
    if (a.den_ != b.den_)
        return a.den_ < b.den_;
    for (std::size_t i = 0; i < a.H_.rows(); ++i)
        for (std::size_t j = 0; j < a.H_.cols(); ++j)
            if (a.H_(i, j) != b.H_(i, j))
                return a.H_(i, j) < b.H_(i, j);
    return false;
}

std::string Ideal::to_string() const
{
    std::string s = "(";
    if (den_ != 1)
        s += "1/" + den_.get_str() + " ";
    s += "[";
    for (std::size_t j = 0; j < H_.cols(); ++j) {
        if (j)
            s += "; ";
        for (std::size_t i = 0; i < H_.rows(); ++i) {
            if (i)
                s += " ";
            s += H_(i, j).get_str();
        }
    }
    return s + "])";
}

Int PrimeIdeal::norm() const { return ideal.norm().get_num(); }

bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) { return a.ideal == b.ideal; }

std::vector<PrimeIdeal> factor_rational_prime(const NumberField& K, const Int& p)
{
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        math_error("NotPrime", p.get_str() + " is not prime");
    if (mpz_divisible_p(K.index().get_mpz_t(), p.get_mpz_t()))
        math_error("BadIndexPrime", p.get_str() + " divides the index of Z[theta]");
    const i64 l = to_i64(p);
    auto fac = factor_mod_p(ModPoly::from_qpoly(K.minpoly(), l));
    std::vector<PrimeIdeal> out;
    const int d = K.degree();
    for (const auto& mf : fac) {
        std::vector<Rat> c(d);
        for (int k = 0; k <= mf.f.degree(); ++k) {
            auto r = K.theta_power(k);
            for (int i = 0; i < d; ++i)
                c[i] += Rat(static_cast<long>(mf.f.coeff(k))) * r[i];
        }
        FieldElement g = K.from_power(c);
        PrimeIdeal P;
        P.p = p;
        P.e = mf.multiplicity;
        P.f = mf.f.degree();
        P.ideal = Ideal::from_generators(K, {K.from_rational(Rat(p)), g});
        Ideal P2 = P.ideal * P.ideal;
        FieldElement pe = K.from_rational(Rat(p));
        for (const FieldElement& cand : {pe, g, g + pe}) {
            if (!cand.is_zero() && P.ideal.contains(cand) && !P2.contains(cand)) {
                P.uniformizer = cand;
                break;
            }
        }
        if (P.uniformizer.field_ptr() == nullptr)
            math_error("InvariantViolation", "no uniformizer found");
        out.push_back(std::move(P));
    }
    int total = 0;
    for (const auto& P : out)
        total += P.e * P.f;
    invariant(total == d, "sum of e f over primes above p equals the degree");
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        if (a.norm() != b.norm())
            return a.norm() < b.norm();
        return a.ideal < b.ideal;
    });
    return out;
}

int ideal_valuation(const Ideal& a, const PrimeIdeal& P)
{
    // Clear the denominator with an integer and subtract its valuation.
    Ideal A = a.scaled(Rat(a.denominator()));
    int v = 0;
    Ideal Pinv = P.ideal.inverse();
    while (A.subset_of(P.ideal)) {
        A = A * Pinv;
        ++v;
    }
    int vd = 0;
    if (a.denominator() != 1) {
        Int dd = a.denominator();
        while (mpz_divisible_p(dd.get_mpz_t(), P.p.get_mpz_t())) {
            dd /= P.p;
            ++vd;
        }
    }
    return v - vd * P.e;
}

std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const Ideal& a)
{
    Rat N = a.norm();
    std::vector<std::pair<PrimeIdeal, int>> out;
    Int all = N.get_num() * N.get_den();
    for (auto [l, e] : factor_integer(all)) {
        (void)e;
        for (auto& P : factor_rational_prime(a.field(), l)) {
            int v = ideal_valuation(a, P);
            if (v != 0)
                out.emplace_back(std::move(P), v);
        }
    }
    return out;
}

std::pair<std::vector<Int>, std::vector<Int>> coprime_decomposition(const Ideal& I, const Ideal& J)
{
    const int d = I.field().degree();
    IntMatrix A(d, 2 * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            A(i, j) = I.hnf()(i, j);
            A(i, d + j) = J.hnf()(i, j);
        }
    HermiteResult h = hermite(A, true);
    for (int i = 0; i < d; ++i)
        if (h.H(i, d + i) != 1)
            math_error("NotCoprime", "ideals are not coprime");
    // H restricted to the last d columns is the identity, so A U[:, d..] = I.
    const auto& one = I.field().one_coords();
    std::vector<Int> w(2 * d);
    for (int r = 0; r < 2 * d; ++r)
        for (int k = 0; k < d; ++k)
            w[r] += h.U(r, d + k) * one[k];
    std::vector<Int> a(d), b(d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            a[i] += I.hnf()(i, k) * w[k];
            b[i] += J.hnf()(i, k) * w[d + k];
        }
    return {a, b};
}

std::vector<Int> reduce_mod(const Ideal& m, std::vector<Int> v)
{
    const IntMatrix& H = m.hnf();
    const int d = static_cast<int>(H.rows());
    for (int i = d - 1; i >= 0; --i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v[i].get_mpz_t(), H(i, i).get_mpz_t());
        if (q == 0)
            continue;
        for (int k = 0; k <= i; ++k)
            v[k] -= q * H(k, i);
    }
    return v;
}

} // namespace shintani
