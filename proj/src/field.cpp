#include "shintani/field.hpp"
#include "shintani/errors.hpp"
#include "shintani/modpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace shintani {

Interval operator*(const Interval& a, const Interval& b)
{
    Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator*(const Rat& s, const Interval& a)
{
    if (s >= 0)
        return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

namespace {

constexpr int kInitialBits = 64;

bool has_rational_root(const QPoly& f)
{
    // Monic integer polynomial: rational roots are integer divisors of the constant term.
    Int c = f.coeff(0).get_num();
    if (c == 0)
        return true;
    Int a = abs(c);
    for (Int t = 1; t * t <= a; ++t) {
        if (!mpz_divisible_p(a.get_mpz_t(), t.get_mpz_t()))
            continue;
        for (const Int& r : {t, Int(a / t)})
            if (f.eval(Rat(r)) == 0 || f.eval(Rat(-r)) == 0)
                return true;
    }
    return false;
}

// True if irreducibility over Q is certified by factorization patterns mod small primes.
bool degree_patterns_certify(const QPoly& f, const Int& disc)
{
    const int d = f.degree();
    std::set<int> possible;
    for (int k = 1; k < d; ++k)
        possible.insert(k);
    for (i64 p = 2; p < 400 && !possible.empty(); ++p) {
        if (!is_prime(p) || mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        auto fac = factor_mod_p(ModPoly::from_qpoly(f, p));
        std::set<int> sums{0};
        for (const auto& mf : fac) {
            std::set<int> next = sums;
            for (int s : sums)
                next.insert(s + mf.f.degree());
            sums = next;
        }
        std::set<int> keep;
        for (int k : possible)
            if (sums.count(k))
                keep.insert(k);
        possible = keep;
    }
    return possible.empty();
}

// Dedekind criterion: Z[theta] is l-maximal.
bool dedekind_maximal(const QPoly& f, i64 l)
{
    ModPoly fb = ModPoly::from_qpoly(f, l);
    auto fac = factor_mod_p(fb);
    ModPoly g({1}, l), h({1}, l);
    for (const auto& mf : fac) {
        g = g * mf.f;
        for (int k = 1; k < mf.multiplicity; ++k)
            h = h * mf.f;
    }
    // Integer lifts with coefficients in [0, l).
    auto lift = [](const ModPoly& p) {
        std::vector<Rat> c;
        for (i64 x : p.coeffs())
            c.emplace_back(static_cast<long>(x));
        return QPoly(std::move(c));
    };
    QPoly G = lift(g), H = lift(h);
    QPoly F = (1 / Rat(static_cast<long>(l))) * (G * H - f);
    ModPoly Fb = ModPoly::from_qpoly(F, l);
    ModPoly t = ModPoly::gcd(ModPoly::gcd(Fb, g), h);
    return t.degree() == 0;
}

} // namespace

std::shared_ptr<const NumberField> NumberField::create(const FieldSpec& spec)
{
    std::shared_ptr<NumberField> K(new NumberField());
    K->build(spec);
    return K;
}

void NumberField::build(const FieldSpec& spec)
{
    spec_ = spec;
    name_ = spec.name;
    if (spec.minpoly.size() < 2)
        config_error("BadField", "minimal polynomial must have degree >= 1");
    if (spec.minpoly.back() != 1)
        config_error("BadField", "minimal polynomial must be monic");
    std::vector<Rat> fc;
    for (const auto& a : spec.minpoly)
        fc.emplace_back(a);
    f_ = QPoly(std::move(fc));
    d_ = f_.degree();
    const int d = d_;

    if (d >= 2 && has_rational_root(f_))
        config_error("Reducible", "minimal polynomial has a rational root");

    reduce_.assign(2 * d - 1 > 0 ? 2 * d - 1 : 1, std::vector<Rat>(d));
    for (int k = 0; k < static_cast<int>(reduce_.size()); ++k) {
        QPoly r = QPoly::monomial(k) % f_;
        for (int i = 0; i < d; ++i)
            reduce_[k][i] = r.coeff(i);
    }

    // Discriminant of f via the norm of f'(theta).
    {
        QPoly df = f_.derivative();
        std::vector<Rat> c(d);
        for (int i = 0; i < d; ++i)
            c[i] = df.coeff(i);
        Rat n = FieldElement(this, c).norm();
        if ((d * (d - 1) / 2) % 2)
            n = -n;
        poly_disc_ = n.get_num();
    }
    if (d >= 4 && !degree_patterns_certify(f_, poly_disc_))
        config_error("Reducible", "could not certify irreducibility of the minimal polynomial");

    auto iso = isolate_real_roots(f_);
    if (static_cast<int>(iso.size()) != d)
        config_error("NotTotallyReal", "minimal polynomial has " + std::to_string(d - iso.size()) +
                                           " non-real roots");
    const Rat target = Rat(1) / Rat(Int(1) << kInitialBits);
    for (auto& iv : iso)
        while (iv.hi - iv.lo > target)
            iv = bisect_root(f_, iv);
    roots_ = iso;
    for (const auto& iv : roots_)
        roots_d_.push_back(Rat((iv.lo + iv.hi) / 2).get_d());

    basis_ = RatMatrix(d, d);
    if (spec.integral_basis.empty()) {
        for (int i = 0; i < d; ++i)
            basis_(i, i) = 1;
        for (auto [l, e] : factor_integer(poly_disc_)) {
            if (e < 2)
                continue;
            if (!fits_i64(l) || !dedekind_maximal(f_, to_i64(l)))
                config_error("NonMaximalOrder", "Z[theta] is not maximal at " + l.get_str() +
                                                    "; supply integral_basis");
        }
    } else {
        if (static_cast<int>(spec.integral_basis.size()) != d)
            config_error("BadField", "integral basis must have d elements");
        for (int j = 0; j < d; ++j) {
            if (static_cast<int>(spec.integral_basis[j].size()) != d)
                config_error("BadField", "integral basis vector has wrong length");
            for (int i = 0; i < d; ++i)
                basis_(i, j) = spec.integral_basis[j][i];
        }
    }
    Rat bdet = determinant(basis_);
    if (bdet == 0)
        config_error("BadField", "integral basis is singular");
    basis_inv_ = inverse(basis_);

    // Z[theta] must lie in the order and the order must be closed under multiplication.
    for (int k = 0; k < d; ++k) {
        std::vector<Rat> e(d);
        e[k] = 1;
        for (const auto& v : basis_inv_ * e)
            if (v.get_den() != 1)
                config_error("BadField", "integral basis does not contain Z[theta]");
    }
    C_.assign(d, std::vector<std::vector<Int>>(d, std::vector<Int>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            FieldElement wi(this, basis_.column(i)), wj(this, basis_.column(j));
            auto c = (wi * wj).basis_coords();
            for (int k = 0; k < d; ++k) {
                if (c[k].get_den() != 1)
                    config_error("BadField", "integral basis is not closed under multiplication");
                C_[i][j][k] = c[k].get_num();
            }
        }
    Rat idx = 1 / abs(bdet);
    if (idx.get_den() != 1)
        config_error("BadField", "integral basis has non-integral index");
    index_ = idx.get_num();
    Rat dk = Rat(poly_disc_) / (Rat(index_) * Rat(index_));
    if (dk.get_den() != 1)
        config_error("BadField", "inconsistent discriminant");
    disc_ = dk.get_num();

    one_.assign(d, 0);
    {
        std::vector<Rat> e(d);
        e[0] = 1;
        auto c = basis_inv_ * e;
        for (int i = 0; i < d; ++i)
            one_[i] = c[i].get_num();
    }

    for (const auto& u : spec.units)
        if (static_cast<int>(u.size()) != d)
            config_error("BadField", "unit vector has wrong length");
}

FieldElement NumberField::zero() const { return FieldElement(this, std::vector<Rat>(d_)); }

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::theta() const
{
    std::vector<Rat> c(d_);
    if (d_ > 1)
        c[1] = 1;
    else
        c[0] = -f_.coeff(0);
    return FieldElement(this, c);
}

FieldElement NumberField::from_power(std::vector<Rat> c) const
{
    if (static_cast<int>(c.size()) != d_)
        math_error("WrongDegree", "coordinate vector has wrong length");
    return FieldElement(this, std::move(c));
}

FieldElement NumberField::from_basis(const std::vector<Rat>& c) const
{
    return FieldElement(this, basis_ * c);
}

FieldElement NumberField::from_basis(const std::vector<Int>& c) const
{
    std::vector<Rat> r(c.begin(), c.end());
    return from_basis(r);
}

FieldElement NumberField::from_rational(const Rat& a) const
{
    std::vector<Rat> c(d_);
    c[0] = a;
    return FieldElement(this, c);
}

bool FieldElement::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool FieldElement::is_rational() const
{
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& x) { return x == 0; });
}

std::vector<Rat> FieldElement::basis_coords() const { return K_->integral_basis_inverse() * c_; }

bool FieldElement::is_integral() const
{
    for (const auto& x : basis_coords())
        if (x.get_den() != 1)
            return false;
    return true;
}

std::vector<Int> FieldElement::integral_coords() const
{
    std::vector<Int> out;
    for (const auto& x : basis_coords()) {
        if (x.get_den() != 1)
            math_error("NotIntegral", "element " + to_string() + " is not integral");
        out.push_back(x.get_num());
    }
    return out;
}

RatMatrix FieldElement::multiplication_matrix() const
{
    const int d = K_->degree();
    RatMatrix M(d, d);
    for (int j = 0; j < d; ++j) {
        std::vector<Rat> e(d);
        e[j] = 1;
        FieldElement col = *this * FieldElement(K_, e);
        for (int i = 0; i < d; ++i)
            M(i, j) = col.c_[i];
    }
    return M;
}

Rat FieldElement::norm() const { return determinant(multiplication_matrix()); }

Rat FieldElement::trace() const
{
    RatMatrix M = multiplication_matrix();
    Rat t = 0;
    for (std::size_t i = 0; i < M.rows(); ++i)
        t += M(i, i);
    return t;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        math_error("ZeroElement", "inverse of zero");
    std::vector<Rat> e(K_->degree());
    e[0] = 1;
    return FieldElement(K_, solve(multiplication_matrix(), e));
}

FieldElement FieldElement::pow(long e) const
{
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    FieldElement r = K_->one();
    while (n) {
        if (n & 1)
            r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

double FieldElement::embed_approx(int i) const
{
    double t = K_->root_approx()[i], r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * t + it->get_d();
    return r;
}

Interval FieldElement::embed_interval(int, const RationalInterval& root) const
{
    Interval t{root.lo, root.hi};
    Interval r{0, 0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * t;
        r.lo += *it;
        r.hi += *it;
    }
    return r;
}

int FieldElement::embedding_sign(int i) const
{
    if (is_zero())
        math_error("ZeroElement", "sign of zero");
    RationalInterval root = K_->root_intervals()[i];
    for (;;) {
        Interval v = embed_interval(i, root);
        if (v.lo > 0)
            return 1;
        if (v.hi < 0)
            return -1;
        for (int k = 0; k < 32; ++k)
            root = bisect_root(K_->minpoly(), root);
    }
}

std::vector<int> FieldElement::signs() const
{
    std::vector<int> s;
    for (int i = 0; i < K_->degree(); ++i)
        s.push_back(embedding_sign(i));
    return s;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    std::vector<Rat> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.c_[i];
    return FieldElement(a.K_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    std::vector<Rat> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= b.c_[i];
    return FieldElement(a.K_, std::move(c));
}

FieldElement operator-(const FieldElement& a)
{
    std::vector<Rat> c(a.c_);
    for (auto& x : c)
        x = -x;
    return FieldElement(a.K_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    const int d = a.K_->degree();
    std::vector<Rat> prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (int j = 0; j < d; ++j)
            prod[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<Rat> c(d);
    for (int k = 0; k < 2 * d - 1; ++k) {
        if (prod[k] == 0)
            continue;
        const auto& r = a.K_->theta_power(k);
        for (int i = 0; i < d; ++i)
            c[i] += prod[k] * r[i];
    }
    return FieldElement(a.K_, std::move(c));
}

FieldElement operator*(const Rat& s, const FieldElement& a)
{
    std::vector<Rat> c(a.c_);
    for (auto& x : c)
        x *= s;
    return FieldElement(a.K_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

std::string FieldElement::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i)
            s += ", ";
        s += shintani::to_string(c_[i]);
    }
    return s + "]";
}

bool totally_positive(const FieldElement& x)
{
    if (x.is_zero())
        math_error("ZeroElement", "totally_positive of zero");
    for (int i = 0; i < x.field().degree(); ++i)
        if (x.embedding_sign(i) < 0)
            return false;
    return true;
}

RatMatrix coordinate_matrix(const std::vector<FieldElement>& xs)
{
    const int d = xs.at(0).field().degree();
    RatMatrix M(d, xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (int i = 0; i < d; ++i)
            M(i, j) = xs[j].coords()[i];
    return M;
}

int det_sign_rational(const std::vector<FieldElement>& xs)
{
    const NumberField& K = xs.at(0).field();
    if (static_cast<int>(xs.size()) != K.degree())
        math_error("WrongDegree", "det_sign needs d elements");
    return sgn(determinant(coordinate_matrix(xs))) * K.vandermonde_sign();
}

namespace {

Interval interval_det(std::vector<std::vector<Interval>> m)
{
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    Interval acc{0, 0};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Interval>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Interval> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Interval t = m[0][j] * interval_det(std::move(minor));
        acc = (j % 2) ? acc - t : acc + t;
    }
    return acc;
}

} // namespace

int det_sign(const std::vector<FieldElement>& xs)
{
    const NumberField& K = xs.at(0).field();
    const int d = K.degree();
    if (static_cast<int>(xs.size()) != d)
        math_error("WrongDegree", "det_sign needs d elements");
    if (rank(coordinate_matrix(xs)) < static_cast<std::size_t>(d))
        return 0;
    std::vector<RationalInterval> roots = K.root_intervals();
    for (;;) {
        std::vector<std::vector<Interval>> m(d, std::vector<Interval>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m[i][j] = xs[j].embed_interval(i, roots[i]);
        Interval det = interval_det(std::move(m));
        if (det.lo > 0)
            return 1;
        if (det.hi < 0)
            return -1;
        for (auto& r : roots)
            for (int k = 0; k < 32; ++k)
                r = bisect_root(K.minpoly(), r);
    }
}

} // namespace shintani
