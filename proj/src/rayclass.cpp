#include "shintani/rayclass.hpp"
#include "shintani/errors.hpp"

#include <deque>

namespace shintani {

namespace {

std::vector<i64> coords64(const FieldElement& x)
{
    std::vector<i64> out;
    for (const auto& c : x.integral_coords())
        out.push_back(to_i64(c));
    return out;
}

// Totally positive element congruent to the residue y modulo n.
FieldElement positive_lift(const NumberField& K, const std::vector<i64>& y, i64 n)
{
    std::vector<Int> c;
    for (i64 v : y)
        c.emplace_back(static_cast<long>(v));
    FieldElement x = K.from_basis(c);
    FieldElement step = K.from_rational(Rat(static_cast<long>(n)));
    while (x.is_zero() || !totally_positive(x))
        x = x + step;
    return x;
}

} // namespace

RayClassGroup::RayClassGroup(const NumberField& K, const Ideal& m, const UnitGroupData& units,
                             std::shared_ptr<const NarrowClassGroup> narrow)
    : K_(&K), m_(m), units_(units), narrow_(std::move(narrow)), U_(m)
{
    if (K.degree() != 2)
        math_error("UnsupportedDegree", "ray class groups are implemented for d = 2");
    if (!narrow_)
        narrow_ = std::make_shared<NarrowClassGroup>(K, units);
    const FiniteAbelianGroup& C1 = narrow_->group();
    const Int avoid = m.norm().get_num();
    kr_ = U_.generators().size();
    const std::size_t k = kr_ + C1.rank();
    auto reps = narrow_->representatives(avoid);

    std::vector<std::vector<i64>> cols;
    const IntMatrix& ur = U_.relations();
    for (std::size_t c = 0; c < ur.cols(); ++c) {
        std::vector<i64> col(k, 0);
        for (std::size_t r = 0; r < kr_; ++r)
            col[r] = to_i64(ur(r, c));
        cols.push_back(col);
    }
    for (const auto& e : units.eps)
        cols.push_back(residue_presentation(U_.ring().reduce(e.integral_coords())));
    for (std::size_t l = 0; l < C1.rank(); ++l) {
        std::vector<i64> e(C1.rank(), 0);
        e[l] = 1;
        const Ideal& R = reps.at(C1.index(e));
        const i64 h = C1.invariants()[l];
        auto beta = totally_positive_generator(R.pow(static_cast<int>(h)), units);
        invariant(beta.has_value(), "power of a class generator is narrowly principal");
        auto col = residue_presentation(U_.ring().reduce(beta->integral_coords()));
        for (auto& v : col)
            v = -v;
        col[kr_ + l] += h;
        cols.push_back(col);
        class_gens_.push_back(R);
        class_beta_.push_back(U_.ring().reduce(beta->integral_coords()));
    }
    IntMatrix Rm(k, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < k; ++r)
            Rm(r, c) = Int(static_cast<long>(cols[c][r]));
    if (k > 0 && cols.empty())
        math_error("InfiniteGroup", "no relations");
    G_ = FiniteAbelianGroup::from_relations(k, Rm);

    std::vector<std::vector<i64>> images;
    for (std::size_t j = 0; j < kr_; ++j) {
        std::vector<i64> e(k, 0);
        e[j] = 1;
        images.push_back(G_.reduce(e));
    }
    table_ = U_.image_table(G_, images);
}

std::vector<i64> RayClassGroup::residue_presentation(const std::vector<i64>& x) const
{
    std::vector<i64> v = U_.dlog(x);
    v.resize(kr_ + narrow_->group().rank(), 0);
    return v;
}

std::vector<i64> RayClassGroup::unit_residue(const FieldElement& x) const
{
    if (x.is_integral())
        return U_.ring().reduce(x.integral_coords());
    // gamma in (O + xO)^{-1}, gamma == 1 mod m, makes gamma x integral with the same residue.
    Ideal D = Ideal::from_generators(*K_, {K_->one(), x}).inverse();
    auto [gamma, rest] = coprime_decomposition(D, m_);
    FieldElement y = K_->from_basis(gamma) * x;
    return U_.ring().reduce(y.integral_coords());
}

std::vector<i64> RayClassGroup::dlog(const Ideal& a) const
{
    for (const auto& b : U_.blocks())
        if (ideal_valuation(a, b.prime) != 0)
            math_error("NotCoprime", "ideal is not coprime to the modulus");
    const FiniteAbelianGroup& C1 = narrow_->group();
    auto x = narrow_->dlog(a);
    Ideal J = a;
    for (std::size_t l = 0; l < x.size(); ++l)
        if (x[l])
            J = J * class_gens_[l].pow(static_cast<int>(-x[l]));
    auto beta = totally_positive_generator(J, units_);
    invariant(beta.has_value(), "ideal divided by its class representative is narrowly principal");
    std::vector<i64> pres = residue_presentation(unit_residue(*beta));
    for (std::size_t l = 0; l < C1.rank(); ++l)
        pres[kr_ + l] += x[l];
    return G_.reduce(pres);
}

std::vector<i64> RayClassGroup::element_class(const std::vector<i64>& x) const
{
    return G_.reduce(residue_presentation(x));
}

const std::vector<std::int32_t>& RayClassGroup::residue_table() const { return table_; }

Ideal RayClassGroup::class_ideal(const std::vector<i64>& c) const
{
    std::vector<Int> g(G_.presentation_rank(), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) {
            auto gi = G_.generator(i);
            for (std::size_t j = 0; j < g.size(); ++j)
                g[j] += Int(static_cast<long>(c[i])) * gi[j];
        }
    const Int E(static_cast<long>(G_.exponent() * U_.group().exponent()));
    const ResidueRing& R = U_.ring();
    std::vector<i64> y = R.one();
    for (std::size_t j = 0; j < kr_; ++j)
        y = R.mul(y, R.pow(U_.generators()[j], mod(g[j], E).get_ui()));
    // R_l^{q h_l + r} = (beta_l)^q R_l^r with beta_l totally positive.
    std::vector<int> rexp;
    for (std::size_t l = 0; l < class_gens_.size(); ++l) {
        const Int h(static_cast<long>(narrow_->group().invariants()[l]));
        const Int r = mod(g[kr_ + l], h);
        const Int q = (g[kr_ + l] - r) / h;
        y = R.mul(y, R.pow(class_beta_[l], mod(q, E).get_ui()));
        rexp.push_back(static_cast<int>(r.get_si()));
    }
    Ideal I = Ideal::principal(positive_lift(*K_, y, R.characteristic()));
    for (std::size_t l = 0; l < class_gens_.size(); ++l)
        if (rexp[l])
            I = I * class_gens_[l].pow(rexp[l]);
    return I;
}

Ideal RayClassGroup::generator_ideal(std::size_t i) const
{
    std::vector<i64> e(G_.rank(), 0);
    e.at(i) = 1;
    return class_ideal(e);
}

std::optional<FieldElement> RayClassGroup::dlog_witness(const Ideal& a, const std::vector<i64>& c) const
{
    auto beta = totally_positive_generator(a * class_ideal(G_.neg(c)), units_);
    if (!beta)
        return std::nullopt;
    const ResidueRing& R = U_.ring();
    const FieldElement& eps = units_.eps.at(0);
    auto r = unit_residue(*beta);
    const auto re = R.reduce(coords64(eps));
    FieldElement x = *beta;
    const i64 bound = U_.unit_count();
    for (i64 t = 0; t <= bound; ++t) {
        if (r == R.one()) {
            x = x * eps.pow(t);
            invariant(unit_residue(x) == R.one(), "witness is 1 modulo m");
            return x;
        }
        r = R.mul(r, re);
    }
    return std::nullopt;
}

i64 RayClassGroup::cardinality_formula() const
{
    const FieldElement eps0 = fundamental_unit_d2(*K_);
    const FieldElement minus = -K_->one();
    const ResidueRing& R = U_.ring();
    auto mask = [](const FieldElement& u) {
        auto s = u.signs();
        return (s[0] < 0 ? 1 : 0) | (s[1] < 0 ? 2 : 0);
    };
    struct Gen {
        std::vector<i64> r;
        int s;
    };
    std::vector<Gen> gens{{R.reduce(coords64(minus)), mask(minus)}, {R.reduce(coords64(eps0)), mask(eps0)}};
    std::vector<char> seen(static_cast<std::size_t>(R.size()) * 4, 0);
    std::deque<std::pair<i64, int>> queue{{R.index(R.one()), 0}};
    seen[static_cast<std::size_t>(R.index(R.one())) * 4] = 1;
    i64 closure = 1;
    while (!queue.empty()) {
        auto [idx, s] = queue.front();
        queue.pop_front();
        auto x = R.element(idx);
        for (const auto& g : gens) {
            const i64 y = R.index(R.mul(x, g.r));
            const int t = s ^ g.s;
            auto& f = seen[static_cast<std::size_t>(y) * 4 + t];
            if (!f) {
                f = 1;
                ++closure;
                queue.emplace_back(y, t);
            }
        }
    }
    std::vector<char> signs(4, 0);
    signs[0] = 1;
    int nsigns = 1;
    for (int rep = 0; rep < 2; ++rep)
        for (int a = 0; a < 4; ++a)
            if (signs[a])
                for (const auto& g : gens)
                    if (!signs[a ^ g.s]) {
                        signs[a ^ g.s] = 1;
                        ++nsigns;
                    }
    // h = h+ [O^* : O^*_+] / 2^d and [O^* : O^*_+] is the size of the sign image.
    const Int num = Int(static_cast<long>(U_.unit_count())) * narrow_->order() * nsigns;
    invariant(mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(closure)),
              "cardinality formula is integral");
    return to_i64(num / Int(static_cast<long>(closure)));
}

std::vector<i64> RayProjection::apply(const FiniteAbelianGroup& dst, const std::vector<i64>& c) const
{
    std::vector<i64> out = dst.zero();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i])
            out = dst.add(out, dst.scale(images[i], c[i]));
    return out;
}

RayProjection ray_projection(const RayClassGroup& src, const RayClassGroup& dst)
{
    RayProjection P;
    for (std::size_t i = 0; i < src.group().rank(); ++i)
        P.images.push_back(dst.dlog(src.generator_ideal(i)));
    return P;
}

std::vector<i64> cyclotomic_character_values(const RayClassGroup& G, i64 p, int n)
{
    const i64 pn = ipow(p, static_cast<unsigned>(n));
    std::vector<i64> out;
    for (std::size_t i = 0; i < G.group().rank(); ++i) {
        const Int N = G.generator_ideal(i).norm().get_num();
        if (mpz_divisible_ui_p(N.get_mpz_t(), static_cast<unsigned long>(p)))
            math_error("NotCoprime", "class representative is not prime to p");
        out.push_back(mod(N, Int(static_cast<long>(pn))).get_si());
    }
    return out;
}

i64 cyclotomic_char(const std::vector<i64>& values, const std::vector<i64>& c, i64 pn)
{
    i64 r = 1 % pn;
    for (std::size_t i = 0; i < c.size(); ++i)
        r = mulmod(r, powmod(values[i], static_cast<u64>(c[i]), pn), pn);
    return r;
}

RayClassGroup narrow_ray_class_group(const NumberField& K, const Ideal& m)
{
    return RayClassGroup(K, m, unit_group(K));
}

} // namespace shintani
