#include "shintani/cones.hpp"
#include "shintani/errors.hpp"

namespace shintani {

int lex_det_sign(const std::vector<std::vector<std::vector<Rat>>>& cols)
{
    const std::size_t d = cols.size();
    std::vector<std::size_t> a(d, 0);
    RatMatrix M(d, d);
    for (;;) {
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i)
                M(i, j) = cols[j][a[j]][i];
        Rat det = determinant(M);
        if (det != 0)
            return sgn(det);
        // Next exponent vector in lexicographic order; the last index varies fastest.
        std::size_t j = d;
        while (j > 0) {
            --j;
            if (a[j] + 1 < cols[j].size()) {
                ++a[j];
                for (std::size_t k = j + 1; k < d; ++k)
                    a[k] = 0;
                break;
            }
            if (j == 0)
                return 0;
        }
    }
}

std::vector<std::vector<Rat>> PerturbationContext::expansion(const FieldElement& u) const
{
    std::vector<std::vector<Rat>> out;
    FieldElement cur = u;
    const FieldElement th = K_->theta();
    for (int k = 0; k < K_->degree(); ++k) {
        out.push_back(cur.coords());
        cur = cur * th;
    }
    return out;
}

namespace {

std::vector<std::vector<std::vector<Rat>>> perturbed_columns(const PerturbationContext& ctx,
                                                             const std::vector<FieldElement>& u)
{
    if (static_cast<int>(u.size()) != ctx.field().degree())
        math_error("WrongDegree", "cocycle needs d arguments");
    std::vector<std::vector<std::vector<Rat>>> cols;
    for (const auto& x : u) {
        if (x.is_zero())
            math_error("ZeroElement", "zero cocycle argument");
        cols.push_back(ctx.expansion(x));
    }
    return cols;
}

} // namespace

int cocycle_orientation(const PerturbationContext& ctx, const std::vector<FieldElement>& u)
{
    int s = lex_det_sign(perturbed_columns(ctx, u));
    if (s == 0)
        math_error("DegenerateSystem", "perturbed vectors are linearly dependent");
    return s * ctx.field().vandermonde_sign();
}

bool perturbed_membership(const PerturbationContext& ctx, const std::vector<FieldElement>& u,
                          const FieldElement& v)
{
    if (v.is_zero())
        return false;
    auto cols = perturbed_columns(ctx, u);
    const int sD = lex_det_sign(cols);
    if (sD == 0)
        math_error("DegenerateSystem", "perturbed vectors are linearly dependent");
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto c = cols;
        c[j] = {v.coords()};
        int sN = lex_det_sign(c);
        if (sN == 0)
            math_error("DegenerateSystem", "point not in general position with perturbed vectors");
        if (sN != sD)
            return false;
    }
    return true;
}

int z_eval(const PerturbationContext& ctx, const std::vector<FieldElement>& u, const FieldElement& v)
{
    if (!perturbed_membership(ctx, u, v))
        return 0;
    return cocycle_orientation(ctx, u);
}

HalfOpenCone::HalfOpenCone(std::vector<FieldElement> gens, std::vector<bool> included)
    : gens_(std::move(gens)), included_(std::move(included))
{
    if (included_.size() != (std::size_t{1} << gens_.size()))
        math_error("InvariantViolation", "face table has wrong size");
    RatMatrix C = coordinate_matrix(gens_);
    if (C.rows() != C.cols() || determinant(C) == 0)
        math_error("ResidualDegenerate", "cone generators are linearly dependent");
    inv_ = inverse(C);
}

HalfOpenCone HalfOpenCone::open(std::vector<FieldElement> gens)
{
    std::vector<bool> inc(std::size_t{1} << gens.size(), false);
    inc.back() = true;
    return HalfOpenCone(std::move(gens), std::move(inc));
}

HalfOpenCone HalfOpenCone::closed(std::vector<FieldElement> gens)
{
    std::vector<bool> inc(std::size_t{1} << gens.size(), true);
    inc[0] = false;
    return HalfOpenCone(std::move(gens), std::move(inc));
}

std::vector<Rat> HalfOpenCone::coordinates(const FieldElement& v) const { return inv_ * v.coords(); }

bool HalfOpenCone::contains(const FieldElement& v) const
{
    auto lam = coordinates(v);
    unsigned mask = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        int s = sgn(lam[i]);
        if (s < 0)
            return false;
        if (s > 0)
            mask |= 1u << i;
    }
    return mask != 0 && included_[mask];
}

HalfOpenCone HalfOpenCone::translated(const FieldElement& g) const
{
    std::vector<FieldElement> gens;
    for (const auto& x : gens_)
        gens.push_back(g * x);
    return HalfOpenCone(std::move(gens), included_);
}

HalfOpenCone face_decompose(const PerturbationContext& ctx, const std::vector<FieldElement>& u)
{
    const std::size_t d = u.size();
    std::vector<bool> inc(std::size_t{1} << d, false);
    for (unsigned mask = 1; mask < inc.size(); ++mask) {
        FieldElement bary = ctx.field().zero();
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (1u << i))
                bary = bary + u[i];
        inc[mask] = perturbed_membership(ctx, u, bary);
    }
    invariant(inc.back(), "open cone C(u) lies in the perturbed cone");
    return HalfOpenCone(u, std::move(inc));
}

FieldElement random_face_point(const std::vector<FieldElement>& gens, unsigned mask, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(1, 97), den(1, 13);
    FieldElement p = gens.at(0).field().zero();
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (mask & (1u << i))
            p = p + make_rat(num(rng), den(rng)) * gens[i];
    return p;
}

int verify_face_homogeneity(const PerturbationContext& ctx, const std::vector<FieldElement>& u,
                            const HalfOpenCone& cone, int samples_per_face, std::mt19937_64& rng)
{
    int bad = 0;
    for (unsigned mask = 1; mask < cone.faces().size(); ++mask)
        for (int s = 0; s < samples_per_face; ++s) {
            FieldElement v = random_face_point(u, mask, rng);
            bool in = perturbed_membership(ctx, u, v);
            if (in != cone.face_included(mask) || in != cone.contains(v))
                ++bad;
        }
    return bad;
}

int ConeFunction::evaluate(const FieldElement& v) const
{
    int s = 0;
    for (const auto& t : terms_)
        if (t.cone.contains(v))
            s += t.weight;
    return s;
}

ConeFunction ConeFunction::translated(const FieldElement& g) const
{
    std::vector<WeightedCone> out;
    for (const auto& t : terms_)
        out.push_back({t.weight, t.cone.translated(g)});
    return ConeFunction(std::move(out));
}

ConeFunction ConeFunction::negated() const
{
    std::vector<WeightedCone> out = terms_;
    for (auto& t : out)
        t.weight = -t.weight;
    return ConeFunction(std::move(out));
}

FieldElement random_totally_positive(const NumberField& K, int height, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-height, height);
    for (;;) {
        std::vector<Int> c(K.degree());
        for (auto& x : c)
            x = dist(rng);
        FieldElement v = K.from_basis(c);
        if (!v.is_zero() && totally_positive(v))
            return v;
    }
}

} // namespace shintani
