#include "shintani/residue_units.hpp"
#include "shintani/errors.hpp"

#include <array>
#include <deque>

namespace shintani {

ResidueRing::ResidueRing(const Ideal& m) : m_(m), d_(m.field().degree())
{
    if (!m.is_integral())
        math_error("NotIntegral", "residue rings need an integral modulus");
    if (d_ > 8)
        math_error("UnsupportedDegree", "residue rings support degree at most 8");
    n_ = to_i64(m.min_rational().get_num());
    if (n_ > (i64{1} << 31))
        budget_error("residue ring characteristic too large");
    H_.assign(d_ * d_, 0);
    size_ = 1;
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j)
            H_[i * d_ + j] = to_i64(m.hnf()(i, j));
    for (int i = 0; i < d_; ++i)
        size_ *= H_[i * d_ + i];
    const auto& C = m.field().structure_constants();
    C_.assign(d_ * d_ * d_, 0);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j)
            for (int k = 0; k < d_; ++k)
                C_[(i * d_ + j) * d_ + k] = to_i64(C[i][j][k]);
}

std::vector<i64> ResidueRing::reduce(std::vector<i64> v) const
{
    for (auto& x : v)
        x = mod64(x, n_);
    for (int i = d_ - 1; i >= 0; --i) {
        const i64 h = H_[i * d_ + i];
        i64 q = v[i] >= 0 ? v[i] / h : -((-v[i] + h - 1) / h);
        if (q == 0)
            continue;
        for (int k = 0; k <= i; ++k)
            v[k] -= q * H_[k * d_ + i];
    }
    return v;
}

std::vector<i64> ResidueRing::reduce(const std::vector<Int>& v) const
{
    std::vector<i64> w(v.size());
    const Int n(static_cast<long>(n_));
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = mod(v[i], n).get_si();
    return reduce(std::move(w));
}

std::vector<i64> ResidueRing::one() const { return reduce(m_.field().one_coords()); }

std::vector<i64> ResidueRing::add(const std::vector<i64>& a, const std::vector<i64>& b) const
{
    std::vector<i64> c(d_);
    for (int i = 0; i < d_; ++i)
        c[i] = a[i] + b[i];
    return reduce(std::move(c));
}

std::vector<i64> ResidueRing::sub(const std::vector<i64>& a, const std::vector<i64>& b) const
{
    std::vector<i64> c(d_);
    for (int i = 0; i < d_; ++i)
        c[i] = a[i] - b[i];
    return reduce(std::move(c));
}

std::vector<i64> ResidueRing::mul(const std::vector<i64>& a, const std::vector<i64>& b) const
{
    std::vector<i128> acc(d_, 0);
    for (int i = 0; i < d_; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < d_; ++j) {
            if (b[j] == 0)
                continue;
            const i128 ab = static_cast<i128>(a[i]) * b[j];
            const i64* c = &C_[(i * d_ + j) * d_];
            for (int k = 0; k < d_; ++k)
                if (c[k])
                    acc[k] += ab * c[k];
        }
    }
    std::vector<i64> out(d_);
    for (int k = 0; k < d_; ++k) {
        i128 r = acc[k] % n_;
        out[k] = static_cast<i64>(r < 0 ? r + n_ : r);
    }
    return reduce(std::move(out));
}

std::vector<i64> ResidueRing::pow(std::vector<i64> a, u64 e) const
{
    std::vector<i64> r = one();
    while (e) {
        if (e & 1)
            r = mul(r, a);
        e >>= 1;
        if (e)
            a = mul(a, a);
    }
    return r;
}

bool ResidueRing::is_zero(const std::vector<i64>& a) const
{
    for (i64 x : reduce(a))
        if (x != 0)
            return false;
    return true;
}

i64 ResidueRing::index(const std::vector<i64>& c) const
{
    i64 idx = 0;
    for (int i = d_ - 1; i >= 0; --i)
        idx = idx * H_[i * d_ + i] + c[i];
    return idx;
}

i64 ResidueRing::index_of(const std::vector<i64>& y) const
{
    std::array<i64, 8> v{};
    for (int i = 0; i < d_; ++i)
        v[i] = mod64(y[i], n_);
    i64 idx = 0;
    for (int i = d_ - 1; i >= 0; --i) {
        const i64 h = H_[i * d_ + i];
        const i64 q = v[i] >= 0 ? v[i] / h : -((-v[i] + h - 1) / h);
        if (q != 0)
            for (int k = 0; k <= i; ++k)
                v[k] -= q * H_[k * d_ + i];
    }
    for (int i = d_ - 1; i >= 0; --i)
        idx = idx * H_[i * d_ + i] + v[i];
    return idx;
}

std::vector<i64> ResidueRing::element(i64 index) const
{
    std::vector<i64> c(d_);
    for (int i = 0; i < d_; ++i) {
        const i64 h = H_[i * d_ + i];
        c[i] = index % h;
        index /= h;
    }
    return c;
}

namespace {

std::vector<i64> to_i64_coords(const FieldElement& x)
{
    std::vector<i64> out;
    for (const auto& c : x.integral_coords())
        out.push_back(to_i64(c));
    return out;
}

} // namespace

ResidueUnitGroup::ResidueUnitGroup(const Ideal& m) : R_(m)
{
    const NumberField& K = m.field();
    const int d = K.degree();
    auto fac = factor_ideal(m);
    std::size_t ngen = 0;
    for (const auto& [P, e] : fac) {
        if (e <= 0)
            math_error("NotIntegral", "modulus must be integral");
        Local L;
        Ideal Pe = P.ideal.pow(e);
        L.Pe = ResidueRing(Pe);
        L.P = ResidueRing(P.ideal);
        L.q = to_i64(P.norm());
        L.p = to_i64(P.p);
        L.f = static_cast<std::size_t>(P.f);
        L.unit_order = static_cast<u64>(L.q - 1);
        for (int k = 1; k < e; ++k)
            L.unit_order *= static_cast<u64>(L.q);
        // CRT lift: x -> 1 + (x - 1) E with E = 1 mod P^e and E = 0 mod m / P^e.
        std::vector<Int> E = K.one_coords();
        if (fac.size() > 1) {
            Ideal rest = m * Pe.inverse();
            E = coprime_decomposition(Pe, rest).second;
        }
        auto lift = [&](const std::vector<i64>& x) {
            std::vector<i64> xm1 = R_.sub(R_.reduce(x), R_.one());
            return R_.add(R_.one(), R_.mul(xm1, R_.reduce(E)));
        };
        // Residue field generator.
        auto fq = factor_integer(L.q - 1);
        std::vector<i64> g;
        for (i64 idx = 1; idx < L.P.size() && g.empty(); ++idx) {
            auto c = L.P.element(idx);
            bool ok = true;
            for (auto [ell, k] : fq)
                if (L.P.reduce(L.P.pow(c, static_cast<u64>((L.q - 1) / ell))) == L.P.one()) {
                    ok = false;
                    break;
                }
            if (ok)
                g = c;
        }
        if (g.empty() && L.q == 2)
            g = L.P.one();
        invariant(!g.empty(), "residue field has a generator");
        L.field_log.assign(L.P.size(), -1);
        {
            auto cur = L.P.one();
            for (i64 k = 0; k < L.q - 1; ++k) {
                L.field_log[L.P.index(cur)] = k;
                cur = L.P.mul(cur, g);
            }
        }
        Block B;
        B.prime = P;
        B.e = e;
        B.first = ngen;
        std::vector<i64> gglob = lift(g);
        L.g = L.Pe.reduce(gglob);
        gens_.push_back(gglob);
        B.level.push_back(0);
        ++ngen;
        // Filtration generators 1 + pi^k b_j over the F_p-basis b_j of O / P.
        std::vector<int> basis_pos;
        for (int i = 0; i < d; ++i)
            if (P.ideal.hnf()(i, i) != 1)
                basis_pos.push_back(i);
        invariant(basis_pos.size() == L.f, "residue field basis has size f");
        FieldElement pik = K.one();
        for (int k = 1; k < e; ++k) {
            pik = pik * P.uniformizer;
            L.Pk.emplace_back(P.ideal.pow(k + 1));
            std::vector<std::vector<i64>> bk;
            for (int j : basis_pos) {
                std::vector<Int> w(d, Int(0));
                w[j] = 1;
                FieldElement x = pik * K.from_basis(w);
                auto xc = to_i64_coords(x);
                bk.push_back(L.Pk.back().reduce(xc));
                auto h = R_.add(R_.one(), R_.reduce(xc));
                std::vector<i64> hglob = lift(h);
                L.filt.push_back(L.Pe.reduce(hglob));
                L.filt_level.push_back(k);
                gens_.push_back(hglob);
                B.level.push_back(k);
                ++ngen;
            }
            L.basis_k.push_back(std::move(bk));
        }
        locals_.push_back(std::move(L));
        blocks_.push_back(std::move(B));
    }
    // Relations: orders of the residue generator and p-th powers of filtration generators.
    rel_ = IntMatrix(ngen, ngen);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const Local& L = locals_[b];
        const Block& B = blocks_[b];
        const std::size_t nb = B.level.size();
        for (std::size_t t = 0; t < nb; ++t) {
            const std::size_t col = B.first + t;
            std::vector<i64> x = t == 0 ? L.g : L.filt[t - 1];
            const i64 ord = t == 0 ? L.q - 1 : L.p;
            auto lg = local_dlog(L, L.Pe.pow(x, static_cast<u64>(ord)));
            for (std::size_t s = 0; s < nb; ++s)
                rel_(B.first + s, col) = -lg[s];
            rel_(col, col) += ord;
        }
    }
    G_ = FiniteAbelianGroup::from_relations(ngen, rel_);
    i64 expect = 1;
    for (const auto& L : locals_)
        expect *= static_cast<i64>(L.unit_order);
    invariant(G_.order() == expect, "(O/m)^* has the expected order");
}

std::vector<i64> ResidueUnitGroup::local_dlog(const Local& L, std::vector<i64> y) const
{
    y = L.Pe.reduce(y);
    const i64 a = L.field_log[L.P.index(L.P.reduce(y))];
    if (a < 0)
        math_error("NotCoprime", "element is not a unit modulo the modulus");
    std::vector<i64> out{a};
    auto z = L.Pe.mul(y, L.Pe.pow(L.g, (L.unit_order - static_cast<u64>(a) % L.unit_order) % L.unit_order));
    std::size_t pos = 0;
    for (std::size_t k = 0; k < L.Pk.size(); ++k) {
        const ResidueRing& Rk = L.Pk[k];
        const auto& bk = L.basis_k[k];
        auto w = Rk.sub(Rk.reduce(z), Rk.one());
        std::vector<i64> c(L.f, 0);
        bool found = false;
        for (;;) {
            std::vector<i64> cand(Rk.degree(), 0);
            for (std::size_t j = 0; j < L.f; ++j)
                for (int i = 0; i < Rk.degree(); ++i)
                    cand[i] += c[j] * bk[j][i];
            if (Rk.reduce(cand) == w) {
                found = true;
                break;
            }
            std::size_t j = 0;
            while (j < L.f && ++c[j] == L.p)
                c[j++] = 0;
            if (j == L.f)
                break;
        }
        invariant(found, "filtration step has a solution");
        for (std::size_t j = 0; j < L.f; ++j) {
            out.push_back(c[j]);
            if (c[j])
                z = L.Pe.mul(z, L.Pe.pow(L.filt[pos + j], L.unit_order - static_cast<u64>(c[j])));
        }
        pos += L.f;
    }
    invariant(z == L.Pe.one(), "discrete log reconstructs the element");
    return out;
}

bool ResidueUnitGroup::is_unit(const std::vector<i64>& y) const
{
    for (const auto& L : locals_)
        if (L.P.is_zero(L.P.reduce(y)))
            return false;
    return true;
}

std::vector<i64> ResidueUnitGroup::dlog(const std::vector<i64>& y) const
{
    std::vector<i64> out;
    for (const auto& L : locals_) {
        auto l = local_dlog(L, y);
        out.insert(out.end(), l.begin(), l.end());
    }
    return out;
}

std::vector<i64> ResidueUnitGroup::dlog(const std::vector<Int>& y) const { return dlog(R_.reduce(y)); }

std::vector<std::int32_t> ResidueUnitGroup::image_table(const FiniteAbelianGroup& target,
                                                        const std::vector<std::vector<i64>>& images) const
{
    if (R_.size() > (i64{1} << 27))
        budget_error("residue table too large");
    const std::size_t k = gens_.size();
    const i64 order = target.order();
    std::vector<std::vector<std::int32_t>> step(k, std::vector<std::int32_t>(order));
    for (i64 c = 0; c < order; ++c) {
        auto x = target.element(c);
        for (std::size_t j = 0; j < k; ++j)
            step[j][c] = static_cast<std::int32_t>(target.index(target.add(x, images[j])));
    }
    std::vector<std::int32_t> table(R_.size(), -1);
    std::deque<i64> queue;
    const auto one = R_.one();
    table[R_.index(one)] = 0;
    queue.push_back(R_.index(one));
    while (!queue.empty()) {
        const i64 idx = queue.front();
        queue.pop_front();
        const auto x = R_.element(idx);
        const std::int32_t c = table[idx];
        for (std::size_t j = 0; j < k; ++j) {
            const i64 y = R_.index(R_.mul(x, gens_[j]));
            if (table[y] < 0) {
                table[y] = step[j][c];
                queue.push_back(y);
            }
        }
    }
    return table;
}

i64 ResidueUnitGroup::subgroup_order(const std::vector<std::vector<i64>>& elems) const
{
    std::vector<char> seen(R_.size(), 0);
    std::deque<i64> queue;
    const i64 start = R_.index(R_.one());
    seen[start] = 1;
    queue.push_back(start);
    i64 count = 1;
    std::vector<std::vector<i64>> gens;
    for (const auto& e : elems)
        gens.push_back(R_.reduce(e));
    while (!queue.empty()) {
        const auto x = R_.element(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            const i64 y = R_.index(R_.mul(x, g));
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                queue.push_back(y);
            }
        }
    }
    return count;
}

} // namespace shintani
