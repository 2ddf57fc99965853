#include "shintani/abelian.hpp"
#include "shintani/errors.hpp"

namespace shintani {

FiniteAbelianGroup FiniteAbelianGroup::from_relations(std::size_t generators, const IntMatrix& R)
{
    FiniteAbelianGroup G;
    G.k_ = generators;
    if (generators == 0)
        return G;
    IntMatrix A = R;
    if (A.rows() != generators)
        math_error("InvariantViolation", "relation matrix has wrong row count");
    if (A.cols() == 0)
        math_error("InfiniteGroup", "no relations");
    SmithResult S = smith(A);
    auto diag = S.diagonal();
    if (diag.size() < generators)
        math_error("InfiniteGroup", "fewer relations than generators");
    for (std::size_t i = 0; i < generators; ++i) {
        if (diag[i] == 0)
            math_error("InfiniteGroup", "relation lattice has deficient rank");
        if (diag[i] == 1) {
            ++G.skip_;
            continue;
        }
        if (!fits_i64(diag[i]) || diag[i] > Int(1) << 40)
            budget_error("group invariant too large");
        G.n_.push_back(diag[i].get_si());
        G.order_ *= G.n_.back();
    }
    G.U_ = S.U;
    RatMatrix inv = inverse(to_rat(S.U));
    G.Uinv_ = to_int(inv);
    return G;
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(i64 n)
{
    IntMatrix R(1, 1);
    R(0, 0) = Int(static_cast<long>(n));
    return from_relations(1, R);
}

std::vector<i64> FiniteAbelianGroup::reduce(const std::vector<Int>& x) const
{
    if (x.size() != k_)
        math_error("InvariantViolation", "element has wrong presentation length");
    std::vector<i64> out(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i) {
        const std::size_t row = skip_ + i;
        Int s = 0;
        for (std::size_t j = 0; j < k_; ++j)
            s += U_(row, j) * x[j];
        out[i] = mod(s, Int(static_cast<long>(n_[i]))).get_si();
    }
    return out;
}

std::vector<i64> FiniteAbelianGroup::reduce(const std::vector<i64>& x) const
{
    std::vector<Int> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = Int(static_cast<long>(x[i]));
    return reduce(y);
}

std::vector<Int> FiniteAbelianGroup::generator(std::size_t i) const
{
    std::vector<Int> g(k_);
    for (std::size_t j = 0; j < k_; ++j)
        g[j] = Uinv_(j, skip_ + i);
    return g;
}

std::vector<i64> FiniteAbelianGroup::add(const std::vector<i64>& a, const std::vector<i64>& b) const
{
    std::vector<i64> c(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i)
        c[i] = (a[i] + b[i]) % n_[i];
    return c;
}

std::vector<i64> FiniteAbelianGroup::neg(const std::vector<i64>& a) const
{
    std::vector<i64> c(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i)
        c[i] = (n_[i] - a[i]) % n_[i];
    return c;
}

std::vector<i64> FiniteAbelianGroup::scale(const std::vector<i64>& a, i64 k) const
{
    std::vector<i64> c(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i)
        c[i] = mod64(static_cast<i64>((static_cast<i128>(a[i]) * k) % n_[i]), n_[i]);
    return c;
}

bool FiniteAbelianGroup::is_zero(const std::vector<i64>& a) const
{
    for (i64 x : a)
        if (x != 0)
            return false;
    return true;
}

i64 FiniteAbelianGroup::index(const std::vector<i64>& a) const
{
    i64 idx = 0;
    for (std::size_t i = n_.size(); i-- > 0;)
        idx = idx * n_[i] + a[i];
    return idx;
}

std::vector<i64> FiniteAbelianGroup::element(i64 index) const
{
    std::vector<i64> a(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i) {
        a[i] = index % n_[i];
        index /= n_[i];
    }
    return a;
}

std::vector<i64> transport_to_smith(const FiniteAbelianGroup& G, const std::vector<i64>& values, i64 N)
{
    std::vector<i64> out;
    for (std::size_t i = 0; i < G.rank(); ++i) {
        auto g = G.generator(i);
        Int s = 0;
        for (std::size_t j = 0; j < g.size(); ++j)
            s += g[j] * Int(static_cast<long>(values[j]));
        out.push_back(mod(s, Int(static_cast<long>(N))).get_si());
    }
    return out;
}

} // namespace shintani
