#include "shintani/parallelepiped.hpp"
#include "shintani/errors.hpp"

namespace shintani {

Parallelepiped::Parallelepiped(const Ideal& b, std::vector<FieldElement> x)
    : K_(&b.field()), b_(b), x_(std::move(x))
{
    const int d = K_->degree();
    const std::size_t m = x_.size();
    if (m == 0 || static_cast<int>(m) > d)
        math_error("BadGenerators", "parallelepiped needs 1..d generators");
    RatMatrix Hinv = inverse(to_rat(b_.hnf()));
    X_ = IntMatrix(d, m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rat> c = Hinv * x_[j].basis_coords();
        for (int i = 0; i < d; ++i) {
            Rat v = c[i] * b_.denominator();
            if (v.get_den() != 1)
                math_error("NotInIdeal", x_[j].to_string() + " is not in " + b_.to_string());
            X_(i, j) = v.get_num();
        }
    }
    SmithResult S = smith(X_);
    auto diag = S.diagonal();
    count_ = 1;
    for (std::size_t j = 0; j < m; ++j) {
        if (diag[j] == 0)
            math_error("BadGenerators", "parallelepiped generators are linearly dependent");
        if (!fits_i64(diag[j]) || diag[j] > Int(1) << 40)
            budget_error("parallelepiped index too large");
        inv_.push_back(diag[j].get_si());
        count_ *= diag[j];
    }
    V_ = S.V;
}

void Parallelepiped::for_each_parameter(const std::function<void(const std::vector<i64>&, i64)>& visit) const
{
    const std::size_t m = x_.size();
    const i64 L = inv_.back();
    // Advancing a_j by one adds column j of V scaled by L / d_j to T (mod L).
    std::vector<std::vector<i64>> step(m, std::vector<i64>(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i)
            step[j][i] = mod(V_(i, j) * Int(static_cast<long>(L / inv_[j])), Int(static_cast<long>(L))).get_si();
    std::vector<i64> a(m, 0), T(m, 0), out(m);
    for (;;) {
        for (std::size_t i = 0; i < m; ++i)
            out[i] = T[i] == 0 ? L : T[i];
        visit(out, L);
        std::size_t j = m;
        for (;;) {
            if (j == 0)
                return;
            --j;
            if (a[j] + 1 < inv_[j]) {
                ++a[j];
                for (std::size_t i = 0; i < m; ++i)
                    T[i] = (T[i] + step[j][i]) % L;
                break;
            }
            // Reset a_j to 0: subtract (d_j - 1) steps, i.e. add one step.
            for (std::size_t i = 0; i < m; ++i)
                T[i] = (T[i] + step[j][i]) % L;
            a[j] = 0;
        }
    }
}

void Parallelepiped::for_each(const std::function<void(const std::vector<i64>&)>& visit) const
{
    if (!b_.is_integral())
        math_error("NotIntegral", "integer enumeration needs an integral lattice");
    const int d = K_->degree();
    const std::size_t m = x_.size();
    IntMatrix HX = b_.hnf() * X_;
    std::vector<std::vector<i64>> hx(d, std::vector<i64>(m));
    for (int i = 0; i < d; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!fits_i64(HX(i, j)))
                budget_error("generator coordinates exceed 64 bits");
            hx[i][j] = HX(i, j).get_si();
        }
    std::vector<i64> c(d);
    for_each_parameter([&](const std::vector<i64>& T, i64 L) {
        for (int i = 0; i < d; ++i) {
            i128 s = 0;
            for (std::size_t j = 0; j < m; ++j)
                s += static_cast<i128>(hx[i][j]) * T[j];
            c[i] = static_cast<i64>(s / L);
        }
        visit(c);
    });
}

std::vector<FieldElement> Parallelepiped::points() const
{
    std::vector<FieldElement> out;
    for_each_parameter([&](const std::vector<i64>& T, i64 L) {
        FieldElement p = K_->zero();
        for (std::size_t j = 0; j < x_.size(); ++j)
            p = p + make_rat(Int(static_cast<long>(T[j])), Int(static_cast<long>(L))) * x_[j];
        out.push_back(p);
    });
    return out;
}

std::vector<FieldElement> enumerate_parallelepiped(const Ideal& b, const std::vector<FieldElement>& x)
{
    return Parallelepiped(b, x).points();
}

} // namespace shintani
