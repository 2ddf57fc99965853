#include "shintani/matrix.hpp"
#include "shintani/errors.hpp"

#include <algorithm>

namespace shintani {

RatMatrix to_rat(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rat(m(i, j));
    return r;
}

IntMatrix to_int(const RatMatrix& m)
{
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                math_error("NotIntegral", "matrix entry " + to_string(m(i, j)));
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

Rat determinant(RatMatrix m)
{
    const std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0)
                continue;
            Rat f = m(r, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k)
                m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

Int determinant(const IntMatrix& m)
{
    // Bareiss fraction-free elimination.
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Int prev = 1;
    int s = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(p, k);
            s = -s;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return s * a(n - 1, n - 1);
}

std::size_t rank(RatMatrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0)
                continue;
            Rat f = m(i, c) / m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m(i, k) -= f * m(r, k);
        }
        ++r;
    }
    return r;
}

RatMatrix inverse(const RatMatrix& m)
{
    const std::size_t n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            math_error("Singular", "matrix is not invertible");
        a.swap_rows(p, c);
        inv.swap_rows(p, c);
        Rat piv = a(c, c);
        for (std::size_t k = 0; k < n; ++k) {
            a(c, k) /= piv;
            inv(c, k) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0)
                continue;
            Rat f = a(r, c);
            for (std::size_t k = 0; k < n; ++k) {
                a(r, k) -= f * a(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

std::vector<Rat> solve(const RatMatrix& m, const std::vector<Rat>& b)
{
    return inverse(m) * b;
}

namespace {

// Column operation on (col a, col b) so that entry (row, a) becomes gcd and (row, b) zero.
void gcd_columns(IntMatrix& M, IntMatrix* U, std::size_t row, std::size_t a, std::size_t b)
{
    const Int x = M(row, a), y = M(row, b);
    if (y == 0)
        return;
    ExtGcd e;
    if (mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t()))
        e = {x, 1, 0};
    else
        e = ext_gcd(x, y);
    Int xa = x / e.g, yb = y / e.g;
    auto apply = [&](IntMatrix& T) {
        for (std::size_t i = 0; i < T.rows(); ++i) {
            Int ca = T(i, a), cb = T(i, b);
            T(i, a) = e.s * ca + e.t * cb;
            T(i, b) = -yb * ca + xa * cb;
        }
    };
    apply(M);
    if (U)
        apply(*U);
}

void gcd_rows(IntMatrix& M, IntMatrix* U, std::size_t col, std::size_t a, std::size_t b)
{
    const Int x = M(a, col), y = M(b, col);
    if (y == 0)
        return;
    ExtGcd e;
    if (mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t()))
        e = {x, 1, 0};
    else
        e = ext_gcd(x, y);
    Int xa = x / e.g, yb = y / e.g;
    auto apply = [&](IntMatrix& T) {
        for (std::size_t j = 0; j < T.cols(); ++j) {
            Int ra = T(a, j), rb = T(b, j);
            T(a, j) = e.s * ra + e.t * rb;
            T(b, j) = -yb * ra + xa * rb;
        }
    };
    apply(M);
    if (U)
        apply(*U);
}

} // namespace

HermiteResult hermite(const IntMatrix& A, bool want_transform)
{
    HermiteResult res;
    res.H = A;
    const std::size_t m = A.rows(), n = A.cols();
    if (want_transform)
        res.U = IntMatrix::identity(n);
    IntMatrix* U = want_transform ? &res.U : nullptr;
    std::size_t piv = n;
    for (std::size_t ii = m; ii-- > 0 && piv > 0;) {
        std::size_t p = piv - 1;
        // Gather the gcd of row ii over columns [0, p] into column p.
        for (std::size_t j = 0; j < p; ++j)
            if (res.H(ii, j) != 0)
                gcd_columns(res.H, U, ii, p, j);
        if (res.H(ii, p) == 0) {
            // Column p might be zero in this row; find another column.
            std::size_t j = 0;
            while (j < p && res.H(ii, j) == 0)
                ++j;
            if (j == p)
                continue;
            res.H.swap_columns(j, p);
            if (U)
                U->swap_columns(j, p);
        }
        if (res.H(ii, p) < 0) {
            for (std::size_t i = 0; i < m; ++i)
                res.H(i, p) = -res.H(i, p);
            if (U)
                for (std::size_t i = 0; i < n; ++i)
                    (*U)(i, p) = -(*U)(i, p);
        }
        const Int d = res.H(ii, p);
        for (std::size_t c = p + 1; c < n; ++c) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), res.H(ii, c).get_mpz_t(), d.get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t i = 0; i < m; ++i)
                res.H(i, c) -= q * res.H(i, p);
            if (U)
                for (std::size_t i = 0; i < n; ++i)
                    (*U)(i, c) -= q * (*U)(i, p);
        }
        --piv;
        ++res.rank;
    }
    return res;
}

IntMatrix hnf_basis(const IntMatrix& A)
{
    HermiteResult h = hermite(A);
    const std::size_t d = A.rows();
    if (h.rank != d)
        math_error("RankDeficient", "lattice generators do not span full rank");
    IntMatrix B(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            B(i, j) = h.H(i, A.cols() - d + j);
    return B;
}

std::vector<Int> SmithResult::diagonal() const
{
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        out.push_back(D(i, i));
    return out;
}

SmithResult smith(const IntMatrix& A)
{
    SmithResult r;
    const std::size_t m = A.rows(), n = A.cols();
    r.D = A;
    r.U = IntMatrix::identity(m);
    r.V = IntMatrix::identity(n);
    IntMatrix& D = r.D;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (bi == m || abs(D(i, j)) < abs(D(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m)
                return r;
            if (bi != t) {
                D.swap_rows(bi, t);
                r.U.swap_rows(bi, t);
            }
            if (bj != t) {
                D.swap_columns(bj, t);
                r.V.swap_columns(bj, t);
            }
            bool clean = false;
            while (!clean) {
                clean = true;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (D(i, t) != 0) {
                        gcd_rows(D, &r.U, t, t, i);
                        clean = false;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(t, j) != 0) {
                        gcd_columns(D, &r.V, t, t, j);
                        clean = false;
                    }
                if (!clean) {
                    clean = true;
                    for (std::size_t i = t + 1; i < m; ++i)
                        if (D(i, t) != 0)
                            clean = false;
                }
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        for (std::size_t k = 0; k < n; ++k)
                            D(t, k) += D(i, k);
                        for (std::size_t k = 0; k < m; ++k)
                            r.U(t, k) += r.U(i, k);
                        divisible = false;
                        break;
                    }
            if (divisible)
                break;
        }
        if (D(t, t) < 0) {
            for (std::size_t k = 0; k < n; ++k)
                D(t, k) = -D(t, k);
            for (std::size_t k = 0; k < m; ++k)
                r.U(t, k) = -r.U(t, k);
        }
    }
    return r;
}

IntMatrix integer_kernel(const IntMatrix& A)
{
    SmithResult s = smith(A);
    std::size_t r = 0;
    while (r < std::min(A.rows(), A.cols()) && s.D(r, r) != 0)
        ++r;
    IntMatrix K(A.cols(), A.cols() - r);
    for (std::size_t j = r; j < A.cols(); ++j)
        for (std::size_t i = 0; i < A.cols(); ++i)
            K(i, j - r) = s.V(i, j);
    return K;
}

} // namespace shintani
