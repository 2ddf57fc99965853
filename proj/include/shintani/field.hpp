#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shintani/matrix.hpp"
#include "shintani/numeric.hpp"
#include "shintani/poly.hpp"

namespace shintani {

struct FieldSpec {
    std::string name;
    std::vector<Int> minpoly;                         // monic, low to high
    std::vector<std::vector<Rat>> integral_basis;     // power-basis coordinates; empty = power basis
    std::vector<std::vector<Rat>> units;              // optional unit generators (power coords)
    std::optional<int> narrow_class_number;
};

class FieldElement;

// Closed rational interval.
struct Interval {
    Rat lo, hi;
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator*(const Rat& s, const Interval& a);
};

// Totally real number field with a fixed ordered set of real embeddings (ascending roots).
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static std::shared_ptr<const NumberField> create(const FieldSpec& spec);

    int degree() const noexcept { return d_; }
    const std::string& name() const noexcept { return name_; }
    const FieldSpec& spec() const noexcept { return spec_; }
    const QPoly& minpoly() const noexcept { return f_; }
    const Int& discriminant() const noexcept { return disc_; }
    const Int& poly_discriminant() const noexcept { return poly_disc_; }
    // [O : Z[theta]]
    const Int& index() const noexcept { return index_; }

    // Columns: power-basis coordinates of the integral basis omega_1..omega_d.
    const RatMatrix& integral_basis() const noexcept { return basis_; }
    const RatMatrix& integral_basis_inverse() const noexcept { return basis_inv_; }
    // omega_i omega_j = sum_k C[i][j][k] omega_k
    const std::vector<std::vector<std::vector<Int>>>& structure_constants() const noexcept { return C_; }
    // Integral-basis coordinates of 1.
    const std::vector<Int>& one_coords() const noexcept { return one_; }

    const std::vector<RationalInterval>& root_intervals() const noexcept { return roots_; }
    const std::vector<double>& root_approx() const noexcept { return roots_d_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement theta() const;
    FieldElement from_power(std::vector<Rat> c) const;
    FieldElement from_basis(const std::vector<Rat>& c) const;
    FieldElement from_basis(const std::vector<Int>& c) const;
    FieldElement from_rational(const Rat& a) const;
    // Power-basis coordinates of theta^k, k < 2d - 1.
    const std::vector<Rat>& theta_power(int k) const { return reduce_[k]; }

    // Embedding matrix of the power basis is a Vandermonde matrix in ascending roots, so its
    // determinant is positive.
    int vandermonde_sign() const noexcept { return 1; }

private:
    NumberField() = default;
    void build(const FieldSpec& spec);

    int d_ = 0;
    std::string name_;
    FieldSpec spec_;
    QPoly f_;
    Int poly_disc_, disc_, index_;
    RatMatrix basis_, basis_inv_;
    std::vector<std::vector<std::vector<Int>>> C_;
    std::vector<Int> one_;
    std::vector<std::vector<Rat>> reduce_;
    std::vector<RationalInterval> roots_;
    std::vector<double> roots_d_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element in power-basis coordinates. The field must outlive the element.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const NumberField* K, std::vector<Rat> c) : K_(K), c_(std::move(c)) {}

    const NumberField& field() const { return *K_; }
    const NumberField* field_ptr() const noexcept { return K_; }
    const std::vector<Rat>& coords() const noexcept { return c_; }
    bool is_zero() const;
    bool is_rational() const;

    std::vector<Rat> basis_coords() const;
    bool is_integral() const;
    std::vector<Int> integral_coords() const;  // throws NotIntegral

    RatMatrix multiplication_matrix() const;   // power basis
    Rat norm() const;
    Rat trace() const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    double embed_approx(int i) const;
    Interval embed_interval(int i, const RationalInterval& root) const;
    // Certified sign of sigma_i(x).
    int embedding_sign(int i) const;
    std::vector<int> signs() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const Rat& s, const FieldElement& a);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.c_ < b.c_; }

    std::string to_string() const;

private:
    const NumberField* K_ = nullptr;
    std::vector<Rat> c_;
};

bool totally_positive(const FieldElement& x);
// Exact sign of det(sigma_i(x_j)) for d elements, by adaptive interval refinement.
int det_sign(const std::vector<FieldElement>& xs);
// Exact sign via the rational coordinate determinant; used as a cross-check.
int det_sign_rational(const std::vector<FieldElement>& xs);
RatMatrix coordinate_matrix(const std::vector<FieldElement>& xs);

} // namespace shintani
