#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shintani/field.hpp"
#include "shintani/matrix.hpp"

namespace shintani {

// Integral-basis coordinate helpers.
std::vector<Int> multiply_coords(const NumberField& K, const std::vector<Int>& a, const std::vector<Int>& b);
// Matrix of multiplication by a (integral coordinates) acting on integral coordinates.
IntMatrix multiplication_matrix_coords(const NumberField& K, const std::vector<Int>& a);

// Fractional ideal (1/den) * H Z^d in integral-basis coordinates, H in Hermite form.
class Ideal {
public:
    Ideal() = default;
    static Ideal unit(const NumberField& K);
    static Ideal from_integer(const NumberField& K, const Int& n);
    static Ideal principal(const FieldElement& x);
    static Ideal from_generators(const NumberField& K, const std::vector<FieldElement>& gens);
    // Lattice spanned by the given rational coordinate vectors (must be an O-module).
    static Ideal from_coords(const NumberField& K, const std::vector<std::vector<Rat>>& vecs);

    const NumberField& field() const { return *K_; }
    const IntMatrix& hnf() const noexcept { return H_; }
    const Int& denominator() const noexcept { return den_; }
    bool is_integral() const noexcept { return den_ == 1; }
    bool is_unit() const;

    Rat norm() const;
    bool contains(const FieldElement& x) const;
    bool contains_coords(const std::vector<Rat>& c) const;
    bool contains_coords(const std::vector<Int>& c) const;
    // Inclusion this ⊆ other.
    bool subset_of(const Ideal& other) const;

    Ideal operator*(const Ideal& b) const;
    Ideal operator+(const Ideal& b) const;
    Ideal intersect(const Ideal& b) const;
    Ideal inverse() const;
    Ideal pow(int e) const;
    Ideal scaled(const Rat& s) const;

    // Positive generator of the ideal's intersection with Q.
    Rat min_rational() const;
    // Z-basis elements.
    std::vector<FieldElement> basis() const;
    // Rational coordinate vectors of the Z-basis (integral-basis coordinates).
    std::vector<std::vector<Rat>> basis_coords() const;
    std::vector<std::vector<Int>> integer_basis_coords() const;  // integral ideals only

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.den_ == b.den_ && a.H_ == b.H_; }
    friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }
    friend bool operator<(const Ideal& a, const Ideal& b);

    std::string to_string() const;

private:
    Ideal(const NumberField* K, IntMatrix H, Int den);
    static Ideal from_integer_columns(const NumberField* K, const IntMatrix& cols, const Int& den);
    const NumberField* K_ = nullptr;
    IntMatrix H_;
    Int den_ = 1;
};

struct PrimeIdeal {
    Ideal ideal;
    Int p;
    int e = 1;  // ramification index
    int f = 1;  // residue degree
    FieldElement uniformizer;
    Int norm() const;
};

bool operator==(const PrimeIdeal& a, const PrimeIdeal& b);

// Primes above a rational prime p not dividing [O : Z[theta]], sorted by (norm, HNF).
std::vector<PrimeIdeal> factor_rational_prime(const NumberField& K, const Int& p);

// Factorization of a nonzero fractional ideal into prime powers.
std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const Ideal& a);
int ideal_valuation(const Ideal& a, const PrimeIdeal& P);

// For coprime integral ideals I, J: (a, b) with a in I, b in J, a + b = 1 (integral coords).
std::pair<std::vector<Int>, std::vector<Int>> coprime_decomposition(const Ideal& I, const Ideal& J);

// Reduce integral coordinates modulo an integral ideal (canonical representative).
std::vector<Int> reduce_mod(const Ideal& m, std::vector<Int> v);

} // namespace shintani
