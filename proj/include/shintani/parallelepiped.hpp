#pragma once

#include <functional>
#include <vector>

#include "shintani/ideal.hpp"

namespace shintani {

// b ∩ P(x) with P(x) = { sum t_i x_i : 0 < t_i <= 1 }, for x_1..x_m in b linearly independent.
class Parallelepiped {
public:
    Parallelepiped(const Ideal& b, std::vector<FieldElement> x);

    const std::vector<FieldElement>& generators() const noexcept { return x_; }
    // Number of points: index of the span of x in its saturation inside b.
    const Int& count() const noexcept { return count_; }

    // Visits every point; coordinates are in the integral basis (integral ideals only).
    void for_each(const std::function<void(const std::vector<i64>&)>& visit) const;
    // Parameter vectors t (common denominator L = largest invariant) for every point.
    void for_each_parameter(const std::function<void(const std::vector<i64>& T, i64 L)>& visit) const;
    std::vector<FieldElement> points() const;

private:
    const NumberField* K_;
    Ideal b_;
    std::vector<FieldElement> x_;
    IntMatrix X_;      // generators in b-coordinates (d x m)
    IntMatrix V_;      // Smith transform
    std::vector<i64> inv_;  // invariants d_1 | ... | d_m
    Int count_;
};

std::vector<FieldElement> enumerate_parallelepiped(const Ideal& b, const std::vector<FieldElement>& x);

} // namespace shintani
