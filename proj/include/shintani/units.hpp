#pragma once

#include <vector>

#include "shintani/field.hpp"

namespace shintani {

// Basis eps_1..eps_{d-1} of the totally positive units E_+, with the orientation sign mu of
// det(Log eps_1, ..., Log eps_{d-1}, (1, ..., 1)).
struct UnitGroupData {
    std::vector<FieldElement> eps;
    int mu = 1;
};

bool is_unit(const FieldElement& x);
std::vector<double> log_embedding(const FieldElement& x);

// Fundamental unit of a real quadratic field by a Pell-type search over O = Z + Z w.
FieldElement fundamental_unit_d2(const NumberField& K, i64 max_b = 10'000'000);

// Z-basis (1, w) of O for d = 2.
FieldElement quadratic_order_generator(const NumberField& K);

// Basis of E_+ from generators of E / {+-1}.
UnitGroupData totally_positive_units(const NumberField& K, const std::vector<FieldElement>& units);

// Unit data from the field spec (units supplied) or the quadratic search.
UnitGroupData unit_group(const NumberField& K);

int log_orientation(const std::vector<FieldElement>& eps);

} // namespace shintani
