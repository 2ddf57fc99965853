#pragma once

#include <cstdint>

#include "shintani/lseries.hpp"

namespace shintani {

// Alternating-sum and equivariance checks on random unit tuples and random points.
CheckReport cocycle_suite(const NumberField& K, const UnitGroupData& units, int tuples, int points,
                          std::uint64_t seed);
// Translate sums of the capped class at random points, and for d = 2 pointwise agreement with the
// classical domain.
CheckReport psi_suite(const NumberField& K, const UnitGroupData& units, int samples, std::uint64_t seed);
// smoothed_zeta0 of a random open cone against a subdivision along a x_1 + b x_2 and against a
// rescaling of one generator by k prime to q.
CheckReport subdivision_suite(const HeckeCharacter& chi, const SmoothingData& sm, const Ideal& support,
                              int cases, std::uint64_t seed);
// Level n + 1 table pushed to level n against the level-n table, and the k = 1 moments mod p^prec.
CheckReport refinement_suite(const MeasureTable& coarse, const MeasureTable& fine, int M);

} // namespace shintani
