#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shintani/cocycle.hpp"
#include "shintani/padic.hpp"
#include "shintani/solomon_hu.hpp"

namespace shintani {

// mu_{chi,q} on the classes of Cl+(p^n).
struct MeasureTable {
    std::string label;
    i64 p = 0, q = 0;
    int n = 1;
    std::shared_ptr<const RayClassGroup> G;
    std::vector<CyclotomicNumber> mu;  // by class index
    i64 points = 0;

    CyclotomicNumber mass() const;
    // Largest p-power dividing a denominator of an entry; 0 when every entry is p-integral.
    int max_denominator_exponent() const;
};

MeasureTable measure_table_from_weights(const HeckeCharacter& chi, i64 p, int n, const SmoothingData& sm,
                                        const ClassWeights& w);
MeasureTable build_measure_table(const HeckeCharacter& chi, i64 p, int n, const SmoothingData& sm,
                                 const ConeFunction& A, const std::vector<Ideal>& reps,
                                 const EvaluationOptions& opt = {});
// Push-forward of a level-n table to a coarser group (modulus dividing p^n).
MeasureTable aggregate(const MeasureTable& t, std::shared_ptr<const RayClassGroup> coarse, int n);

struct LogMoment {
    int k = 0;
    PAdicCyclotomic value;
    int precision = 0;  // value is meaningful modulo p^precision
    std::optional<CyclotomicNumber> exact;  // k = 0
    bool vanishes() const { return exact ? exact->is_zero() : value.valuation() >= precision; }
};

// sum_c (log_p N(c))^k mu(c) with precision min(M, n + k - 1) for k >= 1.
LogMoment log_moment(const MeasureTable& t, int k, int M);

struct SmoothingFactor {
    i64 q = 0;
    i64 chi_exponent = 0;  // chi(Q) = zeta_N^e
    Int bracket;           // <q> = q / omega(q) mod p^M
    int valuation = 0;     // of 1 - chi(Q) <q>
    int valuation_dual = 0;  // of 1 - chi^{-1}(Q) <q>
};

SmoothingFactor smoothing_factor(const HeckeCharacter& chi, i64 p, int M, const SmoothingData& sm);

struct VanishingReport {
    i64 p = 0;
    int n = 1, M = 1, r = 0;
    SmoothingFactor smoothing;
    CyclotomicNumber mass;
    std::vector<LogMoment> moments;  // k = 0..r
    bool pass = false;
    std::string verdict;
    // m_0 / (1 - chi^{-1}(Q) q) = L_{S_p}(chi^{-1}, 0).
    CyclotomicNumber lvalue_dual;
    i64 points = 0;
};

struct VanishingOptions {
    int n = 1;
    int M = 4;
    std::optional<i64> q;
    EvaluationOptions eval;
};

VanishingReport vanishing_report(const HeckeCharacter& chi, i64 p, const VanishingOptions& opt = {});
VanishingReport vanishing_report(const HeckeCharacter& chi, i64 p, const MeasureTable& t, int M,
                                 const SmoothingData& sm);

// Sum_c eta(c) mu(c) against the independent moment for every character of the table's group,
// and the inversion mu(c) = |G|^{-1} sum_eta eta^{-1}(c) moment(eta).
CheckReport fourier_consistency(const HeckeCharacter& chi, const MeasureTable& t, const SmoothingData& sm,
                                const ConeFunction& A, const std::vector<Ideal>& reps,
                                const EvaluationOptions& opt = {}, std::size_t max_characters = 0);

// Cone function used by the pipeline for the field's degree.
ConeFunction pipeline_cone_function(const NumberField& K, const UnitGroupData& units);
SmoothingData pipeline_smoothing(const HeckeCharacter& chi, i64 p, int M, std::optional<i64> q);

} // namespace shintani
