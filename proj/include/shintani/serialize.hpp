#pragma once

#include <string>

#include <json.hpp>

#include "shintani/character.hpp"
#include "shintani/cocycle.hpp"
#include "shintani/lseries.hpp"

namespace shintani {

// std::map-backed, so keys come out sorted.
using Json = nlohmann::json;

Json to_json(const Int& x);
Json to_json(const Rat& x);
Json to_json(const std::vector<Rat>& v);
Json to_json(const CyclotomicNumber& x);
Json to_json(const PAdicCyclotomic& x);
Json to_json(const FieldElement& x);
Json to_json(const Ideal& a);
Json to_json(const HalfOpenCone& c);
Json to_json(const ConeFunction& f);
Json to_json(const FiniteAbelianGroup& g);
Json to_json(const RayClassGroup& g);
Json to_json(const HeckeCharacter& chi);
Json to_json(const CheckReport& r);
Json to_json(const MeasureTable& t);
Json to_json(const LogMoment& m);
Json to_json(const SmoothingFactor& f);
Json to_json(const VanishingReport& r);
Json field_json(const NumberField& K, const UnitGroupData& units);

// Decimal strings only.
Int int_from_json(const Json& j, const std::string& what);
i64 i64_from_json(const Json& j, const std::string& what);
Rat rat_from_json(const Json& j, const std::string& what);
CyclotomicNumber cyclotomic_from_json(const Json& j);

// Sorted keys, no whitespace.
std::string canonical(const Json& j);

} // namespace shintani
