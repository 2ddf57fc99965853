#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "shintani/serialize.hpp"

namespace shintani {

struct CharacterSpec {
    std::string type;  // "norm-induced" or "ray"
    // norm-induced: kronecker discriminant, or modulus and exponents on dirichlet_generators
    std::optional<i64> kronecker;
    i64 dirichlet_modulus = 1;
    std::vector<i64> dirichlet_exponents;
    // ray: generators of the modulus (integral-basis coordinates), order N and exponents on the Smith generators
    std::vector<std::vector<Int>> modulus_hnf;
    i64 order = 1;
    std::vector<i64> exponent_vector;
};

struct RunConfig {
    FieldSpec field;
    std::optional<CharacterSpec> character;
    std::optional<i64> p;
    int precision = 4;
    int level = 1;
    std::optional<i64> q;  // nullopt = auto
    i64 budget = 10'000'000;
    int jobs = 1;
    std::string cache_dir;
    std::string out;
};

Json read_json_file(const std::filesystem::path& path);
FieldSpec parse_field_spec(const Json& j);
CharacterSpec parse_character_spec(const Json& j);
// Unknown keys are rejected; "field" and "character" may be inline objects or file paths.
RunConfig parse_run_config(const Json& j, const std::filesystem::path& base = {});

// Field, units, narrow class group and character built from a config.
struct Session {
    FieldPtr K;
    UnitGroupData units;
    std::shared_ptr<const NarrowClassGroup> narrow;
    std::optional<DirichletCharacter> psi;
    std::optional<HeckeCharacter> chi;
};

Session open_session(const RunConfig& cfg);
HeckeCharacter make_character(const NumberField& K, const UnitGroupData& units,
                              std::shared_ptr<const NarrowClassGroup> narrow, const CharacterSpec& spec,
                              std::optional<DirichletCharacter>* psi = nullptr);

} // namespace shintani
