#include "shintani/config.hpp"
#include "shintani/errors.hpp"

#include <fstream>
#include <set>

namespace shintani {

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where)
{
    if (!j.is_object())
        config_error("BadConfig", where + " must be an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k))
            config_error("UnknownKey", "unknown key '" + k + "' in " + where);
}

std::vector<i64> i64_list(const Json& j, const std::string& what)
{
    if (!j.is_array())
        config_error("BadConfig", what + " must be an array");
    std::vector<i64> out;
    for (const auto& x : j)
        out.push_back(i64_from_json(x, what));
    return out;
}

std::vector<std::vector<Rat>> rat_rows(const Json& j, const std::string& what)
{
    if (!j.is_array())
        config_error("BadConfig", what + " must be an array of arrays");
    std::vector<std::vector<Rat>> out;
    for (const auto& row : j) {
        if (!row.is_array())
            config_error("BadConfig", what + " must be an array of arrays");
        std::vector<Rat> r;
        for (const auto& x : row)
            r.push_back(rat_from_json(x, what));
        out.push_back(std::move(r));
    }
    return out;
}

Json inline_or_file(const Json& j, const std::filesystem::path& base)
{
    if (!j.is_string())
        return j;
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative() && !base.empty())
        p = base / p;
    return read_json_file(p);
}

} // namespace

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        config_error("BadConfig", "cannot open " + path.string());
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded())
        config_error("BadConfig", path.string() + " is not valid JSON");
    return j;
}

FieldSpec parse_field_spec(const Json& j)
{
    reject_unknown(j, {"name", "minpoly", "integral_basis", "units", "narrow_class_number"}, "field");
    FieldSpec s;
    s.name = j.value("name", "");
    if (!j.contains("minpoly") || !j["minpoly"].is_array())
        config_error("BadConfig", "field needs a minpoly array");
    for (const auto& c : j["minpoly"])
        s.minpoly.push_back(int_from_json(c, "minpoly coefficient"));
    if (j.contains("integral_basis"))
        s.integral_basis = rat_rows(j["integral_basis"], "integral_basis");
    if (j.contains("units"))
        s.units = rat_rows(j["units"], "units");
    if (j.contains("narrow_class_number"))
        s.narrow_class_number = static_cast<int>(i64_from_json(j["narrow_class_number"], "narrow_class_number"));
    return s;
}

CharacterSpec parse_character_spec(const Json& j)
{
    reject_unknown(j, {"type", "kronecker", "dirichlet_modulus", "dirichlet_exponents", "modulus_hnf", "order",
                       "exponent_vector"},
                   "character");
    CharacterSpec s;
    s.type = j.value("type", "");
    if (s.type == "norm-induced") {
        if (j.contains("kronecker")) {
            s.kronecker = i64_from_json(j["kronecker"], "kronecker");
        } else {
            if (!j.contains("dirichlet_modulus") || !j.contains("dirichlet_exponents"))
                config_error("BadCharacter", "norm-induced character needs dirichlet_modulus and dirichlet_exponents");
            s.dirichlet_modulus = i64_from_json(j["dirichlet_modulus"], "dirichlet_modulus");
            s.dirichlet_exponents = i64_list(j["dirichlet_exponents"], "dirichlet_exponents");
        }
    } else if (s.type == "ray") {
        if (!j.contains("modulus_hnf") || !j.contains("exponent_vector") || !j.contains("order"))
            config_error("BadCharacter", "ray character needs modulus_hnf, order and exponent_vector");
        for (const auto& row : j["modulus_hnf"]) {
            std::vector<Int> r;
            for (const auto& x : row)
                r.push_back(int_from_json(x, "modulus_hnf"));
            s.modulus_hnf.push_back(std::move(r));
        }
        s.order = i64_from_json(j["order"], "order");
        s.exponent_vector = i64_list(j["exponent_vector"], "exponent_vector");
    } else {
        config_error("BadCharacter", "character type must be norm-induced or ray");
    }
    return s;
}

RunConfig parse_run_config(const Json& j, const std::filesystem::path& base)
{
    reject_unknown(j, {"field", "character", "p", "precision", "level", "q", "budget", "jobs", "cache_dir", "out"},
                   "config");
    RunConfig c;
    if (!j.contains("field"))
        config_error("BadConfig", "config needs a field");
    c.field = parse_field_spec(inline_or_file(j["field"], base));
    if (j.contains("character"))
        c.character = parse_character_spec(inline_or_file(j["character"], base));
    if (j.contains("p"))
        c.p = i64_from_json(j["p"], "p");
    if (j.contains("precision"))
        c.precision = static_cast<int>(i64_from_json(j["precision"], "precision"));
    if (j.contains("level"))
        c.level = static_cast<int>(i64_from_json(j["level"], "level"));
    if (j.contains("q") && j["q"] != "auto")
        c.q = i64_from_json(j["q"], "q");
    if (j.contains("budget"))
        c.budget = i64_from_json(j["budget"], "budget");
    if (j.contains("jobs"))
        c.jobs = static_cast<int>(i64_from_json(j["jobs"], "jobs"));
    c.cache_dir = j.value("cache_dir", "");
    c.out = j.value("out", "");
    if (c.precision < 1 || c.level < 1 || c.jobs < 1 || c.budget < 1)
        config_error("BadConfig", "precision, level, jobs and budget must be positive");
    return c;
}

HeckeCharacter make_character(const NumberField& K, const UnitGroupData& units,
                              std::shared_ptr<const NarrowClassGroup> narrow, const CharacterSpec& spec,
                              std::optional<DirichletCharacter>* psi)
{
    if (K.degree() != 2)
        config_error("UnsupportedDegree", "characters are supported for real quadratic fields");
    if (spec.type == "norm-induced") {
        const DirichletCharacter d = spec.kronecker
                                         ? DirichletCharacter::kronecker(*spec.kronecker)
                                         : DirichletCharacter::from_generators(spec.dirichlet_modulus,
                                                                               spec.dirichlet_exponents);
        if (psi)
            *psi = d;
        return norm_induced_character(K, d, units, std::move(narrow));
    }
    std::vector<std::vector<Rat>> cols;
    for (const auto& row : spec.modulus_hnf) {
        std::vector<Rat> r;
        for (const auto& x : row)
            r.emplace_back(x);
        cols.push_back(std::move(r));
    }
    const Ideal m = Ideal::from_coords(K, cols);
    auto G = std::make_shared<const RayClassGroup>(K, m, units, std::move(narrow));
    return HeckeCharacter(G, spec.order, spec.exponent_vector);
}

Session open_session(const RunConfig& cfg)
{
    Session s;
    s.K = NumberField::create(cfg.field);
    s.units = unit_group(*s.K);
    if (s.K->degree() == 2)
        s.narrow = std::make_shared<const NarrowClassGroup>(*s.K, s.units);
    if (cfg.character) {
        std::optional<DirichletCharacter> psi;
        s.chi = make_character(*s.K, s.units, s.narrow, *cfg.character, &psi);
        s.psi = psi;
    }
    return s;
}

} // namespace shintani
