#include <doctest.h>

#include <filesystem>

#include "shintani/cache.hpp"
#include "shintani/commands.hpp"
#include "shintani/errors.hpp"

using namespace shintani;

namespace {

Json q5_config(const std::string& p)
{
    return Json{{"field", {{"name", "Q(sqrt5)"}, {"minpoly", {"-1", "-1", "1"}}}},
                {"character", {{"type", "norm-induced"}, {"kronecker", "-3"}}},
                {"p", p}};
}

std::filesystem::path fresh_dir(const std::string& name)
{
    auto d = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(d);
    return d;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("config validation")
{
    const RunConfig c = parse_run_config(q5_config("7"));
    CHECK(c.p == 7);
    CHECK(c.field.minpoly.size() == 3);
    CHECK(c.character->kronecker == -3);

    Json bad = q5_config("7");
    bad["colour"] = "blue";
    CHECK_THROWS_AS(parse_run_config(bad), Error);
    Json num = q5_config("7");
    num["p"] = 7;
    CHECK_THROWS_AS(parse_run_config(num), Error);
    Json ch = q5_config("7");
    ch["character"] = {{"type", "ray"}};
    CHECK_THROWS_AS(parse_run_config(ch), Error);
}

TEST_CASE("canonical serialization")
{
    Json a = Json::parse(R"({"b":"1","a":{"d":"2","c":"3"}})");
    CHECK(canonical(a) == R"({"a":{"c":"3","d":"2"},"b":"1"})");
    CHECK(to_json(make_rat(-8, 6)) == "-4/3");
    CHECK(to_json(Int("123456789012345678901234567890")) == "123456789012345678901234567890");
    const auto x = CyclotomicNumber::zeta(6, 1);
    CHECK(cyclotomic_from_json(to_json(x)) == x);
    CHECK(cache_key(a) == cache_key(Json::parse(canonical(a))));
    CHECK(cache_key(a).size() == 16);
}

TEST_CASE("field and decomposition commands")
{
    const Json f = run_command("field", parse_run_config(q5_config("19")));
    CHECK(f["local_split"]["r"] == "2");
    CHECK(f["character"]["order"] == "2");
    CHECK(f["narrow_class_group"]["order"] == "1");
    const Json d = run_command("decompose", parse_run_config(q5_config("7")));
    CHECK(d["cones"]["terms"].size() == 1);
    CHECK(d["psi_report"]["failures"] == "0");

    Json cubic = {{"field", {{"minpoly", {"1", "-2", "-1", "1"}}}}};
    try {
        run_command("decompose", parse_run_config(cubic));
        FAIL("missing units accepted");
    } catch (const Error& e) {
        CHECK(e.code() == "UnitsRequired");
    }
    Json complex = {{"field", {{"minpoly", {"1", "0", "1"}}}}};
    try {
        run_command("field", parse_run_config(complex));
        FAIL("complex field accepted");
    } catch (const Error& e) {
        CHECK(e.code() == "NotTotallyReal");
        CHECK(static_cast<int>(e.kind()) == 1);
    }
}

TEST_CASE("lvalue command")
{
    const Json a = run_command("lvalue", parse_run_config(q5_config("11")));
    CHECK(a["L_Sp_at_0"]["rational"] == "8/3");
    CHECK(a["oracle"]["rational"] == "8/3");
    CHECK(a["match"] == true);
    CHECK(a["L_at_0"]["rational"] == "2/3");
    const Json b = run_command("lvalue", parse_run_config(q5_config("7")));
    CHECK(b["L_Sp_at_0"]["rational"] == "0");
    CHECK(b["euler_factor_zero"] == true);
    Json even = q5_config("7");
    even["character"] = {{"type", "norm-induced"}, {"kronecker", "5"}};
    try {
        run_command("lvalue", parse_run_config(even));
        FAIL("even character accepted");
    } catch (const Error& e) {
        CHECK(e.code() == "NotTotallyOdd");
        CHECK(static_cast<int>(e.kind()) == 2);
    }
}

TEST_CASE("cache transparency and determinism")
{
    const auto dir = fresh_dir("shintani-cache-test");
    Json c = q5_config("7");
    c["level"] = "2";
    const std::string plain = canonical(run_command("lp", parse_run_config(c)));
    c["cache_dir"] = dir.string();
    const std::string cold = canonical(run_command("lp", parse_run_config(c)));
    const std::string warm = canonical(run_command("lp", parse_run_config(c)));
    CHECK(cold == plain);
    CHECK(warm == plain);
    int entries = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        CHECK(e.path().extension() == ".json");
        ++entries;
    }
    CHECK(entries == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("lp and verify commands")
{
    Json c = q5_config("19");
    c["level"] = "2";
    const Json r = run_command("lp", parse_run_config(c));
    CHECK(r["pass"] == true);
    CHECK(r["r"] == "2");
    Json v = q5_config("7");
    for (const char* suite : {"fourier", "refinement", "subdivision", "psi", "cocycle"}) {
        const Json rep = run_command("verify", parse_run_config(v), suite);
        CHECK(rep["failures"] == "0");
    }
    Json ram = q5_config("3");
    try {
        run_command("lp", parse_run_config(ram));
        FAIL("ramified p accepted");
    } catch (const Error& e) {
        CHECK(e.code() == "RamifiedAtP");
    }
}

}
