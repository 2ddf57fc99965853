#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "shintani/commands.hpp"
#include "shintani/errors.hpp"

using namespace shintani;

namespace {

struct Flags {
    std::string config, field, character, out, cache_dir, q, suite = "cocycle";
    std::optional<i64> p, budget;
    std::optional<int> level, prec, jobs;
};

RunConfig resolve(const Flags& f)
{
    Json j = Json::object();
    std::filesystem::path base;
    if (!f.config.empty()) {
        j = read_json_file(f.config);
        base = std::filesystem::path(f.config).parent_path();
    }
    if (!f.field.empty())
        j["field"] = std::filesystem::absolute(f.field).string();
    if (!f.character.empty())
        j["character"] = std::filesystem::absolute(f.character).string();
    if (f.p)
        j["p"] = std::to_string(*f.p);
    if (!f.q.empty())
        j["q"] = f.q;
    if (f.level)
        j["level"] = std::to_string(*f.level);
    if (f.prec)
        j["precision"] = std::to_string(*f.prec);
    if (f.budget)
        j["budget"] = std::to_string(*f.budget);
    if (f.jobs)
        j["jobs"] = std::to_string(*f.jobs);
    if (!f.cache_dir.empty())
        j["cache_dir"] = f.cache_dir;
    if (!f.out.empty())
        j["out"] = f.out;
    return parse_run_config(j, base);
}

void emit(const Json& j, const std::string& out)
{
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f)
        config_error("BadOutput", "cannot write " + out);
    f << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Shintani cocycle pipeline: cone decompositions, smoothed zeta values, p-adic measures"};
    app.require_subcommand(1);
    Flags f;
    auto add_common = [&f](CLI::App* c) {
        c->add_option("--config", f.config, "run configuration (JSON)");
        c->add_option("--field", f.field, "field spec (JSON)");
        c->add_option("--char", f.character, "character spec (JSON)");
        c->add_option("--p", f.p, "odd prime p");
        c->add_option("--q", f.q, "smoothing prime or 'auto'");
        c->add_option("--level", f.level, "level n of Cl+(p^n)");
        c->add_option("--prec", f.prec, "p-adic precision M");
        c->add_option("--budget", f.budget, "enumerated point budget");
        c->add_option("--cache-dir", f.cache_dir, "weight cache directory");
        c->add_option("--jobs", f.jobs, "worker threads");
        c->add_option("--out", f.out, "output path (default stdout)");
    };
    std::vector<std::pair<std::string, CLI::App*>> subs;
    const std::pair<const char*, const char*> commands[] = {
        {"field", "integral basis, embeddings, units and narrow class group"},
        {"decompose", "capped Shintani class as signed half-open cones"},
        {"zeta0", "smoothed partial zeta value at s = 0"},
        {"lvalue", "L_{S_p}(chi, 0) and the Bernoulli oracle"},
        {"measure", "coset measure table on Cl+(p^n)"},
        {"lp", "moments of the measure and the vanishing order check"},
        {"verify", "run a randomized identity suite"},
    };
    for (const auto& [name, help] : commands) {
        auto* c = app.add_subcommand(name, help);
        add_common(c);
        if (std::string(name) == "verify")
            c->add_option("--suite", f.suite, "cocycle, psi, subdivision, fourier or refinement");
        subs.emplace_back(name, c);
    }
    CLI11_PARSE(app, argc, argv);
    try {
        for (const auto& [name, c] : subs)
            if (c->parsed()) {
                const RunConfig cfg = resolve(f);
                emit(run_command(name, cfg, f.suite), cfg.out);
            }
    } catch (const Error& e) {
        emit({{"error", e.code()}, {"message", e.what()}}, "");
        std::cerr << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
