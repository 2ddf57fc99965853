#include "shintani/cache.hpp"
#include "shintani/errors.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace shintani {

std::string cache_key(const Json& inputs)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canonical(inputs)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

WeightCache::WeightCache(std::filesystem::path dir) : dir_(std::move(dir))
{
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        config_error("BadCacheDir", "cannot create " + dir_.string() + ": " + ec.message());
}

std::optional<Json> WeightCache::load(const Json& inputs) const
{
    std::ifstream in(dir_ / (cache_key(inputs) + ".json"));
    if (!in)
        return std::nullopt;
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("version", "") != kCacheVersion ||
        j.value("inputs", Json()) != inputs)
        return std::nullopt;
    return j.at("payload");
}

void WeightCache::store(const Json& inputs, const Json& payload) const
{
    static std::atomic<unsigned> counter{0};
    const std::string key = cache_key(inputs);
    std::ostringstream tmpname;
    tmpname << key << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id())
            << "." << counter++;
    const auto tmp = dir_ / tmpname.str();
    {
        std::ofstream out(tmp);
        if (!out)
            config_error("BadCacheDir", "cannot write " + tmp.string());
        out << canonical(Json{{"version", kCacheVersion}, {"inputs", inputs}, {"payload", payload}});
    }
    std::error_code ec;
    std::filesystem::rename(tmp, dir_ / (key + ".json"), ec);
    if (ec)
        std::filesystem::remove(tmp, ec);
}

Json class_weights_inputs(const RayClassGroup& Gf, const RayClassGroup& Gp, const SmoothingData& sm,
                          const ConeFunction& A, const std::vector<Ideal>& reps)
{
    Json mp = Json::array();
    for (const auto& c : Gf.field().spec().minpoly)
        mp.push_back(to_json(c));
    Json r = Json::array();
    for (const auto& a : reps)
        r.push_back(to_json(a));
    return {{"minpoly", mp},
            {"f", to_json(Gf.modulus())},
            {"pn", to_json(Gp.modulus())},
            {"q", std::to_string(sm.q)},
            {"Q", to_json(sm.Q.ideal)},
            {"cones", to_json(A)},
            {"reps", r}};
}

ClassWeights cached_class_weights(const WeightCache* cache, std::shared_ptr<const RayClassGroup> Gf,
                                  std::shared_ptr<const RayClassGroup> Gp, const SmoothingData& sm,
                                  const ConeFunction& A, const std::vector<Ideal>& reps,
                                  const EvaluationOptions& opt)
{
    if (!cache)
        return class_weights(std::move(Gf), std::move(Gp), sm, A, reps, opt);
    const Json inputs = class_weights_inputs(*Gf, *Gp, sm, A, reps);
    if (auto hit = cache->load(inputs)) {
        ClassWeights w;
        w.Gf = Gf;
        w.Gp = Gp;
        for (const auto& x : hit->at("W"))
            w.W.push_back(rat_from_json(x, "weight"));
        w.points = i64_from_json(hit->at("points"), "points");
        if (w.W.size() == static_cast<std::size_t>(Gf->order() * Gp->order()))
            return w;
    }
    ClassWeights w = class_weights(Gf, Gp, sm, A, reps, opt);
    cache->store(inputs, {{"W", to_json(w.W)}, {"points", std::to_string(w.points)}});
    return w;
}

} // namespace shintani
