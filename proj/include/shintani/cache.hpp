#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "shintani/serialize.hpp"

namespace shintani {

inline constexpr const char* kCacheVersion = "shintani-weights-1";

// 64-bit FNV-1a of the canonical dump, as 16 hex digits.
std::string cache_key(const Json& inputs);

// Directory of JSON entries written through a temporary file and a rename.
class WeightCache {
public:
    explicit WeightCache(std::filesystem::path dir);
    const std::filesystem::path& directory() const noexcept { return dir_; }

    std::optional<Json> load(const Json& inputs) const;
    void store(const Json& inputs, const Json& payload) const;

private:
    std::filesystem::path dir_;
};

Json class_weights_inputs(const RayClassGroup& Gf, const RayClassGroup& Gp, const SmoothingData& sm,
                          const ConeFunction& A, const std::vector<Ideal>& reps);

// class_weights through the cache when one is given.
ClassWeights cached_class_weights(const WeightCache* cache, std::shared_ptr<const RayClassGroup> Gf,
                                  std::shared_ptr<const RayClassGroup> Gp, const SmoothingData& sm,
                                  const ConeFunction& A, const std::vector<Ideal>& reps,
                                  const EvaluationOptions& opt = {});

} // namespace shintani
