#include "bagraph/model.hpp"

#include <cmath>
#include <string>

namespace bagraph {

std::string_view to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::bilateral: return "bilateral";
    case ModelKind::unilateral: return "unilateral";
    case ModelKind::erdos_renyi: return "er";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
    if (name == "bilateral") return ModelKind::bilateral;
    if (name == "unilateral") return ModelKind::unilateral;
    if (name == "er" || name == "erdos_renyi") return ModelKind::erdos_renyi;
    throw ParameterError("unknown model kind '" + std::string(name) + "'");
}

ModelParams ModelParams::bilateral(std::uint32_t n, std::uint32_t k) {
    ModelParams p{n, k, ModelKind::bilateral, 0.0};
    p.validate();
    return p;
}

ModelParams ModelParams::unilateral(std::uint32_t n, std::uint32_t k) {
    ModelParams p{n, k, ModelKind::unilateral, 0.0};
    p.validate();
    return p;
}

ModelParams ModelParams::erdos_renyi(std::uint32_t n, double prob) {
    ModelParams p{n, 0, ModelKind::erdos_renyi, prob};
    p.validate();
    return p;
}

void ModelParams::validate() const {
    if (n == 0) throw ParameterError("n must be positive");
    if (kind == ModelKind::erdos_renyi) {
        if (!(p >= 0.0 && p <= 1.0))
            throw ParameterError("p must lie in [0,1], got " + std::to_string(p));
        return;
    }
    if (k < 1 || k >= n)
        throw ParameterError("k must satisfy 1 <= k <= n-1 (n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ")");
}

SeedSpec derive_stream(const SeedSpec& seed, std::uint64_t trial) {
    // mix64 is a bijection, so the map trial -> stream is injective.
    const std::uint64_t base = mix64(seed.stream_index ^ 0x6a09e667f3bcc909ULL);
    return SeedSpec{seed.master_seed, mix64(base + trial)};
}

SeedSpec derive_labelled_stream(const SeedSpec& seed, std::uint64_t label_a, std::uint64_t label_b) {
    std::uint64_t z = mix64(seed.stream_index ^ 0xbb67ae8584caa73bULL);
    z = mix64(z + label_a);
    z = mix64(z ^ (label_b * 0x9e3779b97f4a7c15ULL));
    return SeedSpec{seed.master_seed, z};
}

EdgeScorer::EdgeScorer(const SeedSpec& seed) noexcept
    : key_a_(mix64(seed.master_seed ^ mix64(seed.stream_index + 0x3c6ef372fe94f82bULL))),
      key_b_(mix64(key_a_ + mix64(seed.master_seed + 0xa54ff53a5f1d36f1ULL))) {}

}  // namespace bagraph
