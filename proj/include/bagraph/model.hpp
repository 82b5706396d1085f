#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bagraph {

/// Raised when a caller passes arguments outside an operation's domain.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a requested campaign would exceed the configured resources.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ModelKind { bilateral, unilateral, erdos_renyi };

std::string_view to_string(ModelKind kind);

/// Accepts "bilateral", "unilateral", "er" and "erdos_renyi".
ModelKind parse_model_kind(std::string_view name);

/// Parameters of one graph family instance.
///
/// For the preference families `k` is the per-vertex proposal budget and
/// `p` is ignored; for Erdős–Rényi only `p` matters.
struct ModelParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    ModelKind kind = ModelKind::bilateral;
    double p = 0.0;

    static ModelParams bilateral(std::uint32_t n, std::uint32_t k);
    static ModelParams unilateral(std::uint32_t n, std::uint32_t k);
    static ModelParams erdos_renyi(std::uint32_t n, double p);

    /// Throws ParameterError when the invariants of `kind` are violated.
    void validate() const;
};

/// Root of all randomness: a master seed plus a stream selector.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

/// Stream for the `trial`-th repetition under `seed`. Injective in `trial`.
SeedSpec derive_stream(const SeedSpec& seed, std::uint64_t trial);

/// Stream dedicated to a labelled sub-campaign (for instance one sweep cell).
SeedSpec derive_labelled_stream(const SeedSpec& seed, std::uint64_t label_a, std::uint64_t label_b);

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Position of an unordered edge in the global score total order.
///
/// `bits` is the 53-bit score mantissa; equal mantissas are ordered by the
/// canonical edge id so that no two edges ever compare equal.
struct EdgeKey {
    std::uint64_t bits = 0;
    std::uint64_t id = 0;

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;

    /// Score as a uniform (0,1) double.
    double uniform() const noexcept {
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }
};

constexpr std::uint64_t canonical_edge_id(std::uint32_t u, std::uint32_t v) noexcept {
    return u < v ? (std::uint64_t{u} << 32) | v : (std::uint64_t{v} << 32) | u;
}

/// Counter-based edge scores: the score of edge {u,v} is a keyed hash of its
/// canonical id, so both endpoints see the same value without storage.
class EdgeScorer {
public:
    explicit EdgeScorer(const SeedSpec& seed) noexcept;

    EdgeKey key(std::uint32_t u, std::uint32_t v) const noexcept {
        const std::uint64_t id = canonical_edge_id(u, v);
        return EdgeKey{hash(id) >> 11, id};
    }

    /// Raw 64-bit hash of a counter value under this stream.
    std::uint64_t hash(std::uint64_t counter) const noexcept {
        std::uint64_t z = mix64(counter * 0x9e3779b97f4a7c15ULL + key_a_);
        return mix64(z ^ key_b_);
    }

private:
    std::uint64_t key_a_;
    std::uint64_t key_b_;
};

}  // namespace bagraph
