#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bagraph/graph.hpp"
#include "bagraph/model.hpp"

namespace bagraph {

/// A neighbour together with the key of the connecting edge.
struct RankedNeighbour {
    EdgeKey key;
    std::uint32_t vertex = 0;
};

/// Per-vertex top-k preference lists, most preferred first.
///
/// Row i holds R_i^1, ..., R_i^k: the k neighbours whose edge to i carries
/// the largest keys.
class TopKSets {
public:
    TopKSets() = default;
    TopKSets(std::uint32_t n, std::uint32_t k, std::vector<RankedNeighbour> rows);

    std::uint32_t vertex_count() const noexcept { return n_; }
    std::uint32_t k() const noexcept { return k_; }

    std::span<const RankedNeighbour> ranked(std::uint32_t v) const {
        return {rows_.data() + std::size_t{v} * k_, k_};
    }

    /// Neighbour ids of row v in preference order.
    std::vector<std::uint32_t> neighbours(std::uint32_t v) const;

    /// Key of the k-th preferred edge of v (the admission threshold).
    const EdgeKey& kth_key(std::uint32_t v) const { return rows_[std::size_t{v} * k_ + k_ - 1].key; }

    /// True iff v proposes the edge with key `edge` (one of v's own edges).
    bool proposes(std::uint32_t v, const EdgeKey& edge) const { return !(edge < kth_key(v)); }

    friend bool operator==(const TopKSets& a, const TopKSets& b);

private:
    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::vector<RankedNeighbour> rows_;
};

/// Streaming selection: enumerates each unordered edge once in row-major
/// order and feeds two bounded min-heaps. O(nk) memory, O(n^2 log k) time.
TopKSets top_k_sets(const ModelParams& params, const SeedSpec& seed);

/// Mutual agreement: {i,j} present iff both endpoints propose it.
UndirectedGraph bilateral_from(const TopKSets& sets);

/// Unilateral proposal: {i,j} present iff at least one endpoint proposes it.
UndirectedGraph unilateral_from(const TopKSets& sets);

UndirectedGraph generate_bilateral(const ModelParams& params, const SeedSpec& seed);
UndirectedGraph generate_unilateral(const ModelParams& params, const SeedSpec& seed);
UndirectedGraph generate_er(const ModelParams& params, const SeedSpec& seed);

/// Dispatches on params.kind.
UndirectedGraph generate(const ModelParams& params, const SeedSpec& seed);

/// Materialized edge scores of K_n. Only used by the oracle generator.
class ScoreAssignment {
public:
    static constexpr std::uint32_t max_vertices = 2000;

    ScoreAssignment(std::uint32_t n, const SeedSpec& seed);

    std::uint32_t vertex_count() const noexcept { return n_; }
    const EdgeKey& key(std::uint32_t u, std::uint32_t v) const;
    double score(std::uint32_t u, std::uint32_t v) const { return key(u, v).uniform(); }

private:
    std::size_t index(std::uint32_t u, std::uint32_t v) const;

    std::uint32_t n_;
    std::vector<EdgeKey> keys_;
};

namespace oracle {

/// Sorts every vertex's full incident score list and keeps the first k.
TopKSets top_k_sets(const ScoreAssignment& scores, std::uint32_t k);
UndirectedGraph generate_bilateral(const ScoreAssignment& scores, std::uint32_t k);
UndirectedGraph generate_unilateral(const ScoreAssignment& scores, std::uint32_t k);

}  // namespace oracle

}  // namespace bagraph
