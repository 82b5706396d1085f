#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bagraph {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Sorts, orients (u < v) and deduplicates an edge list. Self-loops are
/// rejected with ParameterError. Idempotent.
std::vector<Edge> canonicalize(std::vector<Edge> edges);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept canonically (u < v, sorted); a CSR adjacency index backs
/// neighbour queries.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    /// Validates ids against n and canonicalizes.
    UndirectedGraph(std::uint32_t n, std::vector<Edge> edges);

    std::uint32_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::uint32_t degree(std::uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const std::uint32_t> neighbours(std::uint32_t v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::uint32_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<std::uint32_t> adjacency_;
};

}  // namespace bagraph
