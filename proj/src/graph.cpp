#include "bagraph/graph.hpp"

#include <algorithm>
#include <string>

#include "bagraph/model.hpp"

namespace bagraph {

std::vector<Edge> canonicalize(std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

UndirectedGraph::UndirectedGraph(std::uint32_t n, std::vector<Edge> edges)
    : n_(n), edges_(canonicalize(std::move(edges))) {
    if (!edges_.empty() && edges_.back().second >= n_) {
        const auto worst = std::max_element(edges_.begin(), edges_.end(),
                                            [](const Edge& a, const Edge& b) { return a.second < b.second; });
        throw ParameterError("vertex id " + std::to_string(worst->second) + " out of range for n=" +
                             std::to_string(n_));
    }
    offsets_.assign(std::size_t{n_} + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted, so every adjacency row comes out sorted too.
    for (const auto& [u, v] : edges_) adjacency_[cursor[u]++] = v;
    for (const auto& [u, v] : edges_) adjacency_[cursor[v]++] = u;
    for (std::uint32_t v = 0; v < n_; ++v)
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
}

bool UndirectedGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u == v || u >= n_ || v >= n_) return false;
    const auto row = neighbours(u);
    return std::binary_search(row.begin(), row.end(), v);
}

}  // namespace bagraph
