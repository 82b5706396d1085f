#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bagraph/graph.hpp"

namespace bagraph {

/// Exact structural summary of one realized graph.
struct AnalysisReport {
    std::uint32_t n = 0;
    std::uint64_t edge_count = 0;
    std::map<std::uint32_t, std::uint32_t> degree_histogram;  // degree -> vertex count
    std::uint32_t min_degree = 0;
    std::uint32_t max_degree = 0;
    double mean_degree = 0.0;
    std::uint32_t isolated_count = 0;
    std::vector<std::uint32_t> component_sizes;  // descending; giant component first
    bool is_connected = false;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::uint32_t n);

    std::uint32_t find(std::uint32_t v);
    bool unite(std::uint32_t a, std::uint32_t b);

    /// Sizes of all sets, sorted descending.
    std::vector<std::uint32_t> set_sizes();

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

AnalysisReport analyze(const UndirectedGraph& graph);

/// True iff some component size s satisfies lo <= s <= hi.
bool has_component_in_range(const AnalysisReport& report, std::uint32_t lo, std::uint32_t hi);

/// True iff min_degree <= kappa.
bool min_degree_at_most(const AnalysisReport& report, std::uint32_t kappa);

}  // namespace bagraph
