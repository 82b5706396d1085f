#include "bagraph/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "bagraph/model.hpp"

namespace bagraph {

UnionFind::UnionFind(std::uint32_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t UnionFind::find(std::uint32_t v) {
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

bool UnionFind::unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
}

std::vector<std::uint32_t> UnionFind::set_sizes() {
    std::vector<std::uint32_t> sizes;
    for (std::uint32_t v = 0; v < parent_.size(); ++v)
        if (find(v) == v) sizes.push_back(size_[v]);
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

AnalysisReport analyze(const UndirectedGraph& graph) {
    AnalysisReport report;
    const std::uint32_t n = graph.vertex_count();
    report.n = n;
    report.edge_count = graph.edge_count();
    if (n == 0) return report;

    report.min_degree = graph.degree(0);
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t d = graph.degree(v);
        ++report.degree_histogram[d];
        report.min_degree = std::min(report.min_degree, d);
        report.max_degree = std::max(report.max_degree, d);
    }
    report.mean_degree = 2.0 * static_cast<double>(report.edge_count) / n;
    const auto isolated = report.degree_histogram.find(0);
    report.isolated_count = isolated == report.degree_histogram.end() ? 0 : isolated->second;

    UnionFind components(n);
    for (const auto& [u, v] : graph.edges()) components.unite(u, v);
    report.component_sizes = components.set_sizes();
    report.is_connected = report.component_sizes.size() == 1;
    return report;
}

bool has_component_in_range(const AnalysisReport& report, std::uint32_t lo, std::uint32_t hi) {
    if (lo < 1 || lo > hi) throw ParameterError("component range requires 1 <= lo <= hi");
    return std::any_of(report.component_sizes.begin(), report.component_sizes.end(),
                       [&](std::uint32_t s) { return lo <= s && s <= hi; });
}

bool min_degree_at_most(const AnalysisReport& report, std::uint32_t kappa) {
    return report.min_degree <= kappa;
}

}  // namespace bagraph
