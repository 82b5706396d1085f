#include "bagraph/gen.hpp"

#include <algorithm>
#include <string>

namespace bagraph {
namespace {

constexpr auto by_key_desc = [](const RankedNeighbour& a, const RankedNeighbour& b) { return b.key < a.key; };

// Min-heap on keys: the heap front is the weakest admitted edge.
constexpr auto heap_order = [](const RankedNeighbour& a, const RankedNeighbour& b) { return b.key < a.key; };

void require_kind(const ModelParams& params, ModelKind expected) {
    params.validate();
    if (params.kind != expected)
        throw ParameterError("expected a " + std::string(to_string(expected)) + " model, got " +
                             std::string(to_string(params.kind)));
}

class BoundedHeaps {
public:
    BoundedHeaps(std::uint32_t n, std::uint32_t k)
        : k_(k), sizes_(n, 0), floor_(n, 0), slots_(std::size_t{n} * k) {}

    void offer(std::uint32_t owner, const EdgeKey& key, std::uint32_t other) {
        // Fast reject: floor_ is the heap front's score bits once the heap is full.
        if (key.bits < floor_[owner]) return;
        RankedNeighbour* heap = slots_.data() + std::size_t{owner} * k_;
        std::uint32_t& size = sizes_[owner];
        if (size < k_) {
            heap[size++] = RankedNeighbour{key, other};
            std::push_heap(heap, heap + size, heap_order);
            if (size == k_) floor_[owner] = heap[0].key.bits;
            return;
        }
        if (key < heap[0].key) return;
        std::pop_heap(heap, heap + k_, heap_order);
        heap[k_ - 1] = RankedNeighbour{key, other};
        std::push_heap(heap, heap + k_, heap_order);
        floor_[owner] = heap[0].key.bits;
    }

    std::vector<RankedNeighbour> into_sorted_rows() && {
        const std::size_t n = sizes_.size();
        for (std::size_t v = 0; v < n; ++v) {
            auto* row = slots_.data() + v * k_;
            std::sort(row, row + k_, by_key_desc);
        }
        return std::move(slots_);
    }

private:
    std::uint32_t k_;
    std::vector<std::uint32_t> sizes_;
    std::vector<std::uint64_t> floor_;
    std::vector<RankedNeighbour> slots_;
};

}  // namespace

TopKSets::TopKSets(std::uint32_t n, std::uint32_t k, std::vector<RankedNeighbour> rows)
    : n_(n), k_(k), rows_(std::move(rows)) {
    if (rows_.size() != std::size_t{n_} * k_) throw ParameterError("TopKSets: row storage does not match n*k");
}

std::vector<std::uint32_t> TopKSets::neighbours(std::uint32_t v) const {
    std::vector<std::uint32_t> out;
    out.reserve(k_);
    for (const auto& r : ranked(v)) out.push_back(r.vertex);
    return out;
}

bool operator==(const TopKSets& a, const TopKSets& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_) return false;
    return std::equal(a.rows_.begin(), a.rows_.end(), b.rows_.begin(), b.rows_.end(),
                      [](const RankedNeighbour& x, const RankedNeighbour& y) {
                          return x.vertex == y.vertex && x.key == y.key;
                      });
}

TopKSets top_k_sets(const ModelParams& params, const SeedSpec& seed) {
    params.validate();
    if (params.kind == ModelKind::erdos_renyi) throw ParameterError("top_k_sets requires a preference model");
    const std::uint32_t n = params.n;
    const EdgeScorer scorer(seed);
    BoundedHeaps heaps(n, params.k);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const EdgeKey key = scorer.key(i, j);
            heaps.offer(i, key, j);
            heaps.offer(j, key, i);
        }
    }
    return TopKSets(n, params.k, std::move(heaps).into_sorted_rows());
}

UndirectedGraph bilateral_from(const TopKSets& sets) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < sets.vertex_count(); ++i) {
        for (const auto& r : sets.ranked(i)) {
            if (r.vertex > i && sets.proposes(r.vertex, r.key)) edges.emplace_back(i, r.vertex);
        }
    }
    return UndirectedGraph(sets.vertex_count(), std::move(edges));
}

UndirectedGraph unilateral_from(const TopKSets& sets) {
    std::vector<Edge> edges;
    edges.reserve(std::size_t{sets.vertex_count()} * sets.k());
    for (std::uint32_t i = 0; i < sets.vertex_count(); ++i) {
        for (const auto& r : sets.ranked(i)) edges.emplace_back(i, r.vertex);
    }
    return UndirectedGraph(sets.vertex_count(), std::move(edges));
}

UndirectedGraph generate_bilateral(const ModelParams& params, const SeedSpec& seed) {
    require_kind(params, ModelKind::bilateral);
    return bilateral_from(top_k_sets(params, seed));
}

UndirectedGraph generate_unilateral(const ModelParams& params, const SeedSpec& seed) {
    require_kind(params, ModelKind::unilateral);
    return unilateral_from(top_k_sets(params, seed));
}

UndirectedGraph generate_er(const ModelParams& params, const SeedSpec& seed) {
    require_kind(params, ModelKind::erdos_renyi);
    const std::uint32_t n = params.n;
    const EdgeScorer scorer(seed);
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (scorer.key(i, j).uniform() < params.p) edges.emplace_back(i, j);
        }
    }
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph generate(const ModelParams& params, const SeedSpec& seed) {
    switch (params.kind) {
    case ModelKind::bilateral: return generate_bilateral(params, seed);
    case ModelKind::unilateral: return generate_unilateral(params, seed);
    case ModelKind::erdos_renyi: return generate_er(params, seed);
    }
    throw ParameterError("unknown model kind");
}

ScoreAssignment::ScoreAssignment(std::uint32_t n, const SeedSpec& seed) : n_(n) {
    if (n < 2 || n > max_vertices)
        throw ParameterError("ScoreAssignment supports 2 <= n <= " + std::to_string(max_vertices));
    const EdgeScorer scorer(seed);
    keys_.reserve(std::size_t{n} * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) keys_.push_back(scorer.key(i, j));
}

std::size_t ScoreAssignment::index(std::uint32_t u, std::uint32_t v) const {
    if (u > v) std::swap(u, v);
    if (u == v || v >= n_) throw ParameterError("ScoreAssignment: invalid edge");
    // Row-major upper triangle.
    const std::size_t row_start = std::size_t{u} * (2 * std::size_t{n_} - u - 1) / 2;
    return row_start + (v - u - 1);
}

const EdgeKey& ScoreAssignment::key(std::uint32_t u, std::uint32_t v) const { return keys_[index(u, v)]; }

namespace oracle {

TopKSets top_k_sets(const ScoreAssignment& scores, std::uint32_t k) {
    const std::uint32_t n = scores.vertex_count();
    ModelParams{n, k, ModelKind::bilateral, 0.0}.validate();
    std::vector<RankedNeighbour> rows;
    rows.reserve(std::size_t{n} * k);
    std::vector<RankedNeighbour> all;
    for (std::uint32_t i = 0; i < n; ++i) {
        all.clear();
        for (std::uint32_t j = 0; j < n; ++j)
            if (j != i) all.push_back(RankedNeighbour{scores.key(i, j), j});
        std::sort(all.begin(), all.end(), by_key_desc);
        rows.insert(rows.end(), all.begin(), all.begin() + k);
    }
    return TopKSets(n, k, std::move(rows));
}

namespace {
bool listed(const std::vector<std::uint32_t>& list, std::uint32_t v) {
    return std::find(list.begin(), list.end(), v) != list.end();
}
}  // namespace

UndirectedGraph generate_bilateral(const ScoreAssignment& scores, std::uint32_t k) {
    const auto sets = top_k_sets(scores, k);
    const std::uint32_t n = scores.vertex_count();
    std::vector<std::vector<std::uint32_t>> lists(n);
    for (std::uint32_t i = 0; i < n; ++i) lists[i] = sets.neighbours(i);
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (listed(lists[i], j) && listed(lists[j], i)) edges.emplace_back(i, j);
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph generate_unilateral(const ScoreAssignment& scores, std::uint32_t k) {
    const auto sets = top_k_sets(scores, k);
    const std::uint32_t n = scores.vertex_count();
    std::vector<std::vector<std::uint32_t>> lists(n);
    for (std::uint32_t i = 0; i < n; ++i) lists[i] = sets.neighbours(i);
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (listed(lists[i], j) || listed(lists[j], i)) edges.emplace_back(i, j);
    return UndirectedGraph(n, std::move(edges));
}

}  // namespace oracle
}  // namespace bagraph
