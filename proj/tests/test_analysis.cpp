#include <doctest.h>

#include <numeric>

#include "bagraph/analysis.hpp"
#include "bagraph/gen.hpp"

using namespace bagraph;

namespace {

void check_identities(const AnalysisReport& r) {
    std::uint64_t vertices = 0, degree_sum = 0;
    for (const auto& [d, c] : r.degree_histogram) {
        vertices += c;
        degree_sum += std::uint64_t{d} * c;
    }
    CHECK(vertices == r.n);
    CHECK(degree_sum == 2 * r.edge_count);
    CHECK(std::accumulate(r.component_sizes.begin(), r.component_sizes.end(), std::uint64_t{0}) == r.n);
    CHECK(std::is_sorted(r.component_sizes.rbegin(), r.component_sizes.rend()));
    CHECK(r.is_connected == (r.component_sizes == std::vector<std::uint32_t>{r.n}));
    const auto zero = r.degree_histogram.find(0);
    CHECK(r.isolated_count == (zero == r.degree_histogram.end() ? 0U : zero->second));
}

}  // namespace

TEST_CASE("empty graph") {
    const auto r = analyze(UndirectedGraph(5, {}));
    CHECK(r.isolated_count == 5);
    CHECK(r.component_sizes == std::vector<std::uint32_t>{1, 1, 1, 1, 1});
    CHECK_FALSE(r.is_connected);
    CHECK(r.min_degree == 0);
    CHECK(has_component_in_range(r, 1, 1));
    CHECK(min_degree_at_most(r, 0));
    check_identities(r);
}

TEST_CASE("path graph") {
    const auto r = analyze(UndirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(r.is_connected);
    CHECK(r.degree_histogram == std::map<std::uint32_t, std::uint32_t>{{1, 2}, {2, 2}});
    CHECK(r.mean_degree == doctest::Approx(1.5));
    CHECK(min_degree_at_most(r, 1));
    check_identities(r);
}

TEST_CASE("complete graph from the bilateral generator") {
    const auto r = analyze(generate_bilateral(ModelParams::bilateral(8, 7), SeedSpec{2, 0}));
    CHECK(r.is_connected);
    CHECK(r.min_degree == 7);
    CHECK(r.max_degree == 7);
    CHECK_FALSE(has_component_in_range(r, 1, 4));
    CHECK_FALSE(min_degree_at_most(r, 6));
}

TEST_CASE("component range query") {
    AnalysisReport r;
    r.n = 10;
    r.component_sizes = {9, 1};
    CHECK_FALSE(has_component_in_range(r, 2, 8));
    CHECK(has_component_in_range(r, 1, 1));
    CHECK(has_component_in_range(r, 9, 20));
    CHECK_THROWS_AS(has_component_in_range(r, 0, 3), ParameterError);
    CHECK_THROWS_AS(has_component_in_range(r, 4, 3), ParameterError);
}

TEST_CASE("components of a disjoint union") {
    const auto r = analyze(UndirectedGraph(9, {{0, 1}, {1, 2}, {3, 4}, {5, 6}, {6, 7}, {7, 5}}));
    CHECK(r.component_sizes == std::vector<std::uint32_t>{3, 3, 2, 1});
    CHECK(r.isolated_count == 1);
    check_identities(r);
}

TEST_CASE("union-find") {
    UnionFind uf(6);
    CHECK(uf.unite(0, 1));
    CHECK(uf.unite(2, 3));
    CHECK(uf.unite(1, 3));
    CHECK_FALSE(uf.unite(0, 2));
    CHECK(uf.find(0) == uf.find(3));
    CHECK(uf.find(4) != uf.find(5));
    CHECK(uf.set_sizes() == std::vector<std::uint32_t>{4, 1, 1});
}

TEST_CASE("handshake and partition identities on generated graphs") {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const std::uint32_t n = 10 + static_cast<std::uint32_t>(s % 90);
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(s % 6);
        const SeedSpec seed{s, 99};
        ModelParams p;
        switch (s % 3) {
        case 0: p = ModelParams::bilateral(n, k); break;
        case 1: p = ModelParams::unilateral(n, k); break;
        default: p = ModelParams::erdos_renyi(n, static_cast<double>(k) / n); break;
        }
        const auto g = generate(p, seed);
        const auto r = analyze(g);
        check_identities(r);
        CHECK(r == analyze(g));
    }
}
