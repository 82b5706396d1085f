#include <doctest.h>

#include <set>

#include "bagraph/graph.hpp"
#include "bagraph/model.hpp"

using namespace bagraph;

TEST_CASE("model params validation") {
    CHECK_NOTHROW(ModelParams::bilateral(2, 1).validate());
    CHECK_NOTHROW(ModelParams::unilateral(10, 9).validate());
    CHECK_THROWS_AS(ModelParams::bilateral(10, 0).validate(), ParameterError);
    CHECK_THROWS_AS(ModelParams::bilateral(10, 10).validate(), ParameterError);
    CHECK_THROWS_AS(ModelParams::unilateral(10, 11).validate(), ParameterError);
    CHECK_THROWS_AS(ModelParams::bilateral(0, 1).validate(), ParameterError);
    CHECK_NOTHROW(ModelParams::erdos_renyi(10, 0.0).validate());
    CHECK_NOTHROW(ModelParams::erdos_renyi(10, 1.0).validate());
    CHECK_THROWS_AS(ModelParams::erdos_renyi(10, -0.1).validate(), ParameterError);
    CHECK_THROWS_AS(ModelParams::erdos_renyi(10, 1.5).validate(), ParameterError);
}

TEST_CASE("model kind names round-trip") {
    for (auto kind : {ModelKind::bilateral, ModelKind::unilateral, ModelKind::erdos_renyi})
        CHECK(parse_model_kind(to_string(kind)) == kind);
    CHECK(parse_model_kind("erdos_renyi") == ModelKind::erdos_renyi);
    CHECK_THROWS_AS(parse_model_kind("mutual"), ParameterError);
}

TEST_CASE("derive_stream is deterministic and injective") {
    const SeedSpec base{7, 0};
    CHECK(derive_stream(base, 0) == derive_stream(base, 0));
    CHECK(derive_stream(base, 1) != derive_stream(base, 2));
    CHECK(derive_stream(base, 5).master_seed == 7);

    std::set<std::uint64_t> streams;
    for (std::uint64_t trial = 0; trial < 10'000; ++trial) streams.insert(derive_stream(base, trial).stream_index);
    CHECK(streams.size() == 10'000);
}

TEST_CASE("labelled streams differ per label") {
    const SeedSpec base{3, 0};
    CHECK(derive_labelled_stream(base, 100, 4) != derive_labelled_stream(base, 100, 5));
    CHECK(derive_labelled_stream(base, 100, 4) != derive_labelled_stream(base, 101, 4));
    CHECK(derive_labelled_stream(base, 100, 4) == derive_labelled_stream(base, 100, 4));
}

TEST_CASE("edge scorer") {
    const EdgeScorer scorer(SeedSpec{1, 2});
    CHECK(scorer.key(3, 9) == scorer.key(9, 3));
    CHECK(scorer.key(3, 9).id == canonical_edge_id(3, 9));
    CHECK(scorer.key(3, 9).bits < (std::uint64_t{1} << 53));
    const double u = scorer.key(0, 1).uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);

    const EdgeScorer other(SeedSpec{1, 3});
    int same = 0;
    for (std::uint32_t v = 1; v < 200; ++v) same += scorer.key(0, v).bits == other.key(0, v).bits;
    CHECK(same == 0);

    double sum = 0.0;
    const int count = 20'000;
    for (int i = 0; i < count; ++i) sum += scorer.key(0, static_cast<std::uint32_t>(i + 1)).uniform();
    CHECK(sum / count == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("edge keys totally ordered") {
    CHECK(EdgeKey{5, 1} < EdgeKey{5, 2});
    CHECK(EdgeKey{4, 9} < EdgeKey{5, 0});
    CHECK(EdgeKey{5, 1} == EdgeKey{5, 1});
}

TEST_CASE("canonicalize is idempotent and rejects loops") {
    std::vector<Edge> edges{{3, 1}, {1, 3}, {0, 2}, {2, 4}, {4, 2}};
    const auto once = canonicalize(edges);
    CHECK(once == std::vector<Edge>{{0, 2}, {1, 3}, {2, 4}});
    CHECK(canonicalize(once) == once);
    CHECK_THROWS_AS(canonicalize({{2, 2}}), ParameterError);
}

TEST_CASE("undirected graph adjacency") {
    const UndirectedGraph g(4, {{0, 1}, {2, 1}, {3, 2}});
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(0, 3));
    const auto nb = g.neighbours(2);
    CHECK(std::vector<std::uint32_t>(nb.begin(), nb.end()) == std::vector<std::uint32_t>{1, 3});
    CHECK_THROWS_AS(UndirectedGraph(3, {{0, 3}}), ParameterError);
}
