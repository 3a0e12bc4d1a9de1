#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "snarkdesign/catalog.hpp"

using namespace snarkdesign;
using Edge = LabeledGraph::Edge;

namespace {

const Catalog& catalog() {
    static Catalog cat = Catalog::load(std::string(SNARKDESIGN_DATA_DIR) + "/catalog");
    return cat;
}

LabeledGraph petersen() {
    return parse_graph_file(std::string(SNARKDESIGN_DATA_DIR) + "/catalog/petersen.graph")
        .graph;
}

LabeledGraph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return make_graph(n, e);
}

}  // namespace

TEST_CASE("get_graph returns the labeled snarks") {
    const auto& g1 = catalog().get_graph(1);
    CHECK(g1.has_edge(0, 1));
    CHECK(g1.has_edge(0, 2));
    const auto& g38 = catalog().get_graph(38);
    CHECK(g38.has_edge(21, 23));
    for (int k = 1; k <= 38; ++k) {
        CHECK(catalog().get_graph(k).vertex_count() == 24);
        CHECK(catalog().get_graph(k).edges().size() == 36);
    }
    CHECK_THROWS_AS(catalog().get_graph(0), UnknownId);
    CHECK_THROWS_AS(catalog().get_graph(39), UnknownId);
}

TEST_CASE("reducing 3-cut detection") {
    auto c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK_FALSE(has_reducing_3cut(c5).has_value());

    // two Petersen copies joined by a 3-edge matching: the matching is the
    // unique qualifying cut (Petersen is cyclically 5-edge-connected)
    auto pet = petersen();
    std::vector<Edge> e;
    for (auto [u, v] : pet.edges()) {
        e.push_back({u, v});
        e.push_back({u + 10, v + 10});
    }
    std::vector<Edge> matching = {{0, 10}, {1, 11}, {2, 12}};
    for (auto m : matching) e.push_back(m);
    auto joined = make_graph(20, e);
    auto cut = has_reducing_3cut(joined);
    REQUIRE(cut.has_value());
    std::vector<Edge> found(cut->begin(), cut->end());
    std::sort(found.begin(), found.end());
    CHECK(found == matching);

    CHECK_FALSE(has_reducing_3cut(catalog().get_graph(1)).has_value());

    auto disconnected = make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK_THROWS_AS(has_reducing_3cut(disconnected), NotConnected);
}

TEST_CASE("cut detection is independent of edge ordering") {
    auto pet = petersen();
    std::vector<Edge> e;
    for (auto [u, v] : pet.edges()) {
        e.push_back({u, v});
        e.push_back({u + 10, v + 10});
    }
    e.push_back({0, 10});
    e.push_back({1, 11});
    e.push_back({2, 12});
    std::mt19937_64 rng(31);
    auto shuffled = e;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto a = has_reducing_3cut(make_graph(20, e));
    auto b = has_reducing_3cut(make_graph(20, shuffled));
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);  // normalized edge lists make the scan order canonical
}

TEST_CASE("snark reports") {
    auto r1 = snark_report(catalog().get_graph(1));
    CHECK(r1.cubic);
    CHECK(r1.connected);
    CHECK(r1.bridgeless);
    CHECK(r1.girth == 5);
    CHECK(r1.chromatic_index == 4);
    CHECK_FALSE(r1.reducing_3cut.has_value());
    CHECK(r1.is_nontrivial_snark);

    auto rk4 = snark_report(complete(4));
    CHECK(rk4.chromatic_index == 3);
    CHECK_FALSE(rk4.is_nontrivial_snark);

    CHECK(snark_report(petersen()).is_nontrivial_snark);
}

TEST_CASE("catalog integrity") {
    CHECK(catalog_integrity(catalog()).pass);
    // deterministic and idempotent
    CHECK(catalog_integrity(catalog()).pass);

    SECTION("relabeled duplicate is caught") {
        std::vector<LabeledGraph> graphs;
        for (int k = 1; k <= 38; ++k) graphs.push_back(catalog().get_graph(k));
        std::mt19937_64 rng(37);
        std::vector<int> perm(24);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabeled;
        for (auto [u, v] : graphs[0].edges())
            relabeled.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
        graphs[1] = make_graph(24, relabeled);
        auto rep = catalog_integrity(Catalog::from_graphs(graphs));
        CHECK_FALSE(rep.pass);
        CHECK(rep.first_failure == "duplicate pair (G1,G2)");
    }

    SECTION("edge removal is caught") {
        std::vector<LabeledGraph> graphs;
        for (int k = 1; k <= 38; ++k) graphs.push_back(catalog().get_graph(k));
        auto edges = graphs[0].edges();
        edges.pop_back();
        graphs[0] = make_graph(24, edges);
        auto rep = catalog_integrity(Catalog::from_graphs(graphs));
        CHECK_FALSE(rep.pass);
        CHECK(rep.first_failure.find("G1") != std::string::npos);
    }
}
