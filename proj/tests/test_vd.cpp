#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "vcover/gadget.hpp"
#include "vcover/graph_iso.hpp"
#include "vcover/vd.hpp"

using namespace vcover;

TEST_CASE("base cases") {
    Graph edgeless({"a", "b"}, {});
    VDResult r = is_vertex_decomposable(edgeless);
    CHECK(r.decomposable);
    CHECK(r.certificate->edgeless);

    VDResult p2 = is_vertex_decomposable(make_path(2));
    CHECK(p2.decomposable);
    CHECK_FALSE(p2.certificate->edgeless);
}

TEST_CASE("shedding vertices and domination") {
    Graph p3 = make_path(3);
    // the center dominates a leaf, so it sheds
    CHECK(dominated_shedding(p3, "x2"));
    CHECK(is_shedding_vertex(p3, "x2").shedding);
    // a leaf of P3 does not shed: the opposite leaf is a stuck independent set
    SheddingCheck leaf = is_shedding_vertex(p3, "x1");
    CHECK_FALSE(leaf.shedding);
    CHECK(leaf.witness == std::vector<std::string>{"x3"});
    CHECK_FALSE(dominated_shedding(p3, "x1"));
}

TEST_CASE("paths are decomposable, the 4-cycle is not") {
    for (int n = 2; n <= 7; ++n) {
        VDResult r = is_vertex_decomposable(make_path(n));
        CHECK(r.decomposable);
        CHECK(replay_certificate(make_path(n), *r.certificate));
    }

    Graph c4 = make_cycle(4);
    VDResult r = is_vertex_decomposable(c4);
    CHECK_FALSE(r.decomposable);
    CHECK(r.refutation.size() == 4);  // one entry per vertex
    CHECK(validate_refutation(c4, r.refutation));
    // every vertex of C4 fails the shedding test itself
    for (const VDRefutationEntry& e : r.refutation) CHECK(e.failure == "not-shedding");
}

TEST_CASE("replay rejects tampered certificates") {
    Graph p4 = make_path(4);
    VDResult r = is_vertex_decomposable(p4);
    REQUIRE(r.decomposable);

    // claiming edgeless up front is wrong
    VDCertificate lie;
    CHECK_FALSE(replay_certificate(p4, lie));

    // swapping the root shedding vertex for a non-shedding one is caught
    VDCertificate bent = *r.certificate;
    bent.vertex = bent.vertex == "x1" ? "x4" : "x1";
    CHECK_FALSE(replay_certificate(p4, bent));
}

TEST_CASE("refutation validation is strict") {
    Graph c4 = make_cycle(4);
    VDResult r = is_vertex_decomposable(c4);
    REQUIRE_FALSE(r.decomposable);

    std::vector<VDRefutationEntry> missing(r.refutation.begin(), r.refutation.end() - 1);
    CHECK_FALSE(validate_refutation(c4, missing));

    std::vector<VDRefutationEntry> wrong = r.refutation;
    wrong[0].witness = {"x2"};  // {x2} extends fine, so it is no witness
    CHECK_FALSE(validate_refutation(c4, wrong));

    // a decomposable graph has no valid refutation
    CHECK_FALSE(validate_refutation(make_path(3), {{"x1", "not-shedding", {"x3"}},
                                                   {"x2", "not-shedding", {}},
                                                   {"x3", "not-shedding", {"x1"}}}));
}

TEST_CASE("guided tree construction agrees with the search everywhere small") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& tree : enumerate_trees(n)) {
            std::vector<int> k(tree.edge_count());
            for (int trial = 0; trial < 40; ++trial) {
                for (int& e : k) e = static_cast<int>(rng() % 3);
                auto cert = guided_vd_tree_gadget(tree, k);
                Graph layered = build_gkt(tree, k).graph();
                CHECK(replay_certificate(layered, *cert));
                CHECK(is_vertex_decomposable(layered).decomposable);
            }
        }
    }
}

TEST_CASE("guided construction rejects bad bases") {
    CHECK_THROWS_AS(guided_vd_tree_gadget(make_cycle(4), {1, 1, 1, 1}), std::invalid_argument);
    // unicyclic: cycle lengths 3 and 5 and missing whiskers are refused
    CHECK_THROWS_AS(guided_vd_unicyclic(make_cycle(5).add_whisker("x1"), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(guided_vd_unicyclic(make_cycle(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(guided_vd_unicyclic(make_path(4), 1), std::invalid_argument);
}

TEST_CASE("guided unicyclic certificates replay and match the search") {
    for (int c : {4, 6}) {
        Graph g = make_cycle(c).add_whisker("x1");
        for (int k = 1; k <= 2; ++k) {
            auto cert = guided_vd_unicyclic(g, k);
            Graph layered = build_gkt(g, std::vector<int>(g.edge_count(), k)).graph();
            CHECK(replay_certificate(layered, *cert));
            CHECK(is_vertex_decomposable(layered).decomposable);
        }
    }
}

TEST_CASE("vertex budget") {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= 25; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 1; i < 25; ++i)
        edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
    CHECK_THROWS_AS(is_vertex_decomposable(Graph(labels, edges)), std::length_error);
}
