#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "vcover/graph.hpp"
#include "vcover/graph_iso.hpp"

using namespace vcover;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "b"}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "a"}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), std::invalid_argument);
}

TEST_CASE("vertex and edge order are preserved") {
    Graph g({"c", "a", "b"}, {{"c", "b"}, {"a", "b"}});
    CHECK(g.vertex_labels() == std::vector<std::string>{"c", "a", "b"});
    CHECK(g.edge_labels(0) == std::pair<std::string, std::string>{"c", "b"});
    CHECK(g.edge_labels(1) == std::pair<std::string, std::string>{"a", "b"});

    // deletion keeps the relative order of survivors
    Graph d = g.delete_vertices({"a"});
    CHECK(d.vertex_labels() == std::vector<std::string>{"c", "b"});
    CHECK(d.edge_count() == 1);
    CHECK(d.edge_labels(0) == std::pair<std::string, std::string>{"c", "b"});
}

TEST_CASE("neighborhoods, whiskers, stripping") {
    Graph p4 = make_path(4);
    CHECK(p4.neighborhood("x2", false) == std::vector<std::string>{"x1", "x3"});
    CHECK(p4.neighborhood("x2", true) == std::vector<std::string>{"x1", "x2", "x3"});

    Graph w = p4.add_whisker("x2");
    CHECK(w.vertex_count() == 5);
    CHECK(w.has_vertex("w1"));
    CHECK(w.degree(w.index_of("w1")) == 1);
    CHECK(w.add_whisker("x1").has_vertex("w2"));  // next unused whisker name

    Graph stripped = p4.delete_vertices({"x2"}).strip_isolated();
    CHECK(stripped.vertex_labels() == std::vector<std::string>{"x3", "x4"});
}

TEST_CASE("classification by cycle structure") {
    GraphClass p = classify(make_path(5));
    CHECK(p.kind == GraphClass::Kind::Tree);
    CHECK(p.connected);
    CHECK(p.bipartite);

    GraphClass c5 = classify(make_cycle(5));
    CHECK(c5.kind == GraphClass::Kind::Unicyclic);
    CHECK(c5.cycle_length == 5);
    CHECK_FALSE(c5.bipartite);

    GraphClass c6 = classify(make_cycle(6));
    CHECK(c6.cycle_length == 6);
    CHECK(c6.bipartite);

    Graph forest({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK(classify(forest).kind == GraphClass::Kind::Forest);
    CHECK_FALSE(classify(forest).connected);

    Graph two_cycles({"a", "b", "c", "d", "e", "f"},
                     {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
    CHECK(classify(two_cycles).kind == GraphClass::Kind::Other);
}

TEST_CASE("isomorphism with witness") {
    Graph p4({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    Graph q4({"q", "r", "s", "t"}, {{"r", "q"}, {"s", "t"}, {"q", "t"}});
    auto w = are_isomorphic(p4, q4);
    REQUIRE(w.has_value());
    // the witness really is an edge bijection
    std::set<std::pair<std::string, std::string>> qedges;
    for (int e = 0; e < q4.edge_count(); ++e) {
        auto [u, v] = q4.edge_labels(e);
        qedges.insert(std::minmax(u, v));
    }
    std::map<std::string, std::string> wm(w->begin(), w->end());
    for (int e = 0; e < p4.edge_count(); ++e) {
        auto [u, v] = p4.edge_labels(e);
        CHECK(qedges.count(std::minmax(wm.at(u), wm.at(v))) == 1);
    }

    CHECK_FALSE(are_isomorphic(p4, make_star(3)).has_value());
    // same degree sequence, different graphs
    Graph c6 = make_cycle(6);
    Graph cc({"a", "b", "c", "d", "e", "f"},
             {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
    CHECK(canonical_form(c6) != canonical_form(cc));
}

TEST_CASE("tree enumeration counts match the classical sequence") {
    const std::vector<std::size_t> counts = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_trees(n).size() == counts[n - 1]);
    CHECK_THROWS_AS(enumerate_trees(11), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);
}

TEST_CASE("tree enumeration agrees with Prüfer decoding up to isomorphism") {
    for (int n = 3; n <= 7; ++n) {
        // all n^(n-2) labeled trees, collapsed to canonical forms
        std::set<std::string> from_prufer;
        std::vector<int> seq(n - 2, 0);
        while (true) {
            from_prufer.insert(canonical_form(oracle::prufer_decode(seq, n)));
            int i = 0;
            for (; i < n - 2; ++i) {
                if (++seq[i] < n) break;
                seq[i] = 0;
            }
            if (i == n - 2) break;
        }
        std::set<std::string> from_enumeration;
        for (const Graph& t : enumerate_trees(n))
            from_enumeration.insert(canonical_form(t));
        CHECK(from_enumeration == from_prufer);
        CHECK(from_enumeration.size() == enumerate_trees(n).size());  // no duplicates
    }
}
