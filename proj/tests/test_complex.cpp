#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "vcover/complex.hpp"
#include "vcover/graph.hpp"

using namespace vcover;

namespace {

/// Brute-force maximal independent sets as label sets.
std::set<std::vector<std::string>> mis_oracle(const Graph& g) {
    int n = g.vertex_count();
    std::vector<uint32_t> independent;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) ok = false;
        if (ok) independent.push_back(s);
    }
    std::set<std::vector<std::string>> out;
    for (uint32_t s : independent) {
        bool maximal = true;
        for (uint32_t t : independent)
            if (t != s && (s & t) == s) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<std::string> labels;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) labels.push_back(g.label(v));
        out.insert(labels);
    }
    return out;
}

}  // namespace

TEST_CASE("construction normalizes facets") {
    // a dominated face is pruned, an unused vertex is dropped
    SimplicialComplex d({"a", "b", "c"}, std::vector<std::vector<std::string>>{{"a", "b"}, {"a"}});
    CHECK(d.facets() == std::vector<std::vector<std::string>>{{"a", "b"}});
    CHECK(d.vertex_labels() == std::vector<std::string>{"a", "b"});
    CHECK(d.dimension() == 1);

    SimplicialComplex empty;
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.dimension() == -1);
    CHECK(empty.is_face(std::vector<std::string>{}));

    SimplicialComplex void_complex({}, std::vector<uint32_t>{});
    CHECK(void_complex.facet_masks().empty());
    CHECK_FALSE(void_complex.is_face(std::vector<std::string>{}));
    CHECK_THROWS_AS(void_complex.dimension(), std::invalid_argument);
}

TEST_CASE("face queries and restriction") {
    SimplicialComplex d({"a", "b", "c", "d"},
                        std::vector<std::vector<std::string>>{{"a", "b", "c"}, {"c", "d"}});
    CHECK(d.is_face(std::vector<std::string>{"a", "c"}));
    CHECK(d.is_face(std::vector<std::string>{}));
    CHECK_FALSE(d.is_face(std::vector<std::string>{"a", "d"}));

    SimplicialComplex r = d.restrict_to({"a", "b", "d"});
    CHECK(r.is_face(std::vector<std::string>{"a", "b"}));
    CHECK_FALSE(r.is_face(std::vector<std::string>{"a", "b", "d"}));
    CHECK(r.is_face(std::vector<std::string>{"d"}));
}

TEST_CASE("deletion and link") {
    SimplicialComplex d({"a", "b", "c", "d"},
                        std::vector<std::vector<std::string>>{{"a", "b", "c"}, {"c", "d"}});
    auto facet_set = [](const SimplicialComplex& c) {
        std::set<std::vector<std::string>> out;
        for (auto f : c.facets()) {
            std::sort(f.begin(), f.end());
            out.insert(f);
        }
        return out;
    };
    SimplicialComplex del = deletion(d, {"c"});
    CHECK(facet_set(del) == std::set<std::vector<std::string>>{{"a", "b"}, {"d"}});

    SimplicialComplex lk = link(d, {"c"});
    CHECK(facet_set(lk) == std::set<std::vector<std::string>>{{"a", "b"}, {"d"}});
    CHECK_THROWS_AS(link(d, {"a", "d"}), std::invalid_argument);

    // link of a facet is the empty complex, not void
    SimplicialComplex lk2 = link(d, {"c", "d"});
    CHECK(lk2.facet_masks() == std::vector<uint32_t>{0u});
}

TEST_CASE("maximal independent sets against brute force") {
    for (const Graph& g : {make_path(5), make_cycle(6), make_star(4),
                           Graph({"a", "b", "c", "d", "e"},
                                 {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}})}) {
        std::set<std::vector<std::string>> expect = mis_oracle(g);
        std::set<std::vector<std::string>> got;
        for (uint32_t mask :
             maximal_independent_sets(g.adjacency_masks(), (1u << g.vertex_count()) - 1)) {
            std::vector<std::string> labels;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (mask >> v & 1) labels.push_back(g.label(v));
            got.insert(labels);
        }
        CHECK(got == expect);
    }
}

TEST_CASE("independence complex facets are the maximal independent sets") {
    for (const Graph& g : {make_path(4), make_cycle(5)}) {
        SimplicialComplex d = independence_complex(g);
        std::set<std::vector<std::string>> facets;
        for (auto& f : d.facets()) {
            std::sort(f.begin(), f.end());
            facets.insert(f);
        }
        std::set<std::vector<std::string>> expect;
        for (auto f : mis_oracle(g)) {
            std::sort(f.begin(), f.end());
            expect.insert(f);
        }
        CHECK(facets == expect);
    }
    // edgeless graph: the full simplex
    Graph k1({"a"}, {});
    CHECK(independence_complex(k1).facets() == std::vector<std::vector<std::string>>{{"a"}});
}
