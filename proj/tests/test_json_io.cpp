#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <memory>

#include "doctest.h"
#include "vcover/gadget.hpp"
#include "vcover/json_io.hpp"
#include "vcover/vd.hpp"

using namespace vcover;
using nlohmann::json;

namespace {

Monomial mono(std::initializer_list<std::pair<std::string, int>> xs) {
    Monomial m;
    for (const auto& [v, e] : xs) m[v] = e;
    return m;
}

}  // namespace

TEST_CASE("graph codec") {
    Graph g = make_cycle(5).add_whisker("x2");
    json j = graph_to_json(g);
    CHECK(j == json::parse(R"({"vertices":["x1","x2","x3","x4","x5","w1"],
        "edges":[["x1","x2"],["x2","x3"],["x3","x4"],["x4","x5"],["x1","x5"],["x2","w1"]]})"));
    Graph back = graph_from_json(j);
    CHECK(graph_to_json(back) == j);

    // layered [base, layer] labels are accepted on input
    Graph layered = graph_from_json(json::parse(
        R"({"vertices":[["x1",1],["x2",1],["x2",2]],"edges":[[["x1",1],["x2",1]],["x1@1","x2@2"]]})"));
    CHECK(layered.has_vertex("x2@2"));
    CHECK(layered.edge_count() == 2);

    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":["a"]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":["a"],"edges":[["a"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":["a","a"],"edges":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse("[]")), std::invalid_argument);
}

TEST_CASE("layered graph codec") {
    LayeredGraph lg = build_gkt(make_path(3), {1, 2});
    json j = layered_to_json(lg);
    LayeredGraph back = layered_from_json(j);
    CHECK(layered_to_json(back) == j);
    CHECK(back.ktuple() == lg.ktuple());
    CHECK(graph_to_json(back.graph()) == graph_to_json(lg.graph()));

    // the materialized part must match what base and k rebuild to
    json tampered = j;
    tampered["edges"].erase(0);
    CHECK_THROWS_AS(layered_from_json(tampered), std::invalid_argument);
    json wrong_k = j;
    wrong_k["k"] = {1, 1};
    CHECK_THROWS_AS(layered_from_json(wrong_k), std::invalid_argument);
    CHECK_THROWS_AS(layered_from_json(json::parse(R"({"base":{}})")), std::invalid_argument);
}

TEST_CASE("ideal codec") {
    MonomialIdeal j2 = power(cover_ideal(make_path(3)), 2);
    json j = ideal_to_json(j2);
    CHECK(ideal_from_json(j) == j2);
    CHECK(ideal_to_json(ideal_from_json(j)) == j);

    MonomialIdeal zero = ideal_from_json(json::parse(R"({"vars":["x"],"gens":[]})"));
    CHECK(zero.is_zero());
    MonomialIdeal unit = ideal_from_json(json::parse(R"({"vars":["x"],"gens":[{}]})"));
    CHECK(unit.is_unit());

    CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"vars":["x"]})")), std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"vars":["x"],"gens":[{"y":1}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"vars":["x"],"gens":[{"x":-1}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"vars":["x"],"gens":[{"x":1.5}]})")),
                    std::invalid_argument);
}

TEST_CASE("certificate codec and rendering") {
    Graph p4 = make_path(4);
    VDResult r = is_vertex_decomposable(p4);
    REQUIRE(r.decomposable);
    json j = certificate_to_json(*r.certificate);
    auto back = certificate_from_json(j);
    CHECK(certificate_to_json(*back) == j);
    CHECK(replay_certificate(p4, *back));

    CHECK_THROWS_AS(certificate_from_json(json::parse(R"("corrupt")")),
                    std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json(json::parse(R"({"vertex":"a","del":"edgeless"})")),
                    std::invalid_argument);

    // two-level rendering, hand built
    auto leaf = std::make_shared<const VDCertificate>();
    VDCertificate inner;
    inner.edgeless = false;
    inner.vertex = "b";
    inner.del = leaf;
    inner.link = leaf;
    VDCertificate root;
    root.edgeless = false;
    root.vertex = "a";
    root.del = leaf;
    root.link = std::make_shared<const VDCertificate>(inner);
    CHECK(certificate_text(root) ==
          "shed a\n"
          "  del: edgeless\n"
          "  link: shed b\n"
          "    del: edgeless\n"
          "    link: edgeless\n");
    CHECK(certificate_text(*leaf) == "edgeless\n");
}

TEST_CASE("refutation codec") {
    Graph c4 = make_cycle(4);
    VDResult r = is_vertex_decomposable(c4);
    REQUIRE_FALSE(r.decomposable);
    json j = refutation_to_json(r.refutation);
    auto back = refutation_from_json(j);
    CHECK(refutation_to_json(back) == j);
    CHECK(validate_refutation(c4, back));

    CHECK_THROWS_AS(refutation_from_json(json::parse(R"([{"vertex":"a"}])")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        refutation_from_json(json::parse(R"([{"vertex":"a","failure":"tired","witness":[]}])")),
        std::invalid_argument);
}

TEST_CASE("betti codec and triangle rendering") {
    BettiTable t = betti_table(cover_ideal(make_path(3)));
    json j = betti_to_json(t);
    CHECK(j == json::parse(R"({"beta":[[0,1,1],[0,2,1],[1,3,1]]})"));
    CHECK(betti_from_json(j) == t);

    CHECK(betti_triangle(t) ==
          "       0 1\n"
          "total: 2 1\n"
          "    1: 1 .\n"
          "    2: 1 1\n");
    CHECK(betti_triangle(betti_table(power(cover_ideal(make_path(3)), 2))) ==
          "       0 1\n"
          "total: 3 2\n"
          "    2: 1 .\n"
          "    3: 1 1\n"
          "    4: 1 1\n");
    CHECK(betti_triangle(BettiTable{}) == "(empty)\n");

    CHECK_THROWS_AS(betti_from_json(json::parse(R"({"beta":[[0,1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(betti_from_json(json::parse(R"({"beta":[[0,1,-2]]})")),
                    std::invalid_argument);
}
