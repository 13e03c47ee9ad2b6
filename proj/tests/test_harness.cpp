#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "vcover/harness.hpp"

using namespace vcover;
using nlohmann::json;

TEST_CASE("small runs of every suite pass") {
    SuiteReport g = suite_tree_gadgets(4, 1, 3, 7);
    CHECK(g.passed());
    CHECK_FALSE(g.instances.empty());
    CHECK(g.suite == "tree-gadgets");

    CHECK(suite_tree_cover_powers(4, 2).passed());
    CHECK(suite_unicyclic_gadgets({4}, 1).passed());
    CHECK(suite_symbolic_regularity(4, 2).passed());
    CHECK(suite_structural_identities(4, 2, 5).passed());
}

TEST_CASE("suite runs are deterministic") {
    CHECK(suite_tree_gadgets(5, 2, 4, 99) == suite_tree_gadgets(5, 2, 4, 99));
    CHECK(suite_structural_identities(5, 1, 3) == suite_structural_identities(5, 1, 3));
    // a different seed draws different random entries
    SuiteReport a = suite_tree_gadgets(5, 2, 12, 1);
    SuiteReport b = suite_tree_gadgets(5, 2, 12, 2);
    CHECK(a.passed());
    CHECK(b.passed());
}

TEST_CASE("report JSON is lossless and equality ignores the clock") {
    SuiteReport r = suite_tree_cover_powers(4, 1);
    json j = report_to_json(r);
    SuiteReport back = report_from_json(j);
    CHECK(back == r);
    CHECK(back.wall_ms == r.wall_ms);
    CHECK(report_to_json(back) == j);

    SuiteReport shifted = r;
    shifted.wall_ms += 1234.5;
    CHECK(shifted == r);

    // failures survive the round trip too
    SuiteReport failing;
    failing.suite = "demo";
    failing.instances.push_back({"broken", false, "stage: exploded", json{{"graph", "?"}}});
    SuiteReport fb = report_from_json(report_to_json(failing));
    CHECK(fb == failing);
    CHECK(fb.failure_count() == 1);
    CHECK_FALSE(fb.passed());
}

TEST_CASE("report decoding rejects malformed input") {
    CHECK_THROWS_AS(report_from_json(json::parse(R"({"instances":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(report_from_json(json::parse(R"({"suite":"s","instances":{}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(report_from_json(json::parse(R"({"suite":"s","instances":[{"name":"x"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        report_from_json(json::parse(R"({"suite":"s","wall_ms":"quick","instances":[]})")),
        std::invalid_argument);
}

TEST_CASE("budgets and parameter validation") {
    CHECK_THROWS_AS(suite_tree_gadgets(8, 1, 0, 1), std::length_error);
    CHECK_THROWS_AS(suite_tree_gadgets(5, 4, 0, 1), std::length_error);
    CHECK_THROWS_AS(suite_tree_gadgets(0, 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(suite_tree_gadgets(5, 1, -1, 1), std::invalid_argument);

    CHECK_THROWS_AS(suite_tree_cover_powers(7, 1), std::length_error);
    CHECK_THROWS_AS(suite_tree_cover_powers(5, 3), std::length_error);
    CHECK_THROWS_AS(suite_tree_cover_powers(5, 0), std::invalid_argument);

    CHECK_THROWS_AS(suite_unicyclic_gadgets({4, 6}, 3), std::length_error);
    CHECK_THROWS_AS(suite_unicyclic_gadgets({5}, 1), std::invalid_argument);
    CHECK_THROWS_AS(suite_unicyclic_gadgets({4}, 0), std::invalid_argument);

    CHECK_THROWS_AS(suite_symbolic_regularity(7, 1), std::length_error);
    CHECK_THROWS_AS(suite_symbolic_regularity(5, 3), std::length_error);

    CHECK_THROWS_AS(suite_structural_identities(7, 1, 0), std::length_error);
    CHECK_THROWS_AS(suite_structural_identities(5, 3, 0), std::length_error);
}

TEST_CASE("counterexample suite pins the failing gadgets") {
    SuiteReport r = suite_counterexamples();
    CHECK(r.passed());
    CHECK(r.instances.size() == 8);

    std::set<std::string> names;
    for (const SuiteInstance& i : r.instances) names.insert(i.name);
    for (const char* expected :
         {"whiskered-square base decomposable", "whiskered-square (1,2,1,1,2) refuted",
          "whiskered-diamond base decomposable", "whiskered-diamond (1,2,1,1,2,1) refuted",
          "diamond base decomposable", "diamond (2,2,2,2,2) refuted",
          "whiskered-square shedding set", "whiskered-square shed leaves a 4-cycle"})
        CHECK(names.count(expected) == 1);

    for (const SuiteInstance& i : r.instances) {
        if (i.name == "whiskered-square shedding set")
            CHECK(i.evidence == json{{"shedding", {"x1@1"}}});
        if (i.name.ends_with("refuted"))
            CHECK_FALSE(i.evidence.empty());  // the refutation itself is kept
    }
}
