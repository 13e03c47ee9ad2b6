#include "vcover/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "vcover/betti.hpp"
#include "vcover/gadget.hpp"
#include "vcover/graph_iso.hpp"
#include "vcover/ideal.hpp"
#include "vcover/json_io.hpp"
#include "vcover/vd.hpp"

namespace vcover {

bool SuiteReport::passed() const {
    return std::all_of(instances.begin(), instances.end(),
                       [](const SuiteInstance& i) { return i.passed; });
}

int SuiteReport::failure_count() const {
    return static_cast<int>(std::count_if(instances.begin(), instances.end(),
                                          [](const SuiteInstance& i) { return !i.passed; }));
}

namespace {

using nlohmann::json;

/// Instance collector: times the run and turns exceptions inside a check
/// into failures whose stage is the exception text.
class SuiteRun {
  public:
    explicit SuiteRun(std::string suite) : start_(std::chrono::steady_clock::now()) {
        report_.suite = std::move(suite);
    }

    /// `body(inst)` returns the failing stage, or "" on success; it may set
    /// `inst.evidence` to keep a witness on passing instances.
    template <typename Body>
    void check(std::string name, json reproducer, Body&& body) {
        SuiteInstance inst;
        inst.name = std::move(name);
        std::string stage;
        try {
            stage = body(inst);
        } catch (const std::exception& e) {
            stage = std::string("exception: ") + e.what();
        }
        if (!stage.empty()) {
            inst.passed = false;
            inst.detail = stage;
            reproducer["stage"] = stage;
            inst.evidence = std::move(reproducer);
        }
        report_.instances.push_back(std::move(inst));
    }

    SuiteReport finish() {
        report_.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
                .count();
        return std::move(report_);
    }

  private:
    SuiteReport report_;
    std::chrono::steady_clock::time_point start_;
};

json repro(const Graph& base, const std::vector<int>& tuple) {
    json t = json::array();
    for (int e : tuple) t.push_back(e);
    return json{{"graph", graph_to_json(base)}, {"tuple", std::move(t)}};
}

std::string tuple_str(const std::vector<int>& k) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
    out << ')';
    return out.str();
}

void require_budget(bool ok, const std::string& msg) {
    if (!ok) throw std::length_error(msg);
}

/// All trees up to n_max vertices with stable names "tree n<n>#<index>".
std::vector<std::pair<std::string, Graph>> tree_pool(int n_max) {
    std::vector<std::pair<std::string, Graph>> pool;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Graph> trees = enumerate_trees(n);
        for (size_t i = 0; i < trees.size(); ++i) {
            std::ostringstream name;
            name << "tree n" << n << "#" << i;
            pool.emplace_back(name.str(), std::move(trees[i]));
        }
    }
    return pool;
}

/// Even cycles with a whisker at each position, named "C<n>+whisker@<v>".
std::vector<std::pair<std::string, Graph>> whiskered_cycles(const std::vector<int>& lengths) {
    std::vector<std::pair<std::string, Graph>> pool;
    for (int c : lengths) {
        Graph cycle = make_cycle(c);
        for (const std::string& at : cycle.vertex_labels()) {
            std::ostringstream name;
            name << "C" << c << "+whisker@" << at;
            pool.emplace_back(name.str(), cycle.add_whisker(at));
        }
    }
    return pool;
}

/// Uniform tuples 0..k_max plus `random_tuples` seeded draws, deduplicated.
std::vector<std::vector<int>> gadget_tuples(int edges, int k_max, int random_tuples,
                                            std::mt19937_64& rng) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    auto push = [&](std::vector<int> t) {
        if (seen.insert(t).second) out.push_back(std::move(t));
    };
    for (int k = 0; k <= k_max; ++k) push(std::vector<int>(edges, k));
    for (int r = 0; r < random_tuples; ++r) {
        std::vector<int> t(edges);
        for (int& e : t) e = static_cast<int>(rng() % static_cast<uint64_t>(k_max + 1));
        push(std::move(t));
    }
    return out;
}

/// Every tuple with entries 0..k_max when the space is small, otherwise a
/// seeded sample of the same size cap.
std::vector<std::vector<int>> all_tuples(int edges, int k_max, std::mt19937_64& rng) {
    const int cap = 4096;
    std::vector<std::vector<int>> out;
    if (std::pow(k_max + 1.0, edges) <= cap) {
        std::vector<int> t(edges, 0);
        while (true) {
            out.push_back(t);
            int i = 0;
            for (; i < edges; ++i) {
                if (++t[i] <= k_max) break;
                t[i] = 0;
            }
            if (i == edges) break;
        }
        return out;
    }
    std::set<std::vector<int>> seen;
    for (int r = 0; r < cap; ++r) {
        std::vector<int> t(edges);
        for (int& e : t) e = static_cast<int>(rng() % static_cast<uint64_t>(k_max + 1));
        if (seen.insert(t).second) out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::string> leaves_of(const Graph& g) {
    std::vector<std::string> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(g.label(v));
    return out;
}

/// Neighbors of leaves, deduplicated, in index order.
std::vector<std::string> supports_of(const Graph& g) {
    std::set<int> idx;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) idx.insert(g.neighbors(v)[0]);
    std::vector<std::string> out;
    for (int v : idx) out.push_back(g.label(v));
    return out;
}

}  // namespace

SuiteReport suite_tree_gadgets(int n_max, int k_max, int random_tuples, uint64_t seed) {
    if (n_max < 1 || k_max < 0 || random_tuples < 0)
        throw std::invalid_argument("suite_tree_gadgets: bad parameters");
    require_budget(n_max <= 7 && k_max <= 3,
                   "suite_tree_gadgets: budget is n_max <= 7, k_max <= 3");

    SuiteRun run("tree-gadgets");
    std::mt19937_64 rng(seed);
    for (const auto& [tname, tree] : tree_pool(n_max)) {
        for (const std::vector<int>& k :
             gadget_tuples(tree.edge_count(), k_max, random_tuples, rng)) {
            run.check(tname + " k=" + tuple_str(k), repro(tree, k),
                      [&tree = tree, &k](SuiteInstance&) -> std::string {
                          auto cert = guided_vd_tree_gadget(tree, k);
                          Graph layered = build_gkt(tree, k).graph();
                          if (!replay_certificate(layered, *cert))
                              return "replay rejected the guided certificate";
                          int top = k.empty() ? 0 : *std::max_element(k.begin(), k.end());
                          if (tree.vertex_count() <= 6 && top <= 2 &&
                              !is_vertex_decomposable(layered).decomposable)
                              return "exhaustive decision disagrees";
                          return "";
                      });
        }
    }
    return run.finish();
}

SuiteReport suite_tree_cover_powers(int n_max, int k_max) {
    if (n_max < 1 || k_max < 1) throw std::invalid_argument("suite_tree_cover_powers: bad parameters");
    require_budget(n_max <= 6 && k_max <= 2,
                   "suite_tree_cover_powers: budget is n_max <= 6, k_max <= 2");

    SuiteRun run("tree-cover-powers");
    for (const auto& [tname, tree] : tree_pool(n_max)) {
        MonomialIdeal cover = cover_ideal(tree);
        for (int k = 1; k <= k_max; ++k) {
            run.check(tname + " k=" + std::to_string(k),
                      repro(tree, std::vector<int>(tree.edge_count(), k)),
                      [&cover, k](SuiteInstance&) -> std::string {
                          MonomialIdeal p = power(cover, k);
                          auto order = linear_quotients_order(p);
                          if (!order) return "no linear-quotients order exists";
                          if (!verify_linear_quotients(p, *order))
                              return "linear-quotients order failed verification";
                          if (!is_componentwise_linear(p).componentwise_linear)
                              return "not componentwise linear";
                          return "";
                      });
        }
    }
    return run.finish();
}

SuiteReport suite_unicyclic_gadgets(const std::vector<int>& cycles, int k_max) {
    for (int c : cycles)
        if (c != 4 && c != 6)
            throw std::invalid_argument("suite_unicyclic_gadgets: cycle lengths are 4 or 6");
    if (k_max < 1) throw std::invalid_argument("suite_unicyclic_gadgets: bad parameters");
    require_budget(k_max <= 2, "suite_unicyclic_gadgets: budget is k_max <= 2");

    SuiteRun run("unicyclic-gadgets");
    for (const auto& [gname, g] : whiskered_cycles(cycles)) {
        for (int k = 1; k <= k_max; ++k) {
            std::vector<int> tuple(g.edge_count(), k);
            run.check(gname + " k=" + std::to_string(k), repro(g, tuple),
                      [&g = g, k, &tuple](SuiteInstance&) -> std::string {
                          auto cert = guided_vd_unicyclic(g, k);
                          Graph layered = build_gkt(g, tuple).graph();
                          if (!replay_certificate(layered, *cert))
                              return "replay rejected the guided certificate";
                          if (!is_vertex_decomposable(layered).decomposable)
                              return "exhaustive decision disagrees";
                          return "";
                      });
        }
    }
    return run.finish();
}

SuiteReport suite_symbolic_regularity(int n_max, int s_max) {
    if (n_max < 1 || s_max < 1)
        throw std::invalid_argument("suite_symbolic_regularity: bad parameters");
    require_budget(n_max <= 6 && s_max <= 2,
                   "suite_symbolic_regularity: budget is n_max <= 6, s_max <= 2");

    SuiteRun run("symbolic-regularity");
    for (const auto& [tname, tree] : tree_pool(n_max)) {
        MonomialIdeal cover = cover_ideal(tree);
        int deg = max_gen_degree(cover);
        for (int s = 1; s <= s_max; ++s) {
            run.check(tname + " s=" + std::to_string(s) + " power regularity",
                      repro(tree, std::vector<int>(tree.edge_count(), s)),
                      [&cover, s, deg](SuiteInstance&) -> std::string {
                          int reg = regularity(power(cover, s));
                          if (reg != s * deg)
                              return "regularity " + std::to_string(reg) + " != " +
                                     std::to_string(s) + " * " + std::to_string(deg);
                          return "";
                      });
        }
    }
    for (const auto& [gname, g] : whiskered_cycles({4, 6})) {
        MonomialIdeal cover = cover_ideal(g);
        int deg = max_gen_degree(cover);
        for (int s = 1; s <= s_max; ++s) {
            run.check(gname + " s=" + std::to_string(s) + " symbolic",
                      repro(g, std::vector<int>(g.edge_count(), s)),
                      [&g = g, s, deg](SuiteInstance&) -> std::string {
                          MonomialIdeal sym = symbolic_power_cover(g, s);
                          int reg = regularity(sym);
                          if (reg != s * deg)
                              return "regularity " + std::to_string(reg) + " != " +
                                     std::to_string(s) + " * " + std::to_string(deg);
                          if (!is_componentwise_linear(sym).componentwise_linear)
                              return "not componentwise linear";
                          return "";
                      });
        }
    }
    return run.finish();
}

SuiteReport suite_counterexamples() {
    SuiteRun run("counterexamples");

    struct Fixture {
        std::string name;
        Graph base;
        std::vector<int> tuple;
    };
    const std::vector<Fixture> fixtures = {
        {"whiskered-square",
         Graph({"x1", "x2", "x3", "x4", "x5"},
               {{"x1", "x5"}, {"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x1", "x4"}}),
         {1, 2, 1, 1, 2}},
        {"whiskered-diamond",
         Graph({"x1", "x2", "x3", "x4", "x5"},
               {{"x1", "x5"},
                {"x1", "x2"},
                {"x2", "x3"},
                {"x3", "x4"},
                {"x1", "x4"},
                {"x1", "x3"}}),
         {1, 2, 1, 1, 2, 1}},
        {"diamond",
         Graph({"x1", "x2", "x3", "x4"},
               {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x1", "x4"}, {"x1", "x3"}}),
         {2, 2, 2, 2, 2}},
    };

    for (const Fixture& fx : fixtures) {
        run.check(fx.name + " base decomposable", repro(fx.base, {}),
                  [&fx](SuiteInstance& inst) -> std::string {
                      VDResult res = is_vertex_decomposable(fx.base);
                      if (!res.decomposable) return "base graph not decomposable";
                      if (!replay_certificate(fx.base, *res.certificate))
                          return "base certificate failed replay";
                      inst.evidence = certificate_to_json(*res.certificate);
                      return "";
                  });
        run.check(fx.name + " " + tuple_str(fx.tuple) + " refuted", repro(fx.base, fx.tuple),
                  [&fx](SuiteInstance& inst) -> std::string {
                      Graph layered = build_gkt(fx.base, fx.tuple).graph();
                      VDResult res = is_vertex_decomposable(layered);
                      if (res.decomposable) return "layered graph unexpectedly decomposable";
                      if (!validate_refutation(layered, res.refutation))
                          return "refutation failed validation";
                      inst.evidence = refutation_to_json(res.refutation);
                      return "";
                  });
    }

    // Shedding structure of the whiskered square's layered graph: x1@1 is
    // the only shedding vertex, and shedding it leaves exactly a 4-cycle.
    const Fixture& sq = fixtures[0];
    const Graph layered = build_gkt(sq.base, sq.tuple).graph();
    run.check("whiskered-square shedding set", repro(sq.base, sq.tuple),
              [&layered](SuiteInstance& inst) -> std::string {
                  std::vector<std::string> shedding;
                  for (const std::string& v : layered.vertex_labels())
                      if (is_shedding_vertex(layered, v).shedding) shedding.push_back(v);
                  if (shedding != std::vector<std::string>{"x1@1"})
                      return "shedding set is not exactly {x1@1}";
                  inst.evidence = json{{"shedding", shedding}};
                  return "";
              });
    run.check("whiskered-square shed leaves a 4-cycle", repro(sq.base, sq.tuple),
              [&layered](SuiteInstance& inst) -> std::string {
                  Graph rest = layered.delete_vertices({"x1@1"}).strip_isolated();
                  GraphClass cls = classify(rest);
                  if (cls.kind != GraphClass::Kind::Unicyclic || cls.cycle_length != 4 ||
                      rest.vertex_count() != 4)
                      return "deletion is not a plain 4-cycle";
                  inst.evidence = graph_to_json(rest);
                  return "";
              });
    return run.finish();
}

SuiteReport suite_structural_identities(int n_max, int k_max, uint64_t seed) {
    if (n_max < 1 || k_max < 0)
        throw std::invalid_argument("suite_structural_identities: bad parameters");
    require_budget(n_max <= 6 && k_max <= 2,
                   "suite_structural_identities: budget is n_max <= 6, k_max <= 2");

    SuiteRun run("structural-identities");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, Graph>> trees = tree_pool(n_max);

    for (const auto& [tname, tree] : trees) {
        for (const std::vector<int>& k : all_tuples(tree.edge_count(), k_max, rng)) {
            for (const std::string& leaf : leaves_of(tree)) {
                run.check(tname + " k=" + tuple_str(k) + " collapse@" + leaf, repro(tree, k),
                          [&tree = tree, &k, &leaf](SuiteInstance&) -> std::string {
                              LeafCollapse lc = leaf_collapse(tree, k, leaf);
                              std::string support = tree.neighborhood(leaf, false).at(0);
                              Graph lhs = build_gkt(tree, k)
                                              .graph()
                                              .delete_vertices({layered_label(support, 1)})
                                              .strip_isolated();
                              Graph rhs = build_gkt(lc.base, lc.ktuple).graph().strip_isolated();
                              if (!are_isomorphic(lhs, rhs))
                                  return "deletion not isomorphic to the collapsed gadget";
                              return "";
                          });
            }
            for (const std::string& support : supports_of(tree)) {
                run.check(tname + " k=" + tuple_str(k) + " link@" + support, repro(tree, k),
                          [&tree = tree, &k, &support](SuiteInstance&) -> std::string {
                              LinkDecomposition ld = link_decomposition(tree, k, support);
                              Graph layered = build_gkt(tree, k).graph();
                              Graph target =
                                  layered
                                      .delete_vertices(layered.neighborhood(
                                          layered_label(support, 1), true))
                                      .strip_isolated();
                              if (static_cast<int>(ld.f.size()) != ld.rhs.vertex_count() ||
                                  ld.rhs.vertex_count() != target.vertex_count())
                                  return "map size mismatch";
                              std::map<std::string, std::string> fm(ld.f.begin(), ld.f.end());
                              if (static_cast<int>(fm.size()) != ld.rhs.vertex_count())
                                  return "map has duplicate sources";
                              std::set<std::string> image;
                              for (const auto& [src, dst] : fm) {
                                  if (!ld.rhs.has_vertex(src)) return "map source outside rhs";
                                  if (!target.has_vertex(dst)) return "map image outside remainder";
                                  image.insert(dst);
                              }
                              if (static_cast<int>(image.size()) != target.vertex_count())
                                  return "map not bijective";
                              if (ld.rhs.edge_count() != target.edge_count())
                                  return "edge count mismatch";
                              for (const auto& [u, v] : ld.rhs.edges()) {
                                  const std::string& fu = fm.at(ld.rhs.label(u));
                                  const std::string& fv = fm.at(ld.rhs.label(v));
                                  if (!target.adjacent(target.index_of(fu), target.index_of(fv)))
                                      return "map does not preserve an edge";
                              }
                              return "";
                          });
            }
        }
        for (int k = 1; k <= k_max; ++k) {
            run.check(tname + " k=" + std::to_string(k) + " layered cover identity",
                      repro(tree, std::vector<int>(tree.edge_count(), k)),
                      [&tree = tree, k](SuiteInstance&) -> std::string {
                          Graph layered =
                              build_gkt(tree, std::vector<int>(tree.edge_count(), k)).graph();
                          MonomialIdeal lhs = cover_ideal(layered);
                          MonomialIdeal rhs = polarize(symbolic_power_cover(tree, k));
                          if (!(lhs == rhs))
                              return "layered cover ideal differs from the polarized symbolic power";
                          return "";
                      });
        }
    }

    // Symbolic powers of bipartite cover ideals are ordinary powers; the
    // pool is every tree above plus a whiskered 4- and 6-cycle.
    std::vector<std::pair<std::string, Graph>> pool = std::move(trees);
    pool.emplace_back("C4+whisker", make_cycle(4).add_whisker("x1"));
    pool.emplace_back("C6+whisker", make_cycle(6).add_whisker("x1"));
    for (const auto& [gname, g] : pool) {
        MonomialIdeal cover = cover_ideal(g);
        for (int k = 1; k <= 3; ++k) {
            run.check(gname + " k=" + std::to_string(k) + " symbolic equals power",
                      repro(g, std::vector<int>(g.edge_count(), k)),
                      [&g = g, &cover, k](SuiteInstance&) -> std::string {
                          if (!(symbolic_power_cover(g, k) == power(cover, k)))
                              return "symbolic power differs from the ordinary power";
                          return "";
                      });
        }
    }
    return run.finish();
}

nlohmann::json report_to_json(const SuiteReport& r) {
    json instances = json::array();
    for (const SuiteInstance& i : r.instances)
        instances.push_back(json{{"name", i.name},
                                 {"passed", i.passed},
                                 {"detail", i.detail},
                                 {"evidence", i.evidence}});
    return json{{"suite", r.suite}, {"wall_ms", r.wall_ms}, {"instances", std::move(instances)}};
}

SuiteReport report_from_json(const nlohmann::json& j) {
    auto fail = [](const std::string& what) -> std::invalid_argument {
        return std::invalid_argument("report: " + what);
    };
    if (!j.is_object() || !j.contains("suite") || !j.contains("instances")) throw fail("missing fields");
    if (!j["suite"].is_string() || !j["instances"].is_array()) throw fail("bad field types");
    SuiteReport r;
    r.suite = j["suite"].get<std::string>();
    if (j.contains("wall_ms")) {
        if (!j["wall_ms"].is_number()) throw fail("bad wall_ms");
        r.wall_ms = j["wall_ms"].get<double>();
    }
    for (const json& e : j["instances"]) {
        if (!e.is_object() || !e.contains("name") || !e.contains("passed") ||
            !e["name"].is_string() || !e["passed"].is_boolean())
            throw fail("bad instance entry");
        SuiteInstance inst;
        inst.name = e["name"].get<std::string>();
        inst.passed = e["passed"].get<bool>();
        if (e.contains("detail")) {
            if (!e["detail"].is_string()) throw fail("bad instance detail");
            inst.detail = e["detail"].get<std::string>();
        }
        if (e.contains("evidence")) inst.evidence = e["evidence"];
        r.instances.push_back(std::move(inst));
    }
    return r;
}

}  // namespace vcover
