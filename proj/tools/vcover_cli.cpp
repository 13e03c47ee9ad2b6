// Command-line front door: every operation of the library behind one binary,
// JSON on stdin/stdout so the subcommands compose as pipelines. Exit codes:
// 0 success or property holds, 1 property refuted, 2 usage or budget error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vcover/betti.hpp"
#include "vcover/gadget.hpp"
#include "vcover/graph.hpp"
#include "vcover/harness.hpp"
#include "vcover/ideal.hpp"
#include "vcover/json_io.hpp"
#include "vcover/vd.hpp"

namespace {

using nlohmann::json;
using namespace vcover;

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return json::parse(in);
}

bool is_layered_json(const json& j) {
    return j.is_object() && j.contains("base") && j.contains("k");
}

/// Plain graph, or the materialized graph of layered input, so gadget
/// output pipes straight into the graph commands.
Graph graph_input(const json& j) {
    if (is_layered_json(j)) return layered_from_json(j).graph();
    return graph_from_json(j);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, e] : m) {
        if (!first) out << "*";
        out << v;
        if (e > 1) out << "^" << e;
        first = false;
    }
    return out.str();
}

int cmd_gadget(const std::string& input, const std::vector<int>& k) {
    emit(layered_to_json(build_gkt(graph_from_json(read_json_input(input)), k)));
    return 0;
}

int cmd_vd(const std::string& input, const std::string& certificate_out,
           const std::string& guided, bool text) {
    json in = read_json_input(input);
    Graph g = graph_input(in);

    bool decomposable = false;
    std::shared_ptr<const VDCertificate> cert;
    std::vector<VDRefutationEntry> refutation;
    if (guided.empty()) {
        VDResult res = is_vertex_decomposable(g);
        decomposable = res.decomposable;
        cert = res.certificate;
        refutation = std::move(res.refutation);
    } else {
        if (!is_layered_json(in))
            throw std::invalid_argument(
                "--guided needs layered input with \"base\" and \"k\" (see `gadget`)");
        LayeredGraph lg = layered_from_json(in);
        if (guided == "tree") {
            cert = guided_vd_tree_gadget(lg.base(), lg.ktuple());
        } else {
            const std::vector<int>& kt = lg.ktuple();
            if (kt.empty() || !std::all_of(kt.begin(), kt.end(),
                                           [&](int e) { return e == kt.front(); }))
                throw std::invalid_argument("--guided unicyclic needs a uniform tuple");
            cert = guided_vd_unicyclic(lg.base(), kt.front());
        }
        if (!replay_certificate(g, *cert))
            throw std::logic_error("guided certificate failed replay");
        decomposable = true;
    }

    json evidence = decomposable ? certificate_to_json(*cert) : refutation_to_json(refutation);
    if (!certificate_out.empty()) {
        std::ofstream out(certificate_out);
        if (!out) throw std::invalid_argument("cannot write " + certificate_out);
        out << evidence.dump(2) << "\n";
    }
    if (!text) {
        emit(evidence);
    } else if (decomposable) {
        std::cout << certificate_text(*cert);
    } else {
        for (const VDRefutationEntry& r : refutation) {
            std::cout << r.vertex << ": " << r.failure;
            if (!r.witness.empty()) {
                std::cout << ", witness {";
                for (size_t i = 0; i < r.witness.size(); ++i)
                    std::cout << (i ? "," : "") << r.witness[i];
                std::cout << "}";
            }
            std::cout << "\n";
        }
    }
    return decomposable ? 0 : 1;
}

int cmd_cwl(const std::string& input, bool text) {
    ComponentwiseReport report = is_componentwise_linear(ideal_from_json(read_json_input(input)));
    if (text) {
        std::cout << "componentwise linear: " << (report.componentwise_linear ? "yes" : "no")
                  << "\n";
        for (const auto& [j, linear] : report.degrees)
            std::cout << "  degree " << j << ": " << (linear ? "linear" : "not linear") << "\n";
    } else {
        json degrees = json::array();
        for (const auto& [j, linear] : report.degrees)
            degrees.push_back(json::array({j, linear}));
        emit(json{{"componentwise_linear", report.componentwise_linear},
                  {"degrees", std::move(degrees)}});
    }
    return report.componentwise_linear ? 0 : 1;
}

int cmd_lq(const std::string& input, bool text) {
    MonomialIdeal ideal = ideal_from_json(read_json_input(input));
    std::optional<std::vector<Monomial>> order = linear_quotients_order(ideal);
    if (!order) {
        if (text)
            std::cout << "no linear-quotients order\n";
        else
            emit(json());
        return 1;
    }
    if (text) {
        for (const Monomial& m : *order) std::cout << monomial_str(m) << "\n";
    } else {
        json out = json::array();
        for (const Monomial& m : *order) {
            json g = json::object();
            for (const auto& [v, e] : m) g[v] = e;
            out.push_back(std::move(g));
        }
        emit(out);
    }
    return 0;
}

int cmd_verify(const std::string& which, int nmax, int kmax, int random, uint64_t seed,
               bool text) {
    const std::vector<std::string> names = {"counterexamples",     "tree-gadgets",
                                            "tree-cover-powers",   "unicyclic-gadgets",
                                            "symbolic-regularity", "structural-identities"};
    if (which != "all" && std::find(names.begin(), names.end(), which) == names.end()) {
        std::string msg = "unknown suite '" + which + "'; choose all";
        for (const std::string& n : names) msg += ", " + n;
        throw std::invalid_argument(msg);
    }
    bool all = which == "all";
    auto want = [&](const std::string& n) { return all || which == n; };

    // `all` clamps to each suite's budget so one call runs everything.
    std::vector<SuiteReport> reports;
    if (want("counterexamples")) reports.push_back(suite_counterexamples());
    if (want("tree-gadgets"))
        reports.push_back(suite_tree_gadgets(all ? std::min(nmax, 7) : nmax,
                                             all ? std::min(kmax, 3) : kmax, random, seed));
    if (want("tree-cover-powers"))
        reports.push_back(suite_tree_cover_powers(all ? std::min(nmax, 6) : nmax,
                                                  all ? std::min(kmax, 2) : kmax));
    if (want("unicyclic-gadgets"))
        reports.push_back(suite_unicyclic_gadgets({4, 6}, all ? std::min(kmax, 2) : kmax));
    if (want("symbolic-regularity"))
        reports.push_back(suite_symbolic_regularity(all ? std::min(nmax, 6) : nmax,
                                                    all ? std::min(kmax, 2) : kmax));
    if (want("structural-identities"))
        reports.push_back(suite_structural_identities(all ? std::min(nmax, 6) : nmax,
                                                      all ? std::min(kmax, 2) : kmax, seed));

    bool passed = true;
    for (const SuiteReport& r : reports) passed = passed && r.passed();

    if (text) {
        for (const SuiteReport& r : reports) {
            std::cout << r.suite << ": " << r.instances.size() << " instances, "
                      << r.failure_count() << " failures (" << r.wall_ms / 1000.0 << " s)\n";
            for (const SuiteInstance& i : r.instances)
                if (!i.passed) std::cout << "  FAIL " << i.name << ": " << i.detail << "\n";
        }
        std::cout << (passed ? "all suites passed" : "FAILURES above") << "\n";
    } else if (reports.size() == 1) {
        emit(report_to_json(reports.front()));
    } else {
        json out = json::array();
        for (const SuiteReport& r : reports) out.push_back(report_to_json(r));
        emit(out);
    }
    return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex cover ideals of layered graphs: gadgets, decomposability, "
                 "resolutions, verification suites"};
    app.require_subcommand(1);

    // Inputs default to stdin so subcommands compose as pipelines.
    std::string input, certificate_out, guided, suite;
    std::vector<int> ktuple;
    int s = 1, jdeg = 0;
    int nmax = 6, kmax = 2, random_tuples = 50;
    uint64_t seed = 20240817;
    bool text_vd = false, text_betti = false, text_cwl = false, text_lq = false,
         text_verify = false;

    CLI::App* gadget = app.add_subcommand("gadget", "layered graph G(k) of a base graph");
    gadget->add_option("input", input, "graph JSON file (default stdin)");
    gadget->add_option("--k", ktuple, "per-edge strengths, e.g. 1,2,0")
        ->required()
        ->delimiter(',');

    CLI::App* vd = app.add_subcommand("vd", "vertex decomposability with certificate");
    vd->add_option("input", input, "graph or layered JSON file (default stdin)");
    vd->add_option("--certificate", certificate_out, "also write the evidence to this file");
    vd->add_option("--guided", guided, "use the search-free construction")
        ->check(CLI::IsMember({"tree", "unicyclic"}));
    vd->add_flag("--text", text_vd, "print a shedding tree instead of JSON");

    CLI::App* cover = app.add_subcommand("cover-ideal", "vertex cover ideal of a graph");
    cover->add_option("input", input, "graph JSON file (default stdin)");
    CLI::App* edge = app.add_subcommand("edge-ideal", "edge ideal of a graph");
    edge->add_option("input", input, "graph JSON file (default stdin)");

    CLI::App* pow_cmd = app.add_subcommand("power", "ordinary power of an ideal");
    pow_cmd->add_option("input", input, "ideal JSON file (default stdin)");
    pow_cmd->add_option("--s", s, "exponent")->required();

    CLI::App* symbolic = app.add_subcommand("symbolic", "symbolic power of a cover ideal");
    symbolic->add_option("input", input, "graph JSON file (default stdin)");
    symbolic->add_option("--s", s, "exponent")->required();

    CLI::App* polar = app.add_subcommand("polarize", "polarization of an ideal");
    polar->add_option("input", input, "ideal JSON file (default stdin)");

    CLI::App* comp = app.add_subcommand("component", "subideal of one generator degree");
    comp->add_option("input", input, "ideal JSON file (default stdin)");
    comp->add_option("--j", jdeg, "degree")->required();

    CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers of an ideal");
    betti->add_option("input", input, "ideal JSON file (default stdin)");
    betti->add_flag("--text", text_betti, "print the Betti triangle instead of JSON");

    CLI::App* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of an ideal");
    reg->add_option("input", input, "ideal JSON file (default stdin)");

    CLI::App* cwl = app.add_subcommand("cwl", "componentwise linearity of an ideal");
    cwl->add_option("input", input, "ideal JSON file (default stdin)");
    cwl->add_flag("--text", text_cwl, "print a verdict per degree instead of JSON");

    CLI::App* lq = app.add_subcommand("lq", "linear-quotients order of an ideal");
    lq->add_option("input", input, "ideal JSON file (default stdin)");
    lq->add_flag("--text", text_lq, "print one monomial per line instead of JSON");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--nmax", nmax, "largest vertex count in graph pools");
    verify->add_option("--kmax", kmax, "largest strength / exponent");
    verify->add_option("--random", random_tuples, "random tuples per tree");
    verify->add_option("--seed", seed, "random tuple seed");
    verify->add_flag("--text", text_verify, "print summaries instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (gadget->parsed()) return cmd_gadget(input, ktuple);
        if (vd->parsed()) return cmd_vd(input, certificate_out, guided, text_vd);
        if (cover->parsed()) {
            emit(ideal_to_json(cover_ideal(graph_input(read_json_input(input)))));
            return 0;
        }
        if (edge->parsed()) {
            emit(ideal_to_json(edge_ideal(graph_input(read_json_input(input)))));
            return 0;
        }
        if (pow_cmd->parsed()) {
            emit(ideal_to_json(power(ideal_from_json(read_json_input(input)), s)));
            return 0;
        }
        if (symbolic->parsed()) {
            emit(ideal_to_json(symbolic_power_cover(graph_input(read_json_input(input)), s)));
            return 0;
        }
        if (polar->parsed()) {
            emit(ideal_to_json(polarize(ideal_from_json(read_json_input(input)))));
            return 0;
        }
        if (comp->parsed()) {
            emit(ideal_to_json(component(ideal_from_json(read_json_input(input)), jdeg)));
            return 0;
        }
        if (betti->parsed()) {
            BettiTable table = betti_table(ideal_from_json(read_json_input(input)));
            if (text_betti)
                std::cout << betti_triangle(table);
            else
                emit(betti_to_json(table));
            return 0;
        }
        if (reg->parsed()) {
            std::cout << regularity(ideal_from_json(read_json_input(input))) << "\n";
            return 0;
        }
        if (cwl->parsed()) return cmd_cwl(input, text_cwl);
        if (lq->parsed()) return cmd_lq(input, text_lq);
        if (verify->parsed())
            return cmd_verify(suite, nmax, kmax, random_tuples, seed, text_verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
