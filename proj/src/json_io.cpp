#include "vcover/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vcover {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

void expect(bool ok, const std::string& where, const std::string& what) {
    if (!ok) bad(where, what);
}

// Vertex entry: either a plain label or a [base, layer] pair.
std::string vertex_label(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_number_integer())
        return layered_label(v[0].get<std::string>(), v[1].get<int>());
    bad(where, "expected a label or a [base, layer] pair");
}

std::vector<int> int_array(const json& j, const std::string& where) {
    expect(j.is_array(), where, "expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const json& v : j) {
        expect(v.is_number_integer(), where, "expected integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

nlohmann::json graph_to_json(const Graph& g) {
    json vertices = json::array();
    for (const std::string& v : g.vertex_labels()) vertices.push_back(v);
    json edges = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge_labels(e);
        edges.push_back(json::array({a, b}));
    }
    return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
    expect(j.is_object(), "graph", "expected an object");
    expect(j.contains("vertices"), "graph", "missing \"vertices\"");
    expect(j.contains("edges"), "graph", "missing \"edges\"");
    expect(j["vertices"].is_array(), "graph.vertices", "expected an array");
    expect(j["edges"].is_array(), "graph.edges", "expected an array");

    std::vector<std::string> vertices;
    vertices.reserve(j["vertices"].size());
    for (const json& v : j["vertices"]) vertices.push_back(vertex_label(v, "graph.vertices"));

    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(j["edges"].size());
    for (const json& e : j["edges"]) {
        expect(e.is_array() && e.size() == 2, "graph.edges", "expected [u, v] pairs");
        edges.emplace_back(vertex_label(e[0], "graph.edges"), vertex_label(e[1], "graph.edges"));
    }
    return Graph(std::move(vertices), edges);
}

nlohmann::json layered_to_json(const LayeredGraph& lg) {
    json k = json::array();
    for (int e : lg.ktuple()) k.push_back(e);
    json vertices = json::array();
    for (const std::string& v : lg.graph().vertex_labels()) {
        auto [base, layer] = parse_layered(v);
        vertices.push_back(json::array({base, layer}));
    }
    json edges = json::array();
    for (int e = 0; e < lg.graph().edge_count(); ++e) {
        auto [a, b] = lg.graph().edge_labels(e);
        edges.push_back(json::array({a, b}));
    }
    return json{{"base", graph_to_json(lg.base())},
                {"k", std::move(k)},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)}};
}

LayeredGraph layered_from_json(const nlohmann::json& j) {
    expect(j.is_object(), "layered", "expected an object");
    expect(j.contains("base"), "layered", "missing \"base\"");
    expect(j.contains("k"), "layered", "missing \"k\"");
    LayeredGraph lg = build_gkt(graph_from_json(j["base"]), int_array(j["k"], "layered.k"));
    // The materialized part, when present, must agree with the rebuild.
    if (j.contains("vertices") || j.contains("edges")) {
        json expected = layered_to_json(lg);
        expect(!j.contains("vertices") || j["vertices"] == expected["vertices"], "layered.vertices",
               "inconsistent with base and k");
        expect(!j.contains("edges") || j["edges"] == expected["edges"], "layered.edges",
               "inconsistent with base and k");
    }
    return lg;
}

nlohmann::json ideal_to_json(const MonomialIdeal& i) {
    json vars = json::array();
    for (const std::string& v : i.vars()) vars.push_back(v);
    json gens = json::array();
    for (const Monomial& g : i.generators()) {
        json m = json::object();
        for (const auto& [v, e] : g) m[v] = e;
        gens.push_back(std::move(m));
    }
    return json{{"vars", std::move(vars)}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    expect(j.is_object(), "ideal", "expected an object");
    expect(j.contains("vars"), "ideal", "missing \"vars\"");
    expect(j.contains("gens"), "ideal", "missing \"gens\"");
    expect(j["vars"].is_array(), "ideal.vars", "expected an array");
    expect(j["gens"].is_array(), "ideal.gens", "expected an array");

    std::vector<std::string> vars;
    vars.reserve(j["vars"].size());
    for (const json& v : j["vars"]) {
        expect(v.is_string(), "ideal.vars", "expected strings");
        vars.push_back(v.get<std::string>());
    }
    std::vector<Monomial> gens;
    gens.reserve(j["gens"].size());
    for (const json& g : j["gens"]) {
        expect(g.is_object(), "ideal.gens", "expected exponent objects");
        Monomial m;
        for (const auto& [v, e] : g.items()) {
            expect(e.is_number_integer(), "ideal.gens", "expected integer exponents");
            m[v] = e.get<int>();
        }
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(std::move(vars), gens);
}

nlohmann::json certificate_to_json(const VDCertificate& cert) {
    if (cert.edgeless) return json("edgeless");
    json del = cert.del ? certificate_to_json(*cert.del) : json();
    json link = cert.link ? certificate_to_json(*cert.link) : json();
    return json{{"vertex", cert.vertex}, {"del", std::move(del)}, {"link", std::move(link)}};
}

std::shared_ptr<const VDCertificate> certificate_from_json(const nlohmann::json& j) {
    auto node = std::make_shared<VDCertificate>();
    if (j.is_string() && j.get<std::string>() == "edgeless") return node;
    expect(j.is_object(), "certificate", "expected \"edgeless\" or an object");
    expect(j.contains("vertex") && j["vertex"].is_string(), "certificate",
           "missing string \"vertex\"");
    expect(j.contains("del") && j.contains("link"), "certificate", "missing \"del\" or \"link\"");
    node->edgeless = false;
    node->vertex = j["vertex"].get<std::string>();
    node->del = certificate_from_json(j["del"]);
    node->link = certificate_from_json(j["link"]);
    return node;
}

nlohmann::json refutation_to_json(const std::vector<VDRefutationEntry>& refutation) {
    json out = json::array();
    for (const VDRefutationEntry& r : refutation) {
        json witness = json::array();
        for (const std::string& w : r.witness) witness.push_back(w);
        out.push_back(
            json{{"vertex", r.vertex}, {"failure", r.failure}, {"witness", std::move(witness)}});
    }
    return out;
}

std::vector<VDRefutationEntry> refutation_from_json(const nlohmann::json& j) {
    expect(j.is_array(), "refutation", "expected an array");
    std::vector<VDRefutationEntry> out;
    out.reserve(j.size());
    for (const json& r : j) {
        expect(r.is_object() && r.contains("vertex") && r.contains("failure"), "refutation",
               "expected {vertex, failure, witness} entries");
        VDRefutationEntry entry;
        expect(r["vertex"].is_string() && r["failure"].is_string(), "refutation",
               "vertex and failure must be strings");
        entry.vertex = r["vertex"].get<std::string>();
        entry.failure = r["failure"].get<std::string>();
        expect(entry.failure == "not-shedding" || entry.failure == "del-branch" ||
                   entry.failure == "link-branch",
               "refutation", "unknown failure kind '" + entry.failure + "'");
        if (r.contains("witness")) {
            expect(r["witness"].is_array(), "refutation.witness", "expected an array");
            for (const json& w : r["witness"]) {
                expect(w.is_string(), "refutation.witness", "expected strings");
                entry.witness.push_back(w.get<std::string>());
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

nlohmann::json betti_to_json(const BettiTable& t) {
    json rows = json::array();
    for (const auto& [ij, value] : t.beta)
        rows.push_back(json::array({ij.first, ij.second, value}));
    return json{{"beta", std::move(rows)}};
}

BettiTable betti_from_json(const nlohmann::json& j) {
    expect(j.is_object() && j.contains("beta"), "betti", "missing \"beta\"");
    expect(j["beta"].is_array(), "betti.beta", "expected an array");
    BettiTable t;
    for (const json& row : j["beta"]) {
        expect(row.is_array() && row.size() == 3, "betti.beta", "expected [i, j, value] rows");
        expect(row[0].is_number_integer() && row[1].is_number_integer() &&
                   row[2].is_number_integer(),
               "betti.beta", "expected integer rows");
        expect(row[2].get<long long>() >= 0, "betti.beta", "negative multiplicity");
        t.beta[{row[0].get<int>(), row[1].get<int>()}] = row[2].get<long long>();
    }
    return t;
}

std::string betti_triangle(const BettiTable& t) {
    if (t.beta.empty()) return "(empty)\n";
    int imax = 0, dmin = 0, dmax = 0;
    bool first = true;
    for (const auto& [ij, value] : t.beta) {
        if (value == 0) continue;
        int d = ij.second - ij.first;
        imax = std::max(imax, ij.first);
        dmin = first ? d : std::min(dmin, d);
        dmax = first ? d : std::max(dmax, d);
        first = false;
    }

    // Cells as strings: row 0 is the column header, row 1 the totals, then
    // one row per degree shift d; dots mark zeros.
    std::vector<std::string> labels = {"", "total:"};
    std::vector<std::vector<std::string>> cells(2 + dmax - dmin + 1,
                                                std::vector<std::string>(imax + 1));
    for (int i = 0; i <= imax; ++i) {
        long long total = 0;
        for (int d = dmin; d <= dmax; ++d) total += t.at(i, i + d);
        cells[0][i] = std::to_string(i);
        cells[1][i] = std::to_string(total);
    }
    for (int d = dmin; d <= dmax; ++d) {
        labels.push_back(std::to_string(d) + ":");
        for (int i = 0; i <= imax; ++i) {
            long long v = t.at(i, i + d);
            cells[2 + d - dmin][i] = v == 0 ? "." : std::to_string(v);
        }
    }

    size_t label_width = 0;
    for (const std::string& l : labels) label_width = std::max(label_width, l.size());
    std::vector<size_t> width(imax + 1, 0);
    for (const auto& row : cells)
        for (int i = 0; i <= imax; ++i) width[i] = std::max(width[i], row[i].size());

    std::ostringstream out;
    for (size_t r = 0; r < cells.size(); ++r) {
        out << std::string(label_width - labels[r].size(), ' ') << labels[r];
        for (int i = 0; i <= imax; ++i)
            out << ' ' << std::string(width[i] - cells[r][i].size(), ' ') << cells[r][i];
        out << '\n';
    }
    return out.str();
}

namespace {

void certificate_lines(const VDCertificate& cert, int depth, std::ostringstream& out) {
    if (cert.edgeless) {
        out << "edgeless\n";
        return;
    }
    out << "shed " << cert.vertex << '\n';
    std::string pad(2 * (depth + 1), ' ');
    out << pad << "del: ";
    certificate_lines(*cert.del, depth + 1, out);
    out << pad << "link: ";
    certificate_lines(*cert.link, depth + 1, out);
}

}  // namespace

std::string certificate_text(const VDCertificate& cert) {
    std::ostringstream out;
    certificate_lines(cert, 0, out);
    return out.str();
}

}  // namespace vcover
