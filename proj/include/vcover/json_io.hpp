#pragma once

/**
 * JSON encodings of the toolkit's types, plus plain-text renderings for
 * terminal output. All decoders validate shape and throw
 * std::invalid_argument with a field path on malformed input.
 */

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "vcover/betti.hpp"
#include "vcover/gadget.hpp"
#include "vcover/graph.hpp"
#include "vcover/ideal.hpp"
#include "vcover/vd.hpp"

namespace vcover {

/// {"vertices": ["x1", ...], "edges": [["x1","x2"], ...]}, edges in input
/// order. The decoder also accepts ["base", layer] vertex entries, so a
/// layered graph's materialized part reads back as a plain graph.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Base graph and tuple plus the materialized layered graph:
/// {"base": {...}, "k": [...], "vertices": [["x1",1], ...], "edges": [...]}.
nlohmann::json layered_to_json(const LayeredGraph& lg);
LayeredGraph layered_from_json(const nlohmann::json& j);

/// {"vars": [...], "gens": [{"x1": 2, "x3": 1}, ...]}.
nlohmann::json ideal_to_json(const MonomialIdeal& i);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

/// Inner node {"vertex": ..., "del": ..., "link": ...}; leaves are the
/// string "edgeless".
nlohmann::json certificate_to_json(const VDCertificate& cert);
std::shared_ptr<const VDCertificate> certificate_from_json(const nlohmann::json& j);

/// Array of {"vertex": ..., "failure": ..., "witness": [...]}.
nlohmann::json refutation_to_json(const std::vector<VDRefutationEntry>& refutation);
std::vector<VDRefutationEntry> refutation_from_json(const nlohmann::json& j);

/// {"beta": [[i, j, value], ...]} sorted by (i, j).
nlohmann::json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);

/// Betti table as the usual triangle: columns i, rows j - i, a total row,
/// dots for zeros.
std::string betti_triangle(const BettiTable& t);

/// Certificate as an indented shedding tree, one branch per line.
std::string certificate_text(const VDCertificate& cert);

}  // namespace vcover
