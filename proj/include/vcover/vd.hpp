#pragma once

/**
 * Vertex decomposability of independence complexes, phrased directly on
 * graphs. A graph is accepted when it is edgeless, or when some shedding
 * vertex x has both branches accepted: deletion G - {x} and link G - N[x].
 * Acceptances carry a replayable certificate, rejections an exhaustive
 * per-vertex refutation.
 */

#include <memory>
#include <string>
#include <vector>

#include "vcover/graph.hpp"

namespace vcover {

/// Result of the shedding-vertex test; `witness` is a violating independent
/// set of G - N[x] when the test fails.
struct SheddingCheck {
    bool shedding = false;
    std::vector<std::string> witness;
};

/**
 * Shedding test for x: every independent set C of G - N[x] must extend by
 * some y in N(x) to an independent set of G - {x}. It suffices to test the
 * maximal independent sets, since a violation grows to a maximal violation.
 */
SheddingCheck is_shedding_vertex(const Graph& g, const std::string& x);

/// Sufficient criterion: some y != x has N[y] contained in N[x]. Implies
/// shedding; cheap, not complete.
bool dominated_shedding(const Graph& g, const std::string& x);

/// Certificate tree: a leaf asserts the remaining graph is edgeless; an
/// inner node names a shedding vertex and carries both branch certificates.
struct VDCertificate {
    bool edgeless = true;
    std::string vertex;
    std::shared_ptr<const VDCertificate> del;
    std::shared_ptr<const VDCertificate> link;
};

/// One refuted vertex: `failure` is "not-shedding" (with the violating set
/// as witness), "del-branch", or "link-branch".
struct VDRefutationEntry {
    std::string vertex;
    std::string failure;
    std::vector<std::string> witness;
};

struct VDResult {
    bool decomposable = false;
    std::shared_ptr<const VDCertificate> certificate;
    std::vector<VDRefutationEntry> refutation;
};

/**
 * Exhaustive memoized decision procedure. Candidates are tried dominated
 * vertices first, then by decreasing degree; subproblems are cached by
 * canonical form. Rejections list every vertex with its failing condition.
 * Throws std::length_error beyond 24 vertices.
 */
VDResult is_vertex_decomposable(const Graph& g);

/// Re-derive acceptance from a certificate alone: no search, just shedding
/// checks down the tree and edgeless checks at the leaves.
bool replay_certificate(const Graph& g, const VDCertificate& cert);

/// Check a refutation: the graph has an edge, every vertex appears exactly
/// once, and each claimed failure re-validates (a "not-shedding" witness by
/// definition, branch failures by re-deciding the branch).
bool validate_refutation(const Graph& g, const std::vector<VDRefutationEntry>& refutation);

/**
 * Certificate for the layered graph of a forest without search: shed the
 * layer-1 vertex of a leaf's support, recurse on the collapsed tuple for the
 * deletion branch and on the link decomposition for the link branch.
 * Throws std::invalid_argument when `base` has a cycle.
 */
std::shared_ptr<const VDCertificate> guided_vd_tree_gadget(const Graph& base,
                                                           const std::vector<int>& ktuple);

/**
 * Certificate for the layered graph of a unicyclic base at uniform strength
 * k: the cycle must avoid lengths 3 and 5 and carry a whisker, whose support
 * layers are shed in order; every branch reduces to a forest gadget.
 * Throws std::invalid_argument otherwise.
 */
std::shared_ptr<const VDCertificate> guided_vd_unicyclic(const Graph& g, int k);

}  // namespace vcover
