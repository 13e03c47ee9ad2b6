#pragma once

/**
 * Verification suites: each one sweeps a family of graphs, re-checks a
 * claimed property instance by instance, and returns a structured report.
 * Runs are deterministic for a fixed seed; wall time is recorded but ignored
 * by equality, so two runs of the same suite compare equal.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "vcover/graph.hpp"

namespace vcover {

/// One checked instance. `evidence` holds a machine-readable reproducer on
/// failure (input graph, tuple, failing stage) and stays null on success
/// except where a compact witness is worth keeping.
struct SuiteInstance {
    std::string name;
    bool passed = true;
    std::string detail;
    nlohmann::json evidence;

    bool operator==(const SuiteInstance& o) const {
        return name == o.name && passed == o.passed && detail == o.detail &&
               evidence == o.evidence;
    }
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteInstance> instances;
    double wall_ms = 0.0;

    bool passed() const;
    int failure_count() const;
    /// Wall time is excluded: reruns of a deterministic suite compare equal.
    bool operator==(const SuiteReport& o) const {
        return suite == o.suite && instances == o.instances;
    }
};

/**
 * All trees on up to n_max vertices: every layered graph G(k) is vertex
 * decomposable. Each instance builds the guided certificate and replays it;
 * tuples are the uniform ones 0..k_max plus `random_tuples` seeded draws
 * with entries in 0..k_max. On small instances (n <= 6, entries <= 2) the
 * exhaustive decision procedure must agree. Budget: n_max <= 7, k_max <= 3.
 */
SuiteReport suite_tree_gadgets(int n_max, int k_max, int random_tuples, uint64_t seed);

/**
 * All trees on up to n_max vertices: every power J(G)^k up to k_max admits
 * a verified linear-quotients order and is componentwise linear. Budget:
 * n_max <= 6, k_max <= 2.
 */
SuiteReport suite_tree_cover_powers(int n_max, int k_max);

/**
 * Whiskered even cycles: for each cycle length in `cycles` (4 or 6 only),
 * each whisker position, and each uniform strength 1..k_max, the layered
 * graph is vertex decomposable by both the guided construction and the
 * exhaustive procedure. Budget: k_max <= 2.
 */
SuiteReport suite_unicyclic_gadgets(const std::vector<int>& cycles, int k_max);

/**
 * Regularity of powers: trees on up to n_max vertices have
 * regularity(J^s) = s * max generator degree for s = 1..s_max, and the
 * whiskered 4- and 6-cycles satisfy the same for symbolic powers together
 * with componentwise linearity. Budget: n_max <= 6, s_max <= 2.
 */
SuiteReport suite_symbolic_regularity(int n_max, int s_max);

/**
 * Boundary cases where layering destroys vertex decomposability: three fixed
 * graphs whose bases are vertex decomposable while a specific layered graph
 * is not. The refutations are validated; for the whiskered square the
 * layered graph's shedding vertices and the shape left after shedding are
 * pinned exactly.
 */
SuiteReport suite_counterexamples();

/**
 * Structural identities on tree gadgets, over every tuple with entries
 * 0..k_max (seeded sampling beyond 4096 tuples per tree): leaf collapse
 * matches deletion, the link decomposition's bijection is edge-preserving,
 * the layered graph's cover ideal equals the polarized symbolic power, and
 * symbolic powers of bipartite cover ideals are ordinary powers for
 * k <= 3. Budget: n_max <= 6, k_max <= 2.
 */
SuiteReport suite_structural_identities(int n_max, int k_max, uint64_t seed);

/// {"suite": ..., "wall_ms": ..., "instances": [{name, passed, detail,
/// evidence}, ...]}. Lossless, including wall time.
nlohmann::json report_to_json(const SuiteReport& r);
SuiteReport report_from_json(const nlohmann::json& j);

}  // namespace vcover
