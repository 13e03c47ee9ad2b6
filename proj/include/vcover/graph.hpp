#ifndef VCOVER_GRAPH_HPP
#define VCOVER_GRAPH_HPP

/**
 * Finite simple undirected graphs with opaque string labels.
 *
 * Vertex order and edge order are part of a graph's identity: edge i of the
 * input stays edge i forever, so weight tuples indexed by edge position keep
 * their meaning across operations that preserve surviving edges.
 */

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vcover {

class Graph {
public:
    Graph() = default;

    /**
     * Build a graph from a vertex list and an edge list.
     *
     * Throws std::invalid_argument on duplicate labels, unknown endpoints,
     * self-loops, or duplicate edges (as unordered pairs).
     */
    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }

    /// Edges as index pairs, in input order. Each pair is stored (low, high).
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<std::string, std::string> edge_labels(int e) const;

    bool has_vertex(const std::string& label) const;
    /// Index of a label; throws std::invalid_argument if absent.
    int index_of(const std::string& label) const;

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool adjacent(int u, int v) const;

    /// Open or closed neighborhood of a vertex, as labels in index order.
    std::vector<std::string> neighborhood(const std::string& x, bool closed) const;

    /// Induced subgraph on the complement of `drop`; label order and the
    /// relative order of surviving edges are preserved.
    Graph delete_vertices(const std::vector<std::string>& drop) const;

    /// Induced subgraph on the vertices of positive degree.
    Graph strip_isolated() const;

    /// Append one fresh vertex adjacent only to `x` (a pendant edge).
    /// The new label is "w1", "w2", ... first one unused.
    Graph add_whisker(const std::string& x) const;

    /// Neighborhood bitmasks; only available for graphs on <= 32 vertices.
    const std::vector<uint32_t>& adjacency_masks() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::string, int> index_;
    std::vector<uint32_t> masks_;  // empty when vertex_count() > 32
};

struct GraphClass {
    enum class Kind { Forest, Tree, Unicyclic, Other };
    Kind kind = Kind::Forest;
    bool connected = false;
    bool bipartite = false;
    int cycle_length = 0;  // girth of the unique cycle when Kind::Unicyclic
};

/// Classify by cycle structure (tree / forest / unicyclic / other) and record
/// connectivity and bipartiteness (BFS 2-coloring).
GraphClass classify(const Graph& g);

/// Path x1 - x2 - ... - xn.
Graph make_path(int n);
/// Cycle x1 - x2 - ... - xn - x1; requires n >= 3.
Graph make_cycle(int n);
/// Star with center c and leaves x1..xk.
Graph make_star(int leaves);

}  // namespace vcover

#endif
