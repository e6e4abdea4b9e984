#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace zonocone {

/// Simple undirected graph on vertices 0..n-1.
/// Edges are stored as pairs (i, j) with i < j, sorted lexicographically;
/// construction deduplicates and rejects loops and out-of-range endpoints.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int i, int j) const { return edge_index(i, j) >= 0; }
    /// Index of {i, j} in the canonical edge order, or -1.
    int edge_index(int i, int j) const;

    bool operator==(const Graph&) const = default;
};

/// Disjoint nonempty vertex subsets; completion by singletons is implicit.
struct VertexPartition {
    std::vector<std::vector<int>> blocks;
};

/// Result of contracting a partition: the contracted simple graph plus the
/// map from original vertices to contracted ones. Blocks of the completed
/// partition are numbered by ascending minimum element.
struct Contraction {
    Graph graph;
    std::vector<int> block_of;
};

std::vector<std::array<int, 3>> triangles(const Graph& g);
long clique_count(const Graph& g);
bool is_k4_free(const Graph& g);
bool is_triangle_free(const Graph& g);

Contraction contract(const Graph& g, const VertexPartition& p);
Contraction contract_edge(const Graph& g, int edge_idx);
Graph restrict_to(const Graph& g, const VertexPartition& p);
std::vector<std::vector<int>> connected_components(const Graph& g);

// named generators
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph bi_triangle_graph();
Graph cyc3_graph(int n);   // graph of the 3-dimensional cyclic polytope, n >= 4
Graph wedge_k4_graph(int n);  // n-3 copies of K4 glued on triangle {0,1,2}, n >= 4

/// Text format: first line `n`, then one `i j` line per edge; `#` comments.
Graph parse_graph_text(std::istream& in);
std::string graph_to_text(const Graph& g);

/// Generator strings: "complete:4", "path:3", "cycle:5", "bitriangle",
/// "cyc3:6", "wedge_k4:5". Throws std::invalid_argument otherwise.
Graph graph_from_name(const std::string& name);

}  // namespace zonocone
