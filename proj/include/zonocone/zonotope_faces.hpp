#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "zonocone/graph.hpp"
#include "zonocone/orientations.hpp"

namespace zonocone {

/// Label of an Edge (1-face) of the graphical zonotope: a graph edge plus an
/// acyclic orientation of the graph contracted at that edge.
struct EdgeLabel {
    int edge;         // index into Graph::edges
    OrientBits rho;   // orientation of contract(g, {edge})

    auto operator<=>(const EdgeLabel&) const = default;
};

/// Rank-2 flat of the graphic matroid: a triangle, or a pair of edges not
/// both contained in any triangle.
struct Flat2 {
    bool is_triangle;
    std::array<int, 3> tri;    // vertex triple, valid when is_triangle
    std::array<int, 2> pair;   // edge indices, valid otherwise
};

/// Label of a 2-face of the zonotope: a rank-2 flat plus an acyclic
/// orientation of the contraction of its vertex blocks. Triangle flats give
/// hexagons, pair flats parallelograms.
struct TwoFaceLabel {
    Flat2 flat;
    OrientBits rho;
};

/// The six Edges of a hexagonal face, indexed by the triangle's edges in
/// lexicographic order. toward[i] has the contracted third edge oriented
/// toward (the block of) edge i, away[i] the reverse.
struct HexSides {
    std::array<int, 3> tri_edges;   // graph edge indices of the triangle
    std::array<EdgeLabel, 3> toward;
    std::array<EdgeLabel, 3> away;
};

/// Two pairs of opposite Edges of a parallelogram face, one pair per flat edge.
struct ParallelogramSides {
    std::array<std::array<EdgeLabel, 2>, 2> pairs;
};

/// Canonical Edge-label coordinate system of Z_G: per-edge contractions,
/// orientation lists, and the global label order (by edge, then by
/// orientation bit pattern). LengthVectors are indexed by this order.
class LabelSpace {
  public:
    explicit LabelSpace(Graph g, std::uint64_t max_patterns = std::uint64_t{1} << 24);

    const Graph& graph() const { return g_; }
    const std::vector<EdgeLabel>& labels() const { return labels_; }
    int label_count() const { return static_cast<int>(labels_.size()); }

    const Contraction& edge_contraction(int edge) const { return contractions_[edge]; }
    const std::vector<OrientBits>& edge_orientations(int edge) const { return orients_[edge]; }

    /// Position of (edge, rho) in the canonical label order; throws if absent.
    int index_of(int edge, OrientBits rho) const;
    int index_of(const EdgeLabel& l) const { return index_of(l.edge, l.rho); }

    const std::vector<std::array<int, 3>>& triangle_list() const { return triangles_; }

  private:
    Graph g_;
    std::vector<Contraction> contractions_;
    std::vector<std::vector<OrientBits>> orients_;
    std::vector<int> offset_;
    std::vector<EdgeLabel> labels_;
    std::vector<std::array<int, 3>> triangles_;
};

std::vector<EdgeLabel> zonotope_edges(const LabelSpace& ls);

/// The two acyclic orientations of g extending the label by orienting its
/// edge both ways; first entry orients (i, j), i < j, as i -> j.
std::pair<OrientBits, OrientBits> edge_endpoints(const LabelSpace& ls, const EdgeLabel& l);

std::vector<Flat2> rank2_flats(const Graph& g);

/// Vertex blocks of a flat: connected components of its edge set.
VertexPartition flat_blocks(const Graph& g, const Flat2& f);

std::vector<TwoFaceLabel> two_faces(const LabelSpace& ls);

ParallelogramSides parallelogram_sides(const LabelSpace& ls, const TwoFaceLabel& f);
HexSides hexagon_sides(const LabelSpace& ls, const TwoFaceLabel& f);

}  // namespace zonocone
