#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zonocone/graph.hpp"

namespace zonocone {

/// An orientation is one bit per edge in canonical edge order:
/// bit k = 0 orients edge (i, j), i < j, as i -> j; bit k = 1 as j -> i.
/// Acyclic orientations label the vertices of the graphical zonotope.
using OrientBits = std::uint64_t;

bool is_acyclic(const Graph& g, OrientBits o);

/// All acyclic orientations in ascending bit-pattern order.
/// Refuses when 2^|E| exceeds max_patterns (default 2^24).
std::vector<OrientBits> enumerate_acyclic(const Graph& g,
                                          std::uint64_t max_patterns = std::uint64_t{1} << 24);

/// Orientations reachable by reversing exactly one edge, with the edge index.
std::vector<std::pair<int, OrientBits>> flip_neighbors(const Graph& g, OrientBits o);

/// In-degree vector: the vertex of the graphical zonotope selected by any
/// direction in this orientation's normal cone. Coordinates sum to |E|.
std::vector<long> vertex_point(const Graph& g, OrientBits o);

/// Orientation induced on a contraction of g. Empty if two source edges
/// crossing the same contracted pair disagree, or if the result has a
/// directed cycle.
std::optional<OrientBits> induce_orientation(const Graph& g, OrientBits o, const Contraction& c);

}  // namespace zonocone
