#pragma once

#include <json.hpp>

#include "zonocone/defcone.hpp"

namespace zonocone {

/// A deformed polytope Q_l, reconstructed by walking the flip graph from a
/// base acyclic orientation. positions[i] belongs to orientations[i];
/// vertex_set is the deduplicated, sorted point set.
struct DeformedPolytope {
    std::vector<OrientBits> orientations;
    std::vector<QVec> positions;
    std::vector<QVec> vertex_set;
};

/// True iff l is coordinatewise nonnegative and satisfies every polygonal
/// face equation exactly. Throws std::invalid_argument on index mismatch.
bool is_deformation(const DefCone& dc, const LengthVector& l);

/// Walk the flip graph, moving by l[(e,rho)] times the primitive edge
/// direction across each flip. Throws std::invalid_argument when the walk is
/// not cycle-consistent (l is not a deformation). base selects the start
/// orientation by enumeration index; changing it only translates the result.
DeformedPolytope build_polytope(const LabelSpace& ls, const LengthVector& l, int base = 0);

/// Affine dimension of the vertex set.
int polytope_dim(const DeformedPolytope& p);

enum class SummandKind { segment, plus_triangle, minus_triangle, zonotope };

/// Edge-length vectors of the named summands: indicator of one graph edge's
/// labels (segment), indicator of the toward (plus) or away (minus) labels
/// of a triangle, or all-ones (the zonotope itself).
/// arg is an edge index for segment, a triangle index for the triangles.
LengthVector summand_lengths(const LabelSpace& ls, SummandKind kind, int arg = -1);

/// Whether the label's contracted third-triangle-edge points toward the
/// label's own (contracted) edge. Defined for labels whose edge lies in the
/// triangle; this is the sign convention behind steps and decompositions.
bool label_is_toward(const LabelSpace& ls, const EdgeLabel& l, int tri_index);

nlohmann::ordered_json export_polytope_json(const DeformedPolytope& p);

}  // namespace zonocone
