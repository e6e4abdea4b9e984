#pragma once

#include <optional>

#include <json.hpp>

#include "zonocone/deformation.hpp"

namespace zonocone {

/// Minkowski decomposition of a deformation of Z_G for K4-free G:
/// omega_edge[e] >= 0 coefficients of segments, omega_tri[t] signed
/// coefficients of triangles (sign selects the triangle or its reflection).
struct Decomposition {
    std::vector<Rat> omega_edge;   // by graph edge index
    std::vector<Rat> omega_tri;    // by triangle index
};

/// The common absolute difference of opposite-side lengths over every
/// hexagonal face of triangle t. Throws std::invalid_argument when g has a
/// K4 or l is not a deformation; std::logic_error if the value is not
/// constant across hexagons (impossible for valid input).
Rat step_delta(const DefCone& dc, const LengthVector& l, int tri_index);

Decomposition decompose(const DefCone& dc, const LengthVector& l);

/// sign(omega_tri[t]) per triangle; 0 marks a point on the wall between the
/// two cells that flip that triangle's sign.
std::vector<int> locate_simplex(const DefCone& dc, const LengthVector& l);

/// Decompose within the prescribed cell: eps in {-1,+1}^T fixes which
/// triangle reflection may appear. Empty when l does not lie in that cell.
std::optional<Decomposition> decompose_with_pattern(const DefCone& dc, const LengthVector& l,
                                                    const std::vector<int>& eps);

/// Exact check of l[(e,rho)] = omega(e) + sum of agreeing |omega(t)|.
bool reconstruction_holds(const DefCone& dc, const LengthVector& l, const Decomposition& d);

struct TriangulationReport {
    bool ok = false;
    bool rays_match = false;
    long ray_count = 0;
    long expected_ray_count = 0;   // |E| + 2|T|
    int dim = 0;
    long expected_dim = 0;         // |E| + |T|
};

/// Check that the extreme rays of the deformation cone are exactly the
/// segment and triangle summands, with the predicted count and dimension.
TriangulationReport verify_triangulation(const Graph& g, const DDOptions& opt = {});

nlohmann::ordered_json decomposition_json(const DefCone& dc, const LengthVector& l,
                                          const Decomposition& d);

}  // namespace zonocone
