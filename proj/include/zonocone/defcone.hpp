#pragma once

#include <json.hpp>

#include "zonocone/cone.hpp"
#include "zonocone/zonotope_faces.hpp"

namespace zonocone {

/// Exact edge-length vector, indexed by the canonical EdgeLabel order of the
/// graph's LabelSpace.
struct LengthVector {
    QVec values;
};

LengthVector length_vector_from_ray(const IVec& ray);

/// The edge-length deformation cone of Z_G: nonnegative label coordinates
/// subject to the polygonal face equations (opposite sides equal per
/// parallelogram, equal step differences per hexagon).
struct DefCone {
    LabelSpace labels;
    std::vector<TwoFaceLabel> faces;
    ConeH cone;
};

DefCone build_defcone(const Graph& g, std::uint64_t max_patterns = std::uint64_t{1} << 24);

struct FormulaReport {
    bool dim_ok = false;
    bool facets_ok = false;
    int dim = 0;
    long omega = 0;                 // clique count, the expected dimension
    int facets = 0;
    long facet_formula = 0;         // sum over edges of 2^(#triangles containing e)
};

/// Check dim = Omega(G) and the facet-count formula against the computed cone.
FormulaReport validate_formulas(const DefCone& dc, const RayList& rays);

RayList defcone_rays(const DefCone& dc, const DDOptions& opt = {});

struct TwoFaceCount {
    long lattice_count = 0;    // dim-2 entry of the f-vector
    long formula = 0;          // C(|E| + 2|T|, 2) - |T|
};

/// Number of 2-faces of the cone for a K4-free graph, with the closed-form
/// value for comparison. Throws std::invalid_argument if g has a K4.
TwoFaceCount two_face_count(const DefCone& dc, const RayList& rays, int max_rays = 64);

/// Interop format: {graph, labels: [[[i,j], bits]...], equalities: [[...]]}.
nlohmann::ordered_json export_cone_json(const DefCone& dc);

}  // namespace zonocone
