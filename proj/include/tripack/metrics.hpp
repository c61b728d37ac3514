#pragma once

#include <cstdint>
#include <optional>

#include "tripack/bounded_voronoi.hpp"
#include "tripack/point_set.hpp"

namespace tripack {

/// Separation radius q, covering radius h and mesh ratio h/q of a point set
/// over its triangular domain.
struct MeshStats {
    double separation = 0.0;
    double covering = 0.0;
    double ratio = 0.0;
    Point covering_argmax;
};

/// q, h and ratio for the three-vertex configuration, in closed form.
struct VertexConfigStats {
    double q = 0.0;
    double h = 0.0;
    double rho = 0.0;
};

/// Iteration bound after which the farthest-point sequence keeps its mesh
/// ratio at or below 2. `primary` is the floor of
/// (A + L q + pi q^2) / (pi q^2) with q half the shortest side; `edge_form`
/// is the equivalent expression written in side-length ratios, which drops a
/// factor pi from the area term and is therefore never smaller.
struct KBound {
    long primary = 0;
    long edge_form = 0;
};

/// Mesh-ratio bounds for the subtriangle-centroid sequence, derived from the
/// exact four-point values h = m_max/3 and q = min{m_min/6, c_min/4} under
/// the assumption that the minimal point pair keeps halving across
/// subdivision levels. The mesh ratio equals filled_level_rho exactly at
/// n = 4, and at every filled level n = 4^k on shapes where that assumption
/// holds (near-regular triangles, where the bound is attained exactly).
/// Strongly skewed triangles break the halving assumption: cross-block
/// centroid pairs undercut the within-block minimum and the measured mesh
/// ratio can exceed uniform_bound.
struct VdcBounds {
    double uniform_bound = 0.0;
    double filled_level_rho = 0.0;
};

struct LatticeContainmentReport {
    int trials = 0;
    int containment_violations = 0;
    int distance_violations = 0;
    double max_nearest_distance = 0.0;
    double distance_bound = 0.0;
};

/// Every closed-form bound for one triangle, plus the shape index.
struct TriangleBounds {
    double vertex_q = 0.0;
    double vertex_h = 0.0;
    double vertex_rho = 0.0;
    double corollary_bound = 0.0;  // 1 / sin(theta_min)
    long k_bound_primary = 0;
    long k_bound_edge_form = 0;
    double vdc_bound = 0.0;
    double vdc_filled_level_rho = 0.0;
    double kronecker_bound = 0.0;
    double iso_quotient = 0.0;
};

/// Half the minimum pairwise distance. Throws TooFewPoints when |p| < 2.
double separation_radius(const PointSet& p);

/// Combines the exact covering radius with the separation radius.
double mesh_ratio(const PointSet& p);
MeshStats mesh_stats(const PointSet& p);

/// Closed-form q, h, rho when the sites are exactly the triangle's vertices:
/// q = c/2 for shortest side c; h = a b^2 / (a^2 + b^2 - c^2) when the
/// triangle is obtuse and the circumradius otherwise.
VertexConfigStats vertex_config_stats(const Triangle& t);

KBound k_bound(const Triangle& t);
VdcBounds vdc_bounds(const Triangle& t);

/// (2 sqrt(2 + sqrt 2) + 3 sqrt 2 + 2) * kappa(M) for the reference-to-t
/// affine map M; a uniform mesh-ratio bound for the rotated-lattice point
/// sets at every size and rotation angle.
double kronecker_bound(const Triangle& t);

/// Randomized verification that every placement of a closed isosceles right
/// triangle with the given leg length (leg >= sqrt(2) + 1) contains an
/// integer lattice point, and that interior points are within
/// sqrt(2 + sqrt 2) + 1/sqrt 2 of a contained lattice point.
LatticeContainmentReport lattice_containment_check(double leg, int trials, uint64_t seed);

/// Smallest n in [3, n_max] for which the farthest-point sequence reaches a
/// mesh ratio of at most 2 + 1e-12, or nullopt when the horizon is too short.
std::optional<int> empirical_k(const Triangle& t, int n_max);

/// Minimum, over all interior Voronoi vertices, of the angle sines of the
/// triangle formed by the incident sites. Throws NoInteriorVertices when the
/// diagram has none.
double voronoi_angle_check(const PointSet& p);

TriangleBounds triangle_bounds(const Triangle& t);

} // namespace tripack
