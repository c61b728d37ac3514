#pragma once

#include <vector>

#include "tripack/geometry.hpp"
#include "tripack/point_set.hpp"

namespace tripack {

enum class CandidateKind {
    interior_voronoi_vertex,
    boundary_intersection,
    triangle_vertex,
};

/// A finite candidate for the center of the largest empty disk: an interior
/// Voronoi vertex, an intersection of a bisector of adjacent sites with the
/// domain boundary, or a vertex of the domain triangle.
struct CandidatePoint {
    Point location;
    double empty_radius = 0.0;       // distance to the nearest site
    CandidateKind kind = CandidateKind::interior_voronoi_vertex;
    std::vector<int> incident_sites; // sites equidistant at this point
};

struct Segment {
    Point a;
    Point b;
};

struct VoronoiCell {
    int site = -1;
    std::vector<Point> polygon;  // CCW, clipped to the domain triangle
    double area = 0.0;
};

/// Voronoi diagram of a point set clipped to its triangular domain. Built from
/// the Delaunay triangulation of the sites: cells come from half-plane
/// clipping against Delaunay neighbors, interior vertices from circumcenters
/// of Delaunay triangles, and boundary intersections from the crossings of
/// neighbor-pair bisectors with the triangle sides. Voronoi vertices closer
/// together than 1e-10 * diameter are merged into a single entry carrying the
/// union of their incident sites.
struct BoundedVoronoiDiagram {
    PointSet sites;
    std::vector<VoronoiCell> cells;
    std::vector<CandidatePoint> interior_vertices;
    std::vector<CandidatePoint> boundary_intersections;
    std::vector<Segment> skeleton_edges;  // Voronoi edges clipped to the triangle
};

/// Builds the clipped diagram. Requires at least one site, all sites inside
/// the closed domain, pairwise distinct (min distance > 1e-12 * diameter).
BoundedVoronoiDiagram build_bounded_voronoi(const PointSet& sites);

/// Interior vertices plus boundary intersections; the three triangle vertices
/// are appended (with their distance to the nearest site) when the flag is
/// set. Needed when the sites do not include all of the triangle's vertices.
std::vector<CandidatePoint> candidate_set(const BoundedVoronoiDiagram& d,
                                          bool include_triangle_vertices);

struct CoveringRadius {
    double h = 0.0;
    Point argmax;
};

/// Exact covering radius: the maximum empty radius over the candidate set,
/// with triangle vertices included exactly when the sites do not contain all
/// three of them. Ties within 1e-10 relative are broken toward the
/// lexicographically smallest (x, then y) location.
CoveringRadius covering_radius_exact(const PointSet& sites);

/// Brute-force covering radius over a barycentric grid with
/// (resolution+1)(resolution+2)/2 points. Always a lower bound on the exact
/// value, within (longest side)/resolution of it.
double covering_radius_grid(const PointSet& sites, int resolution);

/// All candidate locations whose empty radius is within 1e-10 relative of the
/// maximum, sorted lexicographically.
std::vector<Point> covering_maximizers(const PointSet& sites);

} // namespace tripack
