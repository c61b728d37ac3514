#pragma once

#include <array>
#include <vector>

#include "tripack/geometry.hpp"

namespace tripack {

/// Incremental (cavity-based) Delaunay triangulation of a planar point set.
///
/// Points are inserted one by one into a triangulation seeded with a far
/// enclosing triangle; point location walks from the most recently created
/// triangle. Predicates are evaluated in double precision with magnitude
/// scaled error filters, so exactly cocircular and exactly collinear
/// configurations are resolved deterministically (on-circle counts as
/// outside). Input points must be pairwise distinct.
class Delaunay {
public:
    explicit Delaunay(const std::vector<Point>& points);

    int site_count() const { return static_cast<int>(n_); }

    /// Vertex index triples of triangles whose corners are all input sites,
    /// in counter-clockwise order.
    std::vector<std::array<int, 3>> site_triangles() const;

    /// Adjacency lists among input sites. Edges incident to the enclosing
    /// triangle's corners are skipped, but site-site edges of such triangles
    /// are kept.
    std::vector<std::vector<int>> site_neighbors() const;

private:
    struct Tri {
        std::array<int, 3> v;    // vertices, CCW
        std::array<int, 3> nbr;  // nbr[k] faces the edge opposite v[k]; -1 if none
        bool alive = true;
    };

    int locate(Point p, int hint) const;
    void insert(int pi);
    bool in_circumcircle(const Tri& t, Point p) const;

    size_t n_ = 0;                 // number of real sites
    std::vector<Point> pts_;       // sites followed by 3 enclosing vertices
    std::vector<Tri> tris_;
    int last_created_ = -1;
    mutable std::vector<int> mark_;
    mutable int epoch_ = 0;
};

} // namespace tripack
