#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tripack/geometry.hpp"

namespace tripack {

/// An ordered list of points bound to a triangular domain. Every point must
/// lie inside the closed domain (tolerance 1e-12 * diameter). For sequence
/// generators the order is meaningful: prefixes are themselves valid outputs.
class PointSet {
public:
    PointSet(std::vector<Point> points, Triangle domain);

    const std::vector<Point>& points() const { return points_; }
    const Triangle& domain() const { return domain_; }
    size_t size() const { return points_.size(); }
    const Point& operator[](size_t i) const { return points_[i]; }

    PointSet prefix(size_t n) const;

    /// Appends a point, revalidating containment.
    void push_back(Point p);

private:
    std::vector<Point> points_;
    Triangle domain_;
};

/// True when every vertex of the domain coincides (within 1e-12 * diameter)
/// with some point of the set.
bool contains_domain_vertices(const PointSet& ps);

} // namespace tripack
