#include "tripack/point_set.hpp"

namespace tripack {

PointSet::PointSet(std::vector<Point> points, Triangle domain)
    : points_(std::move(points)), domain_(domain) {
    for (const Point& p : points_) {
        if (!domain_.contains(p)) {
            throw SiteOutsideDomain("point lies outside the closed domain triangle");
        }
    }
}

PointSet PointSet::prefix(size_t n) const {
    if (n > points_.size()) throw InvalidCount("prefix longer than the point set");
    return PointSet(std::vector<Point>(points_.begin(), points_.begin() + n), domain_);
}

void PointSet::push_back(Point p) {
    if (!domain_.contains(p)) {
        throw SiteOutsideDomain("point lies outside the closed domain triangle");
    }
    points_.push_back(p);
}

bool contains_domain_vertices(const PointSet& ps) {
    const double tol = 1e-12 * ps.domain().diameter();
    for (const Point& v : ps.domain().vertices()) {
        bool found = false;
        for (const Point& p : ps.points()) {
            if (distance(p, v) <= tol) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace tripack
