#include "tripack/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace tripack {

double signed_area(Point a, Point b, Point c) {
    return 0.5 * cross(b - a, c - a);
}

SideLengths SideLengths::sorted_desc() const {
    std::array<double, 3> s{a, b, c};
    std::sort(s.begin(), s.end(), std::greater<double>());
    return {s[0], s[1], s[2]};
}

Triangle::Triangle(Point a, Point b, Point c) : v_{a, b, c} {
    const double la = distance(b, c);
    const double lb = distance(c, a);
    const double lc = distance(a, b);
    diameter_ = std::max(la, std::max(lb, lc));
    const double area2 = cross(b - a, c - a);
    if (!(std::abs(area2) > 2.0 * kDegeneracyScale * diameter_ * diameter_)) {
        throw DegenerateTriangle("triangle is degenerate (vertices nearly collinear)");
    }
    ccw_ = area2 > 0.0;
}

std::array<Point, 3> Triangle::ccw_vertices() const {
    if (ccw_) return v_;
    return {v_[0], v_[2], v_[1]};
}

bool Triangle::contains(Point p, double tol_scale) const {
    const auto v = ccw_vertices();
    const double tol = tol_scale * diameter_;
    for (int k = 0; k < 3; ++k) {
        const Point e = v[(k + 1) % 3] - v[k];
        const double len = norm(e);
        // signed distance to the edge line, negative outside
        if (cross(e, p - v[k]) < -tol * len) return false;
    }
    return true;
}

double signed_area(const Triangle& t) {
    return signed_area(t.a(), t.b(), t.c());
}

SideLengths side_lengths(const Triangle& t) {
    return {distance(t.b(), t.c()), distance(t.c(), t.a()), distance(t.a(), t.b())};
}

Medians medians(const Triangle& t) {
    return {distance(t.a(), 0.5 * (t.b() + t.c())),
            distance(t.b(), 0.5 * (t.c() + t.a())),
            distance(t.c(), 0.5 * (t.a() + t.b()))};
}

double perimeter(const Triangle& t) {
    const SideLengths s = side_lengths(t);
    return s.a + s.b + s.c;
}

Circle circumcircle(Point p, Point q, Point r) {
    const Point d0 = q - p;
    const Point d1 = r - p;
    const double a2 = cross(d0, d1);
    const double longest = std::max(norm(d0), std::max(norm(d1), distance(q, r)));
    if (!(std::abs(a2) > 2.0 * kDegeneracyScale * longest * longest)) {
        throw CollinearPoints("circumcircle of (nearly) collinear points");
    }
    const double d00 = dot(d0, d0);
    const double d11 = dot(d1, d1);
    const Point center{p.x + (d1.y * d00 - d0.y * d11) / (2.0 * a2),
                       p.y + (d0.x * d11 - d1.x * d00) / (2.0 * a2)};
    return {center, distance(center, p)};
}

double isoperimetric_quotient(const Triangle& t) {
    const double area = std::abs(signed_area(t));
    const double L = perimeter(t);
    return 12.0 * std::sqrt(3.0) * area / (L * L);
}

Triangle triangle_from_angles(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !(alpha + beta < M_PI)) {
        throw InvalidAngles("angles must be positive with alpha + beta < pi");
    }
    const double gamma = M_PI - alpha - beta;
    const double sa = std::sin(alpha);
    const double sb = std::sin(beta);
    const double sc = std::sin(gamma);
    const double s = sa + sb + sc;
    const double b = sb / s;  // |CA|
    const double c = sc / s;  // |AB|
    const Point a_vertex{0.0, 0.0};
    const Point b_vertex{c, 0.0};
    const Point c_vertex{b * std::cos(alpha), b * std::sin(alpha)};
    return Triangle(a_vertex, b_vertex, c_vertex);
}

std::array<double, 3> interior_angles(const Triangle& t) {
    const SideLengths s = side_lengths(t);
    auto angle = [](double opp, double s1, double s2) {
        const double cosv = std::clamp((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2), -1.0, 1.0);
        return std::acos(cosv);
    };
    return {angle(s.a, s.b, s.c), angle(s.b, s.c, s.a), angle(s.c, s.a, s.b)};
}

AffineMap::AffineMap(double m00, double m01, double m10, double m11, Point offset)
    : m_{m00, m01, m10, m11}, offset_(offset) {
    const double d = m00 * m11 - m01 * m10;
    const double scale = m00 * m00 + m01 * m01 + m10 * m10 + m11 * m11;
    if (!(std::abs(d) > 1e-14 * scale)) {
        throw SingularMap("affine map has a (nearly) singular linear part");
    }
}

Point AffineMap::apply_inverse(Point p) const {
    const double d = det();
    const Point q = p - offset_;
    return {(m_[3] * q.x - m_[1] * q.y) / d, (-m_[2] * q.x + m_[0] * q.y) / d};
}

AffineMap AffineMap::inverse() const {
    const double d = det();
    const double i00 = m_[3] / d;
    const double i01 = -m_[1] / d;
    const double i10 = -m_[2] / d;
    const double i11 = m_[0] / d;
    const Point off{-(i00 * offset_.x + i01 * offset_.y), -(i10 * offset_.x + i11 * offset_.y)};
    return AffineMap(i00, i01, i10, i11, off);
}

Triangle reference_triangle() {
    return Triangle({0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0});
}

AffineMap reference_map(const Triangle& t) {
    const Point u = t.c() - t.a();  // image of (1, 0)
    const Point v = t.b() - t.a();  // image of (0, 1)
    return AffineMap(u.x, v.x, u.y, v.y, t.a());
}

double condition_number(const AffineMap& m) {
    // Eigenvalues of M^T M in closed form.
    const double p = m.m00() * m.m00() + m.m10() * m.m10();
    const double r = m.m01() * m.m01() + m.m11() * m.m11();
    const double q = m.m00() * m.m01() + m.m10() * m.m11();
    const double tr = p + r;
    const double disc = std::sqrt(std::max(0.0, (p - r) * (p - r) + 4.0 * q * q));
    const double lmax = 0.5 * (tr + disc);
    const double lmin = 0.5 * (tr - disc);
    return std::sqrt(lmax / lmin);
}

std::vector<Point> barycentric_grid(const Triangle& t, int resolution) {
    if (resolution < 1) throw InvalidCount("grid resolution must be >= 1");
    std::vector<Point> out;
    out.reserve(static_cast<size_t>(resolution + 1) * (resolution + 2) / 2);
    const double inv = 1.0 / resolution;
    for (int i = resolution; i >= 0; --i) {
        for (int j = resolution - i; j >= 0; --j) {
            const int k = resolution - i - j;
            out.push_back(inv * (static_cast<double>(i) * t.a() +
                                 static_cast<double>(j) * t.b() +
                                 static_cast<double>(k) * t.c()));
        }
    }
    return out;
}

} // namespace tripack
