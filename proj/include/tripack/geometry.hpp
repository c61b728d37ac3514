#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "tripack/errors.hpp"

namespace tripack {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
inline Point operator/(Point p, double s) { return {p.x / s, p.y / s}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm_squared(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::sqrt(norm_squared(p)); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Rotate 90 degrees counter-clockwise.
inline Point perp(Point p) { return {-p.y, p.x}; }

/// Strict lexicographic order on (x, y). Used for deterministic tie-breaking.
inline bool lex_less(Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// Twice-signed-area determinant; positive when a, b, c are counter-clockwise.
inline double orient(Point a, Point b, Point c) {
    return cross(b - a, c - a);
}

double signed_area(Point a, Point b, Point c);

struct SideLengths {
    double a;  // opposite vertex A (length of BC)
    double b;  // opposite vertex B (length of CA)
    double c;  // opposite vertex C (length of AB)

    /// The same three lengths sorted so that a >= b >= c.
    SideLengths sorted_desc() const;
    double longest() const { return std::max(a, std::max(b, c)); }
    double shortest() const { return std::min(a, std::min(b, c)); }
};

struct Medians {
    double m_a;  // from vertex A to the midpoint of BC
    double m_b;
    double m_c;
    double longest() const { return std::max(m_a, std::max(m_b, m_c)); }
    double shortest() const { return std::min(m_a, std::min(m_b, m_c)); }
};

/// A validated non-degenerate triangle. Vertex labels are kept exactly as
/// given; the counter-clockwise traversal order is fixed at construction so
/// that clipping code can assume one orientation.
class Triangle {
public:
    Triangle(Point a, Point b, Point c);

    Point a() const { return v_[0]; }
    Point b() const { return v_[1]; }
    Point c() const { return v_[2]; }
    const std::array<Point, 3>& vertices() const { return v_; }

    bool is_ccw() const { return ccw_; }

    /// Vertices in counter-clockwise order (swaps B and C when the stored
    /// order is clockwise).
    std::array<Point, 3> ccw_vertices() const;

    /// Length of the longest side.
    double diameter() const { return diameter_; }

    /// Closed point-in-triangle test with a tolerance of tol_scale * diameter
    /// on the distance to each edge.
    bool contains(Point p, double tol_scale = 1e-12) const;

private:
    std::array<Point, 3> v_;
    bool ccw_;
    double diameter_;
};

/// Degeneracy threshold shared by Triangle construction and circumcircle:
/// |signed area| must exceed 1e-14 * (longest side)^2.
inline constexpr double kDegeneracyScale = 1e-14;

double signed_area(const Triangle& t);
SideLengths side_lengths(const Triangle& t);
Medians medians(const Triangle& t);
double perimeter(const Triangle& t);

struct Circle {
    Point center;
    double radius;
};

/// Circumcircle of three non-collinear points. Throws CollinearPoints when
/// the points fail the non-degeneracy test.
Circle circumcircle(Point p, Point q, Point r);

/// Scale-free shape index 12*sqrt(3)*A/L^2, in (0, 1], equal to 1 exactly for
/// equilateral triangles.
double isoperimetric_quotient(const Triangle& t);

/// Triangle with interior angles (alpha, beta, pi - alpha - beta), perimeter 1,
/// A at the origin and B on the positive x-axis. Throws InvalidAngles unless
/// alpha, beta > 0 and alpha + beta < pi.
Triangle triangle_from_angles(double alpha, double beta);

/// Interior angles at vertices A, B, C, in radians.
std::array<double, 3> interior_angles(const Triangle& t);

/// Affine map x -> offset + M x with an invertible linear part.
class AffineMap {
public:
    AffineMap(double m00, double m01, double m10, double m11, Point offset);

    Point apply(Point p) const {
        return {offset_.x + m_[0] * p.x + m_[1] * p.y,
                offset_.y + m_[2] * p.x + m_[3] * p.y};
    }
    Point apply_inverse(Point p) const;
    AffineMap inverse() const;

    double det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    double m00() const { return m_[0]; }
    double m01() const { return m_[1]; }
    double m10() const { return m_[2]; }
    double m11() const { return m_[3]; }
    Point offset() const { return offset_; }

private:
    std::array<double, 4> m_;  // row-major 2x2
    Point offset_;
};

/// The reference triangle ((0,0), (0,1), (1,0)).
Triangle reference_triangle();

/// Map F from the reference triangle to t with F(x1, x2) =
/// A + x1 (C - A) + x2 (B - A), so F(0,0) = A, F(1,0) = C, F(0,1) = B.
AffineMap reference_map(const Triangle& t);

/// Spectral condition number, computed from the closed-form eigenvalues of
/// M^T M.
double condition_number(const AffineMap& m);

/// All points (i*A + j*B + k*C)/resolution with i + j + k = resolution,
/// (resolution+1)(resolution+2)/2 of them, corners included.
std::vector<Point> barycentric_grid(const Triangle& t, int resolution);

} // namespace tripack
