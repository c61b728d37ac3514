#include "tripack/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "tripack/generators.hpp"

namespace tripack {

double separation_radius(const PointSet& p) {
    if (p.size() < 2) throw TooFewPoints("separation radius needs at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < p.size(); ++i) {
        for (size_t j = i + 1; j < p.size(); ++j) {
            best = std::min(best, distance(p[i], p[j]));
        }
    }
    return 0.5 * best;
}

MeshStats mesh_stats(const PointSet& p) {
    MeshStats out;
    out.separation = separation_radius(p);
    const CoveringRadius cr = covering_radius_exact(p);
    out.covering = cr.h;
    out.covering_argmax = cr.argmax;
    out.ratio = out.covering / out.separation;
    return out;
}

double mesh_ratio(const PointSet& p) {
    return covering_radius_exact(p).h / separation_radius(p);
}

VertexConfigStats vertex_config_stats(const Triangle& t) {
    const SideLengths s = side_lengths(t).sorted_desc();
    VertexConfigStats out;
    out.q = 0.5 * s.c;
    if (s.a * s.a > s.b * s.b + s.c * s.c) {
        out.h = s.a * s.b * s.b / (s.a * s.a + s.b * s.b - s.c * s.c);
    } else {
        out.h = circumcircle(t.a(), t.b(), t.c()).radius;
    }
    out.rho = out.h / out.q;
    return out;
}

KBound k_bound(const Triangle& t) {
    const SideLengths s = side_lengths(t).sorted_desc();
    const double area = std::abs(signed_area(t));
    const double L = s.a + s.b + s.c;
    const double q = 0.5 * s.c;
    KBound out;
    out.primary = static_cast<long>(std::floor((area + L * q + M_PI * q * q) / (M_PI * q * q)));

    const double u = (s.a + s.b) / s.c;
    const double v = (s.a - s.b) / s.c;
    const double root = std::sqrt(std::max(0.0, (u + 1.0) * (u - 1.0) * (1.0 + v) * (1.0 - v)));
    out.edge_form = static_cast<long>(std::floor(root + (2.0 / M_PI) * (u + 1.0) + 1.0));
    return out;
}

VdcBounds vdc_bounds(const Triangle& t) {
    const Medians m = medians(t);
    const double c_min = side_lengths(t).shortest();
    const double factor = std::max(1.0 / m.shortest(), 2.0 / (3.0 * c_min));
    VdcBounds out;
    out.uniform_bound = 4.0 * m.longest() * factor;
    out.filled_level_rho = 0.5 * out.uniform_bound;
    return out;
}

double kronecker_bound(const Triangle& t) {
    const double c0 = 2.0 * std::sqrt(2.0 + std::sqrt(2.0)) + 3.0 * std::sqrt(2.0) + 2.0;
    return c0 * condition_number(reference_map(t));
}

LatticeContainmentReport lattice_containment_check(double leg, int trials, uint64_t seed) {
    const double min_leg = std::sqrt(2.0) + 1.0;
    if (!(leg >= min_leg * (1.0 - 1e-12))) throw Error("leg must be at least sqrt(2) + 1");

    LatticeContainmentReport rep;
    rep.trials = trials;
    rep.distance_bound = std::sqrt(2.0 + std::sqrt(2.0)) + 1.0 / std::sqrt(2.0);

    std::mt19937_64 eng(seed);
    auto unif = [&eng]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };

    for (int trial = 0; trial < trials; ++trial) {
        const double theta = 2.0 * M_PI * unif();
        const Point shift{unif(), unif()};
        const Point u{std::cos(theta), std::sin(theta)};
        const Point v{-u.y, u.x};
        const Triangle tri(shift, shift + leg * u, shift + leg * v);

        std::vector<Point> contained;
        const auto& verts = tri.vertices();
        double xmin = verts[0].x, xmax = verts[0].x, ymin = verts[0].y, ymax = verts[0].y;
        for (const Point& p : verts) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
        for (int ix = static_cast<int>(std::floor(xmin)); ix <= static_cast<int>(std::ceil(xmax)); ++ix) {
            for (int iy = static_cast<int>(std::floor(ymin)); iy <= static_cast<int>(std::ceil(ymax)); ++iy) {
                const Point z{static_cast<double>(ix), static_cast<double>(iy)};
                if (tri.contains(z)) contained.push_back(z);
            }
        }
        if (contained.empty()) {
            ++rep.containment_violations;
            continue;
        }
        for (int k = 0; k < 8; ++k) {
            double b0 = unif(), b1 = unif();
            if (b0 + b1 > 1.0) {
                b0 = 1.0 - b0;
                b1 = 1.0 - b1;
            }
            const Point x = tri.a() + b0 * (tri.b() - tri.a()) + b1 * (tri.c() - tri.a());
            double dmin = std::numeric_limits<double>::infinity();
            for (const Point& z : contained) dmin = std::min(dmin, distance(x, z));
            rep.max_nearest_distance = std::max(rep.max_nearest_distance, dmin);
            if (dmin > rep.distance_bound + 1e-9) ++rep.distance_violations;
        }
    }
    return rep;
}

std::optional<int> empirical_k(const Triangle& t, int n_max) {
    if (n_max < 3) throw InvalidCount("empirical_k needs n_max >= 3");
    GreedyRun run(PointSet({t.a(), t.b(), t.c()}, t));
    for (int n = 3; n <= n_max; ++n) {
        const double q = run.separation();
        const GreedyRun::Step s = run.step();
        if (s.covering_before / q <= 2.0 + 1e-12) return n;
    }
    return std::nullopt;
}

double voronoi_angle_check(const PointSet& p) {
    const BoundedVoronoiDiagram d = build_bounded_voronoi(p);
    if (d.interior_vertices.empty()) {
        throw NoInteriorVertices("the diagram has no interior Voronoi vertex");
    }
    double min_sine = 1.0;
    for (const CandidatePoint& v : d.interior_vertices) {
        const double r = v.empty_radius;
        const auto& inc = v.incident_sites;
        for (size_t i = 0; i < inc.size(); ++i) {
            for (size_t j = i + 1; j < inc.size(); ++j) {
                // law of sines: the angle opposite this chord has sine chord/(2r)
                const double sine = distance(p[inc[i]], p[inc[j]]) / (2.0 * r);
                min_sine = std::min(min_sine, sine);
            }
        }
    }
    return min_sine;
}

TriangleBounds triangle_bounds(const Triangle& t) {
    TriangleBounds out;
    const VertexConfigStats v = vertex_config_stats(t);
    out.vertex_q = v.q;
    out.vertex_h = v.h;
    out.vertex_rho = v.rho;
    const auto angles = interior_angles(t);
    out.corollary_bound = 1.0 / std::sin(*std::min_element(angles.begin(), angles.end()));
    const KBound kb = k_bound(t);
    out.k_bound_primary = kb.primary;
    out.k_bound_edge_form = kb.edge_form;
    const VdcBounds vb = vdc_bounds(t);
    out.vdc_bound = vb.uniform_bound;
    out.vdc_filled_level_rho = vb.filled_level_rho;
    out.kronecker_bound = kronecker_bound(t);
    out.iso_quotient = isoperimetric_quotient(t);
    return out;
}

} // namespace tripack
