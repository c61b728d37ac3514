#include "tripack/bounded_voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tripack/delaunay.hpp"

namespace tripack {
namespace {

// Candidate positions and radii are computed in extended precision. Inserted
// greedy points are functions of earlier candidates, so plain double
// arithmetic would compound its rounding error across insertion generations;
// with long double internals the stored coordinates stay correctly rounded.
long double ld_dist(Point a, Point b) {
    const long double dx = static_cast<long double>(a.x) - b.x;
    const long double dy = static_cast<long double>(a.y) - b.y;
    return sqrtl(dx * dx + dy * dy);
}

Point circumcenter_ld(Point p, Point q, Point r) {
    const long double d0x = static_cast<long double>(q.x) - p.x;
    const long double d0y = static_cast<long double>(q.y) - p.y;
    const long double d1x = static_cast<long double>(r.x) - p.x;
    const long double d1y = static_cast<long double>(r.y) - p.y;
    const long double a2 = d0x * d1y - d0y * d1x;
    const long double d00 = d0x * d0x + d0y * d0y;
    const long double d11 = d1x * d1x + d1y * d1y;
    return {static_cast<double>(p.x + (d1y * d00 - d0y * d11) / (2.0L * a2)),
            static_cast<double>(p.y + (d0x * d11 - d1x * d00) / (2.0L * a2))};
}

// Polygon vertex with the id of the constraint forming the edge that starts
// at it: side k of the triangle is encoded as -(k+1), the bisector with site
// j as j >= 0.
struct TaggedVertex {
    Point p;
    int tag;
};

constexpr int side_tag(int k) { return -(k + 1); }

// Sutherland-Hodgman step against the half-plane dot(x - m, nrm) <= 0.
std::vector<TaggedVertex> clip_halfplane(const std::vector<TaggedVertex>& poly, Point m,
                                         Point nrm, int new_tag, double tol) {
    std::vector<TaggedVertex> out;
    const size_t n = poly.size();
    if (n == 0) return out;
    out.reserve(n + 2);
    std::vector<double> s(n);
    for (size_t i = 0; i < n; ++i) s[i] = dot(poly[i].p - m, nrm);
    const double eps = tol * norm(nrm);
    for (size_t i = 0; i < n; ++i) {
        const size_t j = (i + 1) % n;
        const bool in_i = s[i] <= eps;
        const bool in_j = s[j] <= eps;
        if (in_i) {
            out.push_back(poly[i]);
            if (!in_j) {
                const double t = s[i] / (s[i] - s[j]);
                out.push_back({poly[i].p + t * (poly[j].p - poly[i].p), new_tag});
            }
        } else if (in_j) {
            const double t = s[i] / (s[i] - s[j]);
            out.push_back({poly[i].p + t * (poly[j].p - poly[i].p), poly[i].tag});
        }
    }
    return out;
}

double polygon_area(const std::vector<TaggedVertex>& poly) {
    double acc = 0.0;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const size_t j = (i + 1) % n;
        acc += cross(poly[i].p, poly[j].p);
    }
    return 0.5 * acc;
}

struct LdPoint {
    long double x, y;
};

// Chord of the perpendicular bisector of (p, q) inside the closed triangle,
// as a parameter interval around the midpoint. Returns false when the line
// misses the triangle.
bool bisector_chord(const std::array<Point, 3>& tri, Point p, Point q, double diam,
                    LdPoint& mid, LdPoint& dir, long double& t0, long double& t1) {
    mid = {(static_cast<long double>(p.x) + q.x) / 2.0L,
           (static_cast<long double>(p.y) + q.y) / 2.0L};
    dir = {-(static_cast<long double>(q.y) - p.y), static_cast<long double>(q.x) - p.x};
    const long double dn = sqrtl(dir.x * dir.x + dir.y * dir.y);
    if (dn == 0.0L) return false;
    t0 = -4.0L * diam / dn;
    t1 = 4.0L * diam / dn;
    for (int k = 0; k < 3; ++k) {
        const Point v = tri[k];
        const Point e = tri[(k + 1) % 3] - v;
        // inside: cross(e, x - v_k) >= 0
        const long double a = static_cast<long double>(e.x) * (mid.y - v.y) -
                              static_cast<long double>(e.y) * (mid.x - v.x);
        const long double b = static_cast<long double>(e.x) * dir.y -
                              static_cast<long double>(e.y) * dir.x;
        const long double scale = norm(e) * dn;
        if (fabsl(b) < 1e-18L * scale) {
            if (a < -1e-12L * norm(e) * diam) return false;  // parallel and outside
            continue;
        }
        const long double tc = -a / b;
        if (b > 0.0L) {
            t0 = std::max(t0, tc);
        } else {
            t1 = std::min(t1, tc);
        }
    }
    return t0 <= t1;
}

struct RawCandidate {
    Point p;
    bool on_boundary;
    std::array<int, 3> owners;  // owner count 2 or 3; -1 padding
};

double min_site_distance(const std::vector<Point>& sites, Point p) {
    long double best = std::numeric_limits<long double>::infinity();
    for (const Point& s : sites) best = std::min(best, ld_dist(p, s));
    return static_cast<double>(best);
}

} // namespace

BoundedVoronoiDiagram build_bounded_voronoi(const PointSet& sites) {
    const size_t n = sites.size();
    if (n < 1) throw TooFewPoints("at least one site is required");
    const Triangle& tri = sites.domain();
    const double diam = tri.diameter();
    const double dup_tol = 1e-12 * diam;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (distance(sites[i], sites[j]) <= dup_tol) {
                throw DuplicateSites("two sites closer than 1e-12 * diameter");
            }
        }
    }

    BoundedVoronoiDiagram d{sites, {}, {}, {}, {}};
    const auto tri_ccw = tri.ccw_vertices();
    std::vector<TaggedVertex> domain_poly{{tri_ccw[0], side_tag(0)},
                                          {tri_ccw[1], side_tag(1)},
                                          {tri_ccw[2], side_tag(2)}};

    if (n == 1) {
        VoronoiCell cell;
        cell.site = 0;
        for (const auto& v : domain_poly) cell.polygon.push_back(v.p);
        cell.area = std::abs(polygon_area(domain_poly));
        d.cells.push_back(std::move(cell));
        return d;
    }

    const std::vector<Point>& pts = sites.points();
    Delaunay dt(pts);
    const auto neighbors = dt.site_neighbors();

    // Cells: clip the triangle against the bisector half-planes of the
    // Delaunay neighbors. Skeleton edges are the bisector-tagged cell edges.
    const double clip_tol = 1e-13 * diam;
    for (size_t i = 0; i < n; ++i) {
        std::vector<TaggedVertex> poly = domain_poly;
        for (const int j : neighbors[i]) {
            const Point m = 0.5 * (pts[i] + pts[j]);
            poly = clip_halfplane(poly, m, pts[j] - pts[i], j, clip_tol);
            if (poly.empty()) break;
        }
        VoronoiCell cell;
        cell.site = static_cast<int>(i);
        cell.area = std::abs(polygon_area(poly));
        for (size_t k = 0; k < poly.size(); ++k) {
            cell.polygon.push_back(poly[k].p);
            const int tag = poly[k].tag;
            if (tag >= 0 && static_cast<int>(i) < tag) {
                const Point a = poly[k].p;
                const Point b = poly[(k + 1) % poly.size()].p;
                if (distance(a, b) > 1e-12 * diam) d.skeleton_edges.push_back({a, b});
            }
        }
        d.cells.push_back(std::move(cell));
    }

    std::vector<RawCandidate> raw;

    // Interior Voronoi vertices: circumcenters of Delaunay triangles that lie
    // inside the closed domain.
    for (const auto& t : dt.site_triangles()) {
        const Point pa = pts[t[0]], pb = pts[t[1]], pc = pts[t[2]];
        const double area2 = std::abs(cross(pb - pa, pc - pa));
        const double longest = std::max({distance(pa, pb), distance(pb, pc), distance(pc, pa)});
        if (area2 <= 2.0 * kDegeneracyScale * longest * longest) continue;  // sliver artifact
        const Point center = circumcenter_ld(pa, pb, pc);
        if (tri.contains(center)) {
            raw.push_back({center, false, {t[0], t[1], t[2]}});
        }
    }

    // Boundary intersections: crossings of each adjacent pair's bisector with
    // the triangle sides. The full bisector chord is used, so crossings past
    // the shared cell edge (including ones that coincide with a site) are kept;
    // they never exceed the true maximum empty radius.
    for (size_t i = 0; i < n; ++i) {
        for (const int j : neighbors[i]) {
            if (static_cast<int>(i) >= j) continue;
            LdPoint mid, dir;
            long double t0, t1;
            if (!bisector_chord(tri_ccw, pts[i], pts[j], diam, mid, dir, t0, t1)) continue;
            auto at = [&](long double t) {
                return Point{static_cast<double>(mid.x + t * dir.x),
                             static_cast<double>(mid.y + t * dir.y)};
            };
            raw.push_back({at(t0), true, {static_cast<int>(i), j, -1}});
            if (t1 - t0 > 1e-15L) {
                raw.push_back({at(t1), true, {static_cast<int>(i), j, -1}});
            }
        }
    }

    // Merge coincident candidates (cocircular sites, shared crossings) within
    // 1e-10 * diameter, pooling their incident sites.
    const double merge_tol = 1e-10 * diam;
    std::vector<size_t> order(raw.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return lex_less(raw[a].p, raw[b].p);
    });

    struct Cluster {
        Point rep;
        bool on_boundary = false;
        std::vector<int> owners;
    };
    std::vector<Cluster> clusters;
    for (const size_t id : order) {
        const RawCandidate& rc = raw[id];
        int found = -1;
        for (int c = static_cast<int>(clusters.size()) - 1; c >= 0; --c) {
            if (rc.p.x - clusters[c].rep.x > merge_tol) break;
            if (distance(rc.p, clusters[c].rep) <= merge_tol) {
                found = c;
                break;
            }
        }
        if (found < 0) {
            clusters.push_back({rc.p, rc.on_boundary, {}});
            found = static_cast<int>(clusters.size()) - 1;
        }
        Cluster& cl = clusters[found];
        cl.on_boundary = cl.on_boundary || rc.on_boundary;
        for (const int o : rc.owners) {
            if (o >= 0) cl.owners.push_back(o);
        }
    }

    for (Cluster& cl : clusters) {
        std::sort(cl.owners.begin(), cl.owners.end());
        cl.owners.erase(std::unique(cl.owners.begin(), cl.owners.end()), cl.owners.end());
        if (!cl.on_boundary && cl.owners.size() > 3) {
            // Re-anchor merged cocircular vertices on the best-conditioned
            // incident triple; flat triples amplify the circumcenter noise.
            double best_area = -1.0;
            std::array<int, 3> best{};
            for (size_t a = 0; a < cl.owners.size(); ++a) {
                for (size_t b = a + 1; b < cl.owners.size(); ++b) {
                    for (size_t c = b + 1; c < cl.owners.size(); ++c) {
                        const double area = std::abs(orient(pts[cl.owners[a]], pts[cl.owners[b]],
                                                            pts[cl.owners[c]]));
                        if (area > best_area) {
                            best_area = area;
                            best = {cl.owners[a], cl.owners[b], cl.owners[c]};
                        }
                    }
                }
            }
            const double longest = std::max({distance(pts[best[0]], pts[best[1]]),
                                             distance(pts[best[1]], pts[best[2]]),
                                             distance(pts[best[2]], pts[best[0]])});
            if (best_area > 2.0 * kDegeneracyScale * longest * longest) {
                cl.rep = circumcenter_ld(pts[best[0]], pts[best[1]], pts[best[2]]);
            }
        }
        const double r = min_site_distance(pts, cl.rep);
        CandidatePoint cp;
        cp.location = cl.rep;
        cp.empty_radius = r;
        cp.incident_sites = std::move(cl.owners);
        if (cl.on_boundary) {
            cp.kind = CandidateKind::boundary_intersection;
            d.boundary_intersections.push_back(std::move(cp));
        } else {
            // Interior vertices carry at least three incident sites; refill
            // from a full scan if tolerance clustering split a vertex.
            if (cp.incident_sites.size() < 3) {
                cp.incident_sites.clear();
                for (size_t s = 0; s < n; ++s) {
                    if (distance(pts[s], cl.rep) <= r * (1.0 + 1e-9)) {
                        cp.incident_sites.push_back(static_cast<int>(s));
                    }
                }
            }
            cp.kind = CandidateKind::interior_voronoi_vertex;
            d.interior_vertices.push_back(std::move(cp));
        }
    }
    return d;
}

std::vector<CandidatePoint> candidate_set(const BoundedVoronoiDiagram& d,
                                          bool include_triangle_vertices) {
    std::vector<CandidatePoint> out = d.interior_vertices;
    out.insert(out.end(), d.boundary_intersections.begin(), d.boundary_intersections.end());
    if (include_triangle_vertices) {
        const std::vector<Point>& pts = d.sites.points();
        for (const Point& v : d.sites.domain().vertices()) {
            CandidatePoint cp;
            cp.location = v;
            cp.empty_radius = min_site_distance(pts, v);
            cp.kind = CandidateKind::triangle_vertex;
            for (size_t s = 0; s < pts.size(); ++s) {
                if (distance(pts[s], v) <= cp.empty_radius * (1.0 + 1e-9)) {
                    cp.incident_sites.push_back(static_cast<int>(s));
                }
            }
            out.push_back(std::move(cp));
        }
    }
    return out;
}

CoveringRadius covering_radius_exact(const PointSet& sites) {
    const BoundedVoronoiDiagram d = build_bounded_voronoi(sites);
    const auto cands = candidate_set(d, !contains_domain_vertices(sites));
    // The argmax is the candidate of strictly maximal measured radius, exact
    // ties broken toward the lexicographically smallest location. A tolerance
    // window here would let the greedy insertion drift below the reported
    // covering radius and accumulate across steps.
    double best = -1.0;
    Point arg{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    for (const CandidatePoint& c : cands) {
        if (c.empty_radius > best ||
            (c.empty_radius == best && lex_less(c.location, arg))) {
            best = c.empty_radius;
            arg = c.location;
        }
    }
    return {best, arg};
}

double covering_radius_grid(const PointSet& sites, int resolution) {
    const auto grid = barycentric_grid(sites.domain(), resolution);
    double best = 0.0;
    for (const Point& g : grid) {
        best = std::max(best, min_site_distance(sites.points(), g));
    }
    return best;
}

std::vector<Point> covering_maximizers(const PointSet& sites) {
    const BoundedVoronoiDiagram d = build_bounded_voronoi(sites);
    const auto cands = candidate_set(d, !contains_domain_vertices(sites));
    double best = -1.0;
    for (const CandidatePoint& c : cands) best = std::max(best, c.empty_radius);
    const double lo = best * (1.0 - 1e-10);
    std::vector<Point> out;
    for (const CandidatePoint& c : cands) {
        if (c.empty_radius >= lo) out.push_back(c.location);
    }
    std::sort(out.begin(), out.end(), [](Point a, Point b) { return lex_less(a, b); });
    // an appended triangle vertex can coincide with a bisector crossing; keep
    // one copy so the maximizer set remains insertable as sites
    const double tol = 1e-12 * sites.domain().diameter();
    out.erase(std::unique(out.begin(), out.end(),
                          [tol](Point a, Point b) { return distance(a, b) <= tol; }),
              out.end());
    return out;
}

} // namespace tripack
