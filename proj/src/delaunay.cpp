#include "tripack/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace tripack {
namespace {

// Orientation sign with a magnitude-scaled error filter: results whose
// magnitude is below the round-off bound collapse to 0.
int orient_sign(Point a, Point b, Point c) {
    const double l = (b.x - a.x) * (c.y - a.y);
    const double r = (b.y - a.y) * (c.x - a.x);
    const double det = l - r;
    const double bound = 1e-14 * (std::abs(l) + std::abs(r));
    if (det > bound) return 1;
    if (det < -bound) return -1;
    return 0;
}

// Strict in-circumcircle test for a CCW triangle (a, b, c). On-circle within
// the round-off bound counts as outside, so cocircular degeneracies resolve
// deterministically.
bool incircle_strict(Point a, Point b, Point c, Point d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double bxcy = bdx * cdy, bycx = bdy * cdx;
    const double cxay = cdx * ady, cyax = cdy * adx;
    const double axby = adx * bdy, aybx = ady * bdx;

    const double det = alift * (bxcy - bycx) + blift * (cxay - cyax) + clift * (axby - aybx);
    const double perm = alift * (std::abs(bxcy) + std::abs(bycx)) +
                        blift * (std::abs(cxay) + std::abs(cyax)) +
                        clift * (std::abs(axby) + std::abs(aybx));
    return det > 2e-14 * perm;
}

} // namespace

Delaunay::Delaunay(const std::vector<Point>& points) : n_(points.size()), pts_(points) {
    if (n_ < 2) return;

    double xmin = pts_[0].x, xmax = pts_[0].x, ymin = pts_[0].y, ymax = pts_[0].y;
    for (const Point& p : pts_) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const Point c{0.5 * (xmin + xmax), 0.5 * (ymin + ymax)};
    double spread = std::max(xmax - xmin, ymax - ymin);
    spread = std::max(spread, 1e-12 * (1.0 + std::abs(c.x) + std::abs(c.y)));

    // Enclosing triangle far enough away that it cannot disturb any site-site
    // adjacency whose shared Voronoi edge lies near the sites.
    const double R = 4096.0 * spread;
    pts_.push_back({c.x, c.y + R});
    pts_.push_back({c.x - R, c.y - R});
    pts_.push_back({c.x + R, c.y - R});

    const int s = static_cast<int>(n_);
    tris_.push_back(Tri{{s, s + 1, s + 2}, {-1, -1, -1}, true});
    mark_.assign(1, 0);
    last_created_ = 0;

    for (int i = 0; i < s; ++i) insert(i);
}

bool Delaunay::in_circumcircle(const Tri& t, Point p) const {
    return incircle_strict(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]], p);
}

int Delaunay::locate(Point p, int hint) const {
    int t = hint;
    if (t < 0 || t >= static_cast<int>(tris_.size()) || !tris_[t].alive) {
        t = -1;
        for (int i = static_cast<int>(tris_.size()) - 1; i >= 0; --i) {
            if (tris_[i].alive) { t = i; break; }
        }
    }
    size_t steps = 0;
    const size_t max_steps = 4 * tris_.size() + 64;
    while (t >= 0 && steps++ < max_steps) {
        const Tri& tr = tris_[t];
        int next = -2;
        for (int k = 0; k < 3; ++k) {
            if (orient_sign(pts_[tr.v[(k + 1) % 3]], pts_[tr.v[(k + 2) % 3]], p) < 0) {
                next = tr.nbr[k];
                break;
            }
        }
        if (next == -2) return t;  // inside or on the boundary of t
        if (next == -1) break;     // walked out of the enclosing triangle
        t = next;
    }
    // Fallback: exhaustive scan. The insertion order or a degenerate walk can
    // get here; correctness does not depend on the walk.
    for (int i = 0; i < static_cast<int>(tris_.size()); ++i) {
        if (!tris_[i].alive) continue;
        const Tri& tr = tris_[i];
        bool inside = true;
        for (int k = 0; k < 3 && inside; ++k) {
            inside = orient_sign(pts_[tr.v[(k + 1) % 3]], pts_[tr.v[(k + 2) % 3]], p) >= 0;
        }
        if (inside) return i;
    }
    return t;
}

void Delaunay::insert(int pi) {
    const Point p = pts_[pi];
    const int t0 = locate(p, last_created_);

    if (mark_.size() < tris_.size()) mark_.resize(tris_.size(), 0);
    ++epoch_;
    auto in_cavity = [&](int t) { return t >= 0 && mark_[t] == epoch_; };

    // Grow the cavity of triangles whose circumcircle strictly contains p.
    // The containing triangle is always included.
    std::vector<int> cavity{t0};
    std::vector<int> stack{t0};
    mark_[t0] = epoch_;
    while (!stack.empty()) {
        const int t = stack.back();
        stack.pop_back();
        for (int k = 0; k < 3; ++k) {
            const int nb = tris_[t].nbr[k];
            if (nb < 0 || mark_[nb] == epoch_) continue;
            if (in_circumcircle(tris_[nb], p)) {
                mark_[nb] = epoch_;
                cavity.push_back(nb);
                stack.push_back(nb);
            }
        }
    }

    // Shrink until every boundary edge is visible from p. Filtered predicates
    // can produce a non-star-shaped cavity in near-degenerate inputs; dropping
    // the offending triangles restores a consistent retriangulation.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const int t : cavity) {
            if (mark_[t] != epoch_ || t == t0) continue;
            for (int k = 0; k < 3; ++k) {
                const int nb = tris_[t].nbr[k];
                if (in_cavity(nb)) continue;
                const Point a = pts_[tris_[t].v[(k + 1) % 3]];
                const Point b = pts_[tris_[t].v[(k + 2) % 3]];
                if (orient_sign(p, a, b) < 0) {
                    mark_[t] = 0;
                    changed = true;
                    break;
                }
            }
        }
    }
    cavity.erase(std::remove_if(cavity.begin(), cavity.end(),
                                [&](int t) { return mark_[t] != epoch_; }),
                 cavity.end());

    struct BoundaryEdge {
        int a, b, ext;
    };
    std::vector<BoundaryEdge> boundary;
    for (const int t : cavity) {
        for (int k = 0; k < 3; ++k) {
            const int nb = tris_[t].nbr[k];
            if (in_cavity(nb)) continue;
            boundary.push_back({tris_[t].v[(k + 1) % 3], tris_[t].v[(k + 2) % 3], nb});
        }
    }

    std::unordered_map<int, int> by_a, by_b;
    std::vector<int> created;
    created.reserve(boundary.size());
    for (const BoundaryEdge& e : boundary) {
        const int id = static_cast<int>(tris_.size());
        tris_.push_back(Tri{{pi, e.a, e.b}, {e.ext, -1, -1}, true});
        created.push_back(id);
        by_a[e.a] = id;
        by_b[e.b] = id;
        if (e.ext >= 0) {
            Tri& ext = tris_[e.ext];
            for (int k = 0; k < 3; ++k) {
                if (ext.v[(k + 1) % 3] == e.b && ext.v[(k + 2) % 3] == e.a) {
                    ext.nbr[k] = id;
                    break;
                }
            }
        }
    }
    for (const int id : created) {
        Tri& t = tris_[id];
        t.nbr[1] = by_a.at(t.v[2]);  // edge (b, p) matches the tri whose a == b
        t.nbr[2] = by_b.at(t.v[1]);  // edge (p, a) matches the tri whose b == a
    }
    for (const int t : cavity) tris_[t].alive = false;
    if (!created.empty()) last_created_ = created.back();
}

std::vector<std::array<int, 3>> Delaunay::site_triangles() const {
    std::vector<std::array<int, 3>> out;
    const int s = static_cast<int>(n_);
    for (const Tri& t : tris_) {
        if (!t.alive) continue;
        if (t.v[0] < s && t.v[1] < s && t.v[2] < s) out.push_back(t.v);
    }
    return out;
}

std::vector<std::vector<int>> Delaunay::site_neighbors() const {
    std::vector<std::vector<int>> adj(n_);
    const int s = static_cast<int>(n_);
    for (const Tri& t : tris_) {
        if (!t.alive) continue;
        for (int k = 0; k < 3; ++k) {
            const int u = t.v[k];
            const int w = t.v[(k + 1) % 3];
            if (u < s && w < s) {
                adj[u].push_back(w);
                adj[w].push_back(u);
            }
        }
    }
    for (auto& lst : adj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    return adj;
}

} // namespace tripack
