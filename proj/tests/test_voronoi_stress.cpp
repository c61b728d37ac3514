#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_support.hpp"
#include "tripack/bounded_voronoi.hpp"
#include "tripack/generators.hpp"
#include "tripack/metrics.hpp"

using namespace tripack;
using namespace tsupport;

namespace {

void check_partition(const PointSet& sites, double tol = 1e-9) {
    const BoundedVoronoiDiagram d = build_bounded_voronoi(sites);
    double total = 0.0;
    for (const auto& cell : d.cells) total += cell.area;
    const double area = std::abs(signed_area(sites.domain()));
    CHECK(total == doctest::Approx(area).epsilon(tol));
}

void check_exact_vs_grid(const PointSet& sites, int res) {
    const double exact = covering_radius_exact(sites).h;
    const double grid = covering_radius_grid(sites, res);
    const double longest = side_lengths(sites.domain()).longest();
    CHECK(exact >= grid - 1e-12 * longest);
    CHECK(exact - grid <= longest / res);
}

} // namespace

TEST_CASE("collinear interior sites") {
    const Triangle t({0, 0}, {4, 0}, {0, 4});
    std::vector<Point> pts;
    for (int i = 0; i <= 6; ++i) pts.push_back({0.5 + 0.3 * i, 0.5});  // one horizontal row
    const PointSet sites(pts, t);
    check_partition(sites);
    check_exact_vs_grid(sites, 300);
    const BoundedVoronoiDiagram d = build_bounded_voronoi(sites);
    CHECK(d.interior_vertices.empty());  // no three sites span a circle
    CHECK(d.skeleton_edges.size() == 6);
}

TEST_CASE("sites on the domain boundary") {
    const Triangle t = unit_equilateral();
    // edge midpoints only
    const PointSet mids({0.5 * (t.a() + t.b()), 0.5 * (t.b() + t.c()), 0.5 * (t.c() + t.a())}, t);
    check_partition(mids);
    check_exact_vs_grid(mids, 400);
    // covering attained at a triangle vertex, at distance side/2
    const CoveringRadius cr = covering_radius_exact(mids);
    CHECK(cr.h == doctest::Approx(0.5).epsilon(1e-12));

    // a full boundary loop plus an interior point
    std::vector<Point> loop;
    for (int k = 0; k < 3; ++k) {
        const Point a = t.ccw_vertices()[k];
        const Point b = t.ccw_vertices()[(k + 1) % 3];
        for (int s = 0; s < 4; ++s) loop.push_back(a + (s / 4.0) * (b - a));
    }
    loop.push_back({0.5, 0.3});
    const PointSet ring(loop, t);
    check_partition(ring);
    check_exact_vs_grid(ring, 400);
}

TEST_CASE("structured lattices inside skewed domains") {
    // rotated lattices mapped into the skinny preset produce rows of nearly
    // collinear sites; the clipped diagram must still partition the domain
    const Triangle sk = skinny_preset();
    for (const int n : {20, 60, 150}) {
        const PointSet ps = kronecker_lattice(sk, n, 3.0 * M_PI / 8.0);
        if (ps.size() < 2) continue;
        check_partition(ps);
        check_exact_vs_grid(ps, 500);
    }
    for (const int n : {45, 105}) {
        check_partition(barycentric_grid_hybrid(sk, n));
    }
}

TEST_CASE("axis-aligned grid produces only cocircular vertices") {
    // exact cocircular quadruples everywhere: every interior Voronoi vertex
    // of a square lattice joins four cells
    const Triangle t = reference_triangle();
    const PointSet ps = kronecker_lattice(t, 50, 0.0);
    const BoundedVoronoiDiagram d = build_bounded_voronoi(ps);
    int quads = 0;
    for (const auto& v : d.interior_vertices) {
        REQUIRE(v.incident_sites.size() >= 3);
        if (v.incident_sites.size() >= 4) ++quads;
    }
    CHECK(quads == static_cast<int>(d.interior_vertices.size()));
    check_partition(ps);
    check_exact_vs_grid(ps, 400);
}

TEST_CASE("greedy runs on extreme shapes stay consistent") {
    for (const auto& tri : {triangle_from_angles(0.05, 1.5), triangle_from_angles(0.04, 0.05),
                            triangle_from_angles(1.5, 1.6)}) {
        GreedyRun run(PointSet({tri.a(), tri.b(), tri.c()}, tri));
        double prev_h = 1e300;
        for (int n = 3; n < 60; ++n) {
            const GreedyRun::Step s = run.step();
            CHECK(s.covering_before <= prev_h * (1.0 + 1e-12));
            prev_h = s.covering_before;
        }
        check_partition(run.points());
        check_exact_vs_grid(run.points(), 400);
    }
}

TEST_CASE("dense random configurations keep the partition invariant") {
    std::mt19937_64 eng(0xAB);
    for (int trial = 0; trial < 8; ++trial) {
        const Triangle t = random_triangle(eng);
        const PointSet sites = random_distinct_sites(t, 120, eng);
        check_partition(sites);
    }
}

TEST_CASE("skeleton edges lie on bisectors of their two nearest sites") {
    std::mt19937_64 eng(0xAC);
    for (int trial = 0; trial < 10; ++trial) {
        const Triangle t = random_triangle(eng);
        const PointSet sites = random_distinct_sites(t, 30, eng);
        const BoundedVoronoiDiagram d = build_bounded_voronoi(sites);
        for (const Segment& e : d.skeleton_edges) {
            const Point m = 0.5 * (e.a + e.b);
            std::vector<double> dist;
            for (const Point& s : sites.points()) dist.push_back(distance(m, s));
            std::sort(dist.begin(), dist.end());
            CHECK(dist[0] == doctest::Approx(dist[1]).epsilon(1e-9));
        }
    }
}
