#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_support.hpp"
#include "tripack/generators.hpp"
#include "tripack/metrics.hpp"

using namespace tripack;
using namespace tsupport;

TEST_CASE("separation radius") {
    const Triangle t({-1, -1}, {3, -1}, {0, 3});
    CHECK(separation_radius(PointSet({{0, 0}, {1, 0}}, t)) == 0.5);
    const Triangle eq = unit_equilateral();
    CHECK(separation_radius(PointSet({eq.a(), eq.b(), eq.c()}, eq)) ==
          doctest::Approx(0.5).epsilon(1e-15));
    const Triangle ob = obtuse_322();
    CHECK(separation_radius(PointSet({ob.a(), ob.b(), ob.c()}, ob)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(separation_radius(PointSet({{0, 0}}, t)), TooFewPoints);
}

TEST_CASE("mesh stats of structured sets") {
    const Triangle eq = unit_equilateral();
    const MeshStats vs = mesh_stats(PointSet({eq.a(), eq.b(), eq.c()}, eq));
    CHECK(vs.separation == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(vs.covering == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(vs.ratio == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));

    const Triangle ob = obtuse_322();
    const MeshStats os = mesh_stats(PointSet({ob.a(), ob.b(), ob.c()}, ob));
    CHECK(os.separation == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(os.covering == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(os.ratio == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    const MeshStats gs = mesh_stats(barycentric_grid_hybrid(eq, 45));
    CHECK(gs.ratio == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("vertex configuration closed forms") {
    const VertexConfigStats eq = vertex_config_stats(unit_equilateral());
    CHECK(eq.q == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(eq.h == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(eq.rho == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-13));

    const VertexConfigStats ob = vertex_config_stats(obtuse_322());
    CHECK(ob.q == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ob.h == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(ob.rho == doctest::Approx(4.0 / 3.0).epsilon(1e-14));

    const VertexConfigStats rt = vertex_config_stats(unit_right());
    CHECK(rt.q == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rt.h == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-13));
    CHECK(rt.rho == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    // bound 1/sin(pi/4) is met with equality for right triangles
    CHECK(rt.rho == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    std::mt19937_64 eng(61);
    for (int k = 0; k < 100; ++k) {
        const Triangle t = random_triangle(eng);
        const VertexConfigStats ref = vertex_config_stats(t);
        const MeshStats ms = mesh_stats(PointSet({t.a(), t.b(), t.c()}, t));
        CHECK(ms.separation == doctest::Approx(ref.q).epsilon(1e-12));
        CHECK(ms.covering == doctest::Approx(ref.h).epsilon(1e-10));
        const auto ang = interior_angles(t);
        const double bound = 1.0 / std::sin(*std::min_element(ang.begin(), ang.end()));
        CHECK(ref.rho <= bound * (1.0 + 1e-12) + 1e-12);
    }
}

TEST_CASE("iteration bound, both printed forms") {
    const KBound eq = k_bound(unit_equilateral());
    CHECK(eq.primary == 3);
    CHECK(eq.edge_form == 4);

    for (const double lam : {0.1, 10.0}) {
        const Triangle scaled({0, 0}, {lam, 0}, {0.5 * lam, std::sqrt(3.0) / 2.0 * lam});
        const KBound kb = k_bound(scaled);
        CHECK(kb.primary == eq.primary);
        CHECK(kb.edge_form == eq.edge_form);
    }

    std::mt19937_64 eng(67);
    for (int k = 0; k < 200; ++k) {
        const KBound kb = k_bound(random_triangle(eng));
        CHECK(kb.primary >= 1);
        CHECK(kb.edge_form >= kb.primary);
    }
}

TEST_CASE("centroid-sequence mesh ratio bound and filled-level equality") {
    const Triangle eq = unit_equilateral();
    const VdcBounds vb = vdc_bounds(eq);
    // medians sqrt(3)/2, shortest side 1: the binding term is 2/sqrt(3)
    CHECK(vb.uniform_bound == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(vb.filled_level_rho == doctest::Approx(2.0).epsilon(1e-13));

    // on the equilateral triangle the bound is attained and the equality
    // holds at every filled level
    CHECK(mesh_ratio(vdc_sequence(eq, 16)) == doctest::Approx(vb.filled_level_rho).epsilon(1e-9));
    CHECK(mesh_ratio(vdc_sequence(eq, 64)) == doctest::Approx(vb.filled_level_rho).epsilon(1e-9));
    for (int n = 4; n <= 64; ++n) {
        CHECK(mesh_ratio(vdc_sequence(eq, n)) <= vb.uniform_bound + 1e-9);
    }

    std::mt19937_64 eng(71);
    for (int k = 0; k < 8; ++k) {
        const Triangle t = random_triangle(eng);
        const VdcBounds b = vdc_bounds(t);
        CHECK(b.filled_level_rho == 0.5 * b.uniform_bound);
        // the four-point values are exact for every shape
        CHECK(mesh_ratio(vdc_sequence(t, 4)) == doctest::Approx(b.filled_level_rho).epsilon(1e-9));
    }
}

TEST_CASE("centroid-sequence covering halves at every filled level") {
    std::mt19937_64 eng(73);
    for (int k = 0; k < 6; ++k) {
        const Triangle t = (k == 0) ? unit_equilateral() : random_triangle(eng);
        const double m_max = medians(t).longest();
        const PointSet seq = vdc_sequence(t, 64);
        CHECK(covering_radius_exact(seq.prefix(4)).h ==
              doctest::Approx(m_max / 3.0).epsilon(1e-12));
        CHECK(covering_radius_exact(seq.prefix(16)).h ==
              doctest::Approx(m_max / 6.0).epsilon(1e-12));
        CHECK(covering_radius_exact(seq.prefix(64)).h ==
              doctest::Approx(m_max / 12.0).epsilon(1e-12));
    }
}

TEST_CASE("rotated-lattice mesh ratio bound") {
    const double c0 = 2.0 * std::sqrt(2.0 + std::sqrt(2.0)) + 3.0 * std::sqrt(2.0) + 2.0;
    CHECK(kronecker_bound(reference_triangle()) == doctest::Approx(c0).epsilon(1e-13));
    CHECK(kronecker_bound(unit_equilateral()) ==
          doctest::Approx(c0 * std::sqrt(3.0)).epsilon(1e-13));

    for (int n = 2; n <= 40; ++n) {
        const PointSet p = kronecker_lattice(unit_equilateral(), n, 3.0 * M_PI / 8.0);
        if (p.size() < 2) continue;
        CHECK(mesh_ratio(p) <= kronecker_bound(unit_equilateral()) + 1e-9);
    }
}

TEST_CASE("lattice containment of the critical isosceles right triangle") {
    const double leg = std::sqrt(2.0) + 1.0;

    // axis-aligned at the origin: exactly the six small lattice points
    const Triangle tri({0, 0}, {leg, 0}, {0, leg});
    int contained = 0;
    for (int ix = -1; ix <= 3; ++ix) {
        for (int iy = -1; iy <= 3; ++iy) {
            if (tri.contains({static_cast<double>(ix), static_cast<double>(iy)})) ++contained;
        }
    }
    CHECK(contained == 6);

    const LatticeContainmentReport rep = lattice_containment_check(leg, 2000, 20240101);
    CHECK(rep.containment_violations == 0);
    CHECK(rep.distance_violations == 0);
    CHECK(rep.distance_bound == doctest::Approx(2.5548662).epsilon(1e-6));
    CHECK(rep.max_nearest_distance <= rep.distance_bound + 1e-9);
}

TEST_CASE("first size reaching mesh ratio two") {
    CHECK(empirical_k(unit_equilateral(), 10) == 3);
    // smallest angle above pi/6 forces the vertex configuration to qualify
    CHECK(empirical_k(triangle_from_angles(0.9, 1.1), 10) == 3);

    const Triangle sk = skinny_preset();
    const KBound kb = k_bound(sk);
    const auto k = empirical_k(sk, static_cast<int>(kb.primary) + 1);
    REQUIRE(k.has_value());
    CHECK(*k > 3);
    CHECK(*k <= kb.primary + 1);
}

TEST_CASE("incident-site triangles have bounded angle sines") {
    const Triangle eq = unit_equilateral();

    const PointSet verts({eq.a(), eq.b(), eq.c()}, eq);
    CHECK(voronoi_angle_check(verts) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

    const PointSet grid = barycentric_grid_hybrid(eq, 45);
    const double ms = voronoi_angle_check(grid);
    CHECK(ms == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-9));
    CHECK(1.0 / mesh_ratio(grid) == doctest::Approx(ms).epsilon(1e-9));

    const PointSet vg = vg_sequence(eq, 50);
    CHECK(voronoi_angle_check(vg) >= 1.0 / mesh_ratio(vg) - 1e-9);

    const Point centroid = (eq.a() + eq.b() + eq.c()) / 3.0;
    CHECK_THROWS_AS(voronoi_angle_check(PointSet({centroid}, eq)), NoInteriorVertices);
}

TEST_CASE("greedy dynamics: q update rule and monotone covering") {
    for (const Triangle& t : {unit_equilateral(), skinny_preset()}) {
        GreedyRun run(PointSet({t.a(), t.b(), t.c()}, t));
        double prev_h = -1.0;
        for (int n = 3; n < 45; ++n) {
            const double q_before = run.separation();
            const GreedyRun::Step s = run.step();
            const double rho = s.covering_before / q_before;
            const double q_after = run.separation();
            const double expected = (rho > 2.0 + 1e-12) ? q_before : 0.5 * s.covering_before;
            CHECK(q_after == doctest::Approx(expected).epsilon(1e-12));
            if (prev_h >= 0.0) CHECK(s.covering_before <= prev_h * (1.0 + 1e-12));
            prev_h = s.covering_before;
        }
    }
}

TEST_CASE("pairwise distances stay above the initial separation while rho exceeds two") {
    const Triangle t = skinny_preset();
    GreedyRun run(PointSet({t.a(), t.b(), t.c()}, t));
    const double q3 = run.separation();
    while (true) {
        const double q = run.separation();
        const GreedyRun::Step s = run.step();
        if (s.covering_before / q <= 2.0 + 1e-12) break;
        CHECK(run.separation() >= q3 * (1.0 - 1e-12));
        REQUIRE(run.size() < 100);
    }
}

TEST_CASE("bounds report is self-consistent") {
    const TriangleBounds b = triangle_bounds(unit_equilateral());
    CHECK(b.vertex_rho <= b.corollary_bound + 1e-12);
    CHECK(b.k_bound_edge_form >= b.k_bound_primary);
    CHECK(b.vdc_filled_level_rho == 0.5 * b.vdc_bound);
    CHECK(b.iso_quotient == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.kronecker_bound >= 9.938);
}
