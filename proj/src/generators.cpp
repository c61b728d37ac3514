#include "tripack/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "tripack/bounded_voronoi.hpp"

namespace tripack {
namespace {

double uniform01(std::mt19937_64& eng) {
    // 53-bit mantissa; avoids the implementation-defined distribution adaptors
    // so fixed seeds reproduce bit-identical streams everywhere.
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

Point sample_uniform(const Triangle& t, std::mt19937_64& eng) {
    double u = uniform01(eng);
    double v = uniform01(eng);
    if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    return t.a() + u * (t.b() - t.a()) + v * (t.c() - t.a());
}

void validate_config(const RandomConfig& cfg) {
    if (!(cfg.inhibition_coefficient > 0.0)) throw Error("inhibition coefficient must be positive");
    if (!(cfg.shrink_factor > 0.0 && cfg.shrink_factor < 1.0)) throw Error("shrink factor must be in (0, 1)");
    if (cfg.max_attempts < 1) throw Error("max_attempts must be >= 1");
}

} // namespace

GreedyRun::GreedyRun(PointSet seeds)
    : ps_(std::move(seeds)), min_pair_dist_(std::numeric_limits<double>::infinity()) {
    if (ps_.size() < 1) throw InvalidCount("greedy packing needs at least one seed point");
    for (size_t i = 0; i < ps_.size(); ++i) {
        for (size_t j = i + 1; j < ps_.size(); ++j) {
            min_pair_dist_ = std::min(min_pair_dist_, distance(ps_[i], ps_[j]));
        }
    }
}

GreedyRun::Step GreedyRun::step() {
    const CoveringRadius cr = covering_radius_exact(ps_);
    for (size_t i = 0; i < ps_.size(); ++i) {
        min_pair_dist_ = std::min(min_pair_dist_, distance(ps_[i], cr.argmax));
    }
    ps_.push_back(cr.argmax);
    return {cr.argmax, cr.h};
}

void GreedyRun::run_until(size_t n) {
    while (ps_.size() < n) step();
}

PointSet vg_sequence(const Triangle& t, int n) {
    if (n < 3) throw InvalidCount("vg_sequence needs n >= 3");
    GreedyRun run(PointSet({t.a(), t.b(), t.c()}, t));
    run.run_until(static_cast<size_t>(n));
    return run.points();
}

PointSet greedy_packing(const PointSet& seeds, int n) {
    if (seeds.size() < 1) throw InvalidCount("greedy_packing needs at least one seed");
    if (n < static_cast<int>(seeds.size())) throw InvalidCount("n must be >= the seed count");
    GreedyRun run(seeds);
    run.run_until(static_cast<size_t>(n));
    return run.points();
}

PointSet vdc_sequence(const Triangle& t, int n) {
    if (n < 1) throw InvalidCount("vdc_sequence needs n >= 1");
    std::vector<Point> out;
    out.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        Point a = t.a(), b = t.b(), c = t.c();
        for (int i = k; i > 0; i /= 4) {
            const Point ab = 0.5 * (a + b);
            const Point bc = 0.5 * (b + c);
            const Point ca = 0.5 * (c + a);
            switch (i % 4) {
                case 0: a = bc; b = ca; c = ab; break;  // central subtriangle, reordered
                case 1: b = ab; c = ca; break;          // corner at A
                case 2: a = b; b = bc; c = ab; break;   // corner at B
                case 3: a = c; b = ca; c = bc; break;   // corner at C
            }
        }
        out.push_back((a + b + c) / 3.0);
    }
    return PointSet(std::move(out), t);
}

PointSet kronecker_lattice(const Triangle& t, int big_n, double alpha) {
    if (big_n < 2) throw InvalidCount("kronecker_lattice needs big_n >= 2");
    const double scale = 1.0 / std::sqrt(2.0 * big_n);
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    const int ring = static_cast<int>(std::ceil(std::sqrt(2.0 * big_n))) + 1;
    const AffineMap to_t = reference_map(t);
    const double tol = 1e-13;

    std::vector<Point> out;
    for (int k1 = -ring; k1 <= ring; ++k1) {
        for (int k2 = -ring; k2 <= ring; ++k2) {
            const double x = scale * (ca * k1 - sa * k2);
            const double y = scale * (sa * k1 + ca * k2);
            if (x < -tol || y < -tol || x + y > 1.0 + tol) continue;  // closed reference triangle
            out.push_back(to_t.apply({x, y}));
        }
    }
    return PointSet(std::move(out), t);
}

PointSet barycentric_grid_hybrid(const Triangle& t, int n) {
    if (n < 3) throw InvalidCount("barycentric_grid_hybrid needs n >= 3");
    int m = 1;
    while ((m + 2) * (m + 3) / 2 <= n) ++m;
    std::vector<Point> grid = barycentric_grid(t, m);
    if (static_cast<int>(grid.size()) == n) return PointSet(std::move(grid), t);
    GreedyRun run(PointSet(std::move(grid), t));
    run.run_until(static_cast<size_t>(n));
    return run.points();
}

PointSet iid_uniform(const Triangle& t, int n, const RandomConfig& cfg) {
    if (n < 1) throw InvalidCount("iid_uniform needs n >= 1");
    std::mt19937_64 eng(cfg.seed);
    std::vector<Point> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(sample_uniform(t, eng));
    return PointSet(std::move(out), t);
}

PointSet poisson_disk(const Triangle& t, int n, const RandomConfig& cfg, PoissonStats* stats) {
    if (n < 1) throw InvalidCount("poisson_disk needs n >= 1");
    validate_config(cfg);
    std::mt19937_64 eng(cfg.seed);
    const double area = std::abs(signed_area(t));
    double radius = cfg.inhibition_coefficient * std::sqrt(area / n);

    std::vector<Point> out;
    out.reserve(static_cast<size_t>(n));
    long attempts = 0;
    int consecutive_rejections = 0;
    while (static_cast<int>(out.size()) < n) {
        const Point cand = sample_uniform(t, eng);
        ++attempts;
        bool ok = true;
        for (const Point& p : out) {
            if (distance(p, cand) < radius) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(cand);
            consecutive_rejections = 0;
        } else if (++consecutive_rejections >= cfg.max_attempts) {
            radius *= cfg.shrink_factor;
            consecutive_rejections = 0;
        }
    }
    if (stats != nullptr) {
        stats->final_radius = radius;
        stats->total_attempts = attempts;
    }
    return PointSet(std::move(out), t);
}

} // namespace tripack
