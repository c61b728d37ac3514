#pragma once

#include <cstdint>
#include <vector>

#include "tripack/point_set.hpp"

namespace tripack {

/// Parameters for the random generators. The inhibition coefficient, retry
/// budget and shrink factor apply to the Poisson-disk process only.
struct RandomConfig {
    uint64_t seed = 0;
    double inhibition_coefficient = 0.7;
    int max_attempts = 5000;
    double shrink_factor = 0.95;
};

/// Incremental farthest-point insertion. Each step computes the exact
/// covering radius of the current set and inserts its argmax (ties broken
/// lexicographically). The domain's vertices enter the candidate set exactly
/// while the current set does not contain all three of them.
class GreedyRun {
public:
    explicit GreedyRun(PointSet seeds);

    struct Step {
        Point inserted;
        double covering_before;  // h of the set the point was chosen against
    };

    Step step();
    void run_until(size_t n);

    const PointSet& points() const { return ps_; }
    size_t size() const { return ps_.size(); }

    /// Half the minimum pairwise distance, maintained incrementally.
    /// Infinite while the set has fewer than two points.
    double separation() const { return 0.5 * min_pair_dist_; }

private:
    PointSet ps_;
    double min_pair_dist_;
};

/// Farthest-point sequence seeded with the triangle's three vertices; the
/// first three points are (A, B, C) in that order. Requires n >= 3.
PointSet vg_sequence(const Triangle& t, int n);

/// Farthest-point extension of an arbitrary non-empty seed set to n points.
/// With seeds = {A, B, C} this reproduces vg_sequence exactly.
PointSet greedy_packing(const PointSet& seeds, int n);

/// Base-4 digit-recursive subtriangle centroid sequence; point k is obtained
/// by descending one subtriangle per base-4 digit of k (least significant
/// first) and taking the centroid. Requires n >= 1.
PointSet vdc_sequence(const Triangle& t, int n);

/// Rotated integer lattice scaled by 1/sqrt(2N), clipped to the closed
/// reference triangle and affinely mapped onto t. The output size is the
/// number of retained lattice points, generally different from big_n. Points
/// are ordered row-major over the integer lattice. Requires big_n >= 2.
PointSet kronecker_lattice(const Triangle& t, int big_n, double alpha);

/// Largest complete barycentric lattice with at most n points, extended to
/// exactly n by farthest-point insertion. Requires n >= 3.
PointSet barycentric_grid_hybrid(const Triangle& t, int n);

/// Independent uniform samples via the square-to-triangle fold. Deterministic
/// for a fixed seed. Requires n >= 1.
PointSet iid_uniform(const Triangle& t, int n, const RandomConfig& cfg);

struct PoissonStats {
    double final_radius = 0.0;
    long total_attempts = 0;
};

/// Sequential-inhibition (dart throwing) sampling: candidates closer than the
/// inhibition radius to an accepted point are rejected; after max_attempts
/// consecutive rejections the radius shrinks, so exactly n points are always
/// produced. Pairwise distances are at least the final radius.
PointSet poisson_disk(const Triangle& t, int n, const RandomConfig& cfg,
                      PoissonStats* stats = nullptr);

} // namespace tripack
