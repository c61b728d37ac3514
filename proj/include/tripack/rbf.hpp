#pragma once

#include <string>
#include <vector>

#include "tripack/point_set.hpp"

namespace tripack {

enum class KernelKind { gaussian, matern52, wendland_c2 };

/// Radial kernel with unit value at r = 0. The Wendland kernel is compactly
/// supported: identically zero for r >= lengthscale.
struct KernelSpec {
    KernelKind kind = KernelKind::gaussian;
    double lengthscale = 1.0;
};

double kernel_eval(const KernelSpec& k, double r);

/// ell = c * sqrt(area / n).
double lengthscale(double c, double area, int n);

enum class TestFunction { franke, fourier2d, ridge, runge };

double test_function_eval(TestFunction f, Point p);
std::vector<double> sample_test_function(TestFunction f, const std::vector<Point>& pts);

/// Fitted kernel interpolant S(x) = sum_i w_i phi(|x - x_i|).
struct Interpolant {
    PointSet nodes;
    std::vector<double> weights;
    KernelSpec kernel;
    double regularization_shift = 0.0;  // 0 when the plain factorization succeeded
    double node_residual = 0.0;         // max |S(x_i) - f_i| / value range
};

/// Solves the symmetric kernel system by Cholesky factorization. When the
/// factorization fails, retries with a diagonal shift starting at 1e-10 times
/// the largest diagonal entry and doubling up to 1e-4 of it; the applied
/// shift is recorded and solutions are refined against the unshifted system.
/// Throws SingularSystem when the ladder is exhausted or when no solution
/// meets the 1e-8 node-residual contract, and DimensionMismatch when
/// |values| != |nodes|.
Interpolant fit(const PointSet& nodes, const std::vector<double>& values, const KernelSpec& k);

std::vector<double> evaluate(const Interpolant& s, const std::vector<Point>& queries);

/// Root-mean-square error of S - f over the barycentric validation grid with
/// (resolution+1)(resolution+2)/2 points.
double e2_error(const Interpolant& s, TestFunction f, const Triangle& t, int grid_resolution);

/// Piecewise-constant predictor: each query takes the value of its nearest
/// node, ties broken toward the lowest node index.
std::vector<double> voronoi_nn_predict(const PointSet& p, const std::vector<double>& values,
                                       const std::vector<Point>& queries);

} // namespace tripack
