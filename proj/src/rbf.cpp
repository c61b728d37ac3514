#include "tripack/rbf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace tripack {

double kernel_eval(const KernelSpec& k, double r) {
    const double s = r / k.lengthscale;
    switch (k.kind) {
        case KernelKind::gaussian:
            return std::exp(-s * s);
        case KernelKind::matern52: {
            const double u = std::sqrt(5.0) * s;
            return (1.0 + u + (5.0 / 3.0) * s * s) * std::exp(-u);
        }
        case KernelKind::wendland_c2: {
            if (s >= 1.0) return 0.0;
            const double w = 1.0 - s;
            const double w2 = w * w;
            return w2 * w2 * (4.0 * s + 1.0);
        }
    }
    return 0.0;
}

double lengthscale(double c, double area, int n) {
    if (!(c > 0.0) || !(area > 0.0) || n < 1) throw Error("lengthscale needs c > 0, area > 0, n >= 1");
    return c * std::sqrt(area / n);
}

double test_function_eval(TestFunction f, Point p) {
    const double x = p.x, y = p.y;
    switch (f) {
        case TestFunction::franke:
            return 0.75 * std::exp(-((9 * x - 2) * (9 * x - 2) + (9 * y - 2) * (9 * y - 2)) / 4.0) +
                   0.75 * std::exp(-((9 * x + 1) * (9 * x + 1) / 49.0 + (9 * y + 1) / 10.0)) +
                   0.5 * std::exp(-((9 * x - 7) * (9 * x - 7) + (9 * y - 3) * (9 * y - 3)) / 4.0) -
                   0.2 * std::exp(-((9 * x - 4) * (9 * x - 4) + (9 * y - 7) * (9 * y - 7)));
        case TestFunction::fourier2d:
            return std::sin(9.0 * M_PI * x) * std::cos(9.0 * M_PI * y);
        case TestFunction::ridge:
            return std::atan(2.0 * (x + 3.0 * y - 1.0)) / std::atan(2.0 * (std::sqrt(10.0) + 1.0));
        case TestFunction::runge:
            return 25.0 / (25.0 + (x - 0.2) * (x - 0.2) + 2.0 * y * y);
    }
    return 0.0;
}

std::vector<double> sample_test_function(TestFunction f, const std::vector<Point>& pts) {
    std::vector<double> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back(test_function_eval(f, p));
    return out;
}

namespace {

double value_scale(const std::vector<double>& values) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double amax = 0.0;
    for (const double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        amax = std::max(amax, std::abs(v));
    }
    const double range = hi - lo;
    return std::max({range, amax, 1e-300});
}

// Node residual phi*w - f accumulated in long double: near the conditioning
// limit the weights are large and a double-precision matrix-vector product
// would floor the measurable residual around 1e-8 of the data scale.
Eigen::VectorXd residual_ld(const Eigen::MatrixXd& phi, const Eigen::VectorXd& w,
                            const Eigen::VectorXd& f) {
    const int n = static_cast<int>(phi.rows());
    Eigen::VectorXd r(n);
    for (int i = 0; i < n; ++i) {
        long double acc = 0.0L;
        for (int j = 0; j < n; ++j) {
            acc += static_cast<long double>(phi(i, j)) * w(j);
        }
        r(i) = static_cast<double>(static_cast<long double>(f(i)) - acc);
    }
    return r;
}

} // namespace

Interpolant fit(const PointSet& nodes, const std::vector<double>& values, const KernelSpec& k) {
    const int n = static_cast<int>(nodes.size());
    if (n < 1) throw TooFewPoints("fit needs at least one node");
    if (static_cast<int>(values.size()) != n) {
        throw DimensionMismatch("node and value counts differ");
    }

    Eigen::MatrixXd phi(n, n);
    for (int i = 0; i < n; ++i) {
        phi(i, i) = kernel_eval(k, 0.0);
        for (int j = i + 1; j < n; ++j) {
            const double v = kernel_eval(k, distance(nodes[i], nodes[j]));
            phi(i, j) = v;
            phi(j, i) = v;
        }
    }
    Eigen::VectorXd f(n);
    for (int i = 0; i < n; ++i) f(i) = values[i];

    const double max_diag = phi.diagonal().maxCoeff();
    const double scale = value_scale(values);

    // Refine a candidate solution against the unshifted system, reusing the
    // factorization that produced it; keeps node residuals at the arithmetic
    // floor even when the factorization was shifted or merely semi-definite.
    auto refine = [&](Eigen::VectorXd w, auto&& solve) {
        Eigen::VectorXd best = w;
        Eigen::VectorXd r = residual_ld(phi, w, f);
        double best_res = r.cwiseAbs().maxCoeff();
        int stalled = 0;
        for (int it = 0; it < 100 && best_res > 1e-12 * scale; ++it) {
            w += solve(r);
            r = residual_ld(phi, w, f);
            const double res = r.cwiseAbs().maxCoeff();
            if (res < best_res) {
                best_res = res;
                best = w;
                stalled = 0;
            } else if (++stalled >= 3) {
                break;
            }
        }
        return std::make_pair(best, best_res);
    };

    double shift = 0.0;
    Eigen::VectorXd w;
    bool solved = false;
    while (true) {
        Eigen::MatrixXd sys = phi;
        if (shift > 0.0) sys.diagonal().array() += shift;
        Eigen::LLT<Eigen::MatrixXd> llt(sys);
        if (llt.info() == Eigen::Success) {
            const Eigen::VectorXd w0 = llt.solve(f);
            if (w0.allFinite()) {
                auto [wr, res] = refine(w0, [&](const Eigen::VectorXd& r) { return llt.solve(r); });
                w = wr;
                solved = true;
                if (shift > 0.0 && res > 1e-9 * scale) {
                    // The shifted preconditioner contracts too slowly near the
                    // conditioning limit; a pivoted factorization of the plain
                    // system usually refines further.
                    Eigen::LDLT<Eigen::MatrixXd> ldlt(phi);
                    if (ldlt.info() == Eigen::Success) {
                        const Eigen::VectorXd w1 = ldlt.solve(f);
                        if (w1.allFinite()) {
                            auto [wl, res_l] =
                                refine(w1, [&](const Eigen::VectorXd& r) { return ldlt.solve(r); });
                            if (res_l < res) {
                                w = wl;
                                shift = 0.0;
                            }
                        }
                    }
                }
                break;
            }
        }
        shift = (shift == 0.0) ? 1e-10 * max_diag : 2.0 * shift;
        if (shift > 1e-4 * max_diag) break;
    }
    if (!solved) throw SingularSystem("kernel system factorization failed at every shift level");

    Interpolant out{nodes, std::vector<double>(w.data(), w.data() + n), k, shift, 0.0};
    out.node_residual = residual_ld(phi, w, f).cwiseAbs().maxCoeff() / scale;
    if (out.node_residual > 1e-8) {
        // The weights are so large that double arithmetic cannot reproduce the
        // training values to the contracted accuracy; the solve has failed
        // even though a factorization went through.
        throw SingularSystem("node residual " + std::to_string(out.node_residual) +
                             " exceeds the interpolant contract");
    }
    return out;
}

std::vector<double> evaluate(const Interpolant& s, const std::vector<Point>& queries) {
    std::vector<double> out;
    out.reserve(queries.size());
    const auto& nodes = s.nodes.points();
    for (const Point& q : queries) {
        double acc = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) {
            acc += s.weights[i] * kernel_eval(s.kernel, distance(q, nodes[i]));
        }
        out.push_back(acc);
    }
    return out;
}

double e2_error(const Interpolant& s, TestFunction f, const Triangle& t, int grid_resolution) {
    const std::vector<Point> grid = barycentric_grid(t, grid_resolution);
    const std::vector<double> pred = evaluate(s, grid);
    double acc = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double d = pred[i] - test_function_eval(f, grid[i]);
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(grid.size()));
}

std::vector<double> voronoi_nn_predict(const PointSet& p, const std::vector<double>& values,
                                       const std::vector<Point>& queries) {
    if (p.size() < 1) throw TooFewPoints("predictor needs at least one node");
    if (values.size() != p.size()) throw DimensionMismatch("node and value counts differ");
    std::vector<double> out;
    out.reserve(queries.size());
    for (const Point& q : queries) {
        size_t best = 0;
        double bd = distance(q, p[0]);
        for (size_t i = 1; i < p.size(); ++i) {
            const double d = distance(q, p[i]);
            if (d < bd) {  // strict: ties keep the lowest index
                bd = d;
                best = i;
            }
        }
        out.push_back(values[best]);
    }
    return out;
}

} // namespace tripack
