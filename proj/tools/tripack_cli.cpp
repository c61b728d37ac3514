// tripack command line: point-set generation, mesh-ratio sweeps, shape sweeps,
// kernel interpolation experiments and Voronoi diagram export.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tripack/bounded_voronoi.hpp"
#include "tripack/generators.hpp"
#include "tripack/metrics.hpp"
#include "tripack/parallel.hpp"
#include "tripack/rbf.hpp"
#include "tripack/serialization.hpp"

namespace {

using nlohmann::json;
using namespace tripack;

constexpr const char* kToolVersion = "0.1.0";

// Input problems that should exit with code 2 rather than 3.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CLI11 takes the arguments reversed and without the command name.
void parse_args(CLI::App& app, const std::vector<std::string>& argv) {
    std::vector<std::string> rev(argv.begin() + 1, argv.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
}

uint64_t mix_seed(uint64_t base, uint64_t row, uint64_t trial) {
    uint64_t z = base ^ (row * 0x9E3779B97F4A7C15ULL) ^ (trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double parse_angle(const std::string& text) {
    // accepts plain numbers plus "pi", "pi/4", "3pi/8" style fractions
    const size_t pos = text.find("pi");
    if (pos == std::string::npos) {
        try {
            return std::stod(text);
        } catch (const std::exception&) {
            throw UsageError("cannot parse angle '" + text + "'");
        }
    }
    double num = 1.0;
    double den = 1.0;
    const std::string head = text.substr(0, pos);
    const std::string tail = text.substr(pos + 2);
    try {
        if (!head.empty()) num = std::stod(head);
        if (!tail.empty()) {
            if (tail[0] != '/') throw UsageError("cannot parse angle '" + text + "'");
            den = std::stod(tail.substr(1));
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("cannot parse angle '" + text + "'");
    }
    return num * M_PI / den;
}

Triangle parse_triangle(const std::string& spec) {
    if (spec == "equilateral") {
        return Triangle({0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0});
    }
    if (spec == "reference") return reference_triangle();
    if (spec == "skinny" || spec == "skinny-fig5") {
        return Triangle({0.0, 0.0}, {1.0, 0.0}, {0.028, 0.045});
    }
    std::vector<Point> pts;
    std::stringstream in(spec);
    std::string part;
    while (std::getline(in, part, ';')) {
        const size_t comma = part.find(',');
        if (comma == std::string::npos) throw UsageError("triangle spec: expected 'x,y;x,y;x,y'");
        try {
            pts.push_back({std::stod(part.substr(0, comma)), std::stod(part.substr(comma + 1))});
        } catch (const std::exception&) {
            throw UsageError("triangle spec: bad coordinate in '" + part + "'");
        }
    }
    if (pts.size() != 3) throw UsageError("triangle spec: expected three vertices");
    try {
        return Triangle(pts[0], pts[1], pts[2]);
    } catch (const DegenerateTriangle& e) {
        throw UsageError(std::string("triangle spec: ") + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw UsageError("cannot parse integer list '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
}

void write_manifest(const std::string& prefix, const std::string& command,
                    const std::vector<std::string>& argv, const json& parameters,
                    const std::vector<std::string>& outputs, const json& extra) {
    json m{{"tool", "tripack"},
           {"version", kToolVersion},
           {"command", command},
           {"argv", argv},
           {"parameters", parameters},
           {"outputs", outputs}};
    for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
    write_file(prefix + ".manifest.json", m.dump(2) + "\n");
}

struct GeneratorRequest {
    std::string name;     // vg, vdc, kronecker, grid, iid, poisson
    Triangle triangle;
    uint64_t seed = 0;
    double alpha = 3.0 * M_PI / 8.0;
};

bool is_random_generator(const std::string& name) { return name == "iid" || name == "poisson"; }

// For the rotated lattice, n is the size parameter, not the exact output size.
PointSet run_generator(const GeneratorRequest& req, int n) {
    RandomConfig cfg;
    cfg.seed = req.seed;
    if (req.name == "vg") return vg_sequence(req.triangle, n);
    if (req.name == "vdc") return vdc_sequence(req.triangle, n);
    if (req.name == "kronecker") return kronecker_lattice(req.triangle, n, req.alpha);
    if (req.name == "grid") return barycentric_grid_hybrid(req.triangle, n);
    if (req.name == "iid") return iid_uniform(req.triangle, n, cfg);
    if (req.name == "poisson") return poisson_disk(req.triangle, n, cfg);
    throw UsageError("unknown generator '" + req.name + "'");
}

// Rotated lattice with realized size as close to n as possible (smaller
// parameter wins ties); used where an exact point count is requested.
PointSet kronecker_near(const Triangle& t, int n, double alpha) {
    PointSet best = kronecker_lattice(t, std::max(2, n), alpha);
    int best_gap = std::abs(static_cast<int>(best.size()) - n);
    for (int par = std::max(2, n / 2); par <= 2 * n + 4 && best_gap > 0; ++par) {
        const PointSet cand = kronecker_lattice(t, par, alpha);
        const int gap = std::abs(static_cast<int>(cand.size()) - n);
        if (gap < best_gap) {
            best = cand;
            best_gap = gap;
        }
    }
    return best;
}

// ---------------------------------------------------------------- generate

int cmd_generate(const std::vector<std::string>& argv, CLI::App& app) {
    std::string gen, tri_spec, out, format = "csv", alpha_text = "3pi/8";
    int n = 0;
    uint64_t seed = 0;
    app.add_option("--gen", gen, "vg|vdc|kronecker|grid|iid|poisson")->required();
    app.add_option("--triangle", tri_spec, "preset or 'x,y;x,y;x,y'")->required();
    app.add_option("--n", n, "point count (size parameter for kronecker)")->required();
    app.add_option("--seed", seed, "random seed");
    app.add_option("--alpha", alpha_text, "rotation angle, e.g. 3pi/8");
    app.add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out, "output prefix")->required();
    parse_args(app, argv);

    GeneratorRequest req{gen, parse_triangle(tri_spec), seed, parse_angle(alpha_text)};
    const PointSet ps = run_generator(req, n);

    GeneratorMeta meta;
    meta.name = gen;
    meta.parameters["n"] = std::to_string(n);
    meta.parameters["triangle"] = tri_spec;
    if (is_random_generator(gen)) meta.parameters["seed"] = std::to_string(seed);
    if (gen == "kronecker") meta.parameters["alpha"] = alpha_text;

    std::vector<std::string> outputs;
    if (format == "csv") {
        write_file(out + ".csv", point_set_to_csv(ps));
        outputs.push_back(out + ".csv");
    } else {
        write_file(out + ".points.json", point_set_to_json(ps, meta).dump(2) + "\n");
        outputs.push_back(out + ".points.json");
    }
    json extra{{"point_count", ps.size()}};
    if (gen == "poisson") {
        RandomConfig cfg;
        cfg.seed = seed;
        PoissonStats stats;
        poisson_disk(req.triangle, n, cfg, &stats);
        extra["final_radius"] = stats.final_radius;
        extra["inhibition_coefficient"] = cfg.inhibition_coefficient;
        extra["shrink_factor"] = cfg.shrink_factor;
        extra["max_attempts"] = cfg.max_attempts;
    }
    json params{{"gen", gen}, {"triangle", tri_spec}, {"n", n},
                {"seed", seed}, {"alpha", alpha_text}, {"format", format}};
    write_manifest(out, "generate", argv, params, outputs, extra);
    return 0;
}

// ---------------------------------------------------------------- mesh-sweep

struct SweepRow {
    int n = 0;
    double q = 0.0, h = 0.0, rho = 0.0;
};

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "n,q,h,rho\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.n) + "," + format_double(r.q) + "," + format_double(r.h) + "," +
               format_double(r.rho) + "\n";
    }
    return out;
}

// Per-prefix stats of a sequence generator; one covering-radius solve per n.
std::vector<SweepRow> nested_sweep(const PointSet& seq, int n_from) {
    const int n_max = static_cast<int>(seq.size());
    std::vector<double> q(n_max + 1, 0.0);
    double min_pair = std::numeric_limits<double>::infinity();
    for (int m = 1; m < n_max; ++m) {
        for (int i = 0; i < m; ++i) min_pair = std::min(min_pair, distance(seq[i], seq[m]));
        q[m + 1] = 0.5 * min_pair;
    }
    std::vector<SweepRow> rows(n_max - n_from + 1);
    parallel_for(rows.size(), [&](size_t idx) {
        const int n = n_from + static_cast<int>(idx);
        const double h = covering_radius_exact(seq.prefix(n)).h;
        rows[idx] = {n, q[n], h, h / q[n]};
    });
    return rows;
}

int cmd_mesh_sweep(const std::vector<std::string>& argv, CLI::App& app) {
    std::string gen, tri_spec, out, alpha_text = "3pi/8";
    int n_max = 0, trials = 100;
    uint64_t seed = 0;
    app.add_option("--gen", gen, "vg|vdc|kronecker|grid|iid|poisson")->required();
    app.add_option("--triangle", tri_spec, "preset or 'x,y;x,y;x,y'")->required();
    app.add_option("--n-max", n_max, "largest point count")->required();
    app.add_option("--trials", trials, "trials for random generators (mean is reported)");
    app.add_option("--seed", seed, "base random seed");
    app.add_option("--alpha", alpha_text, "rotation angle for kronecker");
    app.add_option("--out", out, "output prefix")->required();
    parse_args(app, argv);
    if (n_max < 3) throw UsageError("--n-max must be at least 3");

    const Triangle tri = parse_triangle(tri_spec);
    const double alpha = parse_angle(alpha_text);
    std::vector<SweepRow> rows;
    json extra;

    if (gen == "vg") {
        rows = nested_sweep(vg_sequence(tri, n_max), 3);
    } else if (gen == "vdc") {
        rows = nested_sweep(vdc_sequence(tri, n_max), 3);
    } else if (gen == "grid") {
        rows.resize(n_max - 3 + 1);
        parallel_for(rows.size(), [&](size_t idx) {
            const int n = 3 + static_cast<int>(idx);
            const MeshStats ms = mesh_stats(barycentric_grid_hybrid(tri, n));
            rows[idx] = {n, ms.separation, ms.covering, ms.ratio};
        });
        extra["regenerated_per_n"] = true;
    } else if (gen == "kronecker") {
        // one row per size parameter; n reports the realized point count
        rows.resize(n_max - 2 + 1);
        parallel_for(rows.size(), [&](size_t idx) {
            const int par = 2 + static_cast<int>(idx);
            const PointSet ps = kronecker_lattice(tri, par, alpha);
            if (ps.size() < 2) {
                rows[idx] = {static_cast<int>(ps.size()), 0.0, 0.0, 0.0};
                return;
            }
            const MeshStats ms = mesh_stats(ps);
            rows[idx] = {static_cast<int>(ps.size()), ms.separation, ms.covering, ms.ratio};
        });
        extra["regenerated_per_n"] = true;
        extra["n_is_realized_size"] = true;
    } else if (is_random_generator(gen)) {
        rows.resize(n_max - 3 + 1);
        parallel_for(rows.size(), [&](size_t idx) {
            const int n = 3 + static_cast<int>(idx);
            double sq = 0.0, sh = 0.0, srho = 0.0;
            for (int trial = 0; trial < trials; ++trial) {
                RandomConfig cfg;
                cfg.seed = mix_seed(seed, static_cast<uint64_t>(n), trial);
                const PointSet ps = (gen == "iid") ? iid_uniform(tri, n, cfg)
                                                   : poisson_disk(tri, n, cfg);
                const MeshStats ms = mesh_stats(ps);
                sq += ms.separation;
                sh += ms.covering;
                srho += ms.ratio;
            }
            rows[idx] = {n, sq / trials, sh / trials, srho / trials};
        });
        extra["trials"] = trials;
    } else {
        throw UsageError("unknown generator '" + gen + "'");
    }

    write_file(out + ".csv", sweep_csv(rows));
    json params{{"gen", gen},   {"triangle", tri_spec}, {"n_max", n_max},
                {"trials", trials}, {"seed", seed},     {"alpha", alpha_text}};
    write_manifest(out, "mesh-sweep", argv, params, {out + ".csv"}, extra);
    return 0;
}

// ---------------------------------------------------------------- shape-sweep

int cmd_shape_sweep(const std::vector<std::string>& argv, CLI::App& app) {
    int alpha_steps = 0, beta_steps = 0;
    std::string out, n_list_text = "10,20,50";
    double min_j = 1e-4;
    app.add_option("--alpha-steps", alpha_steps, "alpha grid steps")->required();
    app.add_option("--beta-steps", beta_steps, "beta grid steps")->required();
    app.add_option("--n-list", n_list_text, "sizes for the mesh-ratio columns");
    app.add_option("--min-j", min_j, "smallest admitted isoperimetric quotient");
    app.add_option("--out", out, "output prefix")->required();
    parse_args(app, argv);
    if (alpha_steps < 2 || beta_steps < 2) throw UsageError("need at least 2 steps per angle");
    const std::vector<int> n_list = parse_int_list(n_list_text);

    struct Task {
        double alpha, beta;
        Triangle tri;
    };
    std::vector<Task> tasks;
    for (int i = 1; i <= alpha_steps; ++i) {
        for (int j = 1; j <= beta_steps; ++j) {
            const double alpha = i * M_PI / (alpha_steps + 1);
            const double beta = j * M_PI / (beta_steps + 1);
            if (!(alpha + beta < M_PI - 1e-12)) continue;
            const Triangle tri = triangle_from_angles(alpha, beta);
            if (isoperimetric_quotient(tri) < min_j) continue;
            tasks.push_back({alpha, beta, tri});
        }
    }

    const int n_list_max = *std::max_element(n_list.begin(), n_list.end());
    std::vector<std::string> rows(tasks.size());
    parallel_for(tasks.size(), [&](size_t idx) {
        const Task& task = tasks[idx];
        const TriangleBounds b = triangle_bounds(task.tri);
        const int horizon = static_cast<int>(b.k_bound_primary) + 1;
        const auto ek = empirical_k(task.tri, std::max(horizon, n_list_max));

        const int biggest = std::max(n_list_max, 3);
        const PointSet seq = vg_sequence(task.tri, biggest);
        std::string row = format_double(task.alpha) + "," + format_double(task.beta) + "," +
                          format_double(b.iso_quotient) + "," + format_double(b.vertex_rho) + "," +
                          format_double(b.corollary_bound) + "," +
                          std::to_string(b.k_bound_primary) + "," +
                          std::to_string(b.k_bound_edge_form) + "," +
                          (ek ? std::to_string(*ek) : "unreached");
        for (const int n : n_list) {
            row += "," + format_double(mesh_ratio(seq.prefix(n)));
        }
        rows[idx] = row + "\n";
    });

    std::string csv = "alpha,beta,J,vertex_rho,corollary_bound,k_primary,k_edge,empirical_k";
    for (const int n : n_list) csv += ",rho_n" + std::to_string(n);
    csv += "\n";
    for (const std::string& r : rows) csv += r;
    write_file(out + ".csv", csv);

    json params{{"alpha_steps", alpha_steps}, {"beta_steps", beta_steps},
                {"n_list", n_list_text},      {"min_j", min_j}};
    write_manifest(out, "shape-sweep", argv, params, {out + ".csv"},
                   json{{"rows", rows.size()}});
    return 0;
}

// ---------------------------------------------------------------- rbf

int cmd_rbf(const std::vector<std::string>& argv, CLI::App& app) {
    std::string func_name, kernel_name, out, gens_text = "vg,grid,vdc,kronecker,iid,poisson";
    std::string n_list_text = "45,105,210", tri_spec = "equilateral", alpha_text = "3pi/8";
    double c = 4.0;
    int seeds = 20, resolution = 120;
    uint64_t seed = 0;
    app.add_option("--function", func_name, "franke|fourier2d|ridge|runge")->required();
    app.add_option("--kernel", kernel_name, "gaussian|matern52|wendland")->required();
    app.add_option("--c", c, "lengthscale coefficient")->required();
    app.add_option("--generators", gens_text, "comma list of generators");
    app.add_option("--n-list", n_list_text, "node counts");
    app.add_option("--triangle", tri_spec, "domain triangle");
    app.add_option("--alpha", alpha_text, "kronecker rotation angle");
    app.add_option("--seeds", seeds, "seed count for random generators");
    app.add_option("--seed", seed, "base random seed");
    app.add_option("--resolution", resolution, "validation grid resolution");
    app.add_option("--out", out, "output prefix")->required();
    parse_args(app, argv);

    TestFunction func;
    if (func_name == "franke") func = TestFunction::franke;
    else if (func_name == "fourier2d") func = TestFunction::fourier2d;
    else if (func_name == "ridge") func = TestFunction::ridge;
    else if (func_name == "runge") func = TestFunction::runge;
    else throw UsageError("unknown test function '" + func_name + "'");

    KernelKind kind;
    if (kernel_name == "gaussian") kind = KernelKind::gaussian;
    else if (kernel_name == "matern52") kind = KernelKind::matern52;
    else if (kernel_name == "wendland" || kernel_name == "wendland_c2") kind = KernelKind::wendland_c2;
    else throw UsageError("unknown kernel '" + kernel_name + "'");

    const Triangle tri = parse_triangle(tri_spec);
    const double alpha = parse_angle(alpha_text);
    const double area = std::abs(signed_area(tri));
    const std::vector<int> n_list = parse_int_list(n_list_text);

    std::vector<std::string> gens;
    {
        std::stringstream in(gens_text);
        std::string part;
        while (std::getline(in, part, ',')) gens.push_back(part);
    }
    for (const std::string& g : gens) {
        if (g != "vg" && g != "grid" && g != "vdc" && g != "kronecker" && !is_random_generator(g)) {
            throw UsageError("unknown generator '" + g + "'");
        }
    }

    struct Cell {
        std::string gen;
        int n;
    };
    std::vector<Cell> cells;
    for (const std::string& g : gens) {
        for (const int n : n_list) cells.push_back({g, n});
    }

    std::vector<std::string> rows(cells.size());
    parallel_for(cells.size(), [&](size_t idx) {
        const Cell& cell = cells[idx];
        auto fit_once = [&](const PointSet& nodes, double& e2, double& shift, double& residual) {
            const KernelSpec spec{kind, lengthscale(c, area, static_cast<int>(nodes.size()))};
            const Interpolant s = fit(nodes, sample_test_function(func, nodes.points()), spec);
            e2 = e2_error(s, func, tri, resolution);
            shift = s.regularization_shift;
            residual = s.node_residual;
        };

        double e2 = 0.0, shift = 0.0, residual = 0.0, ell = 0.0;
        size_t actual_n = 0;
        int seeds_used = 0;
        std::string status = "ok";
        try {
            if (is_random_generator(cell.gen)) {
                // solver failures are seed-local; the mean runs over the
                // completed draws and the count is recorded
                double acc_e2 = 0.0;
                for (int s = 0; s < seeds; ++s) {
                    RandomConfig cfg;
                    cfg.seed = mix_seed(seed, idx, s);
                    const PointSet nodes = (cell.gen == "iid")
                                               ? iid_uniform(tri, cell.n, cfg)
                                               : poisson_disk(tri, cell.n, cfg);
                    try {
                        double one_e2, one_shift, one_res;
                        fit_once(nodes, one_e2, one_shift, one_res);
                        acc_e2 += one_e2;
                        shift = std::max(shift, one_shift);
                        residual = std::max(residual, one_res);
                        ++seeds_used;
                    } catch (const SingularSystem&) {
                    }
                }
                if (seeds_used == 0) throw SingularSystem("no random draw produced a solvable system");
                e2 = acc_e2 / seeds_used;
                actual_n = static_cast<size_t>(cell.n);
            } else {
                PointSet nodes = (cell.gen == "vg")     ? vg_sequence(tri, cell.n)
                                 : (cell.gen == "grid") ? barycentric_grid_hybrid(tri, cell.n)
                                 : (cell.gen == "vdc")  ? vdc_sequence(tri, cell.n)
                                                        : kronecker_near(tri, cell.n, alpha);
                actual_n = nodes.size();
                fit_once(nodes, e2, shift, residual);
            }
            ell = lengthscale(c, area, static_cast<int>(actual_n));
        } catch (const Error&) {
            status = "failed";
        }
        rows[idx] = cell.gen + "," + std::to_string(cell.n) + "," + kernel_name + "," +
                    format_double(c) + "," + func_name + "," + format_double(ell) + "," +
                    format_double(shift) + "," + format_double(e2) + "," +
                    format_double(residual) + "," + status + "," + std::to_string(actual_n) + "," +
                    std::to_string(seeds_used) + "\n";
    });

    std::string csv =
        "generator,n,kernel,c,test_function,ell,shift,e2,residual,status,actual_n,seeds_used\n";
    for (const std::string& r : rows) csv += r;
    write_file(out + ".csv", csv);

    json params{{"function", func_name}, {"kernel", kernel_name}, {"c", c},
                {"generators", gens_text}, {"n_list", n_list_text}, {"triangle", tri_spec},
                {"seeds", seeds}, {"seed", seed}, {"resolution", resolution},
                {"alpha", alpha_text}};
    write_manifest(out, "rbf", argv, params, {out + ".csv"},
                   json{{"rows", rows.size()}});
    return 0;
}

// ---------------------------------------------------------------- voronoi-dump

int cmd_voronoi_dump(const std::vector<std::string>& argv, CLI::App& app) {
    std::string points_path, tri_spec, out;
    app.add_option("--points", points_path, "CSV of index,x,y rows")->required();
    app.add_option("--triangle", tri_spec, "domain triangle")->required();
    app.add_option("--out", out, "output prefix")->required();
    parse_args(app, argv);

    std::ifstream in(points_path, std::ios::binary);
    if (!in) throw UsageError("cannot open points file '" + points_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();

    const Triangle tri = parse_triangle(tri_spec);
    std::vector<Point> pts;
    try {
        pts = points_from_csv(buf.str());
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (pts.empty()) throw UsageError("points file contains no rows");

    const BoundedVoronoiDiagram d = build_bounded_voronoi(PointSet(pts, tri));
    write_file(out + ".voronoi.json", diagram_to_json(d).dump(2) + "\n");

    json params{{"points", points_path}, {"triangle", tri_spec}};
    write_manifest(out, "voronoi-dump", argv, params, {out + ".voronoi.json"},
                   json{{"site_count", pts.size()}});
    return 0;
}

int dispatch(const std::vector<std::string>& argv);

int cmd_replay(const std::vector<std::string>& argv, CLI::App& app) {
    std::string manifest_path;
    app.add_option("manifest", manifest_path, "manifest JSON produced by a previous run")->required();
    parse_args(app, argv);

    std::ifstream in(manifest_path, std::ios::binary);
    if (!in) throw UsageError("cannot open manifest '" + manifest_path + "'");
    json m;
    try {
        in >> m;
    } catch (const std::exception& e) {
        throw UsageError(std::string("manifest parse: ") + e.what());
    }
    if (!m.contains("argv")) throw UsageError("manifest lacks an argv record");
    return dispatch(m["argv"].get<std::vector<std::string>>());
}

int dispatch(const std::vector<std::string>& argv) {
    if (argv.empty()) throw UsageError("missing subcommand");
    const std::string cmd = argv[0];
    CLI::App app{"quasi-uniform point sets on triangles", "tripack " + cmd};
    if (cmd == "generate") return cmd_generate(argv, app);
    if (cmd == "mesh-sweep") return cmd_mesh_sweep(argv, app);
    if (cmd == "shape-sweep") return cmd_shape_sweep(argv, app);
    if (cmd == "rbf") return cmd_rbf(argv, app);
    if (cmd == "voronoi-dump") return cmd_voronoi_dump(argv, app);
    if (cmd == "replay") return cmd_replay(argv, app);
    throw UsageError("unknown subcommand '" + cmd + "'");
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        std::cout << "tripack " << kToolVersion << "\n"
                  << "usage: tripack <command> [options]\n\n"
                  << "commands:\n"
                  << "  generate      write one point set (CSV or JSON) plus a manifest\n"
                  << "  mesh-sweep    mesh ratio q, h, rho per point count\n"
                  << "  shape-sweep   per-triangle bounds over an angle grid\n"
                  << "  rbf           kernel interpolation error sweep\n"
                  << "  voronoi-dump  clipped Voronoi diagram as JSON\n"
                  << "  replay        re-run a command from its manifest\n\n"
                  << "run 'tripack <command> --help' for the command's options\n";
        return args.empty() ? 2 : 0;
    }
    try {
        return dispatch(args);
    } catch (const CLI::CallForHelp& e) {
        std::cout << e.what() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "tripack: argument error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "tripack: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "tripack: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "tripack: unexpected error: " << e.what() << "\n";
        return 3;
    }
}
