#include "tripack/serialization.hpp"

#include <charconv>
#include <sstream>

namespace tripack {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

nlohmann::json triangle_to_json(const Triangle& t) {
    return nlohmann::json{{"A", {t.a().x, t.a().y}},
                          {"B", {t.b().x, t.b().y}},
                          {"C", {t.c().x, t.c().y}}};
}

Triangle triangle_from_json(const nlohmann::json& j) {
    auto pt = [&](const char* key) {
        const auto& v = j.at(key);
        return Point{v.at(0).get<double>(), v.at(1).get<double>()};
    };
    return Triangle(pt("A"), pt("B"), pt("C"));
}

std::string point_set_to_csv(const PointSet& ps) {
    std::string out = "index,x,y\n";
    for (size_t i = 0; i < ps.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_double(ps[i].x);
        out += ',';
        out += format_double(ps[i].y);
        out += '\n';
    }
    return out;
}

std::vector<Point> points_from_csv(const std::string& text) {
    std::vector<Point> out;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("index", 0) == 0) continue;  // header
        std::istringstream row(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() < 3) {
            throw Error("malformed CSV row " + std::to_string(lineno) + ": expected index,x,y");
        }
        try {
            out.push_back({std::stod(cells[1]), std::stod(cells[2])});
        } catch (const std::exception&) {
            throw Error("malformed CSV row " + std::to_string(lineno) + ": bad number");
        }
    }
    return out;
}

nlohmann::json point_set_to_json(const PointSet& ps, const GeneratorMeta& meta) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Point& p : ps.points()) pts.push_back({p.x, p.y});
    nlohmann::json params(meta.parameters);
    return nlohmann::json{{"triangle", triangle_to_json(ps.domain())},
                          {"generator", {{"name", meta.name}, {"parameters", params}}},
                          {"points", pts}};
}

nlohmann::json diagram_to_json(const BoundedVoronoiDiagram& d) {
    nlohmann::json sites = nlohmann::json::array();
    for (const Point& p : d.sites.points()) sites.push_back({p.x, p.y});

    auto candidates = [](const std::vector<CandidatePoint>& list) {
        nlohmann::json arr = nlohmann::json::array();
        for (const CandidatePoint& c : list) {
            arr.push_back({{"location", {c.location.x, c.location.y}},
                           {"empty_radius", c.empty_radius},
                           {"incident_sites", c.incident_sites}});
        }
        return arr;
    };

    nlohmann::json edges = nlohmann::json::array();
    for (const Segment& s : d.skeleton_edges) {
        edges.push_back({{s.a.x, s.a.y}, {s.b.x, s.b.y}});
    }

    nlohmann::json cells = nlohmann::json::array();
    for (const VoronoiCell& c : d.cells) {
        nlohmann::json poly = nlohmann::json::array();
        for (const Point& p : c.polygon) poly.push_back({p.x, p.y});
        cells.push_back({{"site", c.site}, {"polygon", poly}, {"area", c.area}});
    }

    return nlohmann::json{{"triangle", triangle_to_json(d.sites.domain())},
                          {"sites", sites},
                          {"interior_vertices", candidates(d.interior_vertices)},
                          {"boundary_intersections", candidates(d.boundary_intersections)},
                          {"skeleton_edges", edges},
                          {"cells", cells}};
}

nlohmann::json bounds_to_json(const Triangle& t, const TriangleBounds& b) {
    return nlohmann::json{{"triangle", triangle_to_json(t)},
                          {"vertex_q", b.vertex_q},
                          {"vertex_h", b.vertex_h},
                          {"vertex_rho", b.vertex_rho},
                          {"corollary_bound", b.corollary_bound},
                          {"k_bound_primary", b.k_bound_primary},
                          {"k_bound_edge_form", b.k_bound_edge_form},
                          {"vdc_bound", b.vdc_bound},
                          {"vdc_filled_level_rho", b.vdc_filled_level_rho},
                          {"kronecker_bound", b.kronecker_bound},
                          {"iso_quotient", b.iso_quotient}};
}

} // namespace tripack
