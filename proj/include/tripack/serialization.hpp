#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tripack/bounded_voronoi.hpp"
#include "tripack/metrics.hpp"
#include "tripack/point_set.hpp"

namespace tripack {

/// 17-significant-digit decimal formatting, locale independent.
std::string format_double(double v);

nlohmann::json triangle_to_json(const Triangle& t);
Triangle triangle_from_json(const nlohmann::json& j);

/// Generator provenance recorded next to serialized point sets.
struct GeneratorMeta {
    std::string name;
    std::map<std::string, std::string> parameters;
};

std::string point_set_to_csv(const PointSet& ps);
std::vector<Point> points_from_csv(const std::string& text);

nlohmann::json point_set_to_json(const PointSet& ps, const GeneratorMeta& meta);
nlohmann::json diagram_to_json(const BoundedVoronoiDiagram& d);
nlohmann::json bounds_to_json(const Triangle& t, const TriangleBounds& b);

} // namespace tripack
