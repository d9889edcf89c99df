#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "latknot/graph.hpp"
#include "latknot/merge.hpp"

namespace latknot {

using json = nlohmann::ordered_json;

/// Reads a seed file: either a top-level array of polygons or an object
/// {"polygons": [...]}; each polygon is an array of [x,y,z] integer triples
/// (open cyclic list). Every polygon is validated; errors carry the polygon
/// index.
std::vector<LatticePolygon> load_seeds(const std::filesystem::path& path);

std::vector<LatticePolygon> parse_seeds(const json& doc);

/// Writes the object form {"polygons": [...]}.
void save_seeds(const std::vector<LatticePolygon>& polygons, const std::filesystem::path& path);

json polygon_json(const LatticePolygon& p);

/// Summary record for explore / induced runs. `construction` is "explore"
/// or "induced".
json summary_json(const ExplorationReport& report, const std::string& construction);

json merge_summary_json(const MergeReport& report);

json certificate_json(const PathCertificate& cert);

/// Serializes with a trailing newline and renames into place.
void write_json_atomic(const json& doc, const std::filesystem::path& path);

}  // namespace latknot
