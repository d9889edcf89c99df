#include "latknot/io.hpp"

#include <cmath>
#include <fstream>

namespace latknot {

namespace {

Point3 parse_triple(const json& entry, std::size_t polygon_index, std::size_t vertex_index) {
    const std::string where = "polygon " + std::to_string(polygon_index) + ", vertex " +
                              std::to_string(vertex_index);
    if (!entry.is_array() || entry.size() != 3)
        throw Error(Errc::parse_error, where + ": expected an [x,y,z] triple");
    Point3 p;
    for (int i = 0; i < 3; ++i) {
        if (!entry[i].is_number_integer())
            throw Error(Errc::parse_error, where + ": coordinates must be integers");
        p[i] = entry[i].get<std::int32_t>();
    }
    return p;
}

}  // namespace

std::vector<LatticePolygon> parse_seeds(const json& doc) {
    const json* list = &doc;
    if (doc.is_object()) {
        if (!doc.contains("polygons"))
            throw Error(Errc::parse_error, "object form needs a \"polygons\" field");
        list = &doc.at("polygons");
    }
    if (!list->is_array()) throw Error(Errc::parse_error, "expected an array of polygons");

    std::vector<LatticePolygon> out;
    out.reserve(list->size());
    for (std::size_t i = 0; i < list->size(); ++i) {
        const json& poly = (*list)[i];
        if (!poly.is_array())
            throw Error(Errc::parse_error, "polygon " + std::to_string(i) + ": expected an array");
        std::vector<Point3> verts;
        verts.reserve(poly.size());
        for (std::size_t v = 0; v < poly.size(); ++v) verts.push_back(parse_triple(poly[v], i, v));
        try {
            out.push_back(LatticePolygon::validate(std::move(verts)));
        } catch (const Error& e) {
            throw Error(Errc::invalid_seed, "polygon " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

std::vector<LatticePolygon> load_seeds(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, path.string() + ": " + e.what());
    }
    return parse_seeds(doc);
}

json polygon_json(const LatticePolygon& p) {
    json verts = json::array();
    for (Point3 v : p.vertices()) verts.push_back(json::array({v.x, v.y, v.z}));
    return verts;
}

void save_seeds(const std::vector<LatticePolygon>& polygons, const std::filesystem::path& path) {
    json doc;
    json list = json::array();
    for (const auto& p : polygons) list.push_back(polygon_json(p));
    doc["polygons"] = std::move(list);
    write_json_atomic(doc, path);
}

json summary_json(const ExplorationReport& report, const std::string& construction) {
    json doc;
    doc["mode"] = construction;
    doc["max_len"] = report.level;
    doc["mirror"] = report.mode == SymmetryMode::full;
    doc["cap"] = report.cap ? json(*report.cap) : json(nullptr);
    doc["capped"] = report.capped;
    doc["vertices"] = report.vertices;
    doc["edges"] = report.edges;
    doc["components"] = report.components;
    doc["component_sizes"] = report.component_sizes;
    return doc;
}

json merge_summary_json(const MergeReport& report) {
    json doc;
    doc["connected"] = report.connected;
    doc["status"] = merge_status_name(report.status);
    doc["max_len"] = report.level;
    doc["mirror"] = report.mode == SymmetryMode::full;
    doc["states_from_seed_1"] = report.states_from_seed_1;
    doc["states_from_seed_2"] = report.states_from_seed_2;
    doc["expanded"] = report.expanded;
    doc["runtime_seconds"] = std::round(report.runtime_seconds * 1000.0) / 1000.0;
    if (report.cap_hit)
        doc["cap_hit"] = *report.cap_hit == CapKind::state ? "state" : "time";
    return doc;
}

json certificate_json(const PathCertificate& cert) {
    json doc;
    doc["max_len"] = cert.level;
    doc["num_states"] = cert.states.size();
    doc["num_moves"] = cert.moves.size();
    doc["meeting_index"] = cert.meeting_index;
    doc["edge_lengths"] = cert.edge_lengths;
    json states = json::array();
    for (const auto& s : cert.states) states.push_back(polygon_json(s));
    doc["states"] = std::move(states);
    return doc;
}

namespace {

bool all_scalars(const json& arr) {
    for (const auto& v : arr)
        if (v.is_structured()) return false;
    return true;
}

// dump(2) layout, except arrays of plain scalars stay on one line, so
// coordinate triples and count lists read naturally.
void dump_pretty(std::ostream& out, const json& doc, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
    if (doc.is_object()) {
        out << "{\n";
        bool first = true;
        for (const auto& [key, value] : doc.items()) {
            if (!first) out << ",\n";
            first = false;
            out << inner << json(key).dump() << ": ";
            dump_pretty(out, value, depth + 1);
        }
        out << "\n" << pad << "}";
    } else if (doc.is_array() && !doc.empty() && !all_scalars(doc)) {
        out << "[\n";
        bool first = true;
        for (const auto& value : doc) {
            if (!first) out << ",\n";
            first = false;
            out << inner;
            dump_pretty(out, value, depth + 1);
        }
        out << "\n" << pad << "]";
    } else {
        out << doc.dump();
    }
}

}  // namespace

void write_json_atomic(const json& doc, const std::filesystem::path& path) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error(Errc::parse_error, "cannot write " + tmp.string());
        dump_pretty(out, doc, 0);
        out << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace latknot
