#include "latknot/polygon.hpp"

#include <algorithm>
#include <unordered_set>

namespace latknot {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_closed: return "not_closed";
        case Errc::self_intersecting: return "self_intersecting";
        case Errc::too_short: return "too_short";
        case Errc::odd_length: return "odd_length";
        case Errc::malformed_key: return "malformed_key";
        case Errc::seed_too_long: return "seed_too_long";
        case Errc::invalid_seed: return "invalid_seed";
        case Errc::illegal_move: return "illegal_move";
        case Errc::not_connected: return "not_connected";
        case Errc::not_nested: return "not_nested";
        case Errc::unknown_entries: return "unknown_entries";
        case Errc::invalid_braid_word: return "invalid_braid_word";
        case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

LatticePolygon LatticePolygon::validate(std::vector<Point3> vertices) {
    if (vertices.empty()) throw Error(Errc::too_short, "empty vertex list");

    // Duplicates first, so an explicitly repeated start vertex reports
    // self-intersection rather than a zero closing step.
    std::unordered_set<Point3, Point3Hash> seen(vertices.size() * 2);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!seen.insert(vertices[i]).second)
            throw Error(Errc::self_intersecting,
                        "duplicate vertex at index " + std::to_string(i));
    }

    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point3 a = vertices[i];
        const Point3 b = vertices[(i + 1) % n];
        if (!is_unit_step(a, b))
            throw Error(Errc::not_closed,
                        "step from vertex " + std::to_string(i) + " is not a unit lattice edge");
    }

    if (n < 4) throw Error(Errc::too_short, "polygon has length " + std::to_string(n) + " < 4");
    if (n % 2 != 0) throw Error(Errc::odd_length, "polygon has odd length " + std::to_string(n));

    return LatticePolygon(std::move(vertices));
}

std::vector<Direction> edge_directions(const LatticePolygon& p) {
    const auto& v = p.vertices();
    const std::size_t n = v.size();
    std::vector<Direction> dirs;
    dirs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) dirs.push_back(direction_between(v[i], v[(i + 1) % n]));
    return dirs;
}

LatticePolygon apply_isometry(const Isometry& g, const LatticePolygon& p) {
    std::vector<Point3> out;
    out.reserve(p.vertices().size());
    for (Point3 v : p.vertices()) out.push_back(g.apply(v));
    return LatticePolygon::validate(std::move(out));
}

LatticePolygon mirror_seed(const LatticePolygon& p) {
    return apply_isometry(Isometry::mirror_x(), p);
}

bool same_point_set(const LatticePolygon& a, const LatticePolygon& b) {
    if (a.length() != b.length()) return false;
    std::vector<Point3> va = a.vertices(), vb = b.vertices();
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    return va == vb;
}

}  // namespace latknot
