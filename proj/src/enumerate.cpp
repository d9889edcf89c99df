#include "latknot/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_set>

namespace latknot {

namespace {

struct Enumerator {
    Enumerator(int max_level_, SymmetryMode mode_) : max_level(max_level_), mode(mode_) {}

    int max_level;
    SymmetryMode mode;
    std::map<int, std::set<CanonicalKey>> found;

    std::vector<Point3> path;
    std::vector<Direction> dirs;
    std::unordered_set<Point3, Point3Hash> visited;
    bool turned = false;  // whether the walk has left the x axis yet

    static int manhattan(Point3 p) { return std::abs(p.x) + std::abs(p.y) + std::abs(p.z); }

    void record() {
        std::vector<Point3> verts = path;
        auto polygon = LatticePolygon::validate(std::move(verts));
        found[polygon.length()].insert(canonicalize(polygon, mode));
    }

    void extend() {
        const Point3 at = path.back();
        const int taken = static_cast<int>(path.size());
        for (int d = 0; d < 6; ++d) {
            const Direction dir = Direction(static_cast<std::uint8_t>(d));
            // Stabilizer pruning: the first step off the x axis must be +y;
            // rotations about x map any other choice onto it.
            const bool turning = !turned && axis_of(dir) != 0;
            if (turning && dir != Direction::pos_y) continue;
            const Point3 next = at + step_vector(dir);
            if (next == Point3{0, 0, 0}) {
                // Closing edge: the polygon has `taken` vertices and edges.
                if (taken >= 4) {
                    dirs.push_back(dir);
                    record();
                    dirs.pop_back();
                }
                continue;
            }
            if (taken + 1 > max_level) continue;  // vertex budget spent
            if (visited.contains(next)) continue;
            if (manhattan(next) > max_level - taken) continue;  // cannot return

            visited.insert(next);
            path.push_back(next);
            dirs.push_back(dir);
            const bool was_turned = turned;
            turned = turned || axis_of(dir) != 0;
            extend();
            turned = was_turned;
            dirs.pop_back();
            path.pop_back();
            visited.erase(next);
        }
    }

    void run() {
        if (max_level < 4) return;
        path = {{0, 0, 0}, {1, 0, 0}};
        dirs = {Direction::pos_x};
        visited = {{0, 0, 0}, {1, 0, 0}};
        turned = false;
        extend();
    }
};

}  // namespace

std::size_t EnumerationResult::total_classes() const {
    std::size_t n = 0;
    for (const auto& [len, keys] : classes_by_length) n += keys.size();
    return n;
}

std::vector<LatticePolygon> EnumerationResult::representatives() const {
    std::vector<LatticePolygon> out;
    out.reserve(total_classes());
    for (const auto& [len, keys] : classes_by_length)
        for (const auto& key : keys) out.push_back(reconstruct(key));
    return out;
}

EnumerationResult enumerate_all(int max_level, SymmetryMode mode) {
    Enumerator e(max_level, mode);
    e.run();
    EnumerationResult result;
    result.max_level = max_level;
    result.mode = mode;
    for (auto& [len, keys] : e.found)
        result.classes_by_length[len] = std::vector<CanonicalKey>(keys.begin(), keys.end());
    return result;
}

std::pair<FilteredGraph, ExplorationReport> full_graph(int max_level, SymmetryMode mode) {
    return induced_graph(enumerate_all(max_level, mode).representatives(), max_level, mode);
}

}  // namespace latknot
