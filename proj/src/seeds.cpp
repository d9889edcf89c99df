#include "latknot/seeds.hpp"

#include <cstdlib>
#include <numeric>

namespace latknot {

LatticePolygon square_unknot() {
    return LatticePolygon::validate({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
}

namespace {

void append_segment(std::vector<Point3>& chain, Point3 to) {
    Point3 at = chain.back();
    auto walk = [&](int axis, int target) {
        while (at[axis] != target) {
            at[axis] += target > at[axis] ? 1 : -1;
            chain.push_back(at);
        }
    };
    walk(0, to.x);
    walk(1, to.y);
    walk(2, to.z);
}

// Axis-ordered lattice path visiting the listed waypoints.
std::vector<Point3> polyline(Point3 start, std::initializer_list<Point3> waypoints) {
    std::vector<Point3> chain{start};
    for (Point3 w : waypoints) append_segment(chain, w);
    return chain;
}

LatticePolygon flat_rectangle(int width, int height) {
    std::vector<Point3> verts;
    for (int x = 0; x < width; ++x) verts.push_back({x, 0, 0});
    for (int y = 0; y < height; ++y) verts.push_back({width, y, 0});
    for (int x = width; x > 0; --x) verts.push_back({x, height, 0});
    for (int y = height; y > 0; --y) verts.push_back({0, y, 0});
    return LatticePolygon::validate(std::move(verts));
}

// Crossing block paths across one 4-wide slab, z = 0 at both ends.
// The over strand changes lanes in the z = 0 plane; the under strand ducks
// through z = -1.
std::vector<Point3> over_path(int x0, int y_from, int y_to) {
    return polyline({x0, y_from, 0}, {{x0 + 1, y_from, 0}, {x0 + 1, y_to, 0}, {x0 + 4, y_to, 0}});
}

std::vector<Point3> under_path(int x0, int y_from, int y_to) {
    return polyline({x0, y_from, 0}, {{x0, y_from, -1},
                                      {x0 + 2, y_from, -1},
                                      {x0 + 2, y_to, -1},
                                      {x0 + 3, y_to, -1},
                                      {x0 + 3, y_to, 0},
                                      {x0 + 4, y_to, 0}});
}

std::vector<Point3> straight_path(int x0, int y) {
    return polyline({x0, y, 0}, {{x0 + 4, y, 0}});
}

// Closure arc from exit position p at (box_width, 2p, 0) back to entry
// position q at (0, 2q, 0). Each arc owns the z plane 2 + 2p and the
// turnaround columns x = box_width + 2 + 2p and x = -2 - 2p.
std::vector<Point3> closure_arc(int box_width, int p, int q) {
    const int h = 2 + 2 * p;
    const int xr = box_width + 2 + 2 * p;
    const int xl = -2 - 2 * p;
    return polyline({box_width, 2 * p, 0}, {{xr, 2 * p, 0},
                                            {xr, 2 * p, h},
                                            {xr, 2 * q, h},
                                            {xl, 2 * q, h},
                                            {xl, 2 * q, 0},
                                            {0, 2 * q, 0}});
}

void append_dropping_junction(std::vector<Point3>& out, const std::vector<Point3>& piece) {
    out.insert(out.end(), piece.begin() + 1, piece.end());
}

}  // namespace

LatticePolygon braid_closure_seed(const BraidWord& word) {
    const int s = word.strands;
    if (s < 2) throw Error(Errc::invalid_braid_word, "need at least 2 strands");
    for (int letter : word.letters)
        if (letter == 0 || std::abs(letter) > s - 1)
            throw Error(Errc::invalid_braid_word,
                        "generator index " + std::to_string(letter) + " out of range");

    if (word.letters.empty()) return flat_rectangle(2, 2 * (s - 1));

    const int box_width = 4 * static_cast<int>(word.letters.size());

    // Build one vertex chain per strand, tracking positions through slabs.
    std::vector<std::vector<Point3>> strand_chain(static_cast<std::size_t>(s));
    std::vector<int> strand_at(static_cast<std::size_t>(s));  // position -> strand
    for (int j = 0; j < s; ++j) {
        strand_chain[j] = {{0, 2 * j, 0}};
        strand_at[j] = j;
    }
    for (std::size_t t = 0; t < word.letters.size(); ++t) {
        const int letter = word.letters[t];
        const int k = std::abs(letter) - 1;  // crossing swaps positions k, k+1
        const int x0 = 4 * static_cast<int>(t);
        const int lo = strand_at[k], hi = strand_at[k + 1];
        // Positive generator: the strand entering on the lower lane crosses
        // over; negative: it ducks under.
        const auto lower = letter > 0 ? over_path(x0, 2 * k, 2 * (k + 1))
                                      : under_path(x0, 2 * k, 2 * (k + 1));
        const auto upper = letter > 0 ? under_path(x0, 2 * (k + 1), 2 * k)
                                      : over_path(x0, 2 * (k + 1), 2 * k);
        append_dropping_junction(strand_chain[lo], lower);
        append_dropping_junction(strand_chain[hi], upper);
        strand_at[k] = hi;
        strand_at[k + 1] = lo;
        for (int pos = 0; pos < s; ++pos) {
            if (pos == k || pos == k + 1) continue;
            append_dropping_junction(strand_chain[strand_at[pos]], straight_path(x0, 2 * pos));
        }
    }

    // exit position of each strand
    std::vector<int> exit_of(static_cast<std::size_t>(s));
    for (int pos = 0; pos < s; ++pos) exit_of[strand_at[pos]] = pos;

    // Trace closure wires exit position p to entry position p; keep it when
    // the strand permutation is one cycle, otherwise rewire exit p to entry
    // strand_at[p] + 1 (mod s), which always chains all strands into one
    // cycle.
    bool single_cycle = true;
    {
        std::vector<bool> seen(static_cast<std::size_t>(s), false);
        int at = 0, count = 0;
        while (!seen[at]) {
            seen[at] = true;
            ++count;
            at = exit_of[at];
        }
        single_cycle = count == s;
    }
    std::vector<int> entry_for_exit(static_cast<std::size_t>(s));
    for (int p = 0; p < s; ++p) entry_for_exit[p] = single_cycle ? p : (strand_at[p] + 1) % s;

    // Walk the cycle: strand, closure arc, next strand, ...
    std::vector<Point3> verts;
    int strand = 0;
    do {
        const auto& chain = strand_chain[strand];
        if (verts.empty()) verts = chain;
        else append_dropping_junction(verts, chain);
        const int exit_pos = exit_of[strand];
        append_dropping_junction(verts, closure_arc(box_width, exit_pos, entry_for_exit[exit_pos]));
        strand = entry_for_exit[exit_pos];
    } while (strand != 0);
    verts.pop_back();  // the walk re-lists the starting vertex

    try {
        return LatticePolygon::validate(std::move(verts));
    } catch (const Error& e) {
        throw Error(Errc::invalid_braid_word, std::string("embedding failed: ") + e.what());
    }
}

}  // namespace latknot
