#include "latknot/moves.hpp"

#include <unordered_set>

namespace latknot {

namespace {

using PointSet = std::unordered_set<Point3, Point3Hash>;

PointSet occupancy(const LatticePolygon& p) {
    PointSet set(p.vertices().size() * 2);
    for (Point3 v : p.vertices()) set.insert(v);
    return set;
}

std::vector<Point3> flipped_vertices(const LatticePolygon& p, int site, Point3 target) {
    std::vector<Point3> out = p.vertices();
    out[static_cast<std::size_t>(site)] = target;
    return out;
}

void collect_corner_flips(const LatticePolygon& p, const PointSet& occupied,
                          std::vector<std::pair<Move, LatticePolygon>>& out) {
    const int n = p.length();
    for (int i = 0; i < n; ++i) {
        const Point3 prev = p.vertex(i - 1);
        const Point3 cur = p.vertex(i);
        const Point3 next = p.vertex(i + 1);
        const Direction in = direction_between(prev, cur);
        const Direction outd = direction_between(cur, next);
        if (!perpendicular(in, outd)) continue;
        const Point3 target = prev + step_vector(outd);
        if (occupied.contains(target)) continue;
        out.emplace_back(Move{MoveKind::corner_flip, i},
                         PolygonInternal::adopt_unchecked(flipped_vertices(p, i, target)));
    }
}

std::vector<Point3> expanded_vertices(const LatticePolygon& p, int site, Point3 a, Point3 b) {
    const auto& v = p.vertices();
    std::vector<Point3> out;
    out.reserve(v.size() + 2);
    out.insert(out.end(), v.begin(), v.begin() + site + 1);
    out.push_back(a);
    out.push_back(b);
    out.insert(out.end(), v.begin() + site + 1, v.end());
    return out;
}

void collect_expansions(const LatticePolygon& p, int max_len, const PointSet& occupied,
                        std::vector<std::pair<Move, LatticePolygon>>& out) {
    const int n = p.length();
    if (n + 2 > max_len) return;
    for (int i = 0; i < n; ++i) {
        const Point3 a = p.vertex(i);
        const Point3 b = p.vertex(i + 1);
        const Direction u = direction_between(a, b);
        for (int d = 0; d < 6; ++d) {
            const Direction w = Direction(static_cast<std::uint8_t>(d));
            if (!perpendicular(w, u)) continue;
            const Point3 na = a + step_vector(w);
            const Point3 nb = b + step_vector(w);
            if (occupied.contains(na) || occupied.contains(nb)) continue;
            out.emplace_back(Move{MoveKind::expansion, i, w},
                             PolygonInternal::adopt_unchecked(expanded_vertices(p, i, na, nb)));
        }
    }
}

std::vector<Point3> contracted_vertices(const LatticePolygon& p, int site) {
    const auto& v = p.vertices();
    const int n = p.length();
    const std::size_t j1 = static_cast<std::size_t>((site + 1) % n);
    const std::size_t j2 = static_cast<std::size_t>((site + 2) % n);
    std::vector<Point3> out;
    out.reserve(v.size() - 2);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != j1 && i != j2) out.push_back(v[i]);
    return out;
}

void collect_contractions(const LatticePolygon& p,
                          std::vector<std::pair<Move, LatticePolygon>>& out) {
    const int n = p.length();
    if (n - 2 < 4) return;
    for (int i = 0; i < n; ++i) {
        const Direction w = direction_between(p.vertex(i), p.vertex(i + 1));
        const Direction back = direction_between(p.vertex(i + 2), p.vertex(i + 3));
        if (back != negate(w)) continue;
        const Point3 a = p.vertex(i);
        const Point3 end = p.vertex(i + 3);
        // The chord must not duplicate an existing edge. Unreachable for
        // valid polygons longer than 4, but cheap.
        bool chord_taken = false;
        for (int e = 0; e < n && !chord_taken; ++e) {
            const Point3 ea = p.vertex(e);
            const Point3 eb = p.vertex(e + 1);
            if ((ea == a && eb == end) || (ea == end && eb == a)) chord_taken = true;
        }
        if (chord_taken) continue;
        out.emplace_back(Move{MoveKind::contraction, i},
                         PolygonInternal::adopt_unchecked(contracted_vertices(p, i)));
    }
}

}  // namespace

std::vector<std::pair<Move, LatticePolygon>> corner_flips(const LatticePolygon& p) {
    std::vector<std::pair<Move, LatticePolygon>> out;
    const PointSet occupied = occupancy(p);
    collect_corner_flips(p, occupied, out);
    return out;
}

std::vector<std::pair<Move, LatticePolygon>> expansions(const LatticePolygon& p, int max_len) {
    std::vector<std::pair<Move, LatticePolygon>> out;
    const PointSet occupied = occupancy(p);
    collect_expansions(p, max_len, occupied, out);
    return out;
}

std::vector<std::pair<Move, LatticePolygon>> contractions(const LatticePolygon& p) {
    std::vector<std::pair<Move, LatticePolygon>> out;
    collect_contractions(p, out);
    return out;
}

std::vector<std::pair<Move, LatticePolygon>> legal_moves(const LatticePolygon& p, int max_len) {
    std::vector<std::pair<Move, LatticePolygon>> out;
    const PointSet occupied = occupancy(p);
    collect_corner_flips(p, occupied, out);
    collect_expansions(p, max_len, occupied, out);
    collect_contractions(p, out);
    return out;
}

std::vector<LatticePolygon> neighbors(const LatticePolygon& p, int max_len) {
    std::vector<LatticePolygon> out;
    for (auto& [move, q] : legal_moves(p, max_len)) out.push_back(std::move(q));
    return out;
}

LatticePolygon apply_move(const LatticePolygon& p, const Move& move) {
    const int n = p.length();
    if (move.site < 0 || move.site >= n) throw Error(Errc::illegal_move, "site out of range");
    const PointSet occupied = occupancy(p);
    switch (move.kind) {
        case MoveKind::corner_flip: {
            const Point3 prev = p.vertex(move.site - 1);
            const Point3 cur = p.vertex(move.site);
            const Point3 next = p.vertex(move.site + 1);
            const Direction in = direction_between(prev, cur);
            const Direction outd = direction_between(cur, next);
            if (!perpendicular(in, outd)) throw Error(Errc::illegal_move, "not a corner");
            const Point3 target = prev + step_vector(outd);
            if (occupied.contains(target)) throw Error(Errc::illegal_move, "flip target occupied");
            return PolygonInternal::adopt_unchecked(flipped_vertices(p, move.site, target));
        }
        case MoveKind::expansion: {
            const Point3 a = p.vertex(move.site);
            const Point3 b = p.vertex(move.site + 1);
            const Direction u = direction_between(a, b);
            if (!perpendicular(move.dir, u))
                throw Error(Errc::illegal_move, "expansion direction not perpendicular");
            const Point3 na = a + step_vector(move.dir);
            const Point3 nb = b + step_vector(move.dir);
            if (occupied.contains(na) || occupied.contains(nb))
                throw Error(Errc::illegal_move, "expansion target occupied");
            return PolygonInternal::adopt_unchecked(expanded_vertices(p, move.site, na, nb));
        }
        case MoveKind::contraction: {
            if (n - 2 < 4) throw Error(Errc::illegal_move, "polygon too short to contract");
            const Direction w = direction_between(p.vertex(move.site), p.vertex(move.site + 1));
            const Direction back =
                direction_between(p.vertex(move.site + 2), p.vertex(move.site + 3));
            if (back != negate(w)) throw Error(Errc::illegal_move, "not a staple");
            return PolygonInternal::adopt_unchecked(contracted_vertices(p, move.site));
        }
    }
    throw Error(Errc::illegal_move, "unknown move kind");
}

}  // namespace latknot
