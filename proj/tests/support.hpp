#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "latknot/moves.hpp"
#include "latknot/seeds.hpp"

namespace latknot::testsupport {

/// Random legal-move walk from the square unknot; deterministic per rng.
inline LatticePolygon random_walk_polygon(std::mt19937& rng, int steps, int max_len) {
    LatticePolygon p = square_unknot();
    for (int i = 0; i < steps; ++i) {
        auto moves = legal_moves(p, max_len);
        if (moves.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        p = moves[pick(rng)].second;
    }
    return p;
}

/// Normalized signature for point-set comparison in a fixed frame.
inline std::vector<Point3> signature(const LatticePolygon& p) {
    std::vector<Point3> v = p.vertices();
    std::sort(v.begin(), v.end());
    return v;
}

/// All polygons one move away, derived purely from LatticePolygon::validate:
/// single-vertex replacements, edge push-outs, and two-vertex erasures that
/// happen to validate. Independent of the move generator, used as its oracle.
inline std::vector<LatticePolygon> oracle_one_move(const LatticePolygon& p, int max_len) {
    std::vector<LatticePolygon> out;
    const auto& v = p.vertices();
    const int n = p.length();
    auto try_candidate = [&](std::vector<Point3> cand) {
        try {
            LatticePolygon q = LatticePolygon::validate(std::move(cand));
            if (!(q == p)) out.push_back(std::move(q));
        } catch (const Error&) {
        }
    };

    for (int i = 0; i < n; ++i) {
        for (int d = 0; d < 6; ++d) {
            std::vector<Point3> cand = v;
            cand[static_cast<std::size_t>(i)] = p.vertex(i - 1) + step_vector(Direction(d));
            if (cand[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(i)]) continue;
            try_candidate(std::move(cand));
        }
    }
    if (n + 2 <= max_len) {
        for (int i = 0; i < n; ++i) {
            for (int d = 0; d < 6; ++d) {
                const Point3 shift = step_vector(Direction(d));
                std::vector<Point3> cand;
                cand.reserve(v.size() + 2);
                cand.insert(cand.end(), v.begin(), v.begin() + i + 1);
                cand.push_back(p.vertex(i) + shift);
                cand.push_back(p.vertex(i + 1) + shift);
                cand.insert(cand.end(), v.begin() + i + 1, v.end());
                try_candidate(std::move(cand));
            }
        }
    }
    if (n - 2 >= 4) {
        for (int i = 0; i < n; ++i) {
            const std::size_t j1 = static_cast<std::size_t>((i + 1) % n);
            const std::size_t j2 = static_cast<std::size_t>((i + 2) % n);
            std::vector<Point3> cand;
            cand.reserve(v.size() - 2);
            for (std::size_t j = 0; j < v.size(); ++j)
                if (j != j1 && j != j2) cand.push_back(v[j]);
            try_candidate(std::move(cand));
        }
    }
    return out;
}

/// Sorted, deduplicated point-set signatures of a polygon list.
inline std::vector<std::vector<Point3>> signature_set(const std::vector<LatticePolygon>& list) {
    std::vector<std::vector<Point3>> sigs;
    sigs.reserve(list.size());
    for (const auto& p : list) sigs.push_back(signature(p));
    std::sort(sigs.begin(), sigs.end());
    sigs.erase(std::unique(sigs.begin(), sigs.end()), sigs.end());
    return sigs;
}

}  // namespace latknot::testsupport
