#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "latknot/polygon.hpp"

namespace latknot {

enum class MoveKind : std::uint8_t { corner_flip, expansion, contraction };

/// One BFACF move. Site indexes the cyclic vertex list of the polygon the
/// move applies to:
///   corner_flip — site is the corner vertex being relocated;
///   expansion   — site is the first vertex of the edge being pushed out,
///                 dir is the perpendicular push direction;
///   contraction — site is the vertex opening the 3-edge staple
///                 (the staple occupies edges site, site+1, site+2).
struct Move {
    MoveKind kind;
    int site = 0;
    Direction dir = Direction::pos_x;  // expansions only

    bool operator==(const Move&) const = default;
};

/// Length-preserving corner flips: where incoming and outgoing steps are
/// perpendicular, move the corner vertex across the diagonal if the target
/// site is free.
std::vector<std::pair<Move, LatticePolygon>> corner_flips(const LatticePolygon& p);

/// Edge expansions (+2): push one edge sideways into a 3-edge staple when
/// both new vertices are free and the result stays within max_len.
std::vector<std::pair<Move, LatticePolygon>> expansions(const LatticePolygon& p, int max_len);

/// Staple contractions (-2): collapse a 3-edge staple (w, u, -w) to its
/// chord when the polygon stays at length >= 4 and the chord is not an
/// existing edge.
std::vector<std::pair<Move, LatticePolygon>> contractions(const LatticePolygon& p);

/// All legal moves in the fixed deterministic order: corner flips by site,
/// then expansions by site and direction code, then contractions by site.
std::vector<std::pair<Move, LatticePolygon>> legal_moves(const LatticePolygon& p, int max_len);

std::vector<LatticePolygon> neighbors(const LatticePolygon& p, int max_len);

/// Applies one move, validating legality. Throws Error(illegal_move).
LatticePolygon apply_move(const LatticePolygon& p, const Move& move);

}  // namespace latknot
