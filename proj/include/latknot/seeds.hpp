#pragma once

#include "latknot/polygon.hpp"

namespace latknot {

/// The 4-gon (0,0,0),(1,0,0),(1,1,0),(0,1,0).
LatticePolygon square_unknot();

/// Braid word on `strands` strands; letters are signed generator indices,
/// +i for sigma_i and -i for sigma_i^{-1}, 1 <= i <= strands-1.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;
};

/// Deterministic cubical closed-braid embedding. Strands run along +x as
/// lattice lines spaced 2 apart in y; each crossing is a fixed 4-wide block
/// routing the under-strand through a z = -1 detour; closure arcs return
/// around the braid box at distance 2, nested in z. Exit-to-entry wiring is
/// the standard trace closure when that yields a single cycle, otherwise a
/// deterministic rewiring that does, so the output is always one polygon.
/// The knot type realized is the caller's concern. An empty word closes to
/// the flat 2 x 2(strands-1) rectangle.
LatticePolygon braid_closure_seed(const BraidWord& word);

}  // namespace latknot
