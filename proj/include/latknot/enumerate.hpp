#pragma once

#include <map>
#include <vector>

#include "latknot/graph.hpp"

namespace latknot {

/// All canonical classes of self-avoiding lattice polygons up to a length,
/// from direct backtracking over direction sequences. Independent of the
/// move system; intended as ground truth for tests.
struct EnumerationResult {
    int max_level = 0;
    SymmetryMode mode = SymmetryMode::proper;
    std::map<int, std::vector<CanonicalKey>> classes_by_length;  // keys sorted

    std::size_t total_classes() const;
    std::vector<LatticePolygon> representatives() const;  // by length, then key order
};

/// Backtracking over direction sequences anchored at the origin, first step
/// +x, first turn +y, with return-distance pruning. Practical for N <= 14.
EnumerationResult enumerate_all(int max_level, SymmetryMode mode);

/// Induced move graph over the full enumerated vertex set at this level.
std::pair<FilteredGraph, ExplorationReport> full_graph(int max_level, SymmetryMode mode);

}  // namespace latknot
