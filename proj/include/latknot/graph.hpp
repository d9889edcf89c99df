#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latknot/canonical.hpp"
#include "latknot/moves.hpp"

namespace latknot {

/// Lattice-filtered move graph at one length level: vertices are canonical
/// classes with length <= level, edges are single-move relations. Simple
/// graph: no self-loops, move multiplicities collapsed.
struct FilteredGraph {
    int level = 0;
    SymmetryMode mode = SymmetryMode::proper;
    bool capped = false;
    std::vector<CanonicalKey> vertices;  // discovery order
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // index pairs, first < second

    std::unordered_map<CanonicalKey, std::uint32_t, CanonicalKeyHash> index;

    bool contains(const CanonicalKey& k) const { return index.count(k) != 0; }

    /// Edge list as key pairs (each pair and the list sorted), for
    /// deterministic comparison against independently built graphs.
    std::vector<std::pair<CanonicalKey, CanonicalKey>> edge_keys() const;
};

struct ExplorationReport {
    int level = 0;
    SymmetryMode mode = SymmetryMode::proper;
    std::optional<int> cap;
    bool capped = false;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t components = 0;
    std::vector<std::size_t> component_sizes;  // descending
};

/// Breadth-first closure of the canonicalized seeds under single moves with
/// length bound `level`. With a cap, discovery stops at `cap` canonical
/// states but every discovered state is still expanded so that all edges
/// among discovered vertices are recorded. Deterministic for fixed inputs.
std::pair<FilteredGraph, ExplorationReport> explore(const std::vector<LatticePolygon>& seeds,
                                                    int level, std::optional<int> cap,
                                                    SymmetryMode mode);

/// Graph induced on the canonical classes of the supplied polygons only;
/// no exploration beyond that set.
std::pair<FilteredGraph, ExplorationReport> induced_graph(
    const std::vector<LatticePolygon>& polygons, int level, SymmetryMode mode);

/// Connected components, ordered by size descending then by minimal key;
/// keys inside each component sorted ascending.
std::vector<std::vector<CanonicalKey>> components(const FilteredGraph& g);

/// For nested graphs (same mode, low.level <= high.level, every low vertex
/// present in high), maps each component index of `low` to the component
/// index of `high` containing it. Indices refer to components() output.
std::vector<std::size_t> persistence_map(const FilteredGraph& low, const FilteredGraph& high);

}  // namespace latknot
