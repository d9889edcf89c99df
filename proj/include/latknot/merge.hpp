#pragma once

#include <array>
#include <optional>
#include <vector>

#include "latknot/graph.hpp"

namespace latknot {

enum class MergeStatus : std::uint8_t {
    same_canonical_state,
    connecting_state_found,
    frontier_exhausted,
    cap_reached,
};

const char* merge_status_name(MergeStatus s);

enum class CapKind : std::uint8_t { state, time };

struct MergeCaps {
    std::optional<std::size_t> state_cap;       // total discovered states, both frontiers
    std::optional<double> time_cap_seconds;     // wall clock, checked between expansions
};

struct MergeReport {
    bool connected = false;
    MergeStatus status = MergeStatus::frontier_exhausted;
    int level = 0;
    SymmetryMode mode = SymmetryMode::proper;
    std::size_t states_from_seed_1 = 0;  // discovered, including the seed
    std::size_t states_from_seed_2 = 0;
    std::size_t expanded = 0;            // states popped from a queue and expanded
    double runtime_seconds = 0.0;
    std::optional<CapKind> cap_hit;      // set iff status == cap_reached
};

/// Bidirectional breadth-first search between the two seeds under length
/// bound `level`. Equal canonical keys short-circuit to same_canonical_state.
/// Otherwise one state is expanded at a time from the frontier with fewer
/// discovered states; a frontier that empties without intersection certifies
/// separation at this level. Deterministic apart from runtime_seconds (and
/// cap_reached outcomes under a time cap).
MergeReport merge_check(const LatticePolygon& a, const LatticePolygon& b, int level,
                        const MergeCaps& caps, SymmetryMode mode);

/// Explicit move path realizing a merge found by merge_check at `level`.
/// States form a literal move chain in one common ambient frame: applying
/// moves[i] to states[i] yields states[i+1] exactly. The first state is seed
/// a as given; the last is canonically equal to seed b.
struct PathCertificate {
    int level = 0;
    std::vector<LatticePolygon> states;
    std::vector<Move> moves;
    std::vector<int> edge_lengths;
    std::size_t meeting_index = 0;  // position of the connecting state
};

/// Parent-pointer path reconstruction through the meeting state.
/// Throws Error(not_connected) if the seeds are separated at `level`.
PathCertificate extract_certificate(const LatticePolygon& a, const LatticePolygon& b, int level,
                                    SymmetryMode mode);

struct MergeScaleResult {
    std::optional<int> level;        // exact merge scale when determined
    std::optional<int> upper_bound;  // connected level left unresolved by earlier caps
    std::vector<MergeReport> checks; // one per tested level, in order
    bool inconclusive() const { return !level.has_value(); }
};

/// First level at which the two seeds share a component, iterating from
/// max(len(a), len(b)) in steps of 2 up to max_level. A cap-reached level
/// leaves the scale inconclusive unless a later frontier-exhausted level
/// retroactively certifies separation below it. Definitive infinity is
/// never returned.
MergeScaleResult merge_scale(const LatticePolygon& a, const LatticePolygon& b, int max_level,
                             const MergeCaps& caps, SymmetryMode mode);

struct MergeMatrix {
    int birth_level = 0;  // minimal seed length
    SymmetryMode mode = SymmetryMode::proper;
    std::vector<CanonicalKey> seeds;
    std::vector<std::vector<std::optional<int>>> entries;  // nullopt = unknown
};

/// Pairwise merge scales; each unordered pair computed once, symmetric by
/// construction. Inconclusive entries propagate as unknown.
MergeMatrix merge_matrix(const std::vector<LatticePolygon>& seeds, int max_level,
                         const MergeCaps& caps, SymmetryMode mode);

struct UltrametricCheck {
    bool ok = true;
    std::vector<std::array<std::size_t, 3>> violations;  // (i, j, k) with d(i,k) > max(d(i,j), d(j,k))
};

/// Strong triangle inequality on the shifted entries d = m - birth_level.
/// Throws Error(unknown_entries) if any entry is unknown.
UltrametricCheck verify_ultrametric(const MergeMatrix& m);

}  // namespace latknot
