#include "latknot/merge.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

namespace latknot {

const char* merge_status_name(MergeStatus s) {
    switch (s) {
        case MergeStatus::same_canonical_state: return "same_canonical_state";
        case MergeStatus::connecting_state_found: return "connecting_state_found";
        case MergeStatus::frontier_exhausted: return "frontier_exhausted";
        case MergeStatus::cap_reached: return "cap_reached";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Frontier {
    std::unordered_map<CanonicalKey, std::uint32_t, CanonicalKeyHash> index;
    std::vector<LatticePolygon> rep;      // literal move chain representatives
    std::vector<std::int32_t> parent;     // -1 for the seed
    std::deque<std::uint32_t> queue;

    std::size_t discovered() const { return rep.size(); }

    std::uint32_t add(const CanonicalKey& key, LatticePolygon state, std::int32_t from) {
        const auto idx = static_cast<std::uint32_t>(rep.size());
        index.emplace(key, idx);
        rep.push_back(std::move(state));
        parent.push_back(from);
        queue.push_back(idx);
        return idx;
    }

    std::vector<LatticePolygon> chain_to_seed(std::uint32_t from) const {
        std::vector<LatticePolygon> out;
        for (std::int32_t at = static_cast<std::int32_t>(from); at != -1; at = parent[at])
            out.push_back(rep[at]);
        std::reverse(out.begin(), out.end());  // seed first
        return out;
    }
};

struct SearchOutcome {
    MergeStatus status = MergeStatus::frontier_exhausted;
    bool connected = false;
    std::size_t discovered1 = 0, discovered2 = 0, expanded = 0;
    std::optional<CapKind> cap_hit;
    // Literal move chains seed -> meeting state, one per side, each in its
    // own ambient frame. Filled only for connecting_state_found.
    std::vector<LatticePolygon> chain_a, chain_b;
};

SearchOutcome bidirectional_search(const LatticePolygon& a, const LatticePolygon& b, int level,
                                   const MergeCaps& caps, SymmetryMode mode, bool want_path) {
    SearchOutcome out;
    const CanonicalKey key_a = canonicalize(a, mode);
    const CanonicalKey key_b = canonicalize(b, mode);

    if (key_a == key_b) {
        out.status = MergeStatus::same_canonical_state;
        out.connected = true;
        out.discovered1 = out.discovered2 = 1;
        if (want_path) out.chain_a = {a};
        return out;
    }

    Frontier f[2];
    f[0].add(key_a, a, -1);
    f[1].add(key_b, b, -1);
    // Ties between equal frontier sizes expand the side holding the smaller
    // seed key, so that swapping the seeds swaps the report fields exactly.
    const int tie_side = key_a < key_b ? 0 : 1;

    const auto t0 = Clock::now();
    auto total = [&] { return f[0].discovered() + f[1].discovered(); };

    auto finish = [&](MergeStatus status, bool connected) {
        out.status = status;
        out.connected = connected;
        out.discovered1 = f[0].discovered();
        out.discovered2 = f[1].discovered();
        return out;
    };

    if (caps.state_cap && total() >= *caps.state_cap) {
        out.cap_hit = CapKind::state;
        return finish(MergeStatus::cap_reached, false);
    }

    while (true) {
        if (caps.time_cap_seconds) {
            const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
            if (elapsed >= *caps.time_cap_seconds) {
                out.cap_hit = CapKind::time;
                return finish(MergeStatus::cap_reached, false);
            }
        }
        if (f[0].queue.empty() || f[1].queue.empty())
            return finish(MergeStatus::frontier_exhausted, false);

        int side;
        if (f[0].discovered() < f[1].discovered()) side = 0;
        else if (f[1].discovered() < f[0].discovered()) side = 1;
        else side = tie_side;

        Frontier& own = f[side];
        Frontier& other = f[1 - side];
        const std::uint32_t at = own.queue.front();
        own.queue.pop_front();
        ++out.expanded;
        const LatticePolygon p = own.rep[at];

        for (auto& [move, q] : legal_moves(p, level)) {
            const CanonicalKey key = canonicalize(q, mode);
            if (own.index.count(key)) continue;
            const std::uint32_t idx = own.add(key, std::move(q), static_cast<std::int32_t>(at));
            auto hit = other.index.find(key);
            if (hit != other.index.end()) {
                if (want_path) {
                    auto& fa = side == 0 ? own : other;
                    auto& fb = side == 0 ? other : own;
                    out.chain_a = fa.chain_to_seed(side == 0 ? idx : hit->second);
                    out.chain_b = fb.chain_to_seed(side == 0 ? hit->second : idx);
                }
                return finish(MergeStatus::connecting_state_found, true);
            }
            if (caps.state_cap && total() >= *caps.state_cap) {
                out.cap_hit = CapKind::state;
                return finish(MergeStatus::cap_reached, false);
            }
        }
    }
}

void check_merge_seed(const LatticePolygon& s, int level) {
    if (s.length() > level)
        throw Error(Errc::seed_too_long, "seed length " + std::to_string(s.length()) +
                                             " exceeds level " + std::to_string(level));
}

/// Group element + translation carrying `from`'s point set onto `to`'s.
/// Exists whenever the two polygons share a canonical key under `mode`.
Isometry find_isometry(const LatticePolygon& from, const LatticePolygon& to, SymmetryMode mode) {
    std::vector<Point3> target = to.vertices();
    std::sort(target.begin(), target.end());
    std::vector<Point3> image(from.vertices().size());
    for (const GroupElement& g : point_group(mode)) {
        for (std::size_t i = 0; i < image.size(); ++i) image[i] = g.iso.apply(from.vertices()[i]);
        std::sort(image.begin(), image.end());
        const Point3 shift = target.front() - image.front();
        bool match = true;
        for (std::size_t i = 0; i < image.size() && match; ++i)
            match = (image[i] + shift) == target[i];
        if (match) return compose(Isometry::translate(shift), g.iso);
    }
    throw Error(Errc::not_connected, "no isometry between canonical-equal states");
}

}  // namespace

MergeReport merge_check(const LatticePolygon& a, const LatticePolygon& b, int level,
                        const MergeCaps& caps, SymmetryMode mode) {
    check_merge_seed(a, level);
    check_merge_seed(b, level);
    const auto t0 = Clock::now();
    const SearchOutcome found = bidirectional_search(a, b, level, caps, mode, false);
    MergeReport r;
    r.connected = found.connected;
    r.status = found.status;
    r.level = level;
    r.mode = mode;
    r.states_from_seed_1 = found.discovered1;
    r.states_from_seed_2 = found.discovered2;
    r.expanded = found.expanded;
    r.cap_hit = found.cap_hit;
    r.runtime_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

PathCertificate extract_certificate(const LatticePolygon& a, const LatticePolygon& b, int level,
                                    SymmetryMode mode) {
    check_merge_seed(a, level);
    check_merge_seed(b, level);
    const SearchOutcome found = bidirectional_search(a, b, level, MergeCaps{}, mode, true);
    if (!found.connected)
        throw Error(Errc::not_connected,
                    "seeds are separated at level " + std::to_string(level));

    PathCertificate cert;
    cert.level = level;

    if (found.status == MergeStatus::same_canonical_state) {
        cert.states = {a};
        cert.moves = {};
        cert.edge_lengths = {a.length()};
        cert.meeting_index = 0;
        return cert;
    }

    // Point-set waypoints: chain from a, then the b-side chain carried into
    // a's ambient frame and walked backwards from the meeting state.
    const Isometry g = find_isometry(found.chain_b.back(), found.chain_a.back(), mode);
    std::vector<LatticePolygon> waypoints = found.chain_a;
    for (auto it = std::next(found.chain_b.rbegin()); it != found.chain_b.rend(); ++it)
        waypoints.push_back(apply_isometry(g, *it));
    cert.meeting_index = found.chain_a.size() - 1;

    // Re-derive each literal (move, state) pair by matching point sets so
    // the recorded sites index the actual predecessor vertex lists.
    cert.states = {a};
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        bool matched = false;
        for (auto& [move, q] : legal_moves(cert.states.back(), level)) {
            if (same_point_set(q, waypoints[i])) {
                cert.moves.push_back(move);
                cert.states.push_back(std::move(q));
                matched = true;
                break;
            }
        }
        if (!matched)
            throw Error(Errc::not_connected, "certificate reconstruction lost the move chain");
    }
    for (const auto& s : cert.states) cert.edge_lengths.push_back(s.length());
    return cert;
}

MergeScaleResult merge_scale(const LatticePolygon& a, const LatticePolygon& b, int max_level,
                             const MergeCaps& caps, SymmetryMode mode) {
    MergeScaleResult result;
    bool unresolved_cap = false;
    const int start = std::max(a.length(), b.length());
    for (int level = start; level <= max_level; level += 2) {
        MergeReport r = merge_check(a, b, level, caps, mode);
        const MergeStatus status = r.status;
        result.checks.push_back(std::move(r));
        if (status == MergeStatus::cap_reached) {
            unresolved_cap = true;
            continue;
        }
        if (status == MergeStatus::frontier_exhausted) {
            // Separation at this level covers every lower level, resolving
            // any capped checks below it.
            unresolved_cap = false;
            continue;
        }
        // connected
        if (unresolved_cap) {
            result.upper_bound = level;
        } else {
            result.level = level;
        }
        return result;
    }
    return result;
}

MergeMatrix merge_matrix(const std::vector<LatticePolygon>& seeds, int max_level,
                         const MergeCaps& caps, SymmetryMode mode) {
    MergeMatrix m;
    m.mode = mode;
    const std::size_t n = seeds.size();
    m.entries.assign(n, std::vector<std::optional<int>>(n));
    int birth = 0;
    for (std::size_t i = 0; i < n; ++i) {
        m.seeds.push_back(canonicalize(seeds[i], mode));
        const int len = seeds[i].length();
        birth = (i == 0) ? len : std::min(birth, len);
    }
    m.birth_level = birth;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const MergeScaleResult r = merge_scale(seeds[i], seeds[j], max_level, caps, mode);
            m.entries[i][j] = r.level;
            m.entries[j][i] = r.level;
        }
    }
    return m;
}

UltrametricCheck verify_ultrametric(const MergeMatrix& m) {
    const std::size_t n = m.entries.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!m.entries[i][j])
                throw Error(Errc::unknown_entries, "matrix entry (" + std::to_string(i) + "," +
                                                       std::to_string(j) + ") is unknown");
    UltrametricCheck check;
    // The shift by birth_level cancels in the comparison; violations are the
    // same on m as on d = m - birth_level.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                if (*m.entries[i][k] > std::max(*m.entries[i][j], *m.entries[j][k])) {
                    check.ok = false;
                    check.violations.push_back({i, j, k});
                }
            }
        }
    }
    return check;
}

}  // namespace latknot
