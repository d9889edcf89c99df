#include "latknot/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace latknot {

namespace {

struct GraphBuilder {
    FilteredGraph g;
    std::unordered_set<std::uint64_t> edge_set;

    explicit GraphBuilder(int level, SymmetryMode mode) {
        g.level = level;
        g.mode = mode;
    }

    // Returns index; inserts if new.
    std::pair<std::uint32_t, bool> add_vertex(const CanonicalKey& key) {
        auto it = g.index.find(key);
        if (it != g.index.end()) return {it->second, false};
        const auto idx = static_cast<std::uint32_t>(g.vertices.size());
        g.vertices.push_back(key);
        g.index.emplace(key, idx);
        return {idx, true};
    }

    void add_edge(std::uint32_t a, std::uint32_t b) {
        if (a == b) return;  // symmetry self-maps are dropped
        const std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
        const std::uint64_t packed = (std::uint64_t(lo) << 32) | hi;
        if (edge_set.insert(packed).second) g.edges.emplace_back(lo, hi);
    }
};

void check_seed(const LatticePolygon& seed, int level) {
    if (seed.length() > level)
        throw Error(Errc::seed_too_long, "seed length " + std::to_string(seed.length()) +
                                             " exceeds level " + std::to_string(level));
}

ExplorationReport make_report(const FilteredGraph& g, std::optional<int> cap) {
    ExplorationReport r;
    r.level = g.level;
    r.mode = g.mode;
    r.cap = cap;
    r.capped = g.capped;
    r.vertices = g.vertices.size();
    r.edges = g.edges.size();
    const auto comps = components(g);
    r.components = comps.size();
    for (const auto& c : comps) r.component_sizes.push_back(c.size());
    return r;
}

}  // namespace

std::vector<std::pair<CanonicalKey, CanonicalKey>> FilteredGraph::edge_keys() const {
    std::vector<std::pair<CanonicalKey, CanonicalKey>> out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) {
        CanonicalKey ka = vertices[a], kb = vertices[b];
        if (kb < ka) std::swap(ka, kb);
        out.emplace_back(std::move(ka), std::move(kb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<FilteredGraph, ExplorationReport> explore(const std::vector<LatticePolygon>& seeds,
                                                    int level, std::optional<int> cap,
                                                    SymmetryMode mode) {
    for (const auto& s : seeds) check_seed(s, level);

    GraphBuilder b(level, mode);
    std::deque<std::uint32_t> queue;
    std::vector<LatticePolygon> rep;  // representative per vertex, as first reached

    auto discovered_full = [&] { return cap && b.g.vertices.size() >= std::size_t(*cap); };

    for (const auto& seed : seeds) {
        if (discovered_full()) break;
        auto [idx, fresh] = b.add_vertex(canonicalize(seed, mode));
        if (fresh) {
            rep.push_back(seed);
            queue.push_back(idx);
        }
    }

    while (!queue.empty()) {
        const std::uint32_t at = queue.front();
        queue.pop_front();
        const LatticePolygon p = rep[at];
        for (auto& [move, q] : legal_moves(p, level)) {
            const CanonicalKey key = canonicalize(q, mode);
            auto it = b.g.index.find(key);
            if (it != b.g.index.end()) {
                b.add_edge(at, it->second);
                continue;
            }
            // Once the cap is hit, stop discovering but keep classifying
            // edges among the states already found.
            if (discovered_full()) continue;
            auto [idx, fresh] = b.add_vertex(key);
            (void)fresh;
            rep.push_back(std::move(q));
            queue.push_back(idx);
            b.add_edge(at, idx);
        }
    }
    b.g.capped = cap.has_value() && b.g.vertices.size() >= std::size_t(*cap);

    ExplorationReport r = make_report(b.g, cap);
    return {std::move(b.g), std::move(r)};
}

std::pair<FilteredGraph, ExplorationReport> induced_graph(
    const std::vector<LatticePolygon>& polygons, int level, SymmetryMode mode) {
    for (const auto& p : polygons) check_seed(p, level);

    GraphBuilder b(level, mode);
    std::vector<LatticePolygon> rep;
    for (const auto& p : polygons) {
        auto [idx, fresh] = b.add_vertex(canonicalize(p, mode));
        (void)idx;
        if (fresh) rep.push_back(p);
    }
    for (std::uint32_t i = 0; i < b.g.vertices.size(); ++i) {
        for (const auto& q : neighbors(rep[i], level)) {
            auto it = b.g.index.find(canonicalize(q, mode));
            if (it != b.g.index.end()) b.add_edge(i, it->second);
        }
    }

    ExplorationReport r = make_report(b.g, std::nullopt);
    return {std::move(b.g), std::move(r)};
}

std::vector<std::vector<CanonicalKey>> components(const FilteredGraph& g) {
    const std::size_t n = g.vertices.size();
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::int32_t> comp(n, -1);
    std::int32_t ncomp = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::deque<std::uint32_t> queue{s};
        comp[s] = ncomp;
        while (!queue.empty()) {
            const auto at = queue.front();
            queue.pop_front();
            for (auto next : adj[at])
                if (comp[next] == -1) {
                    comp[next] = ncomp;
                    queue.push_back(next);
                }
        }
        ++ncomp;
    }

    std::vector<std::vector<CanonicalKey>> out(static_cast<std::size_t>(ncomp));
    for (std::uint32_t v = 0; v < n; ++v) out[static_cast<std::size_t>(comp[v])].push_back(g.vertices[v]);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return out;
}

std::vector<std::size_t> persistence_map(const FilteredGraph& low, const FilteredGraph& high) {
    if (low.mode != high.mode)
        throw std::invalid_argument("persistence_map: symmetry modes differ");
    if (low.level > high.level)
        throw std::invalid_argument("persistence_map: levels not ordered");
    for (const auto& key : low.vertices)
        if (!high.contains(key))
            throw Error(Errc::not_nested, "low-level vertex missing from high-level graph");

    const auto low_comps = components(low);
    const auto high_comps = components(high);
    std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> where;
    for (std::size_t c = 0; c < high_comps.size(); ++c)
        for (const auto& key : high_comps[c]) where.emplace(key, c);

    std::vector<std::size_t> out;
    out.reserve(low_comps.size());
    for (const auto& c : low_comps) out.push_back(where.at(c.front()));
    return out;
}

}  // namespace latknot
