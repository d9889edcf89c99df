#include "latknot/canonical.hpp"

#include <algorithm>

namespace latknot {

std::size_t least_rotation(std::span<const unsigned char> s) {
    // Booth's least-rotation algorithm on the doubled sequence.
    const std::size_t n = s.size();
    if (n <= 1) return 0;
    std::vector<std::ptrdiff_t> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const unsigned char sj = s[j % n];
        std::ptrdiff_t i = fail[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = fail[i];
        }
        if (sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k;
}

namespace {

// Candidate = least rotation of seq, compared against best in place.
void consider(std::span<const unsigned char> seq, std::string& best) {
    const std::size_t n = seq.size();
    const std::size_t k = least_rotation(seq);
    if (!best.empty()) {
        // lexicographic compare of rotated seq against best without copying
        int cmp = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned char c = seq[(k + i) % n];
            const unsigned char b = static_cast<unsigned char>(best[i]);
            if (c != b) {
                cmp = c < b ? -1 : 1;
                break;
            }
        }
        if (cmp >= 0) return;
    }
    best.resize(n);
    for (std::size_t i = 0; i < n; ++i) best[i] = static_cast<char>(seq[(k + i) % n]);
}

}  // namespace

CanonicalKey canonicalize(const LatticePolygon& p, SymmetryMode mode) {
    const std::vector<Direction> dirs = edge_directions(p);
    const std::size_t n = dirs.size();

    std::vector<unsigned char> forward(n), reversed(n), mapped(n);
    for (std::size_t i = 0; i < n; ++i) forward[i] = static_cast<unsigned char>(dirs[i]);
    // Orientation reversal: traverse backwards, so reverse the list and
    // negate every step.
    for (std::size_t i = 0; i < n; ++i)
        reversed[i] = static_cast<unsigned char>(negate(dirs[n - 1 - i]));

    std::string best;
    for (const GroupElement& g : point_group(mode)) {
        for (const auto* base : {&forward, &reversed}) {
            for (std::size_t i = 0; i < n; ++i) mapped[i] = g.dir_map[(*base)[i]];
            consider(mapped, best);
        }
    }
    return CanonicalKey(std::move(best));
}

LatticePolygon reconstruct(const CanonicalKey& key) {
    const std::string& bytes = key.bytes();
    if (bytes.empty()) throw Error(Errc::malformed_key, "empty key");
    std::vector<Point3> verts;
    verts.reserve(bytes.size());
    Point3 at{0, 0, 0};
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        const unsigned char b = static_cast<unsigned char>(bytes[i]);
        if (b > 5) throw Error(Errc::malformed_key, "byte out of range at " + std::to_string(i));
        verts.push_back(at);
        at = at + step_vector(Direction(b));
    }
    if (!(at == Point3{0, 0, 0}))
        throw Error(Errc::malformed_key, "direction sequence does not close");
    try {
        return LatticePolygon::validate(std::move(verts));
    } catch (const Error& e) {
        throw Error(Errc::malformed_key, e.what());
    }
}

}  // namespace latknot
