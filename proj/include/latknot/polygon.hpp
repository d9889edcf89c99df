#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "latknot/geometry.hpp"

namespace latknot {

enum class Errc {
    not_closed,
    self_intersecting,
    too_short,
    odd_length,
    malformed_key,
    seed_too_long,
    invalid_seed,
    illegal_move,
    not_connected,
    not_nested,
    unknown_entries,
    invalid_braid_word,
    parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

/// Self-avoiding closed walk on Z^3 with unit axis steps. Vertices are an
/// open cyclic list (the closing edge back to the first vertex is implied).
/// Length = vertex count = edge count; always even and >= 4.
class LatticePolygon {
public:
    /// Checks all invariants; throws Error on the first violation
    /// (self_intersecting, then not_closed, then too_short, then odd_length).
    static LatticePolygon validate(std::vector<Point3> vertices);

    const std::vector<Point3>& vertices() const { return verts_; }
    int length() const { return static_cast<int>(verts_.size()); }

    Point3 vertex(int i) const {
        const int n = length();
        return verts_[static_cast<std::size_t>(((i % n) + n) % n)];
    }

    bool operator==(const LatticePolygon& other) const = default;

private:
    explicit LatticePolygon(std::vector<Point3> v) : verts_(std::move(v)) {}
    std::vector<Point3> verts_;

    friend class PolygonInternal;
};

/// Back door for move generation: wraps a vertex list that is already known
/// to satisfy the invariants, skipping re-validation on hot paths.
class PolygonInternal {
public:
    static LatticePolygon adopt_unchecked(std::vector<Point3> v) {
        return LatticePolygon(std::move(v));
    }
};

/// The cyclic step sequence; its vector sum is zero for any valid polygon.
std::vector<Direction> edge_directions(const LatticePolygon& p);

LatticePolygon apply_isometry(const Isometry& g, const LatticePolygon& p);

/// Reflected copy under (x,y,z) -> (-x,y,z); an involution.
LatticePolygon mirror_seed(const LatticePolygon& p);

/// True when the two polygons occupy the same vertex set.
bool same_point_set(const LatticePolygon& a, const LatticePolygon& b);

}  // namespace latknot
