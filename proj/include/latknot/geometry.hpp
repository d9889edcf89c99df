#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace latknot {

/// Integer lattice point. Coordinates stay well inside int32 for all
/// desk-scale polygons; arithmetic is exact.
struct Point3 {
    std::int32_t x = 0;
    std::int32_t y = 0;
    std::int32_t z = 0;

    friend Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Point3 operator-(Point3 a) { return {-a.x, -a.y, -a.z}; }
    auto operator<=>(const Point3&) const = default;

    std::int32_t& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    std::int32_t operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

/// One of the six axis unit steps, encoded 0..5 as +x,-x,+y,-y,+z,-z.
enum class Direction : std::uint8_t {
    pos_x = 0,
    neg_x = 1,
    pos_y = 2,
    neg_y = 3,
    pos_z = 4,
    neg_z = 5,
};

constexpr Direction negate(Direction d) {
    return Direction(static_cast<std::uint8_t>(d) ^ 1u);
}

constexpr int axis_of(Direction d) { return static_cast<std::uint8_t>(d) >> 1; }

constexpr bool perpendicular(Direction a, Direction b) { return axis_of(a) != axis_of(b); }

constexpr Point3 step_vector(Direction d) {
    constexpr std::array<Point3, 6> steps = {{
        {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
    }};
    return steps[static_cast<std::uint8_t>(d)];
}

/// Direction of the unit step from a to b; a and b must be unit neighbours.
Direction direction_between(Point3 a, Point3 b);

bool is_unit_step(Point3 a, Point3 b);

/// Element of the cubic point group (signed axis permutation) plus a
/// translation. Row form: image[i] = sign[i] * p[perm[i]] + translation[i].
struct Isometry {
    std::array<std::uint8_t, 3> perm = {0, 1, 2};
    std::array<std::int8_t, 3> sign = {1, 1, 1};
    Point3 translation;

    Point3 apply(Point3 p) const {
        Point3 out;
        for (int i = 0; i < 3; ++i) out[i] = sign[i] * p[perm[i]] + translation[i];
        return out;
    }

    Direction apply(Direction d) const;

    int determinant() const;

    static Isometry identity() { return {}; }
    static Isometry translate(Point3 t) { return {{0, 1, 2}, {1, 1, 1}, t}; }
    /// The lattice reflection (x,y,z) -> (-x,y,z).
    static Isometry mirror_x() { return {{0, 1, 2}, {-1, 1, 1}, {}}; }
};

/// g.compose(h) applies h first, then g.
Isometry compose(const Isometry& g, const Isometry& h);

enum class SymmetryMode { proper, full };

/// Point-group element with its action on the six directions precomputed.
struct GroupElement {
    Isometry iso;  // translation part zero
    std::array<std::uint8_t, 6> dir_map;
};

/// The 24 proper rotations or all 48 signed permutation matrices,
/// generated once and verified (24/48 element counts) on first use.
std::span<const GroupElement> point_group(SymmetryMode mode);

struct Point3Hash {
    std::size_t operator()(Point3 p) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::int64_t v : {std::int64_t(p.x), std::int64_t(p.y), std::int64_t(p.z)}) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace latknot
