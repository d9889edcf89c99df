#include "latknot/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace latknot {

bool is_unit_step(Point3 a, Point3 b) {
    const Point3 d = b - a;
    return std::abs(d.x) + std::abs(d.y) + std::abs(d.z) == 1;
}

Direction direction_between(Point3 a, Point3 b) {
    const Point3 d = b - a;
    if (d.x == 1) return Direction::pos_x;
    if (d.x == -1) return Direction::neg_x;
    if (d.y == 1) return Direction::pos_y;
    if (d.y == -1) return Direction::neg_y;
    if (d.z == 1) return Direction::pos_z;
    if (d.z == -1) return Direction::neg_z;
    throw std::invalid_argument("direction_between: points are not unit neighbours");
}

Direction Isometry::apply(Direction d) const {
    const int src_axis = axis_of(d);
    const int s = (static_cast<std::uint8_t>(d) & 1u) ? -1 : 1;
    for (int i = 0; i < 3; ++i) {
        if (perm[i] == src_axis) {
            const int out_sign = s * sign[i];
            return Direction(static_cast<std::uint8_t>(2 * i + (out_sign < 0 ? 1 : 0)));
        }
    }
    throw std::logic_error("Isometry::apply: malformed permutation");
}

int Isometry::determinant() const {
    // parity of the axis permutation times the product of signs
    int parity = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (perm[i] > perm[j]) parity = -parity;
    return parity * sign[0] * sign[1] * sign[2];
}

Isometry compose(const Isometry& g, const Isometry& h) {
    Isometry out;
    for (int i = 0; i < 3; ++i) {
        out.perm[i] = h.perm[g.perm[i]];
        out.sign[i] = static_cast<std::int8_t>(g.sign[i] * h.sign[g.perm[i]]);
    }
    out.translation = g.apply(h.translation);
    return out;
}

namespace {

std::vector<GroupElement> make_group(bool proper_only) {
    static constexpr std::array<std::array<std::uint8_t, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    std::vector<GroupElement> group;
    for (const auto& perm : perms) {
        for (int bits = 0; bits < 8; ++bits) {
            Isometry iso;
            iso.perm = perm;
            for (int i = 0; i < 3; ++i) iso.sign[i] = (bits >> i) & 1 ? -1 : 1;
            if (proper_only && iso.determinant() != 1) continue;
            GroupElement el;
            el.iso = iso;
            for (int d = 0; d < 6; ++d)
                el.dir_map[d] = static_cast<std::uint8_t>(iso.apply(Direction(d)));
            group.push_back(el);
        }
    }
    return group;
}

}  // namespace

std::span<const GroupElement> point_group(SymmetryMode mode) {
    static const std::vector<GroupElement> proper = [] {
        auto g = make_group(true);
        if (g.size() != 24) throw std::logic_error("point group: expected 24 proper rotations");
        return g;
    }();
    static const std::vector<GroupElement> full = [] {
        auto g = make_group(false);
        if (g.size() != 48) throw std::logic_error("point group: expected 48 elements");
        return g;
    }();
    return mode == SymmetryMode::proper ? std::span<const GroupElement>(proper)
                                        : std::span<const GroupElement>(full);
}

}  // namespace latknot
