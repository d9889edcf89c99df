#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "latknot/polygon.hpp"

namespace latknot {

/// Identifier of a polygon's isometry class: the lexicographically minimal
/// direction byte sequence over the orbit under the chosen point group,
/// cyclic shifts and orientation reversal. Translation is quotiented away
/// implicitly because directions carry no position.
class CanonicalKey {
public:
    CanonicalKey() = default;
    explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }
    int length() const { return static_cast<int>(bytes_.size()); }
    bool empty() const { return bytes_.empty(); }

    auto operator<=>(const CanonicalKey&) const = default;

private:
    std::string bytes_;
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const {
        return std::hash<std::string>{}(k.bytes());
    }
};

CanonicalKey canonicalize(const LatticePolygon& p, SymmetryMode mode);

/// Rebuilds the canonical representative based at the origin.
/// Throws Error(malformed_key) if the bytes do not describe a valid polygon.
LatticePolygon reconstruct(const CanonicalKey& key);

/// Index k such that rotating s left by k is the lexicographically least
/// rotation (Booth's algorithm).
std::size_t least_rotation(std::span<const unsigned char> s);

}  // namespace latknot
