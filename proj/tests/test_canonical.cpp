#include <doctest.h>

#include <random>

#include "latknot/canonical.hpp"
#include "support.hpp"

using namespace latknot;
namespace ts = latknot::testsupport;

namespace {

std::size_t brute_least_rotation(const std::vector<unsigned char>& s) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            const unsigned char a = s[(k + i) % s.size()];
            const unsigned char b = s[(best + i) % s.size()];
            if (a != b) {
                if (a < b) best = k;
                break;
            }
        }
    }
    return best;
}

std::string rotate(const std::vector<unsigned char>& s, std::size_t k) {
    std::string out(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = static_cast<char>(s[(k + i) % s.size()]);
    return out;
}

}  // namespace

TEST_CASE("booth least rotation agrees with brute force") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> len(1, 24);
    std::uniform_int_distribution<int> byte(0, 5);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<unsigned char> s(static_cast<std::size_t>(len(rng)));
        for (auto& c : s) c = static_cast<unsigned char>(byte(rng));
        CHECK(rotate(s, least_rotation(s)) == rotate(s, brute_least_rotation(s)));
    }
}

TEST_CASE("all unit squares share one canonical key") {
    const auto xy = LatticePolygon::validate({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
    const auto yz = LatticePolygon::validate({{5, 2, 3}, {5, 3, 3}, {5, 3, 4}, {5, 2, 4}});
    const auto xz = LatticePolygon::validate({{0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 0, 0}});
    const auto key = canonicalize(xy, SymmetryMode::proper);
    CHECK(canonicalize(yz, SymmetryMode::proper) == key);
    CHECK(canonicalize(xz, SymmetryMode::proper) == key);
    CHECK(canonicalize(mirror_seed(xy), SymmetryMode::proper) == key);  // squares are achiral

    // regression: +x,+y,-x,-y is the minimal encoding of a 4-gon
    CHECK(key.bytes() == std::string({0, 2, 1, 3}));
    CHECK(key.length() == 4);
}

TEST_CASE("canonical key invariance on fuzzed polygons") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = ts::random_walk_polygon(rng, 40, 16);
        for (auto mode : {SymmetryMode::proper, SymmetryMode::full}) {
            const auto key = canonicalize(p, mode);
            for (const auto& g : point_group(mode))
                CHECK(canonicalize(apply_isometry(g.iso, p), mode) == key);

            // cyclic shift and reversal
            std::vector<Point3> shifted = p.vertices();
            std::rotate(shifted.begin(), shifted.begin() + p.length() / 2, shifted.end());
            CHECK(canonicalize(LatticePolygon::validate(shifted), mode) == key);
            std::reverse(shifted.begin() + 1, shifted.end());
            CHECK(canonicalize(LatticePolygon::validate(shifted), mode) == key);

            // translation
            std::vector<Point3> moved;
            for (auto v : p.vertices()) moved.push_back(v + Point3{7, -3, 11});
            CHECK(canonicalize(LatticePolygon::validate(moved), mode) == key);
        }
    }
}

TEST_CASE("full mode key is the minimum over the two proper keys") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = ts::random_walk_polygon(rng, 50, 18);
        const auto full = canonicalize(p, SymmetryMode::full);
        const auto proper = canonicalize(p, SymmetryMode::proper);
        const auto mirrored = canonicalize(mirror_seed(p), SymmetryMode::proper);
        CHECK(full == std::min(proper, mirrored));
    }
}

TEST_CASE("reconstruct round-trips canonical keys") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = ts::random_walk_polygon(rng, 40, 16);
        for (auto mode : {SymmetryMode::proper, SymmetryMode::full}) {
            const auto key = canonicalize(p, mode);
            const auto rebuilt = reconstruct(key);
            CHECK(rebuilt.vertices().front() == Point3{0, 0, 0});
            CHECK(rebuilt.length() == p.length());
            CHECK(canonicalize(rebuilt, mode) == key);
        }
    }
}

TEST_CASE("reconstruct rejects malformed keys") {
    auto code_of = [](const CanonicalKey& k) {
        try {
            reconstruct(k);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::invalid_seed;
    };
    CHECK(code_of(CanonicalKey("")) == Errc::malformed_key);
    CHECK(code_of(CanonicalKey(std::string({0, 2, 1, 6}))) == Errc::malformed_key);
    CHECK(code_of(CanonicalKey(std::string({0, 0, 2, 1}))) == Errc::malformed_key);   // no closure
    CHECK(code_of(CanonicalKey(std::string({0, 1, 0, 1}))) == Errc::malformed_key);   // backtracks
    CHECK(code_of(CanonicalKey(std::string({0, 2, 1, 3, 0, 2}))) == Errc::malformed_key);
}
