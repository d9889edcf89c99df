#include <doctest.h>

#include <random>

#include "latknot/moves.hpp"
#include "support.hpp"

using namespace latknot;
namespace ts = latknot::testsupport;

namespace {

const LatticePolygon& square() {
    static const LatticePolygon p =
        LatticePolygon::validate({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
    return p;
}

}  // namespace

TEST_CASE("unit square move counts") {
    CHECK(corner_flips(square()).empty());      // every flip target is occupied
    CHECK(contractions(square()).empty());      // would drop below length 4
    CHECK(expansions(square(), 4).empty());     // no room under the bound
    const auto exp = expansions(square(), 6);
    CHECK(exp.size() == 12);                    // 3 of 4 perpendicular pushes per edge
    for (const auto& [move, q] : exp) CHECK(q.length() == 6);
    CHECK(neighbors(square(), 8).size() == 12);
}

TEST_CASE("every generated move matches apply_move and validates") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = ts::random_walk_polygon(rng, 40, 18);
        for (const auto& [move, q] : legal_moves(p, 18 + 2)) {
            CHECK_NOTHROW(LatticePolygon::validate(q.vertices()));
            CHECK(apply_move(p, move) == q);
            const int delta = q.length() - p.length();
            switch (move.kind) {
                case MoveKind::corner_flip: CHECK(delta == 0); break;
                case MoveKind::expansion: CHECK(delta == 2); break;
                case MoveKind::contraction: CHECK(delta == -2); break;
            }
        }
    }
}

TEST_CASE("expansion then contraction at the same site is the identity") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = ts::random_walk_polygon(rng, 30, 16);
        for (const auto& [move, q] : expansions(p, p.length() + 2)) {
            const Move inverse{MoveKind::contraction, move.site};
            CHECK(apply_move(q, inverse) == p);
        }
    }
}

TEST_CASE("corner flips are involutive") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = ts::random_walk_polygon(rng, 30, 16);
        for (const auto& [move, q] : corner_flips(p)) {
            const auto flips_back = corner_flips(q);
            bool found = false;
            for (const auto& [back, r] : flips_back)
                if (r == p) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("move generation agrees with the validate-based oracle") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const auto p = ts::random_walk_polygon(rng, 30, 14);
        const int max_len = 16;
        CHECK(ts::signature_set(neighbors(p, max_len)) ==
              ts::signature_set(ts::oracle_one_move(p, max_len)));
    }
}

TEST_CASE("neighbor order is deterministic and grouped by kind") {
    std::mt19937 rng(59);
    const auto p = ts::random_walk_polygon(rng, 25, 14);
    const auto a = legal_moves(p, 16);
    const auto b = legal_moves(p, 16);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first == b[i].first);
        CHECK(a[i].second == b[i].second);
    }
    for (std::size_t i = 1; i < a.size(); ++i) {
        CHECK(static_cast<int>(a[i - 1].first.kind) <= static_cast<int>(a[i].first.kind));
        if (a[i - 1].first.kind == a[i].first.kind) {
            CHECK(a[i - 1].first.site <= a[i].first.site);
        }
    }
}

TEST_CASE("apply_move rejects illegal requests") {
    auto code_of = [](const LatticePolygon& p, const Move& m) {
        try {
            apply_move(p, m);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::invalid_seed;
    };
    CHECK(code_of(square(), {MoveKind::corner_flip, 0}) == Errc::illegal_move);
    CHECK(code_of(square(), {MoveKind::contraction, 0}) == Errc::illegal_move);
    CHECK(code_of(square(), {MoveKind::expansion, 9}) == Errc::illegal_move);
    CHECK(code_of(square(), {MoveKind::expansion, 0, Direction::pos_x}) == Errc::illegal_move);
}
