#include <doctest.h>

#include "latknot/enumerate.hpp"
#include "latknot/seeds.hpp"
#include "support.hpp"

using namespace latknot;

namespace {

LatticePolygon cube_corner_hexagon() {
    return LatticePolygon::validate(
        {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
}

LatticePolygon rectangle_2x1() {
    return LatticePolygon::validate(
        {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {1, 1, 0}, {0, 1, 0}});
}

}  // namespace

TEST_CASE("demo unknot exploration matches the published block") {
    const auto [graph, report] = explore({square_unknot()}, 8, std::nullopt, SymmetryMode::proper);
    CHECK(report.vertices == 18);
    CHECK(report.edges == 31);
    CHECK(report.components == 1);
    REQUIRE(report.component_sizes.size() == 1);
    CHECK(report.component_sizes[0] == 18);
    CHECK_FALSE(report.capped);
    CHECK(graph.level == 8);
}

TEST_CASE("induced graph over the explored states reproduces the exploration") {
    const auto [explored, report] = explore({square_unknot()}, 8, std::nullopt, SymmetryMode::proper);
    (void)report;
    std::vector<LatticePolygon> reps;
    for (const auto& key : explored.vertices) reps.push_back(reconstruct(key));
    const auto [ind, ind_report] = induced_graph(reps, 8, SymmetryMode::proper);
    CHECK(ind_report.vertices == 18);
    CHECK(ind_report.edges == 31);
    CHECK(ind_report.components == 1);
    CHECK(ind.edge_keys() == explored.edge_keys());
}

TEST_CASE("induced graph basics") {
    const auto [single, single_report] = induced_graph({square_unknot()}, 8, SymmetryMode::proper);
    CHECK(single_report.vertices == 1);
    CHECK(single_report.edges == 0);
    CHECK(single_report.components == 1);
    (void)single;

    // one expansion apart
    const auto [pair, pair_report] =
        induced_graph({square_unknot(), rectangle_2x1()}, 8, SymmetryMode::proper);
    CHECK(pair_report.vertices == 2);
    CHECK(pair_report.edges == 1);
    CHECK(pair_report.components == 1);
    (void)pair;

    // square and the cube-corner hexagon are not one move apart
    const auto [apart, apart_report] =
        induced_graph({square_unknot(), cube_corner_hexagon()}, 8, SymmetryMode::proper);
    CHECK(apart_report.vertices == 2);
    CHECK(apart_report.edges == 0);
    CHECK(apart_report.components == 2);
    CHECK(apart_report.component_sizes == std::vector<std::size_t>{1, 1});
    (void)apart;

    // duplicate inputs collapse to one class
    const auto [dup, dup_report] = induced_graph(
        {square_unknot(), apply_isometry(Isometry::translate({3, 4, 5}), square_unknot())}, 8,
        SymmetryMode::proper);
    CHECK(dup_report.vertices == 1);
    (void)dup;
}

TEST_CASE("components on an edgeless graph are singletons sorted by key") {
    const auto [g, report] =
        induced_graph({cube_corner_hexagon(), square_unknot()}, 8, SymmetryMode::proper);
    (void)report;
    const auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 1);
    CHECK(comps[1].size() == 1);
    CHECK(comps[0].front() < comps[1].front());  // equal sizes tie-break on minimal key
}

TEST_CASE("report component sizes are descending") {
    // square's component at 6 plus an isolated length-10 class far away
    const auto all10 = enumerate_all(10, SymmetryMode::proper);
    const auto ten = reconstruct(all10.classes_by_length.at(10).front());
    auto reps = std::vector<LatticePolygon>{square_unknot(), rectangle_2x1(), ten};
    const auto [g, report] = induced_graph(reps, 10, SymmetryMode::proper);
    (void)g;
    CHECK(report.components == 2);
    CHECK(report.component_sizes == std::vector<std::size_t>{2, 1});
}

TEST_CASE("seed longer than the level is rejected") {
    auto code = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::invalid_seed;
    };
    CHECK(code([] { explore({rectangle_2x1()}, 4, std::nullopt, SymmetryMode::proper); }) ==
          Errc::seed_too_long);
    CHECK(code([] { induced_graph({rectangle_2x1()}, 4, SymmetryMode::proper); }) ==
          Errc::seed_too_long);
}

TEST_CASE("capped exploration is a prefix of the uncapped order") {
    const auto [full_graph_run, full_report] =
        explore({square_unknot()}, 10, std::nullopt, SymmetryMode::proper);
    REQUIRE(full_report.vertices == 135);
    CHECK_FALSE(full_report.capped);

    for (std::size_t cap : {1u, 2u, 17u, 60u, 135u}) {
        const auto [capped, capped_report] =
            explore({square_unknot()}, 10, static_cast<int>(cap), SymmetryMode::proper);
        CHECK(capped_report.capped);
        CHECK(capped_report.cap == static_cast<int>(cap));
        REQUIRE(capped_report.vertices == cap);
        for (std::size_t i = 0; i < cap; ++i) CHECK(capped.vertices[i] == full_graph_run.vertices[i]);

        // edges among discovered states are classified completely
        std::vector<LatticePolygon> reps;
        for (const auto& key : capped.vertices) reps.push_back(reconstruct(key));
        const auto [ind, ind_report] = induced_graph(reps, 10, SymmetryMode::proper);
        (void)ind;
        CHECK(capped_report.edges == ind_report.edges);
    }

    // a cap above the component size leaves the run uncapped
    const auto [loose, loose_report] = explore({square_unknot()}, 10, 100000, SymmetryMode::proper);
    (void)loose;
    CHECK_FALSE(loose_report.capped);
    CHECK(loose_report.vertices == 135);
}

TEST_CASE("re-exploring from any discovered vertex gives the same component") {
    const auto [g, report] = explore({square_unknot()}, 8, std::nullopt, SymmetryMode::proper);
    (void)report;
    auto sorted_keys = g.vertices;
    std::sort(sorted_keys.begin(), sorted_keys.end());
    for (std::size_t i = 0; i < g.vertices.size(); i += 5) {
        const auto [h, r] = explore({reconstruct(g.vertices[i])}, 8, std::nullopt, SymmetryMode::proper);
        (void)r;
        auto keys = h.vertices;
        std::sort(keys.begin(), keys.end());
        CHECK(keys == sorted_keys);
    }
}

TEST_CASE("persistence maps are total and functorial") {
    const auto [g6, r6] = explore({square_unknot()}, 6, std::nullopt, SymmetryMode::proper);
    const auto [g8, r8] = explore({square_unknot()}, 8, std::nullopt, SymmetryMode::proper);
    const auto [g10, r10] = explore({square_unknot()}, 10, std::nullopt, SymmetryMode::proper);
    (void)r6; (void)r8; (void)r10;

    const auto identity = persistence_map(g6, g6);
    for (std::size_t c = 0; c < identity.size(); ++c) CHECK(identity[c] == c);

    const auto m68 = persistence_map(g6, g8);
    const auto m810 = persistence_map(g8, g10);
    const auto m610 = persistence_map(g6, g10);
    REQUIRE(m68.size() == components(g6).size());
    for (std::size_t c = 0; c < m68.size(); ++c) {
        CHECK(m68[c] < components(g8).size());   // total
        CHECK(m610[c] == m810[m68[c]]);          // functorial across three levels
    }
}

TEST_CASE("persistence rejects non-nested graphs") {
    const auto [g6, r6] = explore({square_unknot()}, 6, std::nullopt, SymmetryMode::proper);
    const auto [only_square, r] = induced_graph({square_unknot()}, 8, SymmetryMode::proper);
    (void)r6; (void)r;
    CHECK_THROWS_AS((void)persistence_map(g6, only_square), Error);
    CHECK_THROWS_AS((void)persistence_map(g6, only_square), Error);

    const auto [g8, r8] = explore({square_unknot()}, 8, std::nullopt, SymmetryMode::proper);
    (void)r8;
    CHECK_THROWS_AS((void)persistence_map(g8, g6), std::invalid_argument);
}
