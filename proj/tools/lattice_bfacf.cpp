// Command-line front end: explores BFACF move graphs of simple cubic
// lattice polygons, builds induced graphs, runs bidirectional merge checks
// with path certificates, iterates merge scales, and enumerates small
// polygon classes.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "latknot/enumerate.hpp"
#include "latknot/io.hpp"
#include "latknot/seeds.hpp"

namespace {

using namespace latknot;

struct GraphArgs {
    std::string input;
    bool demo_unknot = false;
    int max_len = 0;
    std::optional<int> cap;
    bool mirror = false;
    std::string out;
};

SymmetryMode mode_of(bool mirror) { return mirror ? SymmetryMode::full : SymmetryMode::proper; }

std::vector<LatticePolygon> gather_seeds(const GraphArgs& args) {
    if (args.demo_unknot) return {square_unknot()};
    return load_seeds(args.input);
}

void print_report(const ExplorationReport& report) {
    std::cout << "vertices: " << report.vertices << "\n";
    std::cout << "edges: " << report.edges << "\n";
    std::cout << "components: " << report.components << "\n";
    std::cout << "component sizes: [";
    for (std::size_t i = 0; i < report.component_sizes.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << report.component_sizes[i];
    }
    std::cout << "]\n";
    if (report.cap) std::cout << "capped: " << (report.capped ? "true" : "false") << "\n";
}

int run_graph(const GraphArgs& args, bool induced) {
    const auto seeds = gather_seeds(args);
    const auto [graph, report] =
        induced ? induced_graph(seeds, args.max_len, mode_of(args.mirror))
                : explore(seeds, args.max_len, args.cap, mode_of(args.mirror));
    (void)graph;
    if (args.demo_unknot && !induced) {
        std::cout << "Demo: square unknot, BFACF reachable graph up to length " << args.max_len
                  << "\n";
    } else {
        std::cout << "Input: " << (args.demo_unknot ? "demo unknot" : args.input)
                  << (induced ? ", BFACF induced graph at length " : ", BFACF reachable graph up to length ")
                  << args.max_len << "\n";
    }
    print_report(report);
    if (!args.out.empty())
        write_json_atomic(summary_json(report, induced ? "induced" : "explore"), args.out);
    return 0;
}

LatticePolygon first_seed(const std::string& path) {
    auto seeds = load_seeds(path);
    if (seeds.empty()) throw Error(Errc::invalid_seed, path + " contains no polygons");
    return seeds.front();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BFACF move graphs for simple cubic lattice knots"};
    app.require_subcommand(1);

    GraphArgs explore_args;
    auto* cmd_explore = app.add_subcommand("explore", "breadth-first seed-generated graph");
    auto* in1 = cmd_explore->add_option("--input", explore_args.input, "seed JSON file");
    auto* demo1 = cmd_explore->add_flag("--demo-unknot", explore_args.demo_unknot,
                                        "use the built-in square unknot");
    cmd_explore->add_option("--max-len", explore_args.max_len, "length bound")->required();
    int cap_value = 0;
    auto* cap_opt = cmd_explore->add_option("--cap", cap_value, "stop after this many states");
    cmd_explore->add_flag("--mirror", explore_args.mirror, "identify mirror images");
    cmd_explore->add_option("--out", explore_args.out, "write JSON summary here");
    in1->excludes(demo1);
    demo1->excludes(in1);

    GraphArgs induced_args;
    auto* cmd_induced = app.add_subcommand("induced", "induced graph on the supplied polygons");
    auto* in2 = cmd_induced->add_option("--input", induced_args.input, "seed JSON file");
    auto* demo2 = cmd_induced->add_flag("--demo-unknot", induced_args.demo_unknot,
                                        "use the built-in square unknot");
    cmd_induced->add_option("--max-len", induced_args.max_len, "length bound")->required();
    cmd_induced->add_flag("--mirror", induced_args.mirror, "identify mirror images");
    cmd_induced->add_option("--out", induced_args.out, "write JSON summary here");
    in2->excludes(demo2);
    demo2->excludes(in2);

    std::string seed1, seed2, merge_out, certificate_out;
    int merge_max_len = 0;
    bool merge_mirror = false;
    std::size_t state_cap_value = 0;
    double time_cap_value = 0;
    auto* cmd_merge = app.add_subcommand("merge-check", "bidirectional search between two seeds");
    cmd_merge->add_option("--seed1", seed1, "first seed JSON file")->required();
    cmd_merge->add_option("--seed2", seed2, "second seed JSON file")->required();
    cmd_merge->add_option("--max-len", merge_max_len, "length bound")->required();
    auto* state_cap_opt = cmd_merge->add_option("--state-cap", state_cap_value,
                                                "stop after this many discovered states");
    auto* time_cap_opt = cmd_merge->add_option("--time-cap", time_cap_value,
                                               "stop after this many seconds");
    cmd_merge->add_flag("--mirror", merge_mirror, "identify mirror images");
    cmd_merge->add_option("--certificate", certificate_out, "write the merge path here");
    cmd_merge->add_option("--out", merge_out, "write JSON summary here");

    std::string scale_seed1, scale_seed2;
    int max_level = 0;
    bool scale_mirror = false;
    auto* cmd_scale = app.add_subcommand("merge-scale", "first level joining two seeds");
    cmd_scale->add_option("--seed1", scale_seed1, "first seed JSON file")->required();
    cmd_scale->add_option("--seed2", scale_seed2, "second seed JSON file")->required();
    cmd_scale->add_option("--max-level", max_level, "highest level to test")->required();
    cmd_scale->add_flag("--mirror", scale_mirror, "identify mirror images");

    int enum_max_len = 0;
    bool enum_mirror = false;
    auto* cmd_enum = app.add_subcommand("enumerate", "all polygon classes up to a length");
    cmd_enum->add_option("--max-len", enum_max_len, "length bound")->required();
    cmd_enum->add_flag("--mirror", enum_mirror, "identify mirror images");

    std::string mirror_in, mirror_out;
    auto* cmd_mirror = app.add_subcommand("mirror-seed", "reflect every polygon in a file");
    cmd_mirror->add_option("--input", mirror_in, "seed JSON file")->required();
    cmd_mirror->add_option("--out", mirror_out, "output JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_explore) {
            if (!explore_args.demo_unknot && explore_args.input.empty())
                throw Error(Errc::parse_error, "explore needs --input or --demo-unknot");
            if (*cap_opt) explore_args.cap = cap_value;
            return run_graph(explore_args, false);
        }
        if (*cmd_induced) {
            if (!induced_args.demo_unknot && induced_args.input.empty())
                throw Error(Errc::parse_error, "induced needs --input or --demo-unknot");
            return run_graph(induced_args, true);
        }
        if (*cmd_merge) {
            MergeCaps caps;
            if (*state_cap_opt) caps.state_cap = state_cap_value;
            if (*time_cap_opt) caps.time_cap_seconds = time_cap_value;
            const auto a = first_seed(seed1);
            const auto b = first_seed(seed2);
            const auto mode = mode_of(merge_mirror);
            const MergeReport report = merge_check(a, b, merge_max_len, caps, mode);
            std::cout << "Merge check at max length " << merge_max_len
                      << (merge_mirror ? " (mirror identified)" : "") << "\n";
            std::cout << "connected: " << (report.connected ? "true" : "false") << "\n";
            std::cout << "status: " << merge_status_name(report.status) << "\n";
            std::cout << "states from seed 1: " << report.states_from_seed_1 << "\n";
            std::cout << "states from seed 2: " << report.states_from_seed_2 << "\n";
            std::cout << "expanded: " << report.expanded << "\n";
            std::cout << "runtime seconds: " << report.runtime_seconds << "\n";
            if (!merge_out.empty()) write_json_atomic(merge_summary_json(report), merge_out);
            if (!certificate_out.empty()) {
                if (report.connected) {
                    const PathCertificate cert = extract_certificate(a, b, merge_max_len, mode);
                    write_json_atomic(certificate_json(cert), certificate_out);
                    std::cout << "certificate: " << cert.states.size() << " states, "
                              << cert.moves.size() << " moves, written to " << certificate_out
                              << "\n";
                } else {
                    std::cerr << "no certificate: seeds not connected at this level\n";
                }
            }
            return 0;
        }
        if (*cmd_scale) {
            const auto a = first_seed(scale_seed1);
            const auto b = first_seed(scale_seed2);
            const MergeScaleResult result =
                merge_scale(a, b, max_level, MergeCaps{}, mode_of(scale_mirror));
            for (const auto& check : result.checks)
                std::cout << "level " << check.level << ": " << merge_status_name(check.status)
                          << "\n";
            if (result.level) std::cout << "merge scale: " << *result.level << "\n";
            else if (result.upper_bound)
                std::cout << "merge scale: inconclusive (connected at " << *result.upper_bound
                          << ", lower levels capped)\n";
            else
                std::cout << "merge scale: inconclusive (no connection up to " << max_level
                          << ")\n";
            return 0;
        }
        if (*cmd_enum) {
            const EnumerationResult result = enumerate_all(enum_max_len, mode_of(enum_mirror));
            for (const auto& [len, keys] : result.classes_by_length)
                std::cout << "length " << len << ": " << keys.size() << " classes\n";
            std::cout << "total: " << result.total_classes() << " classes up to length "
                      << enum_max_len << "\n";
            return 0;
        }
        if (*cmd_mirror) {
            auto seeds = load_seeds(mirror_in);
            std::vector<LatticePolygon> reflected;
            reflected.reserve(seeds.size());
            for (const auto& p : seeds) reflected.push_back(mirror_seed(p));
            save_seeds(reflected, mirror_out);
            std::cout << "wrote " << reflected.size() << " polygon(s) to " << mirror_out << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
