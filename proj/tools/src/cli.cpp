#include "crystal/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "crystal/error.hpp"
#include "crystal/graph.hpp"
#include "crystal/invariants.hpp"
#include "crystal/io.hpp"
#include "crystal/quadric.hpp"
#include "crystal/realization.hpp"
#include "crystal/tiling.hpp"

namespace crystal {

namespace {

GraphFile load_graph(const std::string& path) { return parse_graph_file(read_text_file(path)); }

VanishingSubgroup subgroup_of(const GraphFile& gf, const HomologyBasis& hb) {
    return make_vanishing_subgroup(gf.graph, hb,
                                   gf.has_vanishing_group ? gf.vanishing_group
                                                          : std::vector<OneChain>{});
}

int census_threads() {
    const char* env = std::getenv("CRYSTAL_THREADS");
    if (env == nullptr) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"standard 2D crystal realizations as rational points on quadrics"};
    app.require_subcommand(1);

    std::string graph_path, point_path, out_path, format = "json";
    int window = 1;
    std::optional<long> hmax;
    bool tilings_only = false, show_lattice = false, reduced = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("graph", graph_path, "graph JSON file")->required();
        cmd->add_option("-o,--output", out_path, "write output to a file instead of stdout");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a graph file and its subgroup");
    add_common(validate);

    CLI::App* invariants = app.add_subcommand("invariants", "tree number, I(H), D, volumes");
    add_common(invariants);

    CLI::App* realize = app.add_subcommand("realize", "standard realization as a crystal patch");
    add_common(realize);
    realize->add_option("--window", window, "lattice translates per axis (default 1)");
    realize->add_option("--format", format, "json or svg")
        ->check(CLI::IsMember({"json", "svg"}));
    realize->add_flag("--show-lattice", show_lattice, "draw period lattice arrows in SVG");

    CLI::App* quadric = app.add_subcommand("quadric", "defining equations of the quadric");
    add_common(quadric);
    quadric->add_flag("--reduced", reduced, "include the reduced form and substitution");
    quadric->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* verify = app.add_subcommand("verify-point", "check a point and recover its crystal");
    add_common(verify);
    verify->add_option("point", point_path, "point JSON file")->required();

    CLI::App* census = app.add_subcommand("census", "enumerate subgroups and test tilings");
    add_common(census);
    census->add_option("--height", hmax, "height bound (default 6*(b1-1))");
    census->add_flag("--tilings-only", tilings_only, "keep only rows that tile");
    census->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (validate->parsed()) {
            GraphFile gf = load_graph(graph_path);
            gf.graph.validate();
            HomologyBasis hb = homology_basis(gf.graph);
            VanishingSubgroup h = subgroup_of(gf, hb);
            std::string text = "ok: " + std::to_string(gf.graph.vertex_count()) + " vertices, " +
                               std::to_string(gf.graph.edge_count()) + " edges, b1 " +
                               std::to_string(gf.graph.betti()) + ", subgroup rank " +
                               std::to_string(h.rank()) + "\n";
            emit(text, out_path, out);
        } else if (invariants->parsed()) {
            GraphFile gf = load_graph(graph_path);
            gf.graph.validate();
            HomologyBasis hb = homology_basis(gf.graph);
            VanishingSubgroup h = subgroup_of(gf, hb);
            emit(invariant_report_json(invariant_report(gf.graph, h)), out_path, out);
        } else if (realize->parsed()) {
            GraphFile gf = load_graph(graph_path);
            gf.graph.validate();
            HomologyBasis hb = homology_basis(gf.graph);
            VanishingSubgroup h = subgroup_of(gf, hb);
            StandardPoint z = standard_point(gf.graph, h);
            PeriodLattice lat = period_lattice(gf.graph, hb, z);
            PlacedCrystal pc = place(gf.graph, hb, z, lat, window);
            emit(format == "svg" ? placed_crystal_svg(gf.graph, pc, show_lattice)
                                 : placed_crystal_json(gf.graph, pc),
                 out_path, out);
        } else if (quadric->parsed()) {
            GraphFile gf = load_graph(graph_path);
            gf.graph.validate();
            std::optional<VanishingSubgroup> h;
            if (gf.has_vanishing_group)
                h = subgroup_of(gf, homology_basis(gf.graph));
            QuadricPresentation q = quadric_presentation(gf.graph, h);
            emit(format == "text" ? quadric_text(gf.graph, q, reduced)
                                  : quadric_json(gf.graph, q, reduced),
                 out_path, out);
        } else if (verify->parsed()) {
            GraphFile gf = load_graph(graph_path);
            gf.graph.validate();
            PointFile pf = parse_point_file(read_text_file(point_path));
            emit(verify_point_json(gf.graph, ProjectivePoint{pf.coords}), out_path, out);
        } else if (census->parsed()) {
            GraphFile gf = load_graph(graph_path);
            CensusReport rep = tiling_census(gf.graph, hmax, census_threads());
            emit(format == "text" ? census_table(gf.graph, rep, tilings_only)
                                  : census_json(gf.graph, rep, tilings_only),
                 out_path, out);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace crystal
