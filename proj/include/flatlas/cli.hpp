#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flatlas/canonical.hpp"
#include "flatlas/cli_render.hpp"
#include "flatlas/common.hpp"
#include "flatlas/corpus.hpp"
#include "flatlas/cover.hpp"
#include "flatlas/cylinders.hpp"
#include "flatlas/diagram.hpp"
#include "flatlas/enumerate.hpp"
#include "flatlas/involution.hpp"
#include "flatlas/locus.hpp"
#include "flatlas/orbit.hpp"
#include "flatlas/origami.hpp"
#include "flatlas/realize.hpp"
#include "flatlas/stable_curve.hpp"
#include "flatlas/stratum.hpp"
#include "flatlas/surgery.hpp"
#include "flatlas/widths.hpp"

namespace flatlas {

inline int exit_code_for(errc c) {
    switch (c) {
        case errc::not_simple:
        case errc::same_zero:
        case errc::shared_zero_pair:
        case errc::bad_split:
        case errc::not_realizable:
            return 3; // surgery precondition
        case errc::internal:
        case errc::unknown_case:
            return 1; // invariant breach
        default:
            return 2; // malformed or unusable input
    }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cylinder diagrams, involutions and covers for square-tiled surfaces"};
    app.require_subcommand(1);
    bool plain = false;
    app.add_flag("--plain", plain, "line-oriented output instead of JSON");

    // enumerate
    std::string en_stratum;
    int en_ncyl = 0, en_threads = 0;
    bool en_sym = false, en_count_only = false;
    std::string en_corpus;
    auto* cmd_enum = app.add_subcommand("enumerate", "list cylinder diagrams of a stratum");
    cmd_enum->add_option("--stratum", en_stratum, "abelian stratum, e.g. H(1,1,1,1) or 2,1,1")->required();
    cmd_enum->add_option("--ncyl", en_ncyl, "number of cylinders")->required();
    cmd_enum->add_flag("--up-to-symmetry", en_sym, "fold half-turn mirror images together");
    cmd_enum->add_flag("--count-only", en_count_only, "print only the count");
    cmd_enum->add_option("--threads", en_threads, "worker threads (FLATLAS_THREADS caps this)");
    cmd_enum->add_option("--corpus", en_corpus, "also write the result as a corpus file");

    // classify
    std::string cl_diagram;
    auto* cmd_classify = app.add_subcommand("classify", "degeneration case of a cylinder diagram");
    cmd_classify->add_option("--diagram", cl_diagram, "diagram text, e.g. \"0-1 1,2-0,2\"")->required();

    // involutions
    std::string in_origami;
    bool in_one_based = false;
    auto* cmd_inv = app.add_subcommand("involutions", "-id lifts and their fixed-point ledger");
    cmd_inv->add_option("--origami", in_origami, "origami text: origami n=<N> r=<cycles> u=<cycles>")->required();
    cmd_inv->add_flag("--one-based", in_one_based, "cycles use labels 1..n");

    // cover
    std::string cv_origami, cv_rho;
    int cv_class = -1;
    bool cv_one_based = false;
    auto* cmd_cover = app.add_subcommand("cover", "Z/2 classes, double covers and quotients");
    cmd_cover->add_option("--origami", cv_origami, "origami text")->required();
    cmd_cover->add_flag("--one-based", cv_one_based, "cycles use labels 1..n");
    cmd_cover->add_option("--class", cv_class, "build the double cover along this class index");
    cmd_cover->add_option("--quotient", cv_rho,
                          "quotient by this free translation involution (cycles)");

    // collapse
    std::string co_diagram;
    int co_cyl = -1, co_pair = -1;
    auto* cmd_collapse = app.add_subcommand("collapse", "collapse a simple cylinder");
    cmd_collapse->add_option("--diagram", co_diagram, "diagram text")->required();
    cmd_collapse->add_option("--cylinder", co_cyl, "cylinder index")->required();
    cmd_collapse->add_option("--pair", co_pair, "also collapse this second cylinder");

    // insert
    std::string is_diagram;
    int is_edge = -1, is_m1 = 0, is_m2 = 0;
    auto* cmd_insert = app.add_subcommand("insert", "insert a simple cylinder across a saddle");
    cmd_insert->add_option("--diagram", is_diagram, "diagram text")->required();
    cmd_insert->add_option("--edge", is_edge, "saddle label to split along")->required();
    cmd_insert->add_option("--m1", is_m1, "order of the zero below the new cylinder")->required();
    cmd_insert->add_option("--m2", is_m2, "order of the zero above the new cylinder")->required();

    // orbit
    std::string or_origami;
    bool or_one_based = false;
    long or_limit = 0;
    auto* cmd_orbit = app.add_subcommand("orbit", "SL(2,Z) orbit of an origami");
    cmd_orbit->add_option("--origami", or_origami, "origami text")->required();
    cmd_orbit->add_flag("--one-based", or_one_based, "cycles use labels 1..n");
    cmd_orbit->add_option("--limit", or_limit, "abort if the orbit exceeds this size (0 = no limit)");

    // info
    std::string if_origami, if_diagram, if_locus, if_stratum;
    bool if_one_based = false;
    auto* cmd_info = app.add_subcommand("info", "inspect an origami, diagram, stratum or locus");
    cmd_info->add_option("--origami", if_origami, "origami text");
    cmd_info->add_option("--diagram", if_diagram, "diagram text");
    cmd_info->add_option("--locus", if_locus, "locus descriptor, e.g. Q~(2,1,-1^3)");
    cmd_info->add_option("--stratum", if_stratum, "stratum signature");
    cmd_info->add_flag("--one-based", if_one_based, "cycles use labels 1..n");

    std::vector<const char*> argv;
    static const std::string prog = "flatlas";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage_out, usage_err;
        int code = app.exit(e, usage_out, usage_err);
        out << usage_out.str();
        err << usage_err.str();
        return code == 0 ? 0 : 2;
    }

    try {
        nlohmann::json j;
        if (app.got_subcommand(cmd_enum)) {
            j = cli_render::do_enumerate(en_stratum, en_ncyl, en_sym, en_count_only, en_threads,
                                         en_corpus);
        } else if (app.got_subcommand(cmd_classify)) {
            j = cli_render::do_classify(cl_diagram);
        } else if (app.got_subcommand(cmd_inv)) {
            j = cli_render::do_involutions(in_origami, in_one_based);
        } else if (app.got_subcommand(cmd_cover)) {
            j = cli_render::do_cover(cv_origami, cv_one_based, cv_class, cv_rho);
        } else if (app.got_subcommand(cmd_collapse)) {
            j = cli_render::do_collapse(co_diagram, co_cyl, co_pair);
        } else if (app.got_subcommand(cmd_insert)) {
            j = cli_render::do_insert(is_diagram, is_edge, is_m1, is_m2);
        } else if (app.got_subcommand(cmd_orbit)) {
            j = cli_render::do_orbit(or_origami, or_one_based, or_limit);
        } else {
            j = cli_render::do_info(if_origami, if_diagram, if_locus, if_stratum, if_one_based);
        }
        if (plain)
            cli_render::print_plain(out, j);
        else
            out << j.dump(2) << "\n";
        return 0;
    } catch (const error& e) {
        err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace flatlas
