#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flatlas/canonical.hpp"
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

namespace flatlas::cli_render {

using nlohmann::json;

inline std::string bit_string(const std::vector<std::uint8_t>& v, int from, int len) {
    std::string s;
    for (int i = 0; i < len; ++i) s += static_cast<char>('0' + v[static_cast<size_t>(from + i)]);
    return s;
}

inline json do_enumerate(const std::string& stratum_s, int ncyl, bool sym, bool count_only,
                         int threads, const std::string& corpus_path) {
    auto sig = parse_stratum(stratum_s);
    EnumerationOptions opts;
    opts.up_to_symmetry = sym;
    opts.threads = threads;
    auto diagrams = enumerate_diagrams(sig, ncyl, opts);
    json j;
    j["stratum"] = sig.to_string();
    j["ncyl"] = ncyl;
    j["up_to_symmetry"] = sym;
    j["count"] = diagrams.size();
    if (!count_only) {
        json arr = json::array();
        for (const auto& d : diagrams) arr.push_back(serialize_diagram(d));
        j["diagrams"] = arr;
    }
    if (!corpus_path.empty()) {
        std::ofstream os(corpus_path);
        check(os.good(), errc::bad_input, "cannot open corpus file for writing: " + corpus_path);
        write_corpus(os, {CorpusSection{sig, ncyl, diagrams}});
        j["corpus"] = corpus_path;
    }
    return j;
}

inline json do_classify(const std::string& diagram_s) {
    auto d = parse_diagram(diagram_s);
    auto res = classify_case(d);
    json j;
    j["diagram"] = serialize_diagram(d);
    j["canonical"] = canonical_key(d);
    j["stratum"] = diagram_stratum(d).to_string();
    j["genus"] = res.genus;
    j["ncyl"] = res.k;
    j["case"] = res.case_name;
    if (auto w = solve_widths(d)) j["widths"] = *w;
    json comps = json::array();
    for (const auto& c : res.curve.components) {
        json jc;
        jc["genus"] = c.genus;
        jc["boundary"] = c.boundary;
        jc["zero_orders"] = c.zero_orders;
        comps.push_back(jc);
    }
    j["components"] = comps;
    json edges = json::array();
    for (auto& [a, b] : res.curve.cylinder_ends) edges.push_back(json::array({a, b}));
    j["dual_edges"] = edges;
    json rels = json::array();
    for (const auto& row : res.relations.relations) rels.push_back(row);
    j["relations"] = rels;
    j["rank"] = res.relations.rank;
    json pairs = json::array();
    for (const auto& p : res.pairs) {
        json jp;
        jp["i"] = p.i;
        jp["j"] = p.j;
        jp["sign"] = p.sign;
        pairs.push_back(jp);
    }
    j["homologous_pairs"] = pairs;
    if (res.middle_cylinder) {
        j["middle_cylinder"] = *res.middle_cylinder;
        j["middle_semisimple"] = res.middle_semisimple;
    }
    return j;
}

inline json involution_json(const Origami& o, const InvolutionReport& rep) {
    json ji;
    ji["sigma"] = format_cycles(rep.sigma);
    ji["centers"] = rep.center_squares;
    ji["vertical_edge_midpoints"] = rep.v_edge_squares;
    ji["horizontal_edge_midpoints"] = rep.h_edge_squares;
    ji["fixed_vertex_orbits"] = rep.fixed_vertex_orbits;
    ji["fixed_points"] = rep.fixed_points();
    ji["quotient_genus"] = rep.quotient_genus;
    ji["kind"] = rep.kind;
    ji["quotient_signature"] = involution_quotient_signature(o, rep).to_string();
    ji["zero_action"] = prym_zero_action(o, rep);
    return ji;
}

inline json do_involutions(const std::string& origami_s, bool one_based) {
    auto o = parse_origami(origami_s, one_based);
    validate_origami(o);
    json j;
    j["origami"] = format_origami(o);
    j["n"] = o.n();
    j["stratum"] = origami_stratum(o).to_string();
    j["genus"] = origami_genus(o);
    auto tg = translation_group(o);
    j["translation_group_order"] = tg.size();
    json jt = json::array();
    for (const auto& t : tg) jt.push_back(format_cycles(t));
    j["translations"] = jt;
    auto invs = minus_id_involutions(o);
    j["minus_id_count"] = invs.size();
    json ja = json::array();
    for (const auto& rep : invs) ja.push_back(involution_json(o, rep));
    j["involutions"] = ja;
    return j;
}

inline json do_cover(const std::string& origami_s, bool one_based, int class_index,
                     const std::string& rho_s) {
    auto o = parse_origami(origami_s, one_based);
    validate_origami(o);
    json j;
    j["origami"] = format_origami(o);
    j["n"] = o.n();
    j["genus"] = origami_genus(o);
    auto classes = z2_classes(o);
    j["num_classes"] = classes.size();
    json jc = json::array();
    for (size_t i = 0; i < classes.size(); ++i) {
        json e;
        e["index"] = i;
        e["trivial"] = classes[i].is_zero();
        e["eps_r"] = bit_string(classes[i].eps, 0, o.n());
        e["eps_u"] = bit_string(classes[i].eps, o.n(), o.n());
        jc.push_back(e);
    }
    j["classes"] = jc;
    if (class_index >= 0) {
        check(class_index < static_cast<int>(classes.size()), errc::bad_input,
              "class index out of range");
        auto cover = double_cover(o, classes[static_cast<size_t>(class_index)]);
        json cj;
        cj["origami"] = format_origami(cover);
        cj["stratum"] = origami_stratum(cover).to_string();
        cj["genus"] = origami_genus(cover);
        cj["deck"] = format_cycles(deck_involution(o.n()));
        j["cover"] = cj;
    }
    if (!rho_s.empty()) {
        auto rho = parse_cycles(rho_s, o.n(), one_based);
        auto qr = quotient_by_free_translation_involution(o, rho);
        json qj;
        qj["origami"] = format_origami(qr.quotient);
        qj["stratum"] = origami_stratum(qr.quotient).to_string();
        qj["genus"] = origami_genus(qr.quotient);
        qj["eps_r"] = bit_string(qr.cls.eps, 0, qr.cls.n);
        qj["eps_u"] = bit_string(qr.cls.eps, qr.cls.n, qr.cls.n);
        qj["rebuild_isomorphic"] = isomorphic(double_cover(qr.quotient, qr.cls), o);
        j["quotient"] = qj;
    }
    return j;
}

inline json collapse_json(const CollapseResult& res) {
    json j;
    j["result"] = serialize_diagram(res.diagram);
    j["canonical"] = res.canonical;
    j["merged_label"] = res.merged_label;
    j["m1"] = res.m1;
    j["m2"] = res.m2;
    j["stratum_after"] = diagram_stratum(res.diagram).to_string();
    return j;
}

inline json do_collapse(const std::string& diagram_s, int cyl, int pair) {
    auto d = parse_diagram(diagram_s);
    json j;
    j["diagram"] = serialize_diagram(d);
    j["stratum_before"] = diagram_stratum(d).to_string();
    if (pair < 0) {
        j.update(collapse_json(collapse_simple_cylinder(d, cyl)));
    } else {
        auto res = collapse_similar_pair(d, cyl, pair);
        j["first"] = collapse_json(res.first);
        j["second"] = collapse_json(res.second);
        j["result"] = serialize_diagram(res.diagram);
        j["canonical"] = res.canonical;
        j["stratum_after"] = diagram_stratum(res.diagram).to_string();
    }
    return j;
}

inline json do_insert(const std::string& diagram_s, int edge, int m1, int m2) {
    auto d = parse_diagram(diagram_s);
    auto res = insert_simple_cylinder(d, edge, m1, m2);
    json j;
    j["diagram"] = serialize_diagram(d);
    j["stratum_before"] = diagram_stratum(d).to_string();
    j["result"] = serialize_diagram(res.diagram);
    j["canonical"] = res.canonical;
    j["new_cylinder"] = res.new_cylinder;
    j["bottom_label"] = res.bottom_label;
    j["top_label"] = res.top_label;
    j["stratum_after"] = diagram_stratum(res.diagram).to_string();
    return j;
}

inline json do_orbit(const std::string& origami_s, bool one_based, long limit) {
    auto o = parse_origami(origami_s, one_based);
    auto res = sl2z_orbit(o, limit);
    json j;
    j["origami"] = format_origami(o);
    j["size"] = res.elements.size();
    j["truncated"] = res.truncated;
    json arr = json::array();
    for (const auto& e : res.elements) arr.push_back(format_origami(e));
    j["elements"] = arr;
    return j;
}

inline json do_info(const std::string& origami_s, const std::string& diagram_s,
                    const std::string& locus_s, const std::string& stratum_s, bool one_based) {
    int given = (!origami_s.empty()) + (!diagram_s.empty()) + (!locus_s.empty()) +
                (!stratum_s.empty());
    check(given == 1, errc::bad_input,
          "info needs exactly one of --origami, --diagram, --locus, --stratum");
    json j;
    if (!origami_s.empty()) {
        auto o = parse_origami(origami_s, one_based);
        validate_origami(o);
        j["origami"] = format_origami(o);
        j["n"] = o.n();
        j["r"] = format_cycles(o.r);
        j["u"] = format_cycles(o.u);
        j["commutator"] = format_cycles(commutator(o));
        j["stratum"] = origami_stratum(o).to_string();
        j["genus"] = origami_genus(o);
        j["canonical"] = format_origami(canonical_origami_form(o));
        auto dec = horizontal_cylinders(o);
        j["wraps_torus"] = dec.wraps;
        json jc = json::array();
        for (const auto& c : dec.cylinders) {
            json e;
            e["height"] = c.rows.size();
            e["circumference"] = c.rows.front().size();
            e["rows"] = c.rows;
            jc.push_back(e);
        }
        j["horizontal_cylinders"] = jc;
        auto vdec = vertical_cylinders(o);
        json jv = json::array();
        for (const auto& c : vdec.cylinders) {
            json e;
            e["height"] = c.rows.size();
            e["circumference"] = c.rows.front().size();
            jv.push_back(e);
        }
        j["vertical_cylinders"] = jv;
        auto ext = extract_diagram(o);
        j["diagram"] = serialize_diagram(ext.diagram);
        j["widths"] = ext.geom.widths;
        j["heights"] = ext.geom.heights;
        j["twists"] = ext.geom.twists;
    } else if (!diagram_s.empty()) {
        auto d = parse_diagram(diagram_s);
        auto report = validate_diagram(d);
        j["diagram"] = serialize_diagram(d);
        j["valid"] = report.ok;
        j["marked_points"] = report.marked_point;
        if (!report.ok) {
            j["problem"] = errc_name(*report.problem);
            j["message"] = report.message;
            return j;
        }
        j["stratum"] = diagram_stratum(d).to_string();
        j["genus"] = diagram_genus(d);
        j["ncyl"] = d.num_cylinders();
        j["saddles"] = index_diagram(d).E;
        json jz = json::array();
        for (const auto& z : diagram_zeros(d)) {
            json e;
            e["order"] = static_cast<int>(z.size()) - 1;
            e["labels"] = z;
            jz.push_back(e);
        }
        j["zeros"] = jz;
        if (auto w = solve_widths(d)) j["widths"] = *w;
        j["canonical"] = canonical_key(d);
        j["canonical_up_to_symmetry"] = canonical_key_up_to_symmetry(d);
    } else if (!locus_s.empty()) {
        auto ld = parse_locus(locus_s);
        j["locus"] = locus_to_string(ld);
        j["kind"] = ld.kind == LocusDescriptor::Kind::stratum          ? "stratum"
                    : ld.kind == LocusDescriptor::Kind::abelian_cover ? "abelian_cover"
                                                                      : "quadratic_cover";
        j["base"] = ld.base.to_string();
        j["dimension"] = locus_dimension(ld);
    } else {
        auto sig = parse_stratum(stratum_s);
        j["stratum"] = sig.to_string();
        j["type"] = sig.type == StratumSignature::Type::abelian ? "abelian" : "quadratic";
        j["genus"] = sig.genus();
        j["num_zeros"] = sig.num_zeros();
        j["dimension"] = sig.dimension();
        if (sig.type == StratumSignature::Type::abelian) {
            int E = 0;
            for (int m : sig.orders) E += m + 1;
            j["saddles"] = E;
            j["max_cylinders"] = sig.genus() + sig.num_zeros() - 1;
        }
    }
    return j;
}

// Line-oriented rendering of the JSON reports.
inline void print_plain(std::ostream& out, const json& j, int indent = 0) {
    std::string pad(static_cast<size_t>(indent), ' ');
    auto scalar = [](const json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    auto is_scalar_array = [](const json& v) {
        if (!v.is_array()) return false;
        for (const auto& e : v)
            if (e.is_object() || e.is_array()) return false;
        return true;
    };
    for (const auto& [key, val] : j.items()) {
        if (val.is_object()) {
            out << pad << key << ":\n";
            print_plain(out, val, indent + 2);
        } else if (is_scalar_array(val)) {
            out << pad << key << "=";
            for (size_t i = 0; i < val.size(); ++i) out << (i ? "," : "") << scalar(val[i]);
            out << "\n";
        } else if (val.is_array()) {
            out << pad << key << ":\n";
            for (const auto& e : val) {
                if (e.is_object()) {
                    out << pad << "  -";
                    for (const auto& [k2, v2] : e.items()) {
                        out << " " << k2 << "=";
                        if (is_scalar_array(v2)) {
                            for (size_t i = 0; i < v2.size(); ++i) out << (i ? "," : "") << scalar(v2[i]);
                        } else {
                            out << scalar(v2);
                        }
                    }
                    out << "\n";
                } else if (is_scalar_array(e)) {
                    out << pad << "  -";
                    for (const auto& v2 : e) out << " " << scalar(v2);
                    out << "\n";
                } else {
                    out << pad << "  " << scalar(e) << "\n";
                }
            }
        } else {
            out << pad << key << "=" << scalar(val) << "\n";
        }
    }
}

} // namespace flatlas::cli_render
