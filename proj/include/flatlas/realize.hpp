#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/cylinders.hpp"
#include "flatlas/diagram.hpp"
#include "flatlas/origami.hpp"
#include "flatlas/widths.hpp"

namespace flatlas {

// Geometric decoration of a diagram: integer widths per saddle label, and a
// height and twist per cylinder.  Twists are taken modulo the circumference.
struct GeometricData {
    std::vector<int> widths;
    std::vector<int> heights;
    std::vector<int> twists;
};

inline GeometricData minimal_geometry(const CylinderDiagram& d) {
    auto w = solve_widths(d);
    check(w.has_value(), errc::no_positive_widths, "diagram admits no positive widths");
    GeometricData g;
    g.widths = *w;
    g.heights.assign(static_cast<size_t>(d.num_cylinders()), 1);
    g.twists.assign(static_cast<size_t>(d.num_cylinders()), 0);
    return g;
}

// Build the square-tiled surface with the given combinatorics and geometry.
// Cylinder i becomes a block of heights[i] rows of ell_i columns; column 0 of
// every row sits below the start of the stored bottom word, and the stored
// top word begins at column twists[i] of the top row.  Saddles glue top rows
// to bottom rows slot by slot.
inline Origami realize(const CylinderDiagram& d, const GeometricData& geom) {
    require_valid(d); // structure + connectivity + widths solvable
    int k = d.num_cylinders(), E = d.num_labels();
    check(static_cast<int>(geom.widths.size()) == E, errc::bad_input, "widths size mismatch");
    check(static_cast<int>(geom.heights.size()) == k, errc::bad_input, "heights size mismatch");
    check(static_cast<int>(geom.twists.size()) == k, errc::bad_input, "twists size mismatch");
    for (int w : geom.widths) check(w >= 1, errc::bad_input, "widths must be positive");
    for (int h : geom.heights) check(h >= 1, errc::bad_input, "heights must be positive");

    auto ix = index_diagram(d);
    std::vector<int> ell(static_cast<size_t>(k), 0);
    for (int ci = 0; ci < k; ++ci) {
        int sb = 0, st = 0;
        for (int x : d.cylinders[static_cast<size_t>(ci)].bottom) sb += geom.widths[static_cast<size_t>(x)];
        for (int x : d.cylinders[static_cast<size_t>(ci)].top) st += geom.widths[static_cast<size_t>(x)];
        check(sb == st, errc::bad_input,
              "cylinder " + std::to_string(ci) + " is unbalanced by these widths");
        ell[static_cast<size_t>(ci)] = sb;
    }

    // Column where label x starts in its bottom (resp. top) word layout.
    std::vector<int> bot_start(static_cast<size_t>(E), 0), top_start(static_cast<size_t>(E), 0);
    for (int ci = 0; ci < k; ++ci) {
        int acc = 0;
        for (int x : d.cylinders[static_cast<size_t>(ci)].bottom) {
            bot_start[static_cast<size_t>(x)] = acc;
            acc += geom.widths[static_cast<size_t>(x)];
        }
        acc = 0;
        for (int x : d.cylinders[static_cast<size_t>(ci)].top) {
            top_start[static_cast<size_t>(x)] = acc;
            acc += geom.widths[static_cast<size_t>(x)];
        }
    }

    std::vector<int> offset(static_cast<size_t>(k), 0);
    int n = 0;
    for (int ci = 0; ci < k; ++ci) {
        offset[static_cast<size_t>(ci)] = n;
        n += geom.heights[static_cast<size_t>(ci)] * ell[static_cast<size_t>(ci)];
    }
    auto square = [&](int ci, int row, int col) {
        int l = ell[static_cast<size_t>(ci)];
        return offset[static_cast<size_t>(ci)] + row * l + ((col % l + l) % l);
    };

    std::vector<int> rimg(static_cast<size_t>(n)), uimg(static_cast<size_t>(n));
    for (int ci = 0; ci < k; ++ci) {
        int h = geom.heights[static_cast<size_t>(ci)], l = ell[static_cast<size_t>(ci)];
        for (int row = 0; row < h; ++row)
            for (int col = 0; col < l; ++col)
                rimg[static_cast<size_t>(square(ci, row, col))] = square(ci, row, col + 1);
        for (int row = 0; row + 1 < h; ++row)
            for (int col = 0; col < l; ++col)
                uimg[static_cast<size_t>(square(ci, row, col))] = square(ci, row + 1, col);
        int t = ((geom.twists[static_cast<size_t>(ci)] % l) + l) % l;
        for (int col = 0; col < l; ++col) {
            int p = ((col - t) % l + l) % l; // position along the stored top word
            // Find the saddle covering p and the slot within it.
            int x = -1, slot = 0;
            for (int y : d.cylinders[static_cast<size_t>(ci)].top) {
                int s = top_start[static_cast<size_t>(y)], w = geom.widths[static_cast<size_t>(y)];
                if (p >= s && p < s + w) {
                    x = y;
                    slot = p - s;
                    break;
                }
            }
            invariant(x >= 0, "top layout must cover every column");
            int cj = ix.bottom_cyl[static_cast<size_t>(x)];
            uimg[static_cast<size_t>(square(ci, h - 1, col))] =
                square(cj, 0, bot_start[static_cast<size_t>(x)] + slot);
        }
    }
    Origami o(Perm(std::move(rimg)), Perm(std::move(uimg)));
    validate_origami(o);
    return o;
}

// --- extraction -------------------------------------------------------------

struct ExtractResult {
    CylinderDiagram diagram;
    GeometricData geom;
    // label -> its run of horizontal edges, each edge named by the square
    // directly below it, in left-to-right order.
    std::vector<std::vector<int>> saddle_edges;
};

// Read the horizontal cylinder diagram (with geometry) off an origami.
// Cylinder order matches horizontal_cylinders(o).  A genus-1 surface has no
// saddle connections; it is reported as the torus-like diagram "0-0" whose
// single label is an artificial marked point on the wrap-around line.
inline ExtractResult extract_diagram(const Origami& o) {
    validate_origami(o);
    auto dec = horizontal_cylinders(o);
    ExtractResult res;

    if (dec.wraps) {
        const auto& c = dec.cylinders.front();
        int l = c.circumference();
        res.diagram.cylinders.push_back({{0}, {0}});
        res.geom.widths = {l};
        res.geom.heights = {c.height()};
        // Twist: the column of the top row glued onto bottom column 0.
        int t = -1;
        for (int col = 0; col < l; ++col)
            if (o.u(c.rows.back()[static_cast<size_t>(col)]) == c.rows.front()[0]) t = col;
        invariant(t >= 0, "wrap cylinder must glue onto its own bottom row");
        res.geom.twists = {t};
        res.saddle_edges.push_back(c.rows.back());
        return res;
    }

    Perm v = corner_perm(o);
    std::vector<int> vlen(static_cast<size_t>(o.n()), 0);
    for (const auto& orbit : v.cycles())
        for (int x : orbit) vlen[static_cast<size_t>(x)] = static_cast<int>(orbit.size());

    // Horizontal edges sit on singular lines exactly when they bound
    // cylinders; an edge is named by the square below it (its top edge).
    // The corner to the right of edge e_i (between e_i and e_{r(i)}) is the
    // NE corner of square i; a saddle run starts after a singular corner.
    std::vector<char> run_start(static_cast<size_t>(o.n()), 0);
    std::vector<int> label_of(static_cast<size_t>(o.n()), -1);
    Perm rinv = o.r.inverse();
    std::vector<std::vector<int>> runs;
    for (const auto& c : dec.cylinders) {
        for (int q : c.rows.back()) // edges on the singular line above this cylinder
            if (vlen[static_cast<size_t>(rinv(q))] >= 2) run_start[static_cast<size_t>(q)] = 1;
    }
    for (const auto& c : dec.cylinders) {
        for (int q : c.rows.back()) {
            if (!run_start[static_cast<size_t>(q)] || label_of[static_cast<size_t>(q)] >= 0) continue;
            std::vector<int> run;
            int x = q;
            do {
                run.push_back(x);
                x = o.r(x);
            } while (!run_start[static_cast<size_t>(x)]);
            int lab = static_cast<int>(runs.size());
            for (int e : run) label_of[static_cast<size_t>(e)] = lab;
            runs.push_back(std::move(run));
        }
    }
    // Deterministic labels: sort runs by their minimal edge square.
    std::vector<int> order(runs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return *std::min_element(runs[static_cast<size_t>(a)].begin(), runs[static_cast<size_t>(a)].end()) <
               *std::min_element(runs[static_cast<size_t>(b)].begin(), runs[static_cast<size_t>(b)].end());
    });
    std::vector<int> rename(runs.size());
    for (size_t i = 0; i < order.size(); ++i) rename[static_cast<size_t>(order[i])] = static_cast<int>(i);
    for (int& lab : label_of)
        if (lab >= 0) lab = rename[static_cast<size_t>(lab)];
    std::vector<std::vector<int>> sorted_runs(runs.size());
    for (size_t i = 0; i < runs.size(); ++i)
        sorted_runs[static_cast<size_t>(rename[i])] = runs[i];
    res.saddle_edges = std::move(sorted_runs);
    int E = static_cast<int>(res.saddle_edges.size());

    res.geom.widths.assign(static_cast<size_t>(E), 0);
    for (int x = 0; x < E; ++x)
        res.geom.widths[static_cast<size_t>(x)] = static_cast<int>(res.saddle_edges[static_cast<size_t>(x)].size());

    Perm uinv = o.u.inverse();
    for (const auto& c : dec.cylinders) {
        int l = c.circumference();
        // Bottom circle: edge below column col is the top edge of
        // u^-1(rows[0][col]).  Anchor the word at the first run start at or
        // after column 0 (column 0 sits at the cylinder's minimal bottom-row
        // square, so this is the deterministic serialization anchor).
        auto word_with_anchor = [&](auto edge_at) -> std::pair<std::vector<int>, int> {
            int c0 = -1;
            for (int col = 0; col < l; ++col) {
                if (run_start[static_cast<size_t>(edge_at(col))]) {
                    c0 = col;
                    break;
                }
            }
            invariant(c0 >= 0, "boundary circle of a bounded cylinder must carry a corner");
            std::vector<int> word;
            for (int col = c0; col < c0 + l; ++col) {
                int e = edge_at(((col % l) + l) % l);
                if (run_start[static_cast<size_t>(e)]) word.push_back(label_of[static_cast<size_t>(e)]);
            }
            return {word, c0};
        };
        auto [bword, b0] = word_with_anchor([&](int col) { return uinv(c.rows.front()[static_cast<size_t>(col)]); });
        auto [tword, t0] = word_with_anchor([&](int col) { return c.rows.back()[static_cast<size_t>(col)]; });
        res.diagram.cylinders.push_back({bword, tword});
        res.geom.heights.push_back(c.height());
        res.geom.twists.push_back((((t0 - b0) % l) + l) % l);
    }
    invariant(res.diagram.num_labels() == E, "every saddle appears in exactly one bottom word");
    require_valid(res.diagram);
    return res;
}

} // namespace flatlas
