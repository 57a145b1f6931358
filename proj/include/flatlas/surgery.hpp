#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "flatlas/canonical.hpp"
#include "flatlas/common.hpp"
#include "flatlas/cylinders.hpp"
#include "flatlas/diagram.hpp"
#include "flatlas/origami.hpp"
#include "flatlas/realize.hpp"
#include "flatlas/widths.hpp"

namespace flatlas {

namespace detail {

inline std::vector<int> orbit_sizes_of(const CylinderDiagram& d) {
    std::vector<int> out;
    for (const auto& z : diagram_zeros(d)) out.push_back(static_cast<int>(z.size()));
    std::sort(out.rbegin(), out.rend());
    return out;
}

// Zero (vertex-orbit id) at the left endpoint of each label.
inline std::vector<int> zero_of_label(const CylinderDiagram& d) {
    auto zeros = diagram_zeros(d);
    std::vector<int> out(static_cast<size_t>(index_diagram(d).E), -1);
    for (size_t z = 0; z < zeros.size(); ++z)
        for (int lab : zeros[z]) out[static_cast<size_t>(lab)] = static_cast<int>(z);
    return out;
}

} // namespace detail

struct CollapseResult {
    CylinderDiagram diagram; // compacted labels, cylinder order preserved
    std::string canonical;   // canonical key of the result
    int merged_label = 0;    // the fused saddle in `diagram`
    int m1 = 0, m2 = 0;      // orders of the former bottom and top zero
};

// Collapse a simple cylinder whose two boundary saddles end at distinct
// zeros; the zeros merge into one of order m1 + m2 and the two saddles fuse
// into a single one.
inline CollapseResult collapse_simple_cylinder(const CylinderDiagram& d, int ci) {
    require_valid(d, /*allow_marked=*/true);
    check(ci >= 0 && ci < d.num_cylinders(), errc::bad_input, "no such cylinder");
    const auto& cyl = d.cylinders[static_cast<size_t>(ci)];
    check(cyl.bottom.size() == 1 && cyl.top.size() == 1, errc::not_simple,
          "collapse needs a simple cylinder");
    int a = cyl.bottom.front(), b = cyl.top.front();
    auto zl = detail::zero_of_label(d);
    int za = zl[static_cast<size_t>(a)];
    int zb = zl[static_cast<size_t>(b)];
    check(za != zb, errc::same_zero, "boundary saddles end at the same zero");
    auto zeros = diagram_zeros(d);
    CollapseResult res;
    res.m1 = static_cast<int>(zeros[static_cast<size_t>(za)].size()) - 1;
    res.m2 = static_cast<int>(zeros[static_cast<size_t>(zb)].size()) - 1;

    int hi = std::max(a, b);
    int e = std::min(a, b);
    res.merged_label = e;
    auto rename = [&](int x) {
        if (x == a || x == b) return e;
        return x > hi ? x - 1 : x;
    };
    for (int cj = 0; cj < d.num_cylinders(); ++cj) {
        if (cj == ci) continue;
        CylinderDiagram::Cyl out;
        for (int x : d.cylinders[static_cast<size_t>(cj)].bottom) out.bottom.push_back(rename(x));
        for (int x : d.cylinders[static_cast<size_t>(cj)].top) out.top.push_back(rename(x));
        res.diagram.cylinders.push_back(std::move(out));
    }
    require_valid(res.diagram, /*allow_marked=*/true);

    // The stratum must lose m1 and m2 and gain m1 + m2.
    auto before = detail::orbit_sizes_of(d);
    auto expect = before;
    expect.erase(std::find(expect.begin(), expect.end(), res.m1 + 1));
    expect.erase(std::find(expect.begin(), expect.end(), res.m2 + 1));
    expect.push_back(res.m1 + res.m2 + 1);
    std::sort(expect.rbegin(), expect.rend());
    invariant(detail::orbit_sizes_of(res.diagram) == expect, "collapse must merge the boundary zeros");
    res.canonical = canonical_key(res.diagram);
    return res;
}

struct InsertResult {
    CylinderDiagram diagram;
    std::string canonical;
    int new_cylinder = 0;   // index of the added cylinder (last)
    int bottom_label = 0;   // its bottom saddle
    int top_label = 0;      // its top saddle
};

// Split the zero at the two ends of saddle e into zeros of orders m1 and m2
// by inserting a simple cylinder across it.  Exact inverse of
// collapse_simple_cylinder up to isomorphism.
inline InsertResult insert_simple_cylinder(const CylinderDiagram& d, int e, int m1, int m2) {
    require_valid(d, /*allow_marked=*/true);
    auto ix = index_diagram(d);
    check(e >= 0 && e < ix.E, errc::bad_input, "no such saddle label");
    auto zl = detail::zero_of_label(d);
    int zleft = zl[static_cast<size_t>(e)];
    int zright = zl[static_cast<size_t>(ix.bottom_next[static_cast<size_t>(e)])];
    check(zleft == zright, errc::not_realizable, "the saddle must start and end at the zero being split");
    auto zeros = diagram_zeros(d);
    int m = static_cast<int>(zeros[static_cast<size_t>(zleft)].size()) - 1;
    check(m1 >= 1 && m2 >= 1 && m1 + m2 == m, errc::bad_split,
          "orders must be positive and sum to the order of the split zero");

    // One fresh label: the top occurrence of e keeps its name (it becomes the
    // bottom saddle of the new cylinder), the bottom occurrence is renamed.
    int a = e, b = ix.E;
    InsertResult res;
    res.diagram = d;
    auto& bottom_word = res.diagram.cylinders[static_cast<size_t>(ix.bottom_cyl[static_cast<size_t>(e)])].bottom;
    *std::find(bottom_word.begin(), bottom_word.end(), e) = b;
    res.diagram.cylinders.push_back({{a}, {b}});
    res.new_cylinder = res.diagram.num_cylinders() - 1;
    res.bottom_label = a;
    res.top_label = b;
    require_valid(res.diagram, /*allow_marked=*/true);

    auto zl2 = detail::zero_of_label(res.diagram);
    auto zeros2 = diagram_zeros(res.diagram);
    int got1 = static_cast<int>(zeros2[static_cast<size_t>(zl2[static_cast<size_t>(a)])].size()) - 1;
    int got2 = static_cast<int>(zeros2[static_cast<size_t>(zl2[static_cast<size_t>(b)])].size()) - 1;
    check(got1 == m1 && got2 == m2, errc::not_realizable,
          "this edge splits the zero into orders (" + std::to_string(got1) + "," +
              std::to_string(got2) + "), not the requested ones");
    res.canonical = canonical_key(res.diagram);
    return res;
}

struct PairCollapseResult {
    CylinderDiagram diagram;
    std::string canonical;
    CollapseResult first, second;
};

// Collapse two disjoint simple cylinders in sequence.  Refused when they run
// between the same pair of zeros, since the second collapse would then pinch
// a cylinder whose boundary saddles share a zero.
inline PairCollapseResult collapse_similar_pair(const CylinderDiagram& d, int i, int j) {
    require_valid(d, /*allow_marked=*/true);
    check(i != j, errc::bad_input, "need two distinct cylinders");
    check(i >= 0 && i < d.num_cylinders() && j >= 0 && j < d.num_cylinders(), errc::bad_input,
          "no such cylinder");
    auto zl = detail::zero_of_label(d);
    auto pair_of = [&](int ci) -> std::pair<int, int> {
        const auto& cyl = d.cylinders[static_cast<size_t>(ci)];
        check(cyl.bottom.size() == 1 && cyl.top.size() == 1, errc::not_simple,
              "collapse needs simple cylinders");
        int za = zl[static_cast<size_t>(cyl.bottom.front())];
        int zb = zl[static_cast<size_t>(cyl.top.front())];
        check(za != zb, errc::same_zero, "boundary saddles end at the same zero");
        return std::minmax(za, zb);
    };
    check(pair_of(i) != pair_of(j), errc::shared_zero_pair,
          "cylinders run between the same pair of zeros");

    PairCollapseResult res;
    res.first = collapse_simple_cylinder(d, i);
    int j2 = j > i ? j - 1 : j;
    res.second = collapse_simple_cylinder(res.first.diagram, j2);
    res.diagram = res.second.diagram;
    res.canonical = res.second.canonical;
    return res;
}

// Origami-level collapse of a horizontal cylinder that is simple in the
// associated diagram: its squares are removed and every vertical crossing is
// routed straight through, u'(x) = u^(h+1)(x) for squares entering from
// below.  A -id lift preserving the cylinder descends to the result.
inline Origami collapse_origami_cylinder(const Origami& o, int ci) {
    validate_origami(o);
    auto dec = horizontal_cylinders(o);
    check(!dec.wraps, errc::not_simple, "the surface is a single torus cylinder");
    check(ci >= 0 && ci < static_cast<int>(dec.cylinders.size()), errc::bad_input, "no such cylinder");
    // Cylinders of the extraction are ordered by minimal square, matching
    // horizontal_cylinders; reuse the diagram-level preconditions.
    auto ext = extract_diagram(o);
    const auto& cyl = ext.diagram.cylinders[static_cast<size_t>(ci)];
    check(cyl.bottom.size() == 1 && cyl.top.size() == 1, errc::not_simple,
          "collapse needs a simple cylinder");
    auto zl = detail::zero_of_label(ext.diagram);
    check(zl[static_cast<size_t>(cyl.bottom.front())] != zl[static_cast<size_t>(cyl.top.front())],
          errc::same_zero, "boundary saddles end at the same zero");

    int n = o.n();
    const auto& rows = dec.cylinders[static_cast<size_t>(ci)].rows;
    int h = static_cast<int>(rows.size());
    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (const auto& row : rows)
        for (int sq : row) removed[static_cast<size_t>(sq)] = 1;

    std::vector<int> newid(static_cast<size_t>(n), -1);
    int m = 0;
    for (int x = 0; x < n; ++x)
        if (!removed[static_cast<size_t>(x)]) newid[static_cast<size_t>(x)] = m++;
    invariant(m > 0, "collapse must leave at least one square");

    Perm R = Perm::identity(m), U = Perm::identity(m);
    for (int x = 0; x < n; ++x) {
        if (removed[static_cast<size_t>(x)]) continue;
        invariant(!removed[static_cast<size_t>(o.r(x))], "rows outside the cylinder stay outside");
        R.img[static_cast<size_t>(newid[static_cast<size_t>(x)])] = newid[static_cast<size_t>(o.r(x))];
        int y = o.u(x);
        if (removed[static_cast<size_t>(y)]) {
            for (int step = 0; step < h; ++step) y = o.u(y);
            invariant(!removed[static_cast<size_t>(y)], "vertical flow must exit the cylinder");
        }
        U.img[static_cast<size_t>(newid[static_cast<size_t>(x)])] = newid[static_cast<size_t>(y)];
    }
    Origami out{std::move(R), std::move(U)};
    validate_origami(out);
    return out;
}

} // namespace flatlas
