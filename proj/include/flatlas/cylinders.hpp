#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/origami.hpp"

namespace flatlas {

// One horizontal cylinder of an origami.  rows run bottom to top; each row
// lists squares in r-order.  Columns are aligned: rows[j][c] = u^j(rows[0][c])
// (the gluings strictly inside a cylinder carry no shear; all shear sits at
// the singular boundary line above the top row).  The bottom row starts at its
// minimal square.
struct HorizontalCylinder {
    std::vector<std::vector<int>> rows;

    int height() const { return static_cast<int>(rows.size()); }
    int circumference() const { return static_cast<int>(rows.front().size()); }

    std::vector<int> squares() const {
        std::vector<int> all;
        for (const auto& row : rows) all.insert(all.end(), row.begin(), row.end());
        std::sort(all.begin(), all.end());
        return all;
    }
};

struct CylinderDecomposition {
    std::vector<HorizontalCylinder> cylinders; // sorted by minimal square
    std::vector<int> cylinder_of;              // square -> cylinder index
    // True for a genus-1 surface: the single cylinder closes up vertically
    // with no singular boundary line.
    bool wraps = false;
};

namespace detail {

// Is the horizontal line above row R free of cone points?  The corners on it
// are the NE corners of R's squares; the line is regular iff every one of
// them has cone angle 2*pi (corner-orbit length 1).
inline bool line_above_is_regular(const std::vector<int>& row, const std::vector<int>& vlen) {
    for (int j : row)
        if (vlen[static_cast<size_t>(j)] >= 2) return false;
    return true;
}

} // namespace detail

inline CylinderDecomposition horizontal_cylinders(const Origami& o) {
    int n = o.n();
    Perm v = corner_perm(o);
    std::vector<int> vlen(static_cast<size_t>(n), 0);
    for (const auto& orbit : v.cycles())
        for (int x : orbit) vlen[static_cast<size_t>(x)] = static_cast<int>(orbit.size());

    auto rcycles = o.r.cycles();
    std::vector<int> row_of(static_cast<size_t>(n), -1);
    for (size_t ri = 0; ri < rcycles.size(); ++ri)
        for (int x : rcycles[ri]) row_of[static_cast<size_t>(x)] = static_cast<int>(ri);

    std::vector<char> regular_above(rcycles.size());
    for (size_t ri = 0; ri < rcycles.size(); ++ri)
        regular_above[ri] = detail::line_above_is_regular(rcycles[ri], vlen);

    Perm uinv = o.u.inverse();
    auto regular_below = [&](int ri) {
        for (int j : rcycles[static_cast<size_t>(ri)])
            if (vlen[static_cast<size_t>(uinv(j))] >= 2) return false;
        return true;
    };

    CylinderDecomposition dec;
    dec.cylinder_of.assign(static_cast<size_t>(n), -1);
    std::vector<char> used(rcycles.size(), 0);

    auto build_from = [&](int ri0, bool wrap) {
        HorizontalCylinder cyl;
        int ri = ri0;
        int anchor = rcycles[static_cast<size_t>(ri0)].front(); // minimal square of the bottom row
        while (true) {
            invariant(!used[static_cast<size_t>(ri)], "row visited twice in cylinder build");
            used[static_cast<size_t>(ri)] = 1;
            std::vector<int> row;
            int x = anchor;
            do {
                row.push_back(x);
                x = o.r(x);
            } while (x != anchor);
            cyl.rows.push_back(std::move(row));
            if (!regular_above[static_cast<size_t>(ri)]) break; // singular top boundary
            int next_anchor = o.u(anchor);
            int next_ri = row_of[static_cast<size_t>(next_anchor)];
            if (wrap && next_ri == ri0) break; // closed up vertically (torus)
            invariant(wrap || next_ri != ri0, "unexpected vertical wrap on singular surface");
            ri = next_ri;
            anchor = next_anchor;
        }
        dec.cylinders.push_back(std::move(cyl));
    };

    bool any_singular_line = false;
    for (size_t ri = 0; ri < rcycles.size(); ++ri)
        if (!regular_above[ri]) any_singular_line = true;

    if (!any_singular_line) {
        // Genus 1: one cylinder closing up on itself.
        dec.wraps = true;
        build_from(row_of[0], true);
    } else {
        for (size_t ri = 0; ri < rcycles.size(); ++ri) {
            // A cylinder's bottom row sits directly above a singular line.
            if (used[ri] || regular_below(static_cast<int>(ri))) continue;
            build_from(static_cast<int>(ri), false);
        }
        invariant(std::find(used.begin(), used.end(), 0) == used.end(),
                  "every row must belong to a cylinder");
    }

    std::sort(dec.cylinders.begin(), dec.cylinders.end(),
              [](const HorizontalCylinder& a, const HorizontalCylinder& b) {
                  return a.squares().front() < b.squares().front();
              });
    for (size_t ci = 0; ci < dec.cylinders.size(); ++ci)
        for (const auto& row : dec.cylinders[ci].rows)
            for (int x : row) dec.cylinder_of[static_cast<size_t>(x)] = static_cast<int>(ci);

    int covered = 0;
    for (const auto& c : dec.cylinders) covered += c.height() * c.circumference();
    invariant(covered == n, "cylinder areas must add up to the square count");
    return dec;
}

// Twist cylinder i by k steps: re-glue the top boundary, shifting by k along
// the circumference (u'(j) = u(r^k(j)) on the top row).  k is taken modulo
// the circumference; a full twist returns the identical origami.
inline Origami twist_cylinder(const Origami& o, const CylinderDecomposition& dec, int cyl, int k) {
    check(cyl >= 0 && cyl < static_cast<int>(dec.cylinders.size()), errc::bad_input,
          "cylinder index out of range");
    const auto& c = dec.cylinders[static_cast<size_t>(cyl)];
    int ell = c.circumference();
    int kk = ((k % ell) + ell) % ell;
    Origami out = o;
    const auto& top = c.rows.back();
    for (int j : top) {
        int shifted = j;
        for (int t = 0; t < kk; ++t) shifted = o.r(shifted);
        out.u.img[static_cast<size_t>(j)] = o.u(shifted);
    }
    validate_origami(out);
    return out;
}

inline Origami twist_cylinder(const Origami& o, int cyl, int k) {
    return twist_cylinder(o, horizontal_cylinders(o), cyl, k);
}

// T = unit upper-triangular shear: simultaneous twist of every horizontal
// cylinder by its own height.
inline Origami sl2z_T(const Origami& o) {
    auto dec = horizontal_cylinders(o);
    Origami out = o;
    for (const auto& c : dec.cylinders) {
        int ell = c.circumference();
        int kk = c.height() % ell;
        const auto& top = c.rows.back();
        for (int j : top) {
            int shifted = j;
            for (int t = 0; t < kk; ++t) shifted = o.r(shifted);
            out.u.img[static_cast<size_t>(j)] = o.u(shifted);
        }
    }
    validate_origami(out);
    return out;
}

// S = counterclockwise quarter turn; the new right-neighbour is the old
// square below, the new up-neighbour the old square to the right.  S^4 = id
// holds on the nose.  Square labels are unchanged.
inline Origami sl2z_S(const Origami& o) { return Origami(o.u.inverse(), o.r); }

// Vertical cylinders are the horizontal cylinders of the quarter-turned
// origami; square labels agree, so the decompositions can be intersected.
inline CylinderDecomposition vertical_cylinders(const Origami& o) {
    return horizontal_cylinders(sl2z_S(o));
}

struct Fraction {
    long long num = 0, den = 1;
};

inline Fraction make_fraction(long long num, long long den) {
    invariant(den != 0, "fraction with zero denominator");
    long long g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
    if (g == 0) g = 1;
    if (den < 0) { num = -num; den = -den; }
    return Fraction{num / g, den / g};
}

// Area proportion of vertical cylinder x lying inside the union of the
// horizontal cylinders cc (unit squares make this a square count).
inline Fraction cylinder_proportion(const Origami& o, int vertical_index,
                                    const std::vector<int>& horizontal_indices) {
    auto vdec = vertical_cylinders(o);
    auto hdec = horizontal_cylinders(o);
    check(vertical_index >= 0 && vertical_index < static_cast<int>(vdec.cylinders.size()),
          errc::bad_input, "vertical cylinder index out of range");
    std::set<int> members;
    for (int ci : horizontal_indices) {
        check(ci >= 0 && ci < static_cast<int>(hdec.cylinders.size()), errc::bad_input,
              "horizontal cylinder index out of range");
        for (int s : hdec.cylinders[static_cast<size_t>(ci)].squares()) members.insert(s);
    }
    auto xsq = vdec.cylinders[static_cast<size_t>(vertical_index)].squares();
    long long inside = 0;
    for (int s : xsq)
        if (members.count(s)) ++inside;
    return make_fraction(inside, static_cast<long long>(xsq.size()));
}

} // namespace flatlas
