#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/involution.hpp"
#include "flatlas/origami.hpp"

namespace flatlas {

// A Z/2 cohomology class presented by its lexicographically smallest cocycle
// representative: bits eps_r(i) (crossing the right edge of square i) and
// eps_u(i) (crossing the top edge), stored as one vector of length 2n.
struct Z2Class {
    int n = 0;
    std::vector<std::uint8_t> eps;

    int eps_r(int i) const { return eps[static_cast<size_t>(i)]; }
    int eps_u(int i) const { return eps[static_cast<size_t>(n + i)]; }
    bool is_zero() const {
        return std::all_of(eps.begin(), eps.end(), [](std::uint8_t b) { return b == 0; });
    }
    bool operator==(const Z2Class& other) const { return n == other.n && eps == other.eps; }
    bool operator<(const Z2Class& other) const { return eps < other.eps; }
};

namespace detail {

using F2Vec = std::vector<std::uint8_t>;

inline void xor_into(F2Vec& a, const F2Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

// Reduced row echelon form over F2; rows ordered by pivot column.
struct F2Basis {
    std::vector<F2Vec> rows;
    std::vector<int> pivots;

    void insert(F2Vec v) {
        for (size_t i = 0; i < rows.size(); ++i)
            if (v[static_cast<size_t>(pivots[i])]) xor_into(v, rows[i]);
        int lead = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j]) {
                lead = static_cast<int>(j);
                break;
            }
        if (lead < 0) return;
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i][static_cast<size_t>(lead)]) xor_into(rows[i], v);
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < lead) ++pos;
        rows.insert(rows.begin() + static_cast<long>(pos), std::move(v));
        pivots.insert(pivots.begin() + static_cast<long>(pos), lead);
    }

    // Canonical (lexicographically smallest) representative of v + span.
    F2Vec reduce(F2Vec v) const {
        for (size_t i = 0; i < rows.size(); ++i)
            if (v[static_cast<size_t>(pivots[i])]) xor_into(v, rows[i]);
        return v;
    }

    int dim() const { return static_cast<int>(rows.size()); }
};

// Monodromy constraint rows (one per lattice vertex) for unramified-ness.
inline std::vector<F2Vec> vertex_constraints(const Origami& o) {
    int n = o.n();
    Perm uinv = o.u.inverse();
    Perm v = corner_perm(o);
    std::vector<F2Vec> out;
    for (const auto& orbit : vertex_orbits(o)) {
        F2Vec row(static_cast<size_t>(2 * n), 0);
        auto flip_r = [&](int i) { row[static_cast<size_t>(i)] ^= 1; };
        auto flip_u = [&](int i) { row[static_cast<size_t>(n + i)] ^= 1; };
        for (int x : orbit) {
            // One turn of the loop around the vertex at the NE corner of x.
            flip_u(x);
            flip_r(o.u(x));
            flip_u(uinv(o.r(o.u(x))));
            flip_r(v(x));
        }
        out.push_back(std::move(row));
    }
    return out;
}

// Coboundary of the indicator function of square j.
inline F2Vec coboundary_row(const Origami& o, int j) {
    int n = o.n();
    F2Vec row(static_cast<size_t>(2 * n), 0);
    Perm rinv = o.r.inverse(), uinv = o.u.inverse();
    row[static_cast<size_t>(j)] ^= 1;
    row[static_cast<size_t>(rinv(j))] ^= 1;
    row[static_cast<size_t>(n + j)] ^= 1;
    row[static_cast<size_t>(n + uinv(j))] ^= 1;
    return row;
}

} // namespace detail

// All Z/2 cohomology classes of the closed surface (2^(2g) of them, the
// trivial class first), each as its lex-minimal cocycle.
inline std::vector<Z2Class> z2_classes(const Origami& o) {
    validate_origami(o);
    int n = o.n();
    auto cons = detail::vertex_constraints(o);

    detail::F2Basis cob;
    for (int j = 0; j < n; ++j) {
        auto row = detail::coboundary_row(o, j);
        // Every coboundary must satisfy the vertex constraints.
        for (const auto& c : cons) {
            int dot = 0;
            for (size_t t = 0; t < row.size(); ++t) dot ^= (row[t] & c[t]);
            invariant(dot == 0, "coboundaries must be unramified cocycles");
        }
        cob.insert(std::move(row));
    }
    invariant(cob.dim() == n - 1, "coboundary space must have dimension n-1 on a connected origami");

    // Kernel of the constraint matrix: eliminate, then read off free columns.
    detail::F2Basis cons_rref;
    for (auto& c : cons) cons_rref.insert(std::move(c));
    std::vector<char> is_pivot(static_cast<size_t>(2 * n), 0);
    for (int p : cons_rref.pivots) is_pivot[static_cast<size_t>(p)] = 1;
    std::vector<detail::F2Vec> kernel;
    for (int freecol = 0; freecol < 2 * n; ++freecol) {
        if (is_pivot[static_cast<size_t>(freecol)]) continue;
        detail::F2Vec v(static_cast<size_t>(2 * n), 0);
        v[static_cast<size_t>(freecol)] = 1;
        for (size_t i = 0; i < cons_rref.rows.size(); ++i)
            if (cons_rref.rows[i][static_cast<size_t>(freecol)]) v[static_cast<size_t>(cons_rref.pivots[i])] ^= 1;
        kernel.push_back(std::move(v));
    }

    detail::F2Basis quotient;
    for (auto& kv : kernel) quotient.insert(cob.reduce(std::move(kv)));
    int g = origami_genus(o);
    invariant(quotient.dim() == 2 * g, "cohomology must have dimension 2g");

    std::vector<Z2Class> out;
    int d = quotient.dim();
    check(d <= 20, errc::unsupported_genus, "genus too large to list all classes");
    for (int mask = 0; mask < (1 << d); ++mask) {
        detail::F2Vec v(static_cast<size_t>(2 * n), 0);
        for (int b = 0; b < d; ++b)
            if (mask & (1 << b)) detail::xor_into(v, quotient.rows[static_cast<size_t>(b)]);
        // Generators are already reduced against the coboundary pivots, so
        // each combination is the lex-min representative of its class.
        out.push_back(Z2Class{n, std::move(v)});
    }
    std::sort(out.begin(), out.end());
    invariant(out.front().is_zero(), "the trivial class must sort first");
    return out;
}

// Connected unramified double cover attached to a nontrivial class: squares
// (i, s) -> i + s*n, with the sheet flipped whenever the crossed edge carries
// bit 1.
inline Origami double_cover(const Origami& o, const Z2Class& cls) {
    validate_origami(o);
    check(cls.n == o.n() && static_cast<int>(cls.eps.size()) == 2 * o.n(), errc::bad_input,
          "class does not belong to this origami");
    check(!cls.is_zero(), errc::zero_class, "the trivial class gives a disconnected cover");
    int n = o.n();
    Perm R = Perm::identity(2 * n), U = Perm::identity(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < 2; ++s) {
            R.img[static_cast<size_t>(i + s * n)] = o.r(i) + ((s ^ cls.eps_r(i)) * n);
            U.img[static_cast<size_t>(i + s * n)] = o.u(i) + ((s ^ cls.eps_u(i)) * n);
        }
    }
    Origami cover{std::move(R), std::move(U)};
    invariant(is_transitive(cover), "a nontrivial class must give a connected cover");
    validate_origami(cover);
    // The stratum must double: each order-m zero lifts to two of them.
    auto base = origami_stratum(o).orders;
    std::vector<int> expect;
    for (int m : base) {
        expect.push_back(m);
        expect.push_back(m);
    }
    std::sort(expect.rbegin(), expect.rend());
    invariant(origami_stratum(cover).orders == expect, "double cover must be unramified over the zeros");
    return cover;
}

// The nontrivial deck transformation of a double cover built by double_cover.
inline Perm deck_involution(int base_n) {
    Perm p = Perm::identity(2 * base_n);
    for (int i = 0; i < 2 * base_n; ++i) p.img[static_cast<size_t>(i)] = (i + base_n) % (2 * base_n);
    return p;
}

struct QuotientResult {
    Origami quotient;
    Z2Class cls;                 // class on the quotient that rebuilds the cover
    std::vector<int> sheet_reps; // squares of the cover chosen as sheet 0
};

// Quotient by a fixed-point-free translation involution; recovers the
// Z/2 class along which the given origami is the double cover.
inline QuotientResult quotient_by_free_translation_involution(const Origami& o, const Perm& rho) {
    validate_origami(o);
    int n2 = o.n();
    check(rho.size() == n2, errc::bad_input, "involution size mismatch");
    check(!rho.is_identity(), errc::not_involution, "the identity is not a nontrivial involution");
    check(compose(rho, rho).is_identity(), errc::not_involution, "map must square to the identity");
    check(compose(rho, o.r) == compose(o.r, rho) && compose(rho, o.u) == compose(o.u, rho),
          errc::not_involution, "map must commute with both r and u");
    for (int i = 0; i < n2; ++i)
        check(rho(i) != i, errc::not_free, "involution fixes a square");
    {
        auto orbits = vertex_orbits(o);
        std::vector<int> orbit_of(static_cast<size_t>(n2), -1);
        for (size_t oi = 0; oi < orbits.size(); ++oi)
            for (int sq : orbits[oi]) orbit_of[static_cast<size_t>(sq)] = static_cast<int>(oi);
        for (size_t oi = 0; oi < orbits.size(); ++oi)
            check(orbit_of[static_cast<size_t>(rho(orbits[oi].front()))] != static_cast<int>(oi),
                  errc::not_free, "involution fixes a lattice vertex");
    }

    QuotientResult res;
    std::vector<int> qindex(static_cast<size_t>(n2), -1);
    for (int i = 0; i < n2; ++i) {
        if (i < rho(i)) {
            qindex[static_cast<size_t>(i)] = static_cast<int>(res.sheet_reps.size());
            res.sheet_reps.push_back(i);
        }
    }
    int n = static_cast<int>(res.sheet_reps.size());
    invariant(2 * n == n2, "free involution must pair up the squares");
    auto down = [&](int x) { return qindex[static_cast<size_t>(x)] >= 0 ? qindex[static_cast<size_t>(x)] : qindex[static_cast<size_t>(rho(x))]; };
    auto sheet = [&](int x) { return qindex[static_cast<size_t>(x)] >= 0 ? 0 : 1; };

    Perm R = Perm::identity(n), U = Perm::identity(n);
    detail::F2Vec eps(static_cast<size_t>(2 * n), 0);
    for (int q = 0; q < n; ++q) {
        int rep = res.sheet_reps[static_cast<size_t>(q)];
        R.img[static_cast<size_t>(q)] = down(o.r(rep));
        U.img[static_cast<size_t>(q)] = down(o.u(rep));
        eps[static_cast<size_t>(q)] = static_cast<std::uint8_t>(sheet(o.r(rep)));
        eps[static_cast<size_t>(n + q)] = static_cast<std::uint8_t>(sheet(o.u(rep)));
    }
    res.quotient = Origami{std::move(R), std::move(U)};
    validate_origami(res.quotient);

    // Reduce the recovered cocycle to its canonical representative.
    detail::F2Basis cob;
    for (int j = 0; j < n; ++j) cob.insert(detail::coboundary_row(res.quotient, j));
    res.cls = Z2Class{n, cob.reduce(std::move(eps))};
    invariant(!res.cls.is_zero(), "a connected cover must come from a nontrivial class");
    return res;
}

} // namespace flatlas
