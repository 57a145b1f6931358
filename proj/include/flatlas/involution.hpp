#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/origami.hpp"
#include "flatlas/stratum.hpp"

namespace flatlas {

namespace detail {

// Propagate a square-permutation sigma from sigma(0) = t under the rules
// sigma(r(x)) = rr(sigma(x)) and sigma(u(x)) = uu(sigma(x)); returns the full
// assignment if consistent.
inline std::optional<Perm> propagate_symmetry(const Origami& o, int t, const Perm& rr, const Perm& uu) {
    int n = o.n();
    std::vector<int> s(static_cast<size_t>(n), -1);
    s[0] = t;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        int pairs[2][2] = {{o.r(x), rr(s[static_cast<size_t>(x)])}, {o.u(x), uu(s[static_cast<size_t>(x)])}};
        for (auto& [from, to] : pairs) {
            if (s[static_cast<size_t>(from)] == -1) {
                s[static_cast<size_t>(from)] = to;
                stack.push_back(from);
            } else if (s[static_cast<size_t>(from)] != to) {
                return std::nullopt;
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        if (s[static_cast<size_t>(x)] < 0) return std::nullopt; // unreachable square: not transitive
        if (s[static_cast<size_t>(o.r(x))] != rr(s[static_cast<size_t>(x)])) return std::nullopt;
        if (s[static_cast<size_t>(o.u(x))] != uu(s[static_cast<size_t>(x)])) return std::nullopt;
    }
    Perm sigma{std::move(s)};
    if (!sigma.is_valid()) return std::nullopt;
    return sigma;
}

} // namespace detail

// Automorphisms commuting with both r and u (the translation group).
inline std::vector<Perm> translation_group(const Origami& o) {
    std::vector<Perm> out;
    for (int t = 0; t < o.n(); ++t)
        if (auto s = detail::propagate_symmetry(o, t, o.r, o.u)) out.push_back(std::move(*s));
    return out;
}

// A lift of -id: sigma conjugates both r and u to their inverses and squares
// to the identity.  Fixed points on the surface sit at square centers, edge
// midpoints and lattice vertices.
struct InvolutionReport {
    Perm sigma;
    std::vector<int> center_squares;       // sigma(i) == i
    std::vector<int> v_edge_squares;       // sigma(i) == r(i): right-edge midpoint fixed
    std::vector<int> h_edge_squares;       // sigma(i) == u(i): top-edge midpoint fixed
    std::vector<int> fixed_vertex_orbits;  // indices into vertex_orbits(o)
    int quotient_genus = 0;                // genus of the quotient sphere/torus/...
    std::string kind;                      // "hyperelliptic" (g'=0), "prym" (g=3, g'=1), "other"

    int centers() const { return static_cast<int>(center_squares.size()); }
    int v_edge_midpoints() const { return static_cast<int>(v_edge_squares.size()); }
    int h_edge_midpoints() const { return static_cast<int>(h_edge_squares.size()); }
    int fixed_vertices() const { return static_cast<int>(fixed_vertex_orbits.size()); }
    int fixed_points() const {
        return centers() + v_edge_midpoints() + h_edge_midpoints() + fixed_vertices();
    }
};

namespace detail {

// sigma maps the vertex at the NE corner of square i to the vertex carrying
// the SW corner of sigma(i), i.e. the NE corner of u^-1(r^-1(sigma(i))).
inline int vertex_image_rep(const Origami& o, const Perm& sigma, int i) {
    return o.u.inverse()(o.r.inverse()(sigma(i)));
}

inline InvolutionReport build_involution_report(const Origami& o, Perm sigma) {
    InvolutionReport rep;
    rep.sigma = std::move(sigma);
    int n = o.n();
    for (int i = 0; i < n; ++i) {
        if (rep.sigma(i) == i) rep.center_squares.push_back(i);
        if (rep.sigma(i) == o.r(i)) rep.v_edge_squares.push_back(i);
        if (rep.sigma(i) == o.u(i)) rep.h_edge_squares.push_back(i);
    }
    auto orbits = vertex_orbits(o);
    std::vector<int> orbit_of(static_cast<size_t>(n), -1);
    for (size_t oi = 0; oi < orbits.size(); ++oi)
        for (int sq : orbits[oi]) orbit_of[static_cast<size_t>(sq)] = static_cast<int>(oi);
    Perm rinv = o.r.inverse(), uinv = o.u.inverse();
    for (size_t oi = 0; oi < orbits.size(); ++oi) {
        int img = orbit_of[static_cast<size_t>(uinv(rinv(rep.sigma(orbits[oi].front()))))];
        for (int sq : orbits[oi])
            invariant(orbit_of[static_cast<size_t>(uinv(rinv(rep.sigma(sq))))] == img,
                      "vertex image must not depend on the representative");
        if (img == static_cast<int>(oi)) rep.fixed_vertex_orbits.push_back(static_cast<int>(oi));
    }
    int g = origami_genus(o);
    int fp = rep.fixed_points();
    invariant((2 * g + 2 - fp) % 4 == 0, "fixed-point count incompatible with an involution quotient");
    rep.quotient_genus = (2 * g + 2 - fp) / 4;
    if (rep.quotient_genus == 0)
        rep.kind = "hyperelliptic";
    else if (g == 3 && rep.quotient_genus == 1)
        rep.kind = "prym";
    else
        rep.kind = "other";
    return rep;
}

} // namespace detail

// All lifts of -id, reported with their fixed-point ledger.
inline std::vector<InvolutionReport> minus_id_involutions(const Origami& o) {
    validate_origami(o);
    Perm rinv = o.r.inverse(), uinv = o.u.inverse();
    std::vector<InvolutionReport> out;
    for (int t = 0; t < o.n(); ++t) {
        auto s = detail::propagate_symmetry(o, t, rinv, uinv);
        if (!s) continue;
        bool squares_to_id = true;
        for (int x = 0; x < o.n() && squares_to_id; ++x)
            if ((*s)((*s)(x)) != x) squares_to_id = false;
        if (!squares_to_id) continue;
        out.push_back(detail::build_involution_report(o, std::move(*s)));
    }
    return out;
}

inline std::optional<InvolutionReport> hyperelliptic_involution(const Origami& o) {
    for (auto& rep : minus_id_involutions(o))
        if (rep.quotient_genus == 0) return rep;
    return std::nullopt;
}

// Quadratic-differential signature of the quotient by a -id lift: a swapped
// pair of order-m zeros descends to one zero of order 2m, a fixed order-m
// zero (m is forced even) to order m-1, and each of the remaining fixed
// points to a simple pole.
inline StratumSignature involution_quotient_signature(const Origami& o, const InvolutionReport& rep) {
    auto orbits = vertex_orbits(o);
    std::vector<int> orbit_of(static_cast<size_t>(o.n()), -1);
    for (size_t oi = 0; oi < orbits.size(); ++oi)
        for (int sq : orbits[oi]) orbit_of[static_cast<size_t>(sq)] = static_cast<int>(oi);
    Perm rinv = o.r.inverse(), uinv = o.u.inverse();
    std::vector<int> q;
    std::vector<char> done(orbits.size(), 0);
    for (size_t oi = 0; oi < orbits.size(); ++oi) {
        if (done[oi]) continue;
        int img = orbit_of[static_cast<size_t>(uinv(rinv(rep.sigma(orbits[oi].front()))))];
        int m = static_cast<int>(orbits[oi].size()) - 1;
        if (img == static_cast<int>(oi)) {
            done[oi] = 1;
            invariant(m % 2 == 0, "a fixed zero of a -id lift must have even order");
            q.push_back(m - 1); // m = 0 gives a simple pole
        } else {
            invariant(!done[static_cast<size_t>(img)], "vertex pairing must be an involution");
            invariant(orbits[static_cast<size_t>(img)].size() == orbits[oi].size(),
                      "swapped zeros must have equal order");
            done[oi] = done[static_cast<size_t>(img)] = 1;
            if (m > 0) q.push_back(2 * m);
        }
    }
    for (int i = 0; i < rep.centers() + rep.v_edge_midpoints() + rep.h_edge_midpoints(); ++i) q.push_back(-1);
    auto sig = StratumSignature::quadratic(q);
    long long sum = 0;
    for (int x : sig.orders) sum += x;
    invariant(sum == 4LL * rep.quotient_genus - 4, "quadratic orders must sum to 4g'-4");
    invariant(sig.consistent(), "quotient signature must be consistent");
    return sig;
}

// How a -id lift permutes the zeros: "fixes_each_zero", "exchanges_zeros", or
// "mixed".
inline std::string prym_zero_action(const Origami& o, const InvolutionReport& rep) {
    auto orbits = vertex_orbits(o);
    std::vector<int> orbit_of(static_cast<size_t>(o.n()), -1);
    for (size_t oi = 0; oi < orbits.size(); ++oi)
        for (int sq : orbits[oi]) orbit_of[static_cast<size_t>(sq)] = static_cast<int>(oi);
    Perm rinv = o.r.inverse(), uinv = o.u.inverse();
    int fixed = 0, moved = 0;
    for (size_t oi = 0; oi < orbits.size(); ++oi) {
        if (orbits[oi].size() < 2) continue; // regular vertex, not a zero
        int img = orbit_of[static_cast<size_t>(uinv(rinv(rep.sigma(orbits[oi].front()))))];
        (img == static_cast<int>(oi) ? fixed : moved) += 1;
    }
    if (moved == 0) return "fixes_each_zero";
    if (fixed == 0) return "exchanges_zeros";
    return "mixed";
}

} // namespace flatlas
