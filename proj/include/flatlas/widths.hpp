#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/diagram.hpp"

namespace flatlas {

// Width assignment.  A positive width vector must balance every cylinder:
// sum of bottom-word widths = sum of top-word widths.  Treating label x as a
// directed arc from the cylinder below x to the cylinder above x makes the
// balance equations exactly the conservation law of a circulation, so
// positive widths exist iff every arc lies on a directed cycle, and bounded
// feasibility questions reduce to integral max-flow (no rounding anywhere).

namespace detail {

// Does every label-arc have both endpoints in the same strongly connected
// component of the cylinder multigraph?
inline bool every_arc_on_cycle(const DiagramIndex& ix, int k) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(k));
    for (int x = 0; x < ix.E; ++x)
        adj[static_cast<size_t>(ix.top_cyl[static_cast<size_t>(x)])]
            .push_back(ix.bottom_cyl[static_cast<size_t>(x)]);
    // Reachability closure per node (k <= a handful, so quadratic is fine).
    std::vector<std::vector<char>> reach(static_cast<size_t>(k),
                                         std::vector<char>(static_cast<size_t>(k), 0));
    for (int s = 0; s < k; ++s) {
        std::vector<int> stack{s};
        reach[static_cast<size_t>(s)][static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : adj[static_cast<size_t>(a)]) {
                if (!reach[static_cast<size_t>(s)][static_cast<size_t>(b)]) {
                    reach[static_cast<size_t>(s)][static_cast<size_t>(b)] = 1;
                    stack.push_back(b);
                }
            }
        }
    }
    for (int x = 0; x < ix.E; ++x) {
        int a = ix.top_cyl[static_cast<size_t>(x)];
        int b = ix.bottom_cyl[static_cast<size_t>(x)];
        if (!reach[static_cast<size_t>(b)][static_cast<size_t>(a)]) return false;
    }
    return true;
}

// Tiny Edmonds-Karp max-flow on an adjacency-matrix capacity table.
struct MaxFlow {
    int n;
    std::vector<std::vector<long long>> cap;

    explicit MaxFlow(int nodes)
        : n(nodes), cap(static_cast<size_t>(nodes), std::vector<long long>(static_cast<size_t>(nodes), 0)) {}

    void add(int a, int b, long long c) { cap[static_cast<size_t>(a)][static_cast<size_t>(b)] += c; }

    long long run(int s, int t) {
        long long total = 0;
        while (true) {
            std::vector<int> prev(static_cast<size_t>(n), -1);
            prev[static_cast<size_t>(s)] = s;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && prev[static_cast<size_t>(t)] < 0) {
                int a = q.front();
                q.pop();
                for (int b = 0; b < n; ++b) {
                    if (prev[static_cast<size_t>(b)] < 0 && cap[static_cast<size_t>(a)][static_cast<size_t>(b)] > 0) {
                        prev[static_cast<size_t>(b)] = a;
                        q.push(b);
                    }
                }
            }
            if (prev[static_cast<size_t>(t)] < 0) return total;
            long long bottleneck = -1;
            for (int b = t; b != s; b = prev[static_cast<size_t>(b)]) {
                long long c = cap[static_cast<size_t>(prev[static_cast<size_t>(b)])][static_cast<size_t>(b)];
                bottleneck = bottleneck < 0 ? c : std::min(bottleneck, c);
            }
            for (int b = t; b != s; b = prev[static_cast<size_t>(b)]) {
                cap[static_cast<size_t>(prev[static_cast<size_t>(b)])][static_cast<size_t>(b)] -= bottleneck;
                cap[static_cast<size_t>(b)][static_cast<size_t>(prev[static_cast<size_t>(b)])] += bottleneck;
            }
            total += bottleneck;
        }
    }
};

// Feasibility of a circulation with per-label bounds [lo_x, hi_x]
// (Hoffman's criterion via max-flow; integral by flow integrality).
inline bool circulation_feasible(const DiagramIndex& ix, int k, const std::vector<long long>& lo,
                                 const std::vector<long long>& hi) {
    for (int x = 0; x < ix.E; ++x)
        if (lo[static_cast<size_t>(x)] > hi[static_cast<size_t>(x)]) return false;
    MaxFlow mf(k + 2);
    int S = k, T = k + 1;
    std::vector<long long> excess(static_cast<size_t>(k), 0);
    for (int x = 0; x < ix.E; ++x) {
        int a = ix.top_cyl[static_cast<size_t>(x)];
        int b = ix.bottom_cyl[static_cast<size_t>(x)];
        mf.add(a, b, hi[static_cast<size_t>(x)] - lo[static_cast<size_t>(x)]);
        excess[static_cast<size_t>(b)] += lo[static_cast<size_t>(x)];
        excess[static_cast<size_t>(a)] -= lo[static_cast<size_t>(x)];
    }
    long long need = 0;
    for (int vtx = 0; vtx < k; ++vtx) {
        if (excess[static_cast<size_t>(vtx)] > 0) {
            mf.add(S, vtx, excess[static_cast<size_t>(vtx)]);
            need += excess[static_cast<size_t>(vtx)];
        } else if (excess[static_cast<size_t>(vtx)] < 0) {
            mf.add(vtx, T, -excess[static_cast<size_t>(vtx)]);
        }
    }
    return mf.run(S, T) == need;
}

} // namespace detail

// True iff some positive (equivalently, positive integer) width vector
// balances all cylinders.
inline bool solvable_widths(const CylinderDiagram& d) {
    auto ix = index_diagram(d);
    return detail::every_arc_on_cycle(ix, d.num_cylinders());
}

// Lexicographically least positive integer width vector, entries bounded by
// E * (max word length); empty when no positive solution exists at all.
inline std::optional<std::vector<int>> solve_widths(const CylinderDiagram& d) {
    auto ix = index_diagram(d);
    int k = d.num_cylinders();
    if (!detail::every_arc_on_cycle(ix, k)) return std::nullopt;
    size_t maxlen = 0;
    for (const auto& c : d.cylinders)
        maxlen = std::max({maxlen, c.bottom.size(), c.top.size()});
    long long bound = static_cast<long long>(ix.E) * static_cast<long long>(maxlen);
    std::vector<long long> lo(static_cast<size_t>(ix.E), 1), hi(static_cast<size_t>(ix.E), bound);
    invariant(detail::circulation_feasible(ix, k, lo, hi),
              "bounded width search must succeed when a positive solution exists");
    std::vector<int> w(static_cast<size_t>(ix.E), 0);
    for (int x = 0; x < ix.E; ++x) {
        for (long long val = 1; val <= bound; ++val) {
            lo[static_cast<size_t>(x)] = hi[static_cast<size_t>(x)] = val;
            if (detail::circulation_feasible(ix, k, lo, hi)) {
                w[static_cast<size_t>(x)] = static_cast<int>(val);
                break;
            }
        }
        invariant(w[static_cast<size_t>(x)] > 0, "lex-min width step must be feasible");
    }
    return w;
}

// --- validation report ------------------------------------------------------

struct DiagramReport {
    bool ok = false;             // no structural error
    bool marked_point = false;   // an order-0 vertex is present
    std::optional<errc> problem; // first structural error found
    std::string message;
};

inline DiagramReport validate_diagram(const CylinderDiagram& d) {
    DiagramReport rep;
    try {
        index_diagram(d);
    } catch (const error& e) {
        rep.problem = e.code();
        rep.message = e.what();
        return rep;
    }
    if (!diagram_connected(d)) {
        rep.problem = errc::disconnected;
        rep.message = "Disconnected: diagram surface is not connected";
        return rep;
    }
    if (!solvable_widths(d)) {
        rep.problem = errc::no_positive_widths;
        rep.message = "NoPositiveWidths: cylinder balance equations have no positive solution";
        return rep;
    }
    rep.ok = true;
    for (const auto& orbit : diagram_zeros(d)) {
        if (orbit.size() == 1) {
            rep.marked_point = true;
            rep.message = "MarkedPoint: diagram has an order-0 vertex";
            break;
        }
    }
    return rep;
}

// Throws unless the diagram is structurally sound; marked points allowed when
// allow_marked is set.
inline void require_valid(const CylinderDiagram& d, bool allow_marked = true) {
    auto rep = validate_diagram(d);
    if (rep.problem) fail(*rep.problem, rep.message);
    if (!allow_marked && rep.marked_point) fail(errc::marked_point, rep.message);
}

} // namespace flatlas
