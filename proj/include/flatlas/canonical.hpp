#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/diagram.hpp"

namespace flatlas {

// Canonical keys.  Two diagrams are isomorphic when they differ by a
// relabeling of saddles, a reordering of cylinders, or independent rotations
// of the cyclic words.  The canonical form minimises an integer token stream
// (per cylinder: bottom length, top length, relabelled bottom word, relabelled
// top word; labels renamed 0,1,2,... in order of first appearance) over all
// cylinder orders and rotations by a prefix-pruned depth-first search.
// The key is the text serialization of the canonical form.
//
// The "up to symmetry" key additionally quotients by the half turn of the
// plane (rotation by pi), which swaps the bottom and top word of every
// cylinder and reverses both.  The half turn of a horizontal cylinder is
// again a horizontal cylinder, so this is the symmetry that identifies a
// diagram with its upside-down mirror image.

namespace detail {

struct CanonState {
    const CylinderDiagram* d;
    int k = 0, E = 0;
    std::vector<int> best;       // best token stream found so far
    bool have_best = false;
    long long best_gen = 0;      // bumped whenever best is replaced
    std::vector<char> used;
    std::vector<int> relabel;    // original label -> canonical label, -1 unset
    std::vector<int> tokens;
    int next_label = 0;
    // cmp: -1 current prefix strictly below best, 0 equal so far.  The flag is
    // only valid against the best in place when it was computed, so callers
    // reset it to 0 after any subtree installs a new best (the rolled-back
    // prefix is then a prefix of that best by construction).
    void dfs(int depth, int cmp) {
        if (depth == k) {
            if (cmp < 0 || !have_best) {
                best = tokens;
                have_best = true;
                ++best_gen;
            }
            return;
        }
        for (int ci = 0; ci < k; ++ci) {
            if (used[static_cast<size_t>(ci)]) continue;
            const auto& cyl = d->cylinders[static_cast<size_t>(ci)];
            int nb = static_cast<int>(cyl.bottom.size());
            int nt = static_cast<int>(cyl.top.size());
            for (int rb = 0; rb < nb; ++rb) {
                for (int rt = 0; rt < nt; ++rt) {
                    // Snapshot for rollback.
                    long long gen0 = best_gen;
                    size_t tok0 = tokens.size();
                    int next0 = next_label;
                    std::vector<std::pair<int, int>> undo;
                    int cmp2 = cmp;
                    bool pruned = false;
                    auto push = [&](int value) {
                        if (pruned) return;
                        tokens.push_back(value);
                        if (cmp2 == 0) {
                            size_t pos = tokens.size() - 1;
                            if (have_best) {
                                int bv = best[pos];
                                if (value > bv) { pruned = true; return; }
                                if (value < bv) cmp2 = -1;
                            }
                        }
                    };
                    auto push_label = [&](int x) {
                        if (pruned) return;
                        int& slot = relabel[static_cast<size_t>(x)];
                        if (slot < 0) {
                            undo.emplace_back(x, -1);
                            slot = next_label++;
                        }
                        push(slot);
                    };
                    push(nb);
                    push(nt);
                    for (int j = 0; j < nb && !pruned; ++j)
                        push_label(cyl.bottom[static_cast<size_t>((rb + j) % nb)]);
                    for (int j = 0; j < nt && !pruned; ++j)
                        push_label(cyl.top[static_cast<size_t>((rt + j) % nt)]);
                    if (!pruned) {
                        used[static_cast<size_t>(ci)] = 1;
                        dfs(depth + 1, cmp2);
                        used[static_cast<size_t>(ci)] = 0;
                    }
                    for (auto& [x, old] : undo) relabel[static_cast<size_t>(x)] = old;
                    next_label = next0;
                    tokens.resize(tok0);
                    if (best_gen != gen0) cmp = 0;
                }
            }
        }
    }
};

inline std::vector<int> canonical_tokens(const CylinderDiagram& d) {
    CanonState st;
    st.d = &d;
    st.k = d.num_cylinders();
    st.E = d.num_labels();
    st.used.assign(static_cast<size_t>(st.k), 0);
    st.relabel.assign(static_cast<size_t>(st.E), -1);
    st.tokens.reserve(static_cast<size_t>(2 * st.k + 2 * st.E));
    st.dfs(0, 0);
    invariant(st.have_best, "canonical search must produce a result");
    return st.best;
}

inline CylinderDiagram diagram_from_tokens(const std::vector<int>& tokens, int k) {
    CylinderDiagram d;
    size_t i = 0;
    for (int ci = 0; ci < k; ++ci) {
        CylinderDiagram::Cyl c;
        int nb = tokens[i++], nt = tokens[i++];
        for (int j = 0; j < nb; ++j) c.bottom.push_back(tokens[i++]);
        for (int j = 0; j < nt; ++j) c.top.push_back(tokens[i++]);
        d.cylinders.push_back(std::move(c));
    }
    invariant(i == tokens.size(), "token stream length mismatch");
    return d;
}

} // namespace detail

// Half turn of the plane: every cylinder upside down (bottom and top words
// swapped and both reversed).
inline CylinderDiagram half_turn(const CylinderDiagram& d) {
    CylinderDiagram out;
    for (const auto& c : d.cylinders) {
        CylinderDiagram::Cyl n;
        n.bottom.assign(c.top.rbegin(), c.top.rend());
        n.top.assign(c.bottom.rbegin(), c.bottom.rend());
        out.cylinders.push_back(std::move(n));
    }
    return out;
}

inline CylinderDiagram canonical_form(const CylinderDiagram& d) {
    index_diagram(d); // structural sanity
    return detail::diagram_from_tokens(detail::canonical_tokens(d), d.num_cylinders());
}

inline std::string canonical_key(const CylinderDiagram& d) {
    return serialize_diagram(canonical_form(d));
}

inline CylinderDiagram canonical_form_up_to_symmetry(const CylinderDiagram& d) {
    index_diagram(d);
    auto a = detail::canonical_tokens(d);
    auto b = detail::canonical_tokens(half_turn(d));
    return detail::diagram_from_tokens(std::min(a, b), d.num_cylinders());
}

inline std::string canonical_key_up_to_symmetry(const CylinderDiagram& d) {
    return serialize_diagram(canonical_form_up_to_symmetry(d));
}

inline bool diagrams_isomorphic(const CylinderDiagram& a, const CylinderDiagram& b) {
    if (a.num_cylinders() != b.num_cylinders() || a.num_labels() != b.num_labels()) return false;
    return detail::canonical_tokens(a) == detail::canonical_tokens(b);
}

} // namespace flatlas
