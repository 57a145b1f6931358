#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/permutation.hpp"
#include "flatlas/stratum.hpp"

namespace flatlas {

// Square-tiled surface: n unit squares, r = "square to the right",
// u = "square above".  Valid when <r,u> acts transitively on squares.
struct Origami {
    Perm r, u;

    Origami() = default;
    Origami(Perm right, Perm up) : r(std::move(right)), u(std::move(up)) {}

    int n() const { return r.size(); }

    bool operator==(const Origami& o) const { return r == o.r && u == o.u; }
    bool operator<(const Origami& o) const { return r != o.r ? r < o.r : u < o.u; }
};

inline bool is_transitive(const Origami& o) {
    int n = o.n();
    if (n == 0) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    Perm rinv = o.r.inverse(), uinv = o.u.inverse();
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {o.r(x), o.u(x), rinv(x), uinv(x)}) {
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

inline void validate_origami(const Origami& o) {
    check(o.n() >= 1, errc::bad_input, "origami needs at least one square");
    check(o.r.is_valid() && o.u.is_valid() && o.r.size() == o.u.size(), errc::bad_input,
          "origami permutations invalid or of mismatched size");
    check(is_transitive(o), errc::not_transitive, "origami squares are not connected under <r,u>");
}

// Commutator c = r . u . r^-1 . u^-1 (right-to-left composition).  Cone points
// of the flat metric correspond to cycles of c of length >= 2: a length-l
// cycle is a zero of order l-1.  Length-1 cycles are regular points.
inline Perm commutator(const Origami& o) {
    return compose(compose(o.r, o.u), compose(o.r.inverse(), o.u.inverse()));
}

// Corner permutation v = r^-1 . u^-1 . r . u, conjugate to the commutator.
// The vertex (corner class) at the NE corner of square i is {NE(x) : x in the
// v-orbit of i}; its cone angle is 2*pi*(orbit length).  All corner-level
// bookkeeping (fixed vertices of involutions, cover branching) uses v-orbits.
inline Perm corner_perm(const Origami& o) {
    return compose(compose(o.r.inverse(), o.u.inverse()), compose(o.r, o.u));
}

// Orbits of the corner permutation, sorted by minimal element.
inline std::vector<std::vector<int>> vertex_orbits(const Origami& o) {
    return corner_perm(o).cycles();
}

inline StratumSignature origami_stratum(const Origami& o) {
    std::vector<int> orders;
    for (int len : commutator(o).cycle_type())
        if (len >= 2) orders.push_back(len - 1);
    return StratumSignature::abelian(std::move(orders));
}

inline int origami_genus(const Origami& o) { return origami_stratum(o).genus(); }

// --- text format -----------------------------------------------------------
//
//   origami n=<N> r=<cycles> u=<cycles>
//
// Cycle lists as in parse_cycles; fixed points may be omitted.  Square labels
// are 0-based by default; one_based shifts all labels down by one on parse.

inline Origami parse_origami(const std::string& text, bool one_based = false) {
    check(text.find("origami") != std::string::npos, errc::bad_input,
          "origami text must start with 'origami': " + text);
    size_t npos_ = text.find("n=");
    size_t rpos = text.find("r=");
    size_t upos = text.find("u=");
    check(npos_ != std::string::npos && rpos != std::string::npos && upos != std::string::npos &&
              npos_ < rpos && rpos < upos,
          errc::bad_input, "origami text needs n=, r=, u= in order: " + text);
    int n = 0;
    {
        size_t i = npos_ + 2;
        check(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])), errc::bad_input,
              "bad square count: " + text);
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            n = n * 10 + (text[i] - '0');
            ++i;
        }
    }
    check(n >= 1, errc::bad_input, "origami needs at least one square: " + text);
    std::string rtext = text.substr(rpos + 2, upos - (rpos + 2));
    std::string utext = text.substr(upos + 2);
    Origami o(parse_cycles(rtext, n, one_based), parse_cycles(utext, n, one_based));
    validate_origami(o);
    return o;
}

inline std::string format_origami(const Origami& o) {
    std::ostringstream os;
    os << "origami n=" << o.n() << " r=" << format_cycles(o.r) << " u=" << format_cycles(o.u);
    return os.str();
}

// --- canonical labeling ----------------------------------------------------
//
// Two origamis are isomorphic when they differ by a relabeling of squares
// (simultaneous conjugation of r and u).  Transitivity gives a cheap exact
// canonical form: relabel squares by breadth-first discovery order from each
// possible start square, expanding r before u, and keep the lexicographically
// least image table pair.

inline Origami canonical_origami_form(const Origami& o) {
    int n = o.n();
    std::vector<int> relabel(static_cast<size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    Origami best;
    bool have = false;
    for (int start = 0; start < n; ++start) {
        std::fill(relabel.begin(), relabel.end(), -1);
        order.clear();
        order.push_back(start);
        relabel[static_cast<size_t>(start)] = 0;
        for (size_t head = 0; head < order.size(); ++head) {
            int x = order[head];
            for (int y : {o.r(x), o.u(x)}) {
                if (relabel[static_cast<size_t>(y)] < 0) {
                    relabel[static_cast<size_t>(y)] = static_cast<int>(order.size());
                    order.push_back(y);
                }
            }
        }
        invariant(static_cast<int>(order.size()) == n, "canonical form requires transitivity");
        std::vector<int> rimg(static_cast<size_t>(n)), uimg(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) {
            rimg[static_cast<size_t>(relabel[static_cast<size_t>(x)])] = relabel[static_cast<size_t>(o.r(x))];
            uimg[static_cast<size_t>(relabel[static_cast<size_t>(x)])] = relabel[static_cast<size_t>(o.u(x))];
        }
        Origami cand(Perm(std::move(rimg)), Perm(std::move(uimg)));
        if (!have || cand < best) {
            best = cand;
            have = true;
        }
    }
    return best;
}

inline bool isomorphic(const Origami& a, const Origami& b) {
    if (a.n() != b.n()) return false;
    return canonical_origami_form(a) == canonical_origami_form(b);
}

} // namespace flatlas
