#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/stratum.hpp"

namespace flatlas {

// Combinatorial cylinder diagram: E horizontal saddle connections labelled
// 0..E-1, and k cylinders, each carrying a cyclic bottom word and a cyclic
// top word.  Every label occurs exactly once among all bottom words (the
// cylinder directly above that saddle) and exactly once among all top words
// (the cylinder directly below it).
//
// Text grammar: cylinders separated by blanks, each "bottom-top" with
// comma-separated decimal labels, e.g. "0-1 1,2-0,2".
struct CylinderDiagram {
    struct Cyl {
        std::vector<int> bottom, top;
    };
    std::vector<Cyl> cylinders;

    int num_cylinders() const { return static_cast<int>(cylinders.size()); }

    int num_labels() const {
        int e = 0;
        for (const auto& c : cylinders) e += static_cast<int>(c.bottom.size());
        return e;
    }

    bool operator==(const CylinderDiagram& o) const {
        if (cylinders.size() != o.cylinders.size()) return false;
        for (size_t i = 0; i < cylinders.size(); ++i)
            if (cylinders[i].bottom != o.cylinders[i].bottom || cylinders[i].top != o.cylinders[i].top)
                return false;
        return true;
    }
};

inline CylinderDiagram parse_diagram(const std::string& text) {
    CylinderDiagram d;
    std::istringstream is(text);
    std::string chunk;
    while (is >> chunk) {
        size_t dash = chunk.find('-');
        check(dash != std::string::npos, errc::bad_input, "cylinder needs 'bottom-top': " + chunk);
        auto parse_word = [&](const std::string& part) {
            std::vector<int> word;
            check(!part.empty(), errc::bad_input, "empty saddle word in: " + chunk);
            size_t i = 0;
            while (i < part.size()) {
                check(std::isdigit(static_cast<unsigned char>(part[i])), errc::bad_input,
                      "expected label in: " + chunk);
                int val = 0;
                while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) {
                    val = val * 10 + (part[i] - '0');
                    ++i;
                }
                word.push_back(val);
                if (i < part.size()) {
                    check(part[i] == ',', errc::bad_input, "expected ',' in: " + chunk);
                    ++i;
                    check(i < part.size(), errc::bad_input, "trailing ',' in: " + chunk);
                }
            }
            return word;
        };
        CylinderDiagram::Cyl c;
        c.bottom = parse_word(chunk.substr(0, dash));
        c.top = parse_word(chunk.substr(dash + 1));
        d.cylinders.push_back(std::move(c));
    }
    check(!d.cylinders.empty(), errc::bad_input, "diagram needs at least one cylinder");
    return d;
}

inline std::string serialize_diagram(const CylinderDiagram& d) {
    std::ostringstream os;
    for (size_t ci = 0; ci < d.cylinders.size(); ++ci) {
        if (ci) os << ' ';
        for (size_t j = 0; j < d.cylinders[ci].bottom.size(); ++j) {
            if (j) os << ',';
            os << d.cylinders[ci].bottom[j];
        }
        os << '-';
        for (size_t j = 0; j < d.cylinders[ci].top.size(); ++j) {
            if (j) os << ',';
            os << d.cylinders[ci].top[j];
        }
    }
    return os.str();
}

// --- occurrence tables ------------------------------------------------------

// For each label: which cylinder/word position carries it on each side.
struct DiagramIndex {
    int E = 0;
    std::vector<int> bottom_cyl, bottom_pos; // label -> cylinder above it
    std::vector<int> top_cyl, top_pos;       // label -> cylinder below it
    std::vector<int> bottom_prev, bottom_next;
    std::vector<int> top_prev, top_next;
};

// Structural check only (label occurrences); throws DuplicateLabel or
// MissingLabel.  Connectivity/widths/vertices are separate.
inline DiagramIndex index_diagram(const CylinderDiagram& d) {
    DiagramIndex ix;
    ix.E = d.num_labels();
    int topcount = 0;
    for (const auto& c : d.cylinders) topcount += static_cast<int>(c.top.size());
    check(topcount == ix.E, errc::missing_label,
          "total top length must equal total bottom length");
    auto init = [&](std::vector<int>& v) { v.assign(static_cast<size_t>(ix.E), -1); };
    init(ix.bottom_cyl); init(ix.bottom_pos); init(ix.top_cyl); init(ix.top_pos);
    init(ix.bottom_prev); init(ix.bottom_next); init(ix.top_prev); init(ix.top_next);
    for (size_t ci = 0; ci < d.cylinders.size(); ++ci) {
        const auto& c = d.cylinders[ci];
        check(!c.bottom.empty() && !c.top.empty(), errc::bad_input, "cylinder with empty word");
        for (size_t j = 0; j < c.bottom.size(); ++j) {
            int x = c.bottom[j];
            check(x >= 0 && x < ix.E, errc::missing_label,
                  "label " + std::to_string(x) + " out of range 0.." + std::to_string(ix.E - 1));
            check(ix.bottom_cyl[static_cast<size_t>(x)] < 0, errc::duplicate_label,
                  "label " + std::to_string(x) + " occurs twice among bottoms");
            ix.bottom_cyl[static_cast<size_t>(x)] = static_cast<int>(ci);
            ix.bottom_pos[static_cast<size_t>(x)] = static_cast<int>(j);
            ix.bottom_next[static_cast<size_t>(x)] = c.bottom[(j + 1) % c.bottom.size()];
            ix.bottom_prev[static_cast<size_t>(x)] = c.bottom[(j + c.bottom.size() - 1) % c.bottom.size()];
        }
        for (size_t j = 0; j < c.top.size(); ++j) {
            int x = c.top[j];
            check(x >= 0 && x < ix.E, errc::missing_label,
                  "label " + std::to_string(x) + " out of range 0.." + std::to_string(ix.E - 1));
            check(ix.top_cyl[static_cast<size_t>(x)] < 0, errc::duplicate_label,
                  "label " + std::to_string(x) + " occurs twice among tops");
            ix.top_cyl[static_cast<size_t>(x)] = static_cast<int>(ci);
            ix.top_pos[static_cast<size_t>(x)] = static_cast<int>(j);
            ix.top_next[static_cast<size_t>(x)] = c.top[(j + 1) % c.top.size()];
            ix.top_prev[static_cast<size_t>(x)] = c.top[(j + c.top.size() - 1) % c.top.size()];
        }
    }
    for (int x = 0; x < ix.E; ++x) {
        check(ix.bottom_cyl[static_cast<size_t>(x)] >= 0, errc::missing_label,
              "label " + std::to_string(x) + " missing from bottoms");
        check(ix.top_cyl[static_cast<size_t>(x)] >= 0, errc::missing_label,
              "label " + std::to_string(x) + " missing from tops");
    }
    return ix;
}

// --- ribbon structure -------------------------------------------------------
//
// Around a cone point the horizontal direction alternates eastward and
// westward separatrix germs; the angle-pi sectors between consecutive germs
// are the corners that cylinder boundary circles make at the zero.  Walking
// counterclockwise from the eastward germ at the left end of saddle y crosses
// the cylinder above y and resumes at the left end of
// VERT(y) = top_next(bottom_prev(y)).  Orbits of VERT therefore list the left
// ends meeting at one zero; an orbit of length l is a zero of order l-1
// (cone angle 2*pi*l), and order 0 means a regular marked point.

inline std::vector<int> vertex_map(const DiagramIndex& ix) {
    std::vector<int> vert(static_cast<size_t>(ix.E));
    for (int y = 0; y < ix.E; ++y)
        vert[static_cast<size_t>(y)] =
            ix.top_next[static_cast<size_t>(ix.bottom_prev[static_cast<size_t>(y)])];
    return vert;
}

// Zeros of the diagram: orbits of VERT, sorted by minimal label.
inline std::vector<std::vector<int>> diagram_zeros(const CylinderDiagram& d) {
    auto ix = index_diagram(d);
    auto vert = vertex_map(ix);
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(static_cast<size_t>(ix.E), 0);
    for (int y = 0; y < ix.E; ++y) {
        if (seen[static_cast<size_t>(y)]) continue;
        std::vector<int> orbit;
        int x = y;
        do {
            orbit.push_back(x);
            seen[static_cast<size_t>(x)] = 1;
            x = vert[static_cast<size_t>(x)];
        } while (x != y);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// Stratum of the translation surface carrying the diagram.  Order-0 vertices
// (regular marked points) are dropped, matching the origami convention.
inline StratumSignature diagram_stratum(const CylinderDiagram& d) {
    std::vector<int> orders;
    for (const auto& orbit : diagram_zeros(d))
        if (orbit.size() >= 2) orders.push_back(static_cast<int>(orbit.size()) - 1);
    return StratumSignature::abelian(std::move(orders));
}

inline int diagram_genus(const CylinderDiagram& d) { return diagram_stratum(d).genus(); }

inline bool diagram_connected(const CylinderDiagram& d) {
    auto ix = index_diagram(d);
    int k = d.num_cylinders();
    std::vector<int> parent(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    for (int x = 0; x < ix.E; ++x) {
        int a = find(ix.bottom_cyl[static_cast<size_t>(x)]);
        int b = find(ix.top_cyl[static_cast<size_t>(x)]);
        parent[static_cast<size_t>(a)] = b;
    }
    int root = find(0);
    for (int i = 1; i < k; ++i)
        if (find(i) != root) return false;
    return true;
}

} // namespace flatlas
