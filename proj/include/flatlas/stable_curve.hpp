#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flatlas/canonical.hpp"
#include "flatlas/common.hpp"
#include "flatlas/diagram.hpp"
#include "flatlas/homology.hpp"
#include "flatlas/widths.hpp"

namespace flatlas {

// --- pinching all core curves ----------------------------------------------
//
// Degenerating every cylinder to zero height pinches all core curves at once;
// what remains are the components of the separatrix graph (zeros joined by
// saddle connections), each thickened to a surface with one boundary circle
// per incident cylinder side.  The dual multigraph has one vertex per
// component and one edge per cylinder (a loop when both sides of the cylinder
// land on the same component).

struct StableComponent {
    std::vector<int> zeros;       // vertex-orbit indices in diagram_zeros order
    std::vector<int> zero_orders; // matching cone orders (0 for marked points)
    int n_edges = 0;              // saddle connections inside the component
    int boundary = 0;             // incident cylinder sides
    int genus = 0;
};

struct StableCurve {
    std::vector<StableComponent> components;
    // cylinder i -> (component of its bottom circle, component of its top circle)
    std::vector<std::pair<int, int>> cylinder_ends;

    int num_loops() const {
        int n = 0;
        for (auto& [a, b] : cylinder_ends)
            if (a == b) ++n;
        return n;
    }
    int joining_edges(int a, int b) const {
        int n = 0;
        for (auto& [x, y] : cylinder_ends)
            if ((x == a && y == b) || (x == b && y == a)) ++n;
        return n;
    }
};

inline StableCurve pinch(const CylinderDiagram& d) {
    auto ix = index_diagram(d);
    auto zeros = diagram_zeros(d);
    int nz = static_cast<int>(zeros.size());
    std::vector<int> orbit_of(static_cast<size_t>(ix.E), -1);
    for (int z = 0; z < nz; ++z)
        for (int lab : zeros[static_cast<size_t>(z)]) orbit_of[static_cast<size_t>(lab)] = z;

    std::vector<int> parent(static_cast<size_t>(nz));
    for (int i = 0; i < nz; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };

    for (int x = 0; x < ix.E; ++x) {
        // The right endpoint of edge x is the left endpoint of its successor
        // along either of the two circles through x; both expressions must
        // name the same zero.
        int right_b = orbit_of[static_cast<size_t>(ix.bottom_next[static_cast<size_t>(x)])];
        int right_t = orbit_of[static_cast<size_t>(ix.top_next[static_cast<size_t>(x)])];
        invariant(right_b == right_t, "edge endpoints must be consistent between circles");
        unite(orbit_of[static_cast<size_t>(x)], right_b);
    }

    std::vector<int> comp_of_zero(static_cast<size_t>(nz), -1);
    std::vector<int> roots;
    for (int z = 0; z < nz; ++z) {
        int r = find(z);
        auto it = std::find(roots.begin(), roots.end(), r);
        if (it == roots.end()) {
            roots.push_back(r);
            comp_of_zero[static_cast<size_t>(z)] = static_cast<int>(roots.size()) - 1;
        } else {
            comp_of_zero[static_cast<size_t>(z)] = static_cast<int>(it - roots.begin());
        }
    }
    int nc = static_cast<int>(roots.size());

    StableCurve sc;
    sc.components.resize(static_cast<size_t>(nc));
    for (int z = 0; z < nz; ++z) {
        auto& comp = sc.components[static_cast<size_t>(comp_of_zero[static_cast<size_t>(z)])];
        comp.zeros.push_back(z);
        comp.zero_orders.push_back(static_cast<int>(zeros[static_cast<size_t>(z)].size()) - 1);
    }
    for (int x = 0; x < ix.E; ++x)
        sc.components[static_cast<size_t>(comp_of_zero[static_cast<size_t>(orbit_of[static_cast<size_t>(x)])])].n_edges += 1;

    for (const auto& cyl : d.cylinders) {
        int cb = comp_of_zero[static_cast<size_t>(orbit_of[static_cast<size_t>(cyl.bottom.front())])];
        int ct = comp_of_zero[static_cast<size_t>(orbit_of[static_cast<size_t>(cyl.top.front())])];
        sc.components[static_cast<size_t>(cb)].boundary += 1;
        sc.components[static_cast<size_t>(ct)].boundary += 1;
        sc.cylinder_ends.emplace_back(cb, ct);
    }

    int genus_sum = 0;
    for (auto& comp : sc.components) {
        int vc = static_cast<int>(comp.zeros.size());
        int chi = vc - comp.n_edges; // the component retracts onto its separatrix graph
        int twog = 2 - comp.boundary - chi;
        invariant(twog >= 0 && twog % 2 == 0, "component genus must be a nonnegative integer");
        comp.genus = twog / 2;
        genus_sum += comp.genus;
    }
    int k = d.num_cylinders();
    int g = diagram_genus(d);
    invariant(genus_sum + (k - nc + 1) == g, "component genera plus dual-graph cycles must recover g");
    return sc;
}

// --- genus-3 case registry --------------------------------------------------

namespace detail {

// The four 6-cylinder diagrams of the classification, fixed up to relabeling
// by their canonical keys.
inline const std::vector<std::pair<std::string, std::string>>& six_cylinder_registry() {
    static const std::vector<std::pair<std::string, std::string>> reg = [] {
        std::vector<std::pair<std::string, std::string>> r;
        auto add = [&](const std::string& name, const std::string& text) {
            r.emplace_back(name, canonical_key(parse_diagram(text)));
        };
        add("6.a", "2-0 3-1 4-2,3 0,6-4,5 1,7-6 5-7");
        add("6.b", "3-0 5-2 4-1,3 2,6-4,5 7,0-6 1-7");
        add("6.c", "6-1 7-2 5,2-6,7 3-0 4-5 0,1-3,4");
        add("6.d", "6-1 7-2 5,0-6,7 3-0 4-5 1,2-3,4");
        return r;
    }();
    return reg;
}

// Sorted (genus, boundary) profile of a stable curve.
inline std::vector<std::pair<int, int>> component_profile(const StableCurve& sc) {
    std::vector<std::pair<int, int>> prof;
    for (const auto& c : sc.components) prof.emplace_back(c.genus, c.boundary);
    std::sort(prof.begin(), prof.end());
    return prof;
}

} // namespace detail

struct ClassificationResult {
    std::string case_name; // "3.I" .. "6.d", or "other(g,k)"
    int genus = 0;
    int k = 0;
    StableCurve curve;
    CoreRelations relations;
    std::vector<HomologousPair> pairs;
    std::optional<int> middle_cylinder; // 5.I only: the cylinder joining the two 3-holed spheres
    bool middle_semisimple = false;     // 5.I only: that cylinder has a one-edge side
};

// Assigns the degeneration case of the genus-3 classification.  Diagrams in
// the two rank-two strata that fit none of the named cases raise
// UnknownCase; anything outside the classified range is labelled
// "other(g,k)".
inline ClassificationResult classify_case(const CylinderDiagram& d) {
    require_valid(d, /*allow_marked=*/true);
    ClassificationResult res;
    res.genus = diagram_genus(d);
    res.k = d.num_cylinders();
    res.curve = pinch(d);
    res.relations = core_curve_relations(d);
    res.pairs = homologous_pairs(d);

    auto other = [&] {
        res.case_name = "other(" + std::to_string(res.genus) + "," + std::to_string(res.k) + ")";
        return res;
    };
    if (res.genus != 3 || res.k < 3 || res.k > 6) return other();

    auto stratum = diagram_stratum(d);
    bool in_scope = (stratum == StratumSignature::abelian({2, 1, 1}) ||
                     stratum == StratumSignature::abelian({1, 1, 1, 1}));
    auto unmatched = [&]() -> ClassificationResult {
        if (in_scope)
            fail(errc::unknown_case,
                 "diagram fits no case of the classification: " + serialize_diagram(canonical_form(d)));
        return other();
    };

    auto prof = detail::component_profile(res.curve);

    if (res.k == 3) {
        if (res.relations.rank == 3) {
            res.case_name = "3.I";
            return res;
        }
        if (res.relations.rank == 2) {
            res.case_name = res.pairs.empty() ? "3.II" : "3.III";
            return res;
        }
        return unmatched();
    }

    if (res.k == 4) {
        using P = std::vector<std::pair<int, int>>;
        if (prof == P{{0, 4}, {0, 4}}) {
            int loops = res.curve.num_loops();
            if (loops == 0 && res.curve.joining_edges(0, 1) == 4) {
                // Distinguish the two sub-cases by the sign pattern of the
                // unique relation among the four core curves.
                if (intlin::rows(res.relations.relations) == 1) {
                    const auto& rel = res.relations.relations.front();
                    int pos = 0, neg = 0;
                    bool unit = true;
                    for (long long c : rel) {
                        if (c == 1) ++pos;
                        else if (c == -1) ++neg;
                        else if (c != 0) unit = false;
                    }
                    if (unit && pos + neg == 4) {
                        int lo = std::min(pos, neg), hi = std::max(pos, neg);
                        if (lo == 1 && hi == 3) {
                            res.case_name = "4.I.a";
                            return res;
                        }
                        if (lo == 2 && hi == 2) {
                            res.case_name = "4.I.b";
                            return res;
                        }
                    }
                }
                return unmatched();
            }
            bool loop0 = false, loop1 = false;
            for (auto& [a, b] : res.curve.cylinder_ends)
                if (a == b) (a == 0 ? loop0 : loop1) = true;
            if (loops == 2 && loop0 && loop1 && res.curve.joining_edges(0, 1) == 2) {
                res.case_name = "4.II";
                return res;
            }
            return unmatched();
        }
        if (prof == P{{0, 3}, {0, 5}}) {
            // One loop, and it must sit on the five-holed sphere.
            int big = res.curve.components[0].boundary == 5 ? 0 : 1;
            int loops_on_big = 0, joining = 0;
            for (auto& [a, b] : res.curve.cylinder_ends) {
                if (a == b && a == big) ++loops_on_big;
                else if (a != b) ++joining;
            }
            if (loops_on_big == 1 && joining == 3 && res.curve.num_loops() == 1) {
                res.case_name = "4.III";
                return res;
            }
            return unmatched();
        }
        if (prof == P{{0, 3}, {0, 3}, {1, 2}}) {
            res.case_name = "4.IV";
            return res;
        }
        return unmatched();
    }

    if (res.k == 5) {
        using P = std::vector<std::pair<int, int>>;
        if (prof == P{{0, 3}, {0, 3}, {0, 4}}) {
            int loops = res.curve.num_loops();
            if (loops == 0) {
                res.case_name = "5.I";
                // The unique cylinder joining the two three-holed spheres.
                std::vector<int> small;
                for (int c = 0; c < static_cast<int>(res.curve.components.size()); ++c)
                    if (res.curve.components[static_cast<size_t>(c)].boundary == 3) small.push_back(c);
                invariant(small.size() == 2, "5.I needs two three-holed spheres");
                std::vector<int> middles;
                for (int ci = 0; ci < res.k; ++ci) {
                    auto [a, b] = res.curve.cylinder_ends[static_cast<size_t>(ci)];
                    if ((a == small[0] && b == small[1]) || (a == small[1] && b == small[0])) middles.push_back(ci);
                }
                invariant(middles.size() == 1, "5.I needs a unique middle cylinder");
                res.middle_cylinder = middles.front();
                const auto& mc = d.cylinders[static_cast<size_t>(middles.front())];
                res.middle_semisimple = mc.bottom.size() == 1 || mc.top.size() == 1;
                return res;
            }
            if (loops == 1) {
                res.case_name = "5.II";
                return res;
            }
        }
        return unmatched();
    }

    // k == 6: all four components are three-holed spheres; the four diagrams
    // are told apart by canonical key.
    {
        using P = std::vector<std::pair<int, int>>;
        if (prof == P{{0, 3}, {0, 3}, {0, 3}, {0, 3}}) {
            auto key = canonical_key(d);
            for (const auto& [name, k2] : detail::six_cylinder_registry())
                if (k2 == key) {
                    res.case_name = name;
                    return res;
                }
        }
        return unmatched();
    }
}

} // namespace flatlas
