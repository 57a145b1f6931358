#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "flatlas/enumerate.hpp"
#include "flatlas/stable_curve.hpp"

using namespace flatlas;

namespace {

std::map<std::string, int> tally(const std::string& stratum, int k) {
    std::map<std::string, int> out;
    for (const auto& d : enumerate_diagrams(parse_stratum(stratum), k))
        out[classify_case(d).case_name] += 1;
    return out;
}

std::vector<std::pair<int, int>> profile(const StableCurve& sc) {
    std::vector<std::pair<int, int>> prof;
    for (const auto& c : sc.components) prof.emplace_back(c.genus, c.boundary);
    std::sort(prof.begin(), prof.end());
    return prof;
}

} // namespace

TEST_CASE("case tallies for three cylinders") {
    auto a = tally("H(2,1,1)", 3);
    REQUIRE(a == std::map<std::string, int>{{"3.I", 108}, {"3.II", 6}, {"3.III", 5}});
    auto b = tally("H(1,1,1,1)", 3);
    REQUIRE(b == std::map<std::string, int>{{"3.I", 62}, {"3.II", 6}, {"3.III", 3}});
}

TEST_CASE("case tallies for four cylinders") {
    std::map<std::string, int> want{
        {"4.I.a", 2}, {"4.I.b", 4}, {"4.II", 6}, {"4.III", 36}, {"4.IV", 2}};
    REQUIRE(tally("H(2,1,1)", 4) == want);
    want["4.III"] = 28;
    REQUIRE(tally("H(1,1,1,1)", 4) == want);
}

TEST_CASE("case tallies for five cylinders") {
    REQUIRE(tally("H(2,1,1)", 5) == std::map<std::string, int>{{"5.I", 6}, {"5.II", 4}});
    REQUIRE(tally("H(1,1,1,1)", 5) == std::map<std::string, int>{{"5.I", 10}, {"5.II", 6}});
}

TEST_CASE("six-cylinder surfaces are the four named ones") {
    std::set<std::string> names;
    for (const auto& d : enumerate_diagrams(parse_stratum("H(1,1,1,1)"), 6)) {
        auto res = classify_case(d);
        REQUIRE(profile(res.curve) ==
                std::vector<std::pair<int, int>>{{0, 3}, {0, 3}, {0, 3}, {0, 3}});
        names.insert(res.case_name);
    }
    REQUIRE(names == std::set<std::string>{"6.a", "6.b", "6.c", "6.d"});
}

TEST_CASE("reference surfaces land in their cases") {
    struct Ref {
        const char* diagram;
        const char* stratum;
        const char* name;
    };
    const std::vector<Ref> refs = {
        {"2,0,4,1-5,6,3,7 3,5-0,1 6-2 7-4", "H(1,1,1,1)", "4.I.a"},
        {"2,4,1,0-5,6,3,7 3,5-0 6-1,2 7-4", "H(1,1,1,1)", "4.I.a"},
        {"1,3-6 0,2-4,5 5,6-2,3 4-0,1", "H(2,1,1)", "4.I.b"},
        {"1-4 2,3,0-5,6 6-3 4,5-0,1,2", "H(2,1,1)", "4.I.b"},
        {"1-6 2,3,0-4,5 5,6-3 4-0,1,2", "H(2,1,1)", "4.I.b"},
        {"4,5-6,7 6-0,1,2 7-3 1-4 2,3,0-5", "H(1,1,1,1)", "5.I"},
        {"4,5-6,7 6-0,1 7-2,3 3,0-4 2,1-5", "H(1,1,1,1)", "5.I"},
        {"0,5-1,6 3,2-0,4 6-2 1-3 4-5", "H(2,1,1)", "5.II"},
        {"5-1,6 3,2-4 6-2 1-3 4,0-5,0", "H(2,1,1)", "5.II"},
        {"2-0 3-1 4-2,3 0,6-4,5 1,7-6 5-7", "H(1,1,1,1)", "6.a"},
        {"3-0 5-2 4-1,3 2,6-4,5 7,0-6 1-7", "H(1,1,1,1)", "6.b"},
        {"6-1 7-2 5,2-6,7 3-0 4-5 0,1-3,4", "H(1,1,1,1)", "6.c"},
        {"6-1 7-2 5,0-6,7 3-0 4-5 1,2-3,4", "H(1,1,1,1)", "6.d"},
    };
    for (const auto& ref : refs) {
        auto d = parse_diagram(ref.diagram);
        REQUIRE(diagram_stratum(d).to_string() == ref.stratum);
        REQUIRE(classify_case(d).case_name == ref.name);
    }
    // Surfaces outside the classified range get the generic label.
    REQUIRE(classify_case(parse_diagram("0-1 1,2-0,2")).case_name == "other(2,2)");
    REQUIRE(classify_case(parse_diagram("0-0")).case_name == "other(1,1)");
}

TEST_CASE("component shapes of the named cases") {
    auto iv = classify_case(parse_diagram("1,3-6 0,2-4,5 5,6-2,3 4-0,1"));
    // A pair of homologous cylinders splits off two three-holed pieces.
    REQUIRE(iv.curve.components.size() >= 2);

    int seen_4iv = 0;
    for (const auto& d : enumerate_diagrams(parse_stratum("H(2,1,1)"), 4)) {
        auto res = classify_case(d);
        if (res.case_name != "4.IV") continue;
        ++seen_4iv;
        REQUIRE(profile(res.curve) == std::vector<std::pair<int, int>>{{0, 3}, {0, 3}, {1, 2}});
    }
    REQUIRE(seen_4iv == 2);

    auto v2 = classify_case(parse_diagram("0,5-1,6 3,2-0,4 6-2 1-3 4-5"));
    REQUIRE(profile(v2.curve) == std::vector<std::pair<int, int>>{{0, 3}, {0, 3}, {0, 4}});
    REQUIRE(v2.curve.num_loops() == 1);
    REQUIRE(v2.pairs.size() == 1);
}

TEST_CASE("middle cylinder of the five-cylinder chain") {
    for (const char* text :
         {"4,5-6,7 6-0,1,2 7-3 1-4 2,3,0-5", "4,5-6,7 6-0,1 7-2,3 3,0-4 2,1-5"}) {
        auto res = classify_case(parse_diagram(text));
        REQUIRE(res.case_name == "5.I");
        REQUIRE(res.middle_cylinder.has_value());
        REQUIRE(*res.middle_cylinder == 0);
        REQUIRE_FALSE(res.middle_semisimple);
    }
    // These two are the only such surfaces: every other 5.I chain has a
    // one-edge side on its middle cylinder.
    std::set<std::string> hard;
    for (const auto& d : enumerate_diagrams(parse_stratum("H(1,1,1,1)"), 5)) {
        auto res = classify_case(d);
        if (res.case_name == "5.I" && !res.middle_semisimple) hard.insert(canonical_key(d));
    }
    std::set<std::string> want = {
        canonical_key(parse_diagram("4,5-6,7 6-0,1,2 7-3 1-4 2,3,0-5")),
        canonical_key(parse_diagram("4,5-6,7 6-0,1 7-2,3 3,0-4 2,1-5"))};
    REQUIRE(hard == want);

    int hard211 = 0;
    for (const auto& d : enumerate_diagrams(parse_stratum("H(2,1,1)"), 5)) {
        auto res = classify_case(d);
        if (res.case_name == "5.I" && !res.middle_semisimple) ++hard211;
    }
    REQUIRE(hard211 == 1);
}

TEST_CASE("half-turn classes of the paired four-cylinder case") {
    // The three reference surfaces represent all half-turn classes; one of
    // them absorbs two plain isomorphism classes.
    std::set<std::string> ref_sym;
    for (const char* text : {"1,3-6 0,2-4,5 5,6-2,3 4-0,1", "1-4 2,3,0-5,6 6-3 4,5-0,1,2",
                             "1-6 2,3,0-4,5 5,6-3 4-0,1,2"})
        ref_sym.insert(canonical_key_up_to_symmetry(parse_diagram(text)));
    REQUIRE(ref_sym.size() == 3);

    std::map<std::string, int> fold;
    for (const auto& d : enumerate_diagrams(parse_stratum("H(2,1,1)"), 4))
        if (classify_case(d).case_name == "4.I.b") fold[canonical_key_up_to_symmetry(d)] += 1;
    REQUIRE(fold.size() == 3);
    for (const auto& [key, n] : fold) REQUIRE(ref_sym.count(key) == 1);
    std::multiset<int> sizes;
    for (const auto& [key, n] : fold) sizes.insert(n);
    REQUIRE(sizes == std::multiset<int>{1, 1, 2});
}
