#include <catch2/catch_amalgamated.hpp>

#include <optional>

#include "flatlas/diagram.hpp"
#include "flatlas/widths.hpp"

using namespace flatlas;

namespace {

template <class F> std::optional<errc> code_of(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("two-cylinder surface of genus two") {
    auto d = parse_diagram("0-1 1,2-0,2");
    REQUIRE(d.num_cylinders() == 2);
    REQUIRE(d.num_labels() == 3);
    REQUIRE(diagram_connected(d));
    REQUIRE(diagram_stratum(d) == parse_stratum("H(2)"));
    REQUIRE(diagram_genus(d) == 2);
    auto zeros = diagram_zeros(d);
    REQUIRE(zeros.size() == 1);
    REQUIRE(zeros.front().size() == 3);
    auto rep = validate_diagram(d);
    REQUIRE(rep.ok);
    REQUIRE_FALSE(rep.marked_point);
}

TEST_CASE("torus-like diagrams carry marked points") {
    auto d = parse_diagram("0-0");
    REQUIRE(diagram_stratum(d) == parse_stratum("H()"));
    REQUIRE(diagram_genus(d) == 1);
    auto rep = validate_diagram(d);
    REQUIRE(rep.ok);
    REQUIRE(rep.marked_point);
    REQUIRE(code_of([&] { require_valid(d, /*allow_marked=*/false); }) == errc::marked_point);

    // Three cylinders stacked in a vertical circle: still a torus.
    auto ring = parse_diagram("0-1 1-2 2-0");
    REQUIRE(diagram_stratum(ring) == parse_stratum("H()"));
    REQUIRE(diagram_zeros(ring).size() == 3);
    REQUIRE(validate_diagram(ring).marked_point);
}

TEST_CASE("structural errors are reported by code") {
    REQUIRE(code_of([] { index_diagram(parse_diagram("0,0-0,1")); }) == errc::duplicate_label);
    REQUIRE(code_of([] { index_diagram(parse_diagram("0-1 1,2-0,3")); }) == errc::missing_label);
    REQUIRE(code_of([] { index_diagram(parse_diagram("0-1 1-0,2")); }) == errc::missing_label);
    REQUIRE(code_of([] { parse_diagram("0-1 1-"); }) == errc::bad_input);
    REQUIRE(code_of([] { parse_diagram("0-1 12"); }) == errc::bad_input);
    REQUIRE(code_of([] { parse_diagram("  "); }) == errc::bad_input);
    REQUIRE(code_of([] { parse_diagram("0,-1"); }) == errc::bad_input);

    auto split = parse_diagram("0-0 1-1");
    REQUIRE_FALSE(diagram_connected(split));
    REQUIRE(validate_diagram(split).problem == errc::disconnected);
}

TEST_CASE("serialization normalizes whitespace") {
    auto d = parse_diagram("  0-1   1,2-0,2 ");
    REQUIRE(serialize_diagram(d) == "0-1 1,2-0,2");
    REQUIRE(parse_diagram(serialize_diagram(d)) == d);
}

TEST_CASE("width solving") {
    auto d = parse_diagram("0-1 1,2-0,2");
    REQUIRE(solvable_widths(d));
    REQUIRE(solve_widths(d) == std::vector<int>{1, 1, 1});

    auto one = parse_diagram("0,1,2-2,1,0");
    REQUIRE(solve_widths(one) == std::vector<int>{1, 1, 1});

    // Bottom word strictly longer than what the top can balance.
    auto bad = parse_diagram("0,1-0 2-1,2");
    REQUIRE(diagram_connected(bad));
    REQUIRE_FALSE(solvable_widths(bad));
    REQUIRE_FALSE(solve_widths(bad).has_value());
    REQUIRE(validate_diagram(bad).problem == errc::no_positive_widths);
}

TEST_CASE("genus-three reference diagrams") {
    auto six = parse_diagram("2-0 3-1 4-2,3 0,6-4,5 1,7-6 5-7");
    REQUIRE(six.num_cylinders() == 6);
    REQUIRE(six.num_labels() == 8);
    REQUIRE(diagram_stratum(six) == parse_stratum("H(1,1,1,1)"));
    REQUIRE(diagram_genus(six) == 3);

    auto five = parse_diagram("0,5-1,6 3,2-0,4 6-2 1-3 4-5");
    REQUIRE(five.num_labels() == 7);
    REQUIRE(diagram_stratum(five) == parse_stratum("H(2,1,1)"));
}
