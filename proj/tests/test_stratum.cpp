#include <catch2/catch_amalgamated.hpp>

#include <optional>

#include "flatlas/stratum.hpp"

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

TEST_CASE("abelian parsing accepts both spellings") {
    auto a = parse_stratum("H(2,1,1)");
    auto b = parse_stratum("2,1,1");
    REQUIRE(a == b);
    REQUIRE(a.type == StratumSignature::Type::abelian);
    REQUIRE(a.orders == std::vector<int>{2, 1, 1});
    REQUIRE(a.to_string() == "H(2,1,1)");
    REQUIRE(parse_stratum("1,1,2") == a); // orders normalize to descending
    REQUIRE(parse_stratum("2,1^2") == a); // exponent shorthand
    REQUIRE(parse_stratum("1^4") == parse_stratum("H(1,1,1,1)"));
}

TEST_CASE("quadratic parsing") {
    auto q = parse_stratum("Q(2,2,-1^4)");
    REQUIRE(q.type == StratumSignature::Type::quadratic);
    REQUIRE(q.orders == std::vector<int>{2, 2, -1, -1, -1, -1});
    REQUIRE(q.to_string() == "Q(2,2,-1,-1,-1,-1)");
    REQUIRE(parse_stratum(q.to_string()) == q);
}

TEST_CASE("genus, zero count and dimension") {
    auto torus = parse_stratum("H()");
    REQUIRE(torus.orders.empty());
    REQUIRE(torus.genus() == 1);
    REQUIRE(torus.num_zeros() == 0);
    REQUIRE(torus.dimension() == 1); // 2g + n - 1

    auto h2 = parse_stratum("H(2)");
    REQUIRE(h2.genus() == 2);
    REQUIRE(h2.dimension() == 4);

    auto h211 = parse_stratum("H(2,1,1)");
    REQUIRE(h211.genus() == 3);
    REQUIRE(h211.num_zeros() == 3);
    REQUIRE(h211.dimension() == 8);

    auto h1111 = parse_stratum("H(1,1,1,1)");
    REQUIRE(h1111.genus() == 3);
    REQUIRE(h1111.dimension() == 9);

    auto q1 = parse_stratum("Q(2,1,-1,-1,-1)");
    REQUIRE(q1.genus() == 1);
    REQUIRE(q1.dimension() == 2 * 1 + 5 - 2); // 2g + n - 2

    auto q0 = parse_stratum("Q(-1,-1,-1,-1)");
    REQUIRE(q0.genus() == 0);
    REQUIRE(q0.dimension() == 2);
}

TEST_CASE("consistency checks") {
    // Abelian orders sum to 2g-2, quadratic orders to 4g-4.
    REQUIRE(parse_stratum("H(3,1)").total() == 4);
    REQUIRE(parse_stratum("Q(1,1,-1,-1)").total() == 0);
    REQUIRE(StratumSignature::abelian({2, 2}).consistent());
    REQUIRE_FALSE(StratumSignature::abelian({0, 2}).consistent()); // order-0 zero
    REQUIRE_FALSE(StratumSignature::abelian({2, 1}).consistent()); // odd total
    REQUIRE_FALSE(StratumSignature::quadratic({0}).consistent());
    REQUIRE_FALSE(StratumSignature::quadratic({-2}).consistent());
    REQUIRE_FALSE(StratumSignature::quadratic({1}).consistent()); // total not 0 mod 4
    REQUIRE(StratumSignature::quadratic({-1, -1, -1, -1}).consistent());
}

TEST_CASE("parse errors carry BadInput") {
    REQUIRE(code_of([] { parse_stratum("H(2,1"); }) == errc::bad_input);
    REQUIRE(code_of([] { parse_stratum("G(2)"); }) == errc::bad_input);
    REQUIRE(code_of([] { parse_stratum("H(x)"); }) == errc::bad_input);
    REQUIRE(code_of([] { parse_stratum("H(2,1)"); }) == errc::bad_input);  // odd sum
    REQUIRE(code_of([] { parse_stratum("Q(3)"); }) == errc::bad_input);    // bad sum
    REQUIRE(code_of([] { parse_stratum("H(1^0)"); }) == errc::bad_input);  // bad exponent
}

TEST_CASE("ordering is well defined") {
    REQUIRE(parse_stratum("H(2)") < parse_stratum("H(2,2)"));
    REQUIRE_FALSE(parse_stratum("H(2)") < parse_stratum("H(2)"));
    REQUIRE(parse_stratum("H(1,1)") != parse_stratum("H(2)"));
}
