#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "flatlas/common.hpp"

namespace flatlas {

// Signature of a stratum of translation surfaces (abelian, orders >= 1,
// sum = 2g-2) or of half-translation surfaces (quadratic, orders >= -1 and
// nonzero, sum = 4g-4).  Orders are kept sorted descending.  Regular marked
// points are never recorded, so the torus is H() with an empty order list.
struct StratumSignature {
    enum class Type { abelian, quadratic };

    Type type = Type::abelian;
    std::vector<int> orders;

    StratumSignature() = default;
    StratumSignature(Type t, std::vector<int> ords) : type(t), orders(std::move(ords)) {
        normalize();
    }

    static StratumSignature abelian(std::vector<int> ords) {
        return StratumSignature(Type::abelian, std::move(ords));
    }
    static StratumSignature quadratic(std::vector<int> ords) {
        return StratumSignature(Type::quadratic, std::move(ords));
    }

    void normalize() { std::sort(orders.rbegin(), orders.rend()); }

    int total() const {
        int s = 0;
        for (int m : orders) s += m;
        return s;
    }

    int num_zeros() const { return static_cast<int>(orders.size()); }

    bool consistent() const {
        for (int m : orders) {
            if (type == Type::abelian && m < 1) return false;
            if (type == Type::quadratic && (m == 0 || m < -1)) return false;
        }
        int s = total();
        if (type == Type::abelian) return s >= 0 && s % 2 == 0;
        return (s + 4) % 4 == 0 && s >= -4;
    }

    int genus() const {
        invariant(consistent(), "inconsistent stratum signature");
        return type == Type::abelian ? total() / 2 + 1 : (total() + 4) / 4;
    }

    // dim H(kappa) = 2g + n - 1; dim Q(kappa) = 2g + n - 2.
    int dimension() const {
        int g = genus(), n = num_zeros();
        return type == Type::abelian ? 2 * g + n - 1 : 2 * g + n - 2;
    }

    bool operator==(const StratumSignature& o) const {
        return type == o.type && orders == o.orders;
    }
    bool operator!=(const StratumSignature& o) const { return !(*this == o); }
    bool operator<(const StratumSignature& o) const {
        if (type != o.type) return type < o.type;
        return orders < o.orders;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << (type == Type::abelian ? 'H' : 'Q') << '(';
        for (size_t i = 0; i < orders.size(); ++i) {
            if (i) os << ',';
            os << orders[i];
        }
        os << ')';
        return os.str();
    }
};

namespace detail {

// Order lists accept exponent shorthand: "2,1,1", "2,1^2", "-1^4".
inline std::vector<int> parse_order_list(const std::string& body) {
    std::vector<int> orders;
    size_t i = 0;
    auto skip_ws = [&] { while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i; };
    auto read_int = [&]() -> int {
        skip_ws();
        bool neg = false;
        if (i < body.size() && (body[i] == '-' || body[i] == '+')) { neg = body[i] == '-'; ++i; }
        check(i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])), errc::bad_input,
              "expected integer in order list: " + body);
        int val = 0;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
            val = val * 10 + (body[i] - '0');
            ++i;
        }
        return neg ? -val : val;
    };
    skip_ws();
    while (i < body.size()) {
        int m = read_int();
        int rep = 1;
        skip_ws();
        if (i < body.size() && body[i] == '^') {
            ++i;
            rep = read_int();
            check(rep >= 1, errc::bad_input, "exponent must be positive: " + body);
        }
        for (int t = 0; t < rep; ++t) orders.push_back(m);
        skip_ws();
        if (i < body.size()) {
            check(body[i] == ',', errc::bad_input, "expected ',' in order list: " + body);
            ++i;
            skip_ws();
        }
    }
    return orders;
}

} // namespace detail

// "H(2,1,1)", "Q(2,2,-1^4)", "H()" (torus).  A bare order list such as
// "1,1,1,1" (or "1^4") is read as an abelian signature.
inline StratumSignature parse_stratum(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] != 'H' && text[i] != 'Q') {
        StratumSignature s(StratumSignature::Type::abelian, detail::parse_order_list(text.substr(i)));
        check(s.consistent(), errc::bad_input, "inconsistent stratum orders: " + text);
        return s;
    }
    check(i < text.size() && (text[i] == 'H' || text[i] == 'Q'), errc::bad_input,
          "stratum must start with H or Q: " + text);
    auto type = text[i] == 'H' ? StratumSignature::Type::abelian : StratumSignature::Type::quadratic;
    ++i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    check(i < text.size() && text[i] == '(', errc::bad_input, "expected '(' in stratum: " + text);
    size_t close = text.rfind(')');
    check(close != std::string::npos && close > i, errc::bad_input, "expected ')' in stratum: " + text);
    StratumSignature s(type, detail::parse_order_list(text.substr(i + 1, close - i - 1)));
    check(s.consistent(), errc::bad_input, "inconsistent stratum orders: " + text);
    return s;
}

} // namespace flatlas
