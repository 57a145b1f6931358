#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "flatlas/common.hpp"

namespace flatlas {

// Permutation of {0, ..., n-1}, stored as its image table.
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> images) : img(std::move(images)) {}

    static Perm identity(int n) {
        std::vector<int> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return Perm(std::move(v));
    }

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[static_cast<size_t>(i)]; }

    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator!=(const Perm& o) const { return img != o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img[static_cast<size_t>(i)] != i) return false;
        return true;
    }

    bool is_valid() const {
        std::vector<char> seen(img.size(), 0);
        for (int x : img) {
            if (x < 0 || x >= size() || seen[static_cast<size_t>(x)]) return false;
            seen[static_cast<size_t>(x)] = 1;
        }
        return true;
    }

    Perm inverse() const {
        std::vector<int> inv(img.size());
        for (int i = 0; i < size(); ++i) inv[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
        return Perm(std::move(inv));
    }

    // Cycles sorted by minimal element, each written starting at its minimum.
    // Trivial (length-1) cycles are included.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(img.size(), 0);
        for (int i = 0; i < size(); ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            std::vector<int> cyc;
            int x = i;
            do {
                cyc.push_back(x);
                seen[static_cast<size_t>(x)] = 1;
                x = img[static_cast<size_t>(x)];
            } while (x != i);
            out.push_back(std::move(cyc));
        }
        return out;
    }

    std::vector<int> cycle_type() const { // lengths, descending
        std::vector<int> lens;
        for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
        std::sort(lens.rbegin(), lens.rend());
        return lens;
    }
};

// compose(f, g) applies g first: (f . g)(x) = f(g(x)).
inline Perm compose(const Perm& f, const Perm& g) {
    invariant(f.size() == g.size(), "compose: size mismatch");
    std::vector<int> v(f.img.size());
    for (int x = 0; x < f.size(); ++x) v[static_cast<size_t>(x)] = f(g(x));
    return Perm(std::move(v));
}

// conjugate(s, p) = s . p . s^-1 (relabeling squares by s).
inline Perm conjugate(const Perm& s, const Perm& p) {
    invariant(s.size() == p.size(), "conjugate: size mismatch");
    std::vector<int> v(p.img.size());
    for (int x = 0; x < p.size(); ++x) v[static_cast<size_t>(s(x))] = s(p(x));
    return Perm(std::move(v));
}

// Cycle notation: "(0,1)(2,5)" or with blanks "(0 1)(2 5)".  Fixed points may
// be omitted; "()" (or an empty string) denotes the identity.
inline Perm parse_cycles(const std::string& text, int n, bool one_based = false) {
    Perm p = Perm::identity(n);
    std::vector<char> used(static_cast<size_t>(n), 0);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        check(text[i] == '(', errc::bad_input, "expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (text[i] == ',') { ++i; skip_ws(); continue; }
            check(std::isdigit(static_cast<unsigned char>(text[i])), errc::bad_input,
                  "expected digit in cycle notation: " + text);
            int val = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                val = val * 10 + (text[i] - '0');
                ++i;
            }
            if (one_based) val -= 1;
            check(val >= 0 && val < n, errc::bad_input,
                  "cycle entry out of range 0.." + std::to_string(n - 1) + ": " + text);
            check(!used[static_cast<size_t>(val)], errc::bad_input,
                  "label repeated in cycle notation: " + text);
            used[static_cast<size_t>(val)] = 1;
            cyc.push_back(val);
            skip_ws();
        }
        check(i < text.size() && text[i] == ')', errc::bad_input, "unterminated cycle: " + text);
        ++i;
        skip_ws();
        for (size_t j = 0; j < cyc.size(); ++j)
            p.img[static_cast<size_t>(cyc[j])] = cyc[(j + 1) % cyc.size()];
    }
    check(p.is_valid(), errc::bad_input, "cycles do not define a permutation: " + text);
    return p;
}

// Emit nontrivial cycles only; identity prints as "()".
inline std::string format_cycles(const Perm& p) {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : p.cycles()) {
        if (c.size() < 2) continue;
        any = true;
        os << '(';
        for (size_t j = 0; j < c.size(); ++j) {
            if (j) os << ',';
            os << c[j];
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

} // namespace flatlas
