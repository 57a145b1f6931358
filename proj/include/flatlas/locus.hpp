#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/stratum.hpp"

namespace flatlas {

// A locus descriptor: either a plain stratum, or a locus of double covers
// described by the signature of its base ("H~" over an abelian base, "Q~"
// over a quadratic base).  The dimension of a cover locus equals the
// dimension of its base stratum.
struct LocusDescriptor {
    enum class Kind { stratum, abelian_cover, quadratic_cover };
    Kind kind = Kind::stratum;
    StratumSignature base;
};

inline LocusDescriptor parse_locus(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    check(i < text.size(), errc::bad_input, "empty locus descriptor");
    char head = text[i];
    check(head == 'H' || head == 'Q', errc::bad_input, "locus descriptor must start with H or Q");
    ++i;
    bool tilde = i < text.size() && text[i] == '~';
    if (tilde) ++i;
    std::string rest = text.substr(i);
    LocusDescriptor ld;
    if (head == 'H' && !tilde) {
        ld.kind = LocusDescriptor::Kind::stratum;
        ld.base = parse_stratum("H" + rest);
    } else if (head == 'H') {
        ld.kind = LocusDescriptor::Kind::abelian_cover;
        ld.base = parse_stratum("H" + rest);
    } else {
        ld.kind = LocusDescriptor::Kind::quadratic_cover;
        ld.base = parse_stratum("Q" + rest);
    }
    return ld;
}

inline std::string locus_to_string(const LocusDescriptor& ld) {
    std::string s = ld.base.to_string();
    if (ld.kind == LocusDescriptor::Kind::abelian_cover || ld.kind == LocusDescriptor::Kind::quadratic_cover)
        s.insert(1, "~");
    return s;
}

inline int locus_dimension(const LocusDescriptor& ld) { return ld.base.dimension(); }

// Adjacent degenerations among the rank-two cover loci and their boundary
// strata, each step dropping the dimension by one.
struct LocusEdge {
    std::string from, to;
};

inline const std::vector<LocusEdge>& locus_poset_edges() {
    static const std::vector<LocusEdge> edges = {
        {"Q~(3,-1^3)", "Q~(2,1,-1^3)"},  {"Q~(3,-1^3)", "Q~(4,-1^4)"},
        {"Q~(2,1,-1^3)", "Q~(2^2,-1^4)"}, {"Q~(4,-1^4)", "Q~(2^2,-1^4)"},
        {"Q~(1^2,-1^2)", "Q~(2,1,-1^3)"}, {"Q~(1^2,-1^2)", "H~(1,1)"},
        {"H~(2)", "H~(1,1)"},
    };
    return edges;
}

} // namespace flatlas
