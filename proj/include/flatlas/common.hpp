#pragma once

#include <stdexcept>
#include <string>

namespace flatlas {

// Error codes cover malformed input, violated operation preconditions and
// internal invariant breaches.  The CLI maps these to process exit codes:
// input errors -> 2, surgery preconditions -> 3, internal -> 1.
enum class errc {
    bad_input,         // unparseable text, out-of-range values
    not_transitive,    // origami squares not connected under <r,u>
    duplicate_label,   // diagram label appears twice on one side
    missing_label,     // diagram label absent from one side
    disconnected,      // diagram surface not connected
    no_positive_widths,// cylinder balance equations have no positive solution
    marked_point,      // diagram has an order-0 vertex
    not_simple,        // collapse target cylinder is not simple
    same_zero,         // collapse target cylinder bounds a single zero
    shared_zero_pair,  // pair collapse targets share their boundary-zero pair
    bad_split,         // insert split arithmetic is inconsistent
    not_realizable,    // insert split not realizable at that vertex
    zero_class,        // double cover requested for the trivial class
    not_free,          // quotient requested for a non-free involution
    not_involution,    // quotient map is not an order-two translation
    unsupported_genus, // hyperelliptic test outside genus 2/3
    unknown_case,      // genus-3 diagram fits no registered degeneration case
    internal           // broken internal invariant
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::bad_input: return "BadInput";
    case errc::not_transitive: return "NotTransitive";
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::missing_label: return "MissingLabel";
    case errc::disconnected: return "Disconnected";
    case errc::no_positive_widths: return "NoPositiveWidths";
    case errc::marked_point: return "MarkedPoint";
    case errc::not_simple: return "NotSimple";
    case errc::same_zero: return "SameZero";
    case errc::shared_zero_pair: return "SharedZeroPair";
    case errc::bad_split: return "BadSplit";
    case errc::not_realizable: return "NotRealizable";
    case errc::zero_class: return "ZeroClass";
    case errc::not_free: return "NotFree";
    case errc::not_involution: return "NotInvolution";
    case errc::unsupported_genus: return "UnsupportedGenus";
    case errc::unknown_case: return "UnknownCase";
    case errc::internal: return "Internal";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void check(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

// Internal invariants: violations mean a bug, not bad user input.
inline void invariant(bool cond, const std::string& what) {
    if (!cond) fail(errc::internal, what);
}

} // namespace flatlas
