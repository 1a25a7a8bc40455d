#pragma once

#include <stdexcept>
#include <string>

namespace insalg {

// Base class for everything thrown by this library.  The CLI maps these to
// exit code 3 (domain errors); config_error is the exception and maps to
// exit code 2 together with command-line usage problems.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word or input string used a symbol that the active alphabet does not declare.
struct unknown_letter : error {
    char letter;
    explicit unknown_letter(char c)
        : error(std::string("unknown letter '") + c + "'"), letter(c) {}
};

// Insertion position outside 0..|y|.
struct position_out_of_range : error {
    using error::error;
};

// Two operands built over different alphabets were combined.
struct alphabet_mismatch : error {
    using error::error;
};

// An adjacency-restricted operation was fed a word that already violates
// the adjacency relation.
struct inadmissible_input : error {
    using error::error;
};

// A weight function was evaluated outside its declared domain, or a
// closed-form formula was called with arguments it is not defined for.
struct out_of_domain : error {
    using error::error;
};

// A brute-force enumeration bound exceeds what this build is willing to do.
struct bound_too_large : error {
    using error::error;
};

// An exhaustive identity check would visit more tuples than the configured
// ceiling.  Carries the estimate so callers can report it.
struct search_space_too_large : error {
    std::string estimated_tuples;
    explicit search_space_too_large(std::string estimate)
        : error("estimated search space of " + estimate +
                " tuples exceeds the configured ceiling"),
          estimated_tuples(std::move(estimate)) {}
};

// Malformed textual input (coefficients, polynomials, words).
struct parse_error : error {
    using error::error;
};

// Bad configuration: invalid alphabets, unreadable or inconsistent data
// files, contradictory options.  CLI exit code 2.
struct config_error : error {
    using error::error;
};

} // namespace insalg
