#ifndef CROSSPLANE_ERRORS_HPP
#define CROSSPLANE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crossplane {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed; carries the 1-based offending line.
struct parse_error : error {
    parse_error(int line_, const std::string& what_)
        : error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

// A precondition or size limit was violated; the operation refuses to run.
struct refusal_error : error {
    using error::error;
};

// A drawing violates a geometric invariant (vertex on a non-incident edge).
struct degeneracy_error : error {
    using error::error;
};

} // namespace crossplane

#endif
