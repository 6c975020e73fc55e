#pragma once

#include <stdexcept>
#include <string>

namespace faberlab {

enum class ErrorKind {
    Config,     // bad parameters / malformed input
    Sizing,     // grid-size preconditions (power of two, even N, ...)
    Domain,     // evaluation point outside the map's domain
    Branch,     // branch continuation failed (zero sample, arg gap too wide)
    Accuracy,   // an accuracy invariant could not be met (round-trip, two-radius)
    Data,       // non-finite samples, mismatched lengths
    Condition,  // conditions i)-iii) / admissibility window violated under strict mode
    Numeric     // internal numerical failure (Newton divergence, ...)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace faberlab
