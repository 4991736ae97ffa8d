#pragma once

#include <stdexcept>
#include <string>

namespace cartdom {

// Malformed textual input (graph files, partition files, certificates).
// The message names the offending line or byte.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A caller handed an operation a value that fails the operation's stated
// precondition (e.g. a partition that does not pass its checker).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cartdom
