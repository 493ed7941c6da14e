#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chibound {

/// Invalid graph construction or vertex argument.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 or edge-list input. `offset` is the byte position of the fault.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("byte " + std::to_string(offset) + ": " + what), offset_(offset)
    {
    }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An operation was called on an input outside its domain
/// (e.g. matching-based chi on a graph containing 3K1).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A construction's self-check disagreed with its expected invariants.
class SelfCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace chibound
