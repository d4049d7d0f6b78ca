#pragma once

#include <stdexcept>
#include <string>

namespace modcanon {

/// Input that violates an operation's precondition (empty set, bad level, out-of-range vertex).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text in one of the graph or canon file formats.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural guarantee of the decomposition was violated. Indicates a bug, never bad input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The graph lies outside the class the canonizer supports: some prime quotient has no realizer.
class unsupported_class : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An oracle was asked to certify a graph beyond its exhaustive-search range.
class size_guard_error : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace modcanon
