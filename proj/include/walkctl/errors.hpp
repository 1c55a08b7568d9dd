#pragma once

#include <stdexcept>
#include <string>

namespace walkctl {

/// Malformed or out-of-range input (graph6 text, subsets, system specs).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size bound was exceeded (automorphism search, subset
/// enumeration, algebra basis check).
class GuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Two routes that must always agree did not. Always an implementation
/// bug; callers must not swallow it.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace walkctl
