#pragma once

#include <stdexcept>
#include <string>

namespace ndelta {

/// Input outside an operation's domain (n = 0, non-prime where a prime is
/// required, malformed graph, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value would exceed the word-size ceiling.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// An identity that must hold by construction failed. Always a bug.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ndelta
