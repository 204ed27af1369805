#pragma once

#include <stdexcept>
#include <string>

namespace lcsrate {

/// Malformed caller input: bad letters, invalid alignments, unparsable files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the domain of a closed-form quantity.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exhaustive enumeration was asked to exceed its size guard.
class GuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace lcsrate
