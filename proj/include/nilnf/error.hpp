#pragma once

#include <stdexcept>
#include <string>

namespace nilnf {

/// Raised for inputs outside an operation's domain (bad type, partition, label).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency certificate fails (bad sign
/// convention, inconsistent linear system, non-integral eigenvalue).
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nilnf
