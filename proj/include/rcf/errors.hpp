#pragma once

#include <stdexcept>
#include <string>

namespace rcf {

/// A documented precondition of an operation does not hold for the input
/// (for example factoring an ideal that is not coprime to the conductor).
class precondition_violation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// The input is valid but outside what the implementation handles.
class unsupported : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A bounded search ended without establishing the answer.
class unresolved : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency identity failed; carries the offending quantity.
class audit_failure : public std::runtime_error {
  public:
    audit_failure(std::string quantity, const std::string & detail)
        : std::runtime_error(quantity + ": " + detail), quantity_(std::move(quantity)) {}
    const std::string & quantity() const noexcept { return quantity_; }

  private:
    std::string quantity_;
};

} // namespace rcf
