#pragma once

#include <stdexcept>
#include <string>

namespace cyclespec {

/// A parameter violates a mathematical precondition (excluded shift, pole, bad modulus).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The evaluation point sits on (or within tolerance of) a pole of a resolvent.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, long index) : DomainError(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// Two independent evaluation routes disagree beyond their combined budget.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclespec
