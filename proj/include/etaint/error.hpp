#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etaint {

/// Argument outside the domain of a function or identity.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation exactly at a pole (hurwitz_zeta at s = 1).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or quadrature ran out of its term/evaluation budget.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested truncation tolerance cannot be met within the term budget.
class ToleranceUnreachable : public NonConvergence {
 public:
  using NonConvergence::NonConvergence;
};

/// Rejects NaN and infinities; returns x unchanged otherwise.
double require_finite(double x, std::string_view what);

}  // namespace etaint
