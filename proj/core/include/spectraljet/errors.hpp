#pragma once

#include <stdexcept>
#include <string>

namespace spectraljet {

/// Bad input: out-of-range index, dimension mismatch, malformed spec.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A request outside what an algorithm supports (degree caps, kernel
/// expansion points, model kinds).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Spectral summation reached its hard cap before the tail bound triggered.
class CutoffError : public std::runtime_error {
public:
  CutoffError(const std::string& what, long cutoff)
      : std::runtime_error(what), cutoff_(cutoff) {}
  long cutoff() const noexcept { return cutoff_; }

private:
  long cutoff_;
};

/// Least-squares fit on a grid that cannot support it.
class FitError : public std::runtime_error {
public:
  FitError(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition_number() const noexcept { return condition_; }

private:
  double condition_;
};

}  // namespace spectraljet
