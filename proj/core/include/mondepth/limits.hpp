#ifndef MONDEPTH_LIMITS_HPP
#define MONDEPTH_LIMITS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mondepth {

/// Resource ceilings for the potentially explosive computations. Exceeding a
/// ceiling raises ResourceLimitError; it never produces a wrong answer.
struct ResourceLimits {
  std::size_t max_closure = 500000;       // lcm-closure vectors
  std::size_t max_basis = 200000;         // completion set size
  std::size_t max_candidates = 8000000;   // completion queue pushes
  std::size_t max_enumeration = 8000000;  // monomial / subset enumerations
  std::size_t max_recursion = 20000;      // Hilbert recursion depth

  static const ResourceLimits& defaults() {
    static const ResourceLimits d{};
    return d;
  }
};

class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::string limit, const std::string& detail)
      : std::runtime_error("resource ceiling exceeded (" + limit + "): " + detail),
        limit_(std::move(limit)) {}
  const std::string& limit() const { return limit_; }

 private:
  std::string limit_;
};

/// Rees gradings (h-vector, analytic spread as exponent-matrix rank) are only
/// defined when all minimal generators share one total degree.
class NotEquigeneratedError : public std::invalid_argument {
 public:
  explicit NotEquigeneratedError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raised when a certified-hypothesis run contradicts the constant-depth
/// criterion; this is an internal invariant violation, never a verdict.
class TheoremViolationError : public std::logic_error {
 public:
  explicit TheoremViolationError(const std::string& what)
      : std::logic_error(what) {}
};

}

#endif
