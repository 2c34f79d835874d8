#pragma once

#include <stdexcept>
#include <string>

namespace rstirling {

/// Invalid (n, k, r) triple or other malformed construction request.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Well-formed parameters, but the argument lies outside the operation's domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A verification op was asked to run beyond its configured size budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The requested computation is not defined for this object
/// (e.g. Hilbert series of an infinite-dimensional quotient).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameter triple r <= k <= n governing every construction.
///
/// n is the ground-set size, k the block count, r the Stirling restriction
/// (letters 1..r must occupy distinct blocks).  r = 0 is admitted and makes
/// the restriction vacuous.
struct Parameters {
  int n;
  int k;
  int r;

  Parameters(int n_, int k_, int r_) : n(n_), k(k_), r(r_) {
    if (n < 1) throw ParameterError("parameters: n must be positive");
    if (k < 1) throw ParameterError("parameters: k must be positive");
    if (r < 0) throw ParameterError("parameters: r must be nonnegative");
    if (!(r <= k && k <= n))
      throw ParameterError("parameters: need r <= k <= n, got (n=" + std::to_string(n) +
                           ", k=" + std::to_string(k) + ", r=" + std::to_string(r) + ")");
  }

  bool operator==(const Parameters&) const = default;

  std::string to_string() const {
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", r=" + std::to_string(r) + ")";
  }
};

}  // namespace rstirling
