#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rstirling/parameters.hpp"

namespace rstirling::polyalg {

/// Dense exponent vector of fixed length (the ambient variable count).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {}
  explicit Monomial(std::vector<int> exponents);

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const;
  /// Exponent of x_{i+1} (0-based index).
  int operator[](size_t i) const { return e_[i]; }
  int& operator[](size_t i) { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  /// Exact quotient; throws DomainError if not divisible.
  Monomial quotient_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Embeds into a larger ambient ring (extra exponents zero).
  Monomial extended(int new_nvars) const;
  /// Shrinks the ambient ring; throws DomainError if a dropped exponent is nonzero.
  Monomial restricted(int new_nvars) const;

  bool operator==(const Monomial&) const = default;
  /// Structural order (plain lexicographic on the exponent vector); used for
  /// canonical containers, not as a monomial order.
  auto operator<=>(const Monomial& o) const { return e_ <=> o.e_; }

  /// "x1^2*x2" style; "1" for the empty product.
  std::string to_string() const;

 private:
  std::vector<int> e_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull;
    for (int v : m.exponents()) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Pluggable monomial order.  neglex is the order every construction in the
/// library uses; lex is provided for cross-checks.
class MonomialOrder {
 public:
  enum class Kind { neglex, lex };

  constexpr MonomialOrder() : kind_(Kind::neglex) {}
  constexpr explicit MonomialOrder(Kind k) : kind_(k) {}

  static constexpr MonomialOrder neglex() { return MonomialOrder(Kind::neglex); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::lex); }

  Kind kind() const { return kind_; }
  const char* name() const { return kind_ == Kind::neglex ? "neglex" : "lex"; }

  /// Strict comparison; throws DomainError on ambient length mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  Kind kind_;
};

/// neglex: a < b iff a_i < b_i at the last index where they differ.
std::strong_ordering neglex_cmp(const Monomial& a, const Monomial& b);

}  // namespace rstirling::polyalg
