#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rstirling/monomial.hpp"
#include "rstirling/permutation.hpp"
#include "rstirling/rational.hpp"

namespace rstirling::polyalg {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept strictly descending under the polynomial's monomial order
/// and never store a zero coefficient, so the representation is canonical:
/// two polynomials are equal iff their term vectors are.  The leading term
/// is terms().front().
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coefficient;
    bool operator==(const Term&) const = default;
  };

  explicit Polynomial(int nvars, MonomialOrder order = MonomialOrder::neglex());

  static Polynomial zero(int nvars, MonomialOrder order = MonomialOrder::neglex());
  static Polynomial constant(const Rational& c, int nvars,
                             MonomialOrder order = MonomialOrder::neglex());
  static Polynomial one(int nvars, MonomialOrder order = MonomialOrder::neglex());
  /// x_i (1-based).
  static Polynomial variable(int i, int nvars, MonomialOrder order = MonomialOrder::neglex());
  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1,
                                  MonomialOrder order = MonomialOrder::neglex());
  /// Builds from arbitrary (monomial, coefficient) pairs; merges duplicates.
  static Polynomial from_terms(int nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::neglex());

  int nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// True iff every coefficient is an integer.
  bool is_integral() const;
  /// True iff no variable beyond x_m occurs.
  bool supported_within(int m) const;

  /// Coefficient of m (zero if absent).
  Rational coefficient_of(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  Polynomial scaled(const Rational& c) const;
  /// Multiplication by c * m; order-preserving, O(term count).
  Polynomial times_term(const Monomial& m, const Rational& c) const;

  /// Divides by the content (gcd of numerators over lcm of denominators) and
  /// normalizes the leading coefficient's sign to +1.  Zero stays zero.
  Polynomial primitive_part() const;
  Polynomial monic() const;

  /// Same terms under a different active order.
  Polynomial with_order(MonomialOrder order) const;
  /// Embeds into a larger ambient ring.
  Polynomial extended(int new_nvars) const;
  /// Shrinks the ambient ring; throws DomainError if a dropped variable occurs.
  Polynomial restricted(int new_nvars) const;

  bool operator==(const Polynomial& o) const;

  /// Canonical text: terms sorted neglex-descending, coefficients in lowest
  /// terms, e.g. "x2^2 + 2*x1*x2 - 1/2".
  std::string to_string() const;

 private:
  int nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;  // strictly descending, no zero coefficients

  void check_compatible(const Polynomial& o) const;
};

/// Ring automorphism x_i -> x_{w(i)} (letters beyond w's size are fixed).
Polynomial permute_variables(const combinatorics::Permutation& w, const Polynomial& f);

/// Divided difference (f - s_i f)/(x_i - x_{i+1}); always exact.
Polynomial divided_difference(int i, const Polynomial& f);

/// Elementary symmetric polynomial e_d(x_1..x_m) embedded in nvars variables.
Polynomial elementary(int d, int m, int nvars,
                      MonomialOrder order = MonomialOrder::neglex());

/// Complete homogeneous symmetric polynomial h_d(x_1..x_m) in nvars variables.
Polynomial homogeneous(int d, int m, int nvars,
                       MonomialOrder order = MonomialOrder::neglex());

}  // namespace rstirling::polyalg
