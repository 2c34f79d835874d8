#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "rstirling/monomial.hpp"
#include "rstirling/polynomial.hpp"

namespace rstirling::groebner {

using polyalg::Monomial;
using polyalg::MonomialHash;
using polyalg::MonomialOrder;
using polyalg::Polynomial;
using polyalg::Rational;

/// Generating set of an ideal together with the monomial order used for
/// all leading-term computations.
struct Ideal {
  std::vector<Polynomial> generators;
  MonomialOrder order;
  int nvars;

  Ideal(std::vector<Polynomial> gens, MonomialOrder ord = MonomialOrder::neglex());
};

/// Reduced Groebner basis of an ideal, its initial-ideal data, and the
/// standard monomial basis of the quotient when it is finite-dimensional.
///
/// normal_form is pure; an internal per-monomial cache makes repeated
/// reductions over the same quotient cheap and is guarded by a mutex, so
/// const access is safe from concurrent threads.
class GroebnerQuotient {
 public:
  GroebnerQuotient(std::vector<Polynomial> reduced_basis, MonomialOrder order, int nvars);

  GroebnerQuotient(GroebnerQuotient&& other) noexcept
      : basis_(std::move(other.basis_)),
        leading_(std::move(other.leading_)),
        standard_(std::move(other.standard_)),
        order_(other.order_),
        nvars_(other.nvars_),
        finite_(other.finite_) {}  // the normal-form cache starts out empty
  GroebnerQuotient(const GroebnerQuotient&) = delete;
  GroebnerQuotient& operator=(const GroebnerQuotient&) = delete;

  const std::vector<Polynomial>& reduced_basis() const { return basis_; }
  /// Minimal monomial generating set of the initial ideal.
  const std::vector<Monomial>& leading_terms() const { return leading_; }
  MonomialOrder order() const { return order_; }
  int nvars() const { return nvars_; }

  bool is_finite_dimensional() const { return finite_; }
  /// Standard monomials sorted ascending in the quotient's order.
  /// Throws UnsupportedError if the quotient is infinite-dimensional.
  const std::vector<Monomial>& standard_monomials() const;

  bool is_standard(const Monomial& m) const;

  /// Unique remainder of f supported on standard monomials; linear in f.
  Polynomial normal_form(const Polynomial& f) const;

  /// Coefficient of q^d counts standard monomials of degree d.
  std::vector<std::int64_t> hilbert_series() const;

 private:
  std::vector<Polynomial> basis_;   // monic, sorted ascending by leading monomial
  std::vector<Monomial> leading_;
  std::vector<Monomial> standard_;
  MonomialOrder order_;
  int nvars_;
  bool finite_ = false;

  Polynomial reduce_cached(const Monomial& m) const;

  mutable std::mutex cache_mu_;
  mutable std::unordered_map<Monomial, std::shared_ptr<const Polynomial>, MonomialHash> nf_cache_;
  static constexpr size_t kCacheCap = 200000;
};

/// Buchberger's algorithm with the normal pair strategy (minimal lcm degree
/// first, ties broken by the order on lcms, then by pair index) and both
/// classical elimination criteria.  Output is the unique reduced basis.
GroebnerQuotient buchberger(const Ideal& ideal);

/// Re-verifies the Buchberger criterion on a computed basis: the
/// S-polynomial of every pair reduces to zero.
bool verify_buchberger_criterion(const GroebnerQuotient& q);

}  // namespace rstirling::groebner
