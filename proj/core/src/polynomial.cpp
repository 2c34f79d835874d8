#include "rstirling/polynomial.hpp"

#include <algorithm>
#include <map>

namespace rstirling::polyalg {

Polynomial::Polynomial(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {
  if (nvars < 0) throw DomainError("polynomial: negative variable count");
}

Polynomial Polynomial::zero(int nvars, MonomialOrder order) { return Polynomial(nvars, order); }

Polynomial Polynomial::constant(const Rational& c, int nvars, MonomialOrder order) {
  Polynomial p(nvars, order);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::one(int nvars, MonomialOrder order) {
  return constant(1, nvars, order);
}

Polynomial Polynomial::variable(int i, int nvars, MonomialOrder order) {
  if (i < 1 || i > nvars) throw DomainError("polynomial: variable index out of range");
  Monomial m(nvars);
  m[static_cast<size_t>(i - 1)] = 1;
  return from_monomial(m, 1, order);
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c, MonomialOrder order) {
  Polynomial p(m.nvars(), order);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms, MonomialOrder order) {
  struct Greater {
    MonomialOrder o;
    bool operator()(const Monomial& a, const Monomial& b) const { return o.less(b, a); }
  };
  std::map<Monomial, Rational, Greater> acc(Greater{order});
  for (auto& t : terms) {
    if (t.monomial.nvars() != nvars) throw DomainError("polynomial: ambient mismatch in terms");
    acc[t.monomial] += t.coefficient;
  }
  Polynomial p(nvars, order);
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (is_zero()) throw DomainError("leading_term of zero polynomial");
  return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().monomial; }

const Rational& Polynomial::leading_coefficient() const { return leading_term().coefficient; }

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.size() <= 1) return true;
  const int d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

bool Polynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return is_integer(t.coefficient); });
}

bool Polynomial::supported_within(int m) const {
  for (const auto& t : terms_)
    for (int i = m; i < nvars_; ++i)
      if (t.monomial[static_cast<size_t>(i)] != 0) return false;
  return true;
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
  // Terms are descending; binary search.
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [this](const Term& t, const Monomial& key) {
                               return order_.less(key, t.monomial);
                             });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DomainError("polynomial: ambient mismatch");
  if (order_ != o.order_) throw DomainError("polynomial: monomial order mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out(nvars_, order_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t a = 0, b = 0;
  while (a < terms_.size() && b < o.terms_.size()) {
    const auto cmp = order_.compare(terms_[a].monomial, o.terms_[b].monomial);
    if (cmp == std::strong_ordering::greater) {
      out.terms_.push_back(terms_[a++]);
    } else if (cmp == std::strong_ordering::less) {
      out.terms_.push_back(o.terms_[b++]);
    } else {
      Rational c = terms_[a].coefficient + o.terms_[b].coefficient;
      if (c != 0) out.terms_.push_back({terms_[a].monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  out.terms_.insert(out.terms_.end(), terms_.begin() + static_cast<long>(a), terms_.end());
  out.terms_.insert(out.terms_.end(), o.terms_.begin() + static_cast<long>(b), o.terms_.end());
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  *this = *this + o;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  *this = *this - o;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_)
      prods.push_back({s.monomial.times(t.monomial), s.coefficient * t.coefficient});
  return from_terms(nvars_, std::move(prods), order_);
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return zero(nvars_, order_);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coefficient *= c;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return zero(nvars_, order_);
  Polynomial p(*this);
  for (auto& t : p.terms_) {
    t.monomial = t.monomial.times(m);
    t.coefficient *= c;
  }
  return p;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading_coefficient() < 0) content = -content;
  return scaled(1 / content);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coefficient());
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return from_terms(nvars_, terms_, order);
}

Polynomial Polynomial::extended(int new_nvars) const {
  Polynomial out(new_nvars, order_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.monomial.extended(new_nvars), t.coefficient});
  return from_terms(new_nvars, std::move(terms), order_);
}

Polynomial Polynomial::restricted(int new_nvars) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.monomial.restricted(new_nvars), t.coefficient});
  return from_terms(new_nvars, std::move(terms), order_);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_) return false;
  if (order_ == o.order_) return terms_ == o.terms_;
  return terms_ == o.with_order(order_).terms_;
}

std::string Polynomial::to_string() const {
  // Canonical text always sorts neglex-descending regardless of the active order.
  std::vector<Term> terms = terms_;
  if (order_ != MonomialOrder::neglex()) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return neglex_cmp(a.monomial, b.monomial) == std::strong_ordering::greater;
    });
  }
  if (terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    const Rational c = i == 0 ? terms[i].coefficient : abs(terms[i].coefficient);
    if (i > 0) out += terms[i].coefficient < 0 ? " - " : " + ";
    const bool unit = c == 1 || c == -1;
    const bool constant_term = terms[i].monomial.is_one();
    if (!unit || constant_term) {
      out += ::rstirling::polyalg::to_string(c);
      if (!constant_term) out += '*';
    } else if (c == -1) {
      out += '-';
    }
    if (!constant_term) out += terms[i].monomial.to_string();
  }
  return out;
}

Polynomial permute_variables(const combinatorics::Permutation& w, const Polynomial& f) {
  if (w.size() > f.nvars())
    throw DomainError("permute_variables: permutation moves variables beyond the ambient ring");
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Monomial m(f.nvars());
    for (int i = 1; i <= f.nvars(); ++i)
      m[static_cast<size_t>(w(i) - 1)] = t.monomial[static_cast<size_t>(i - 1)];
    terms.push_back({std::move(m), t.coefficient});
  }
  return Polynomial::from_terms(f.nvars(), std::move(terms), f.order());
}

Polynomial divided_difference(int i, const Polynomial& f) {
  if (i < 1 || i >= f.nvars())
    throw DomainError("divided_difference: index out of range");
  // Per-term closed form: for exponents p > q at positions i, i+1,
  // (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1}) =
  //   sum_{t=0}^{p-q-1} x_i^{p-1-t} x_{i+1}^{q+t}; antisymmetric for p < q.
  const size_t a = static_cast<size_t>(i - 1), b = static_cast<size_t>(i);
  std::vector<Polynomial::Term> terms;
  for (const auto& t : f.terms()) {
    const int p = t.monomial[a], q = t.monomial[b];
    if (p == q) continue;
    const int lo = std::min(p, q), hi = std::max(p, q);
    const Rational c = p > q ? t.coefficient : -t.coefficient;
    for (int s = 0; s < hi - lo; ++s) {
      Monomial m = t.monomial;
      m[a] = hi - 1 - s;
      m[b] = lo + s;
      terms.push_back({std::move(m), c});
    }
  }
  return Polynomial::from_terms(f.nvars(), std::move(terms), f.order());
}

}  // namespace rstirling::polyalg
