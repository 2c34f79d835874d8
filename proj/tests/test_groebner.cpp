#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "rstirling/coinversion.hpp"
#include "rstirling/demazure.hpp"
#include "rstirling/enumeration.hpp"
#include "rstirling/groebner.hpp"
#include "rstirling/stirling_ideal.hpp"
#include "rstirling/text.hpp"

using namespace rstirling;
using namespace rstirling::polyalg;
using namespace rstirling::groebner;
using rstirling::rings::build_ideal;
using rstirling::rings::stirling_quotient;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Polynomial random_polynomial(std::mt19937& rng, int nvars, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> term_count(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Polynomial::Term> terms;
  const int t = term_count(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m(nvars);
    for (int v = 0; v < nvars; ++v) m[static_cast<size_t>(v)] = exp(rng);
    terms.push_back({m, coeff(rng)});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace

TEST_CASE("buchberger on monomial and coinvariant toy ideals") {
  {
    const Ideal ideal({Polynomial::variable(1, 2), Polynomial::variable(2, 2)});
    const auto q = buchberger(ideal);
    REQUIRE(q.reduced_basis().size() == 2);
    CHECK(q.reduced_basis()[0].to_string() == "x1");
    CHECK(q.reduced_basis()[1].to_string() == "x2");
    CHECK(q.standard_monomials() == std::vector<Monomial>{mono({0, 0})});
    CHECK(q.hilbert_series() == std::vector<std::int64_t>{1});
  }
  {
    // Coinvariants in two variables: <e_1, e_2>; neglex leading terms are
    // x2 and (after reduction) x1^2, so {1, x1} is the standard basis.
    const Ideal ideal({elementary(1, 2, 2), elementary(2, 2, 2)});
    const auto q = buchberger(ideal);
    REQUIRE(q.reduced_basis().size() == 2);
    CHECK(q.reduced_basis()[0].to_string() == "x1^2");
    CHECK(q.reduced_basis()[1].to_string() == "x2 + x1");
    CHECK(q.standard_monomials() == std::vector<Monomial>{mono({0, 0}), mono({1, 0})});
  }
  {
    const Ideal ideal({Polynomial::from_monomial(mono({2, 0}), 1)});
    const auto q = buchberger(ideal);
    CHECK(q.leading_terms() == std::vector<Monomial>{mono({2, 0})});
    CHECK(!q.is_finite_dimensional());
    CHECK_THROWS_AS(q.hilbert_series(), UnsupportedError);
    CHECK_THROWS_AS(q.standard_monomials(), UnsupportedError);
  }
  CHECK_THROWS_AS(Ideal({}), DomainError);
  CHECK_THROWS_AS(Ideal({Polynomial::zero(2)}), DomainError);
}

TEST_CASE("defining ideal quotient for (4,3,2)") {
  const auto q = stirling_quotient(Parameters(4, 3, 2));
  CHECK(q->standard_monomials().size() == 30);
  CHECK(q->hilbert_series() == std::vector<std::int64_t>{1, 4, 8, 9, 6, 2});
  CHECK(verify_buchberger_criterion(*q));

  // Initial ideal: x1^3, x2^2 from the homogeneous family, x3^3, x4^3, and
  // x3*x4, the single reverse skip monomial not already dominated.
  std::vector<Monomial> expected = {
      mono({3, 0, 0, 0}), mono({0, 2, 0, 0}), mono({0, 0, 3, 0}), mono({0, 0, 0, 3}),
      mono({0, 0, 1, 1})};
  auto got = q->leading_terms();
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

TEST_CASE("initial ideal of the defining ideal matches the staircase pattern") {
  // Leading terms are x_i^{k-i+1} for i <= r, x_i^k for i > r, plus the
  // undominated reverse skip monomials of subsets of size n-k+1.
  for (const Parameters& p : {Parameters(3, 2, 1), Parameters(4, 2, 2), Parameters(4, 4, 4),
                              Parameters(5, 3, 2), Parameters(5, 4, 0)}) {
    const auto q = stirling_quotient(p);
    std::vector<Monomial> expected;
    for (int i = 1; i <= p.n; ++i) {
      Monomial m(p.n);
      m[static_cast<size_t>(i - 1)] = i <= p.r ? p.k - i + 1 : p.k;
      expected.push_back(m);
    }
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(subset.size()) == p.n - p.k + 1) {
        const auto gs = combinatorics::reverse_skip(subset, p.n);
        Monomial m(p.n);
        for (int i = 0; i < p.n; ++i) m[static_cast<size_t>(i)] = gs[static_cast<size_t>(i)];
        expected.push_back(m);
        return;
      }
      for (int v = start; v <= p.n; ++v) {
        subset.push_back(v);
        self(self, v + 1);
        subset.pop_back();
      }
    };
    rec(rec, 1);
    // Keep only the minimal monomials.
    std::vector<Monomial> minimal;
    for (size_t i = 0; i < expected.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < expected.size() && !redundant; ++j)
        if (i != j && expected[j].divides(expected[i]) &&
            (expected[j] != expected[i] || j < i))
          redundant = true;
      if (!redundant) minimal.push_back(expected[i]);
    }
    std::sort(minimal.begin(), minimal.end());
    auto got = q->leading_terms();
    std::sort(got.begin(), got.end());
    CHECK(got == minimal);
  }
}

TEST_CASE("classical coinvariants: standard basis below the staircase") {
  const auto q = stirling_quotient(Parameters(3, 3, 3));
  auto standard = q->standard_monomials();
  std::vector<Monomial> expected;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 1; ++b) expected.push_back(mono({a, b, 0}));
  std::sort(standard.begin(), standard.end());
  std::sort(expected.begin(), expected.end());
  CHECK(standard == expected);

  // Hilbert series of the full coinvariant quotient is the q-factorial.
  CHECK(stirling_quotient(Parameters(2, 2, 2))->hilbert_series() ==
        std::vector<std::int64_t>{1, 1});
  CHECK(stirling_quotient(Parameters(3, 3, 3))->hilbert_series() ==
        std::vector<std::int64_t>{1, 2, 2, 1});
  CHECK(stirling_quotient(Parameters(4, 4, 4))->hilbert_series() ==
        std::vector<std::int64_t>{1, 3, 5, 6, 5, 3, 1});
}

TEST_CASE("normal forms") {
  const auto q = stirling_quotient(Parameters(4, 3, 2));

  for (const auto& m : q->standard_monomials())
    CHECK(q->normal_form(Polynomial::from_monomial(m, 1)) == Polynomial::from_monomial(m, 1));

  for (const auto& g : build_ideal(Parameters(4, 3, 2)).all_generators())
    CHECK(q->normal_form(g).is_zero());

  // Key polynomials of reverse skip compositions lie in the ideal.
  std::vector<int> subset;
  auto rec = [&](auto&& self, int start) -> void {
    if (subset.size() == 2) {
      CHECK(q->normal_form(demazure(combinatorics::reverse_skip(subset, 4))).is_zero());
      return;
    }
    for (int v = start; v <= 4; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  rec(rec, 1);

  // Idempotence, linearity, multiplicativity.
  std::mt19937 rng(123);
  for (int iter = 0; iter < 30; ++iter) {
    const Polynomial f = random_polynomial(rng, 4, 5, 3);
    const Polynomial g = random_polynomial(rng, 4, 5, 3);
    const Polynomial nf = q->normal_form(f);
    const Polynomial ng = q->normal_form(g);
    CHECK(q->normal_form(nf) == nf);
    CHECK(q->normal_form(f + g) == nf + ng);
    CHECK(q->normal_form(f.scaled(Rational(3, 7))) == nf.scaled(Rational(3, 7)));
    CHECK(q->normal_form(f * g) == q->normal_form(nf * ng));
  }
}

TEST_CASE("buchberger criterion re-verified on defining ideals") {
  for (const Parameters& p :
       {Parameters(3, 2, 1), Parameters(4, 3, 0), Parameters(4, 4, 2), Parameters(5, 3, 3)}) {
    CHECK(verify_buchberger_criterion(*stirling_quotient(p)));
  }
}

TEST_CASE("reduced basis shape: monic, mutually irreducible") {
  for (const Parameters& p : {Parameters(4, 3, 2), Parameters(5, 3, 0), Parameters(4, 4, 4)}) {
    const auto& basis = stirling_quotient(p)->reduced_basis();
    for (size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].leading_coefficient() == 1);
      for (size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (const auto& term : basis[i].terms())
          CHECK(!basis[j].leading_monomial().divides(term.monomial));
      }
    }
  }
}

TEST_CASE("reduced basis serialization matches the golden file") {
  std::ifstream golden(std::string(RSTIRLING_GOLDEN_DIR) + "/groebner_basis_3_2_1.txt");
  REQUIRE(golden.good());
  std::string line;
  std::vector<std::string> expected;
  while (std::getline(golden, line)) expected.push_back(line);

  std::vector<std::string> got;
  for (const auto& g : stirling_quotient(Parameters(3, 2, 1))->reduced_basis())
    got.push_back(g.to_string());
  CHECK(got == expected);
}
