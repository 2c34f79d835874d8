#include "rstirling/verification.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "rstirling/coinversion.hpp"
#include "rstirling/demazure.hpp"
#include "rstirling/schubert.hpp"

namespace rstirling::rings {

using combinatorics::coinversion_code;
using combinatorics::for_each_code;
using combinatorics::for_each_partition;
using combinatorics::for_each_word;
using combinatorics::OrderedSetPartition;
using combinatorics::reverse_skip;
using polyalg::demazure;
using polyalg::Monomial;
using polyalg::Polynomial;
using polyalg::Rational;
using polyalg::word_schubert;

void VerifyOptions::check_groebner(const Parameters& p) const {
  if (!force && p.n > max_groebner_n)
    throw BudgetError("Groebner-backed verification for n = " + std::to_string(p.n) +
                      " exceeds the size budget n <= " + std::to_string(max_groebner_n) +
                      " (pass force to override)");
}

void VerifyOptions::check_character(const Parameters& p) const {
  check_groebner(p);
  if (!force && p.n > max_character_n)
    throw BudgetError("character verification for n = " + std::to_string(p.n) +
                      " exceeds the size budget n <= " + std::to_string(max_character_n) +
                      " (pass force to override)");
}

namespace {

Monomial monomial_from_code(std::span<const int> code) {
  Monomial m(static_cast<int>(code.size()));
  for (size_t i = 0; i < code.size(); ++i) m[i] = code[i];
  return m;
}

void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> subset(static_cast<size_t>(size));
  auto rec = [&](auto&& self, int depth, int start) -> void {
    if (depth == size) {
      visit(subset);
      return;
    }
    for (int v = start; v <= n - (size - depth - 1); ++v) {
      subset[static_cast<size_t>(depth)] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
}

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

StandardBasisReport verify_standard_basis(const Parameters& p, const VerifyOptions& opt) {
  opt.check_groebner(p);
  StandardBasisReport report{p, false, 0, {}, {}};

  std::vector<Monomial> from_codes;
  for_each_code(p, [&](std::span<const int> code) { from_codes.push_back(monomial_from_code(code)); });
  std::sort(from_codes.begin(), from_codes.end());

  auto quotient = stirling_quotient(p);
  std::vector<Monomial> from_groebner = quotient->standard_monomials();
  std::sort(from_groebner.begin(), from_groebner.end());

  std::set_difference(from_codes.begin(), from_codes.end(), from_groebner.begin(),
                      from_groebner.end(), std::back_inserter(report.missing_from_groebner));
  std::set_difference(from_groebner.begin(), from_groebner.end(), from_codes.begin(),
                      from_codes.end(), std::back_inserter(report.extra_in_groebner));
  report.equal = report.missing_from_groebner.empty() && report.extra_in_groebner.empty();
  report.count = from_codes.size();
  return report;
}

HilbertReport verify_hilbert_series(const Parameters& p, const VerifyOptions& opt) {
  opt.check_groebner(p);
  HilbertReport report{p, {}, {}, false};
  report.groebner_series = stirling_quotient(p)->hilbert_series();

  for_each_code(p, [&](std::span<const int> code) {
    int d = 0;
    for (int c : code) d += c;
    if (static_cast<size_t>(d) >= report.coinv_series.size())
      report.coinv_series.resize(static_cast<size_t>(d) + 1, 0);
    ++report.coinv_series[static_cast<size_t>(d)];
  });
  report.equal = trimmed(report.groebner_series) == trimmed(report.coinv_series);
  return report;
}

SchubertCertificate schubert_basis_certificate(const Parameters& p, const VerifyOptions& opt) {
  opt.check_groebner(p);
  if (!opt.force && p.n > opt.max_character_n)
    throw BudgetError("schubert_basis_certificate: n exceeds the certificate budget n <= " +
                      std::to_string(opt.max_character_n) + " (pass force to override)");
  SchubertCertificate cert{p, true, true, {}, {}, ""};

  auto quotient = stirling_quotient(p);
  const auto& standard = quotient->standard_monomials();
  std::map<int, std::vector<Monomial>> standard_by_degree;
  for (const auto& m : standard) standard_by_degree[m.degree()].push_back(m);

  // Rows: normal forms of word Schubert polynomials, grouped by degree.
  std::map<int, std::vector<std::pair<Word, Polynomial>>> rows;
  for_each_word(p, [&](const Word& w) {
    Polynomial s = word_schubert(w, p);
    rows[s.degree() < 0 ? 0 : s.degree()].push_back({w, quotient->normal_form(s)});
  });

  for (auto& [d, group] : rows) {
    auto it = standard_by_degree.find(d);
    const size_t cols = it == standard_by_degree.end() ? 0 : it->second.size();
    if (group.size() != cols) {
      cert.ok = false;
      cert.change_of_basis.all_square = false;
      cert.change_of_basis.unimodular = false;
      cert.failure = "degree " + std::to_string(d) + " block is " +
                     std::to_string(group.size()) + " words by " + std::to_string(cols) +
                     " standard monomials";
      return cert;
    }
  }
  for (const auto& [d, mons] : standard_by_degree) {
    if (!rows.count(d) && !mons.empty()) {
      cert.ok = false;
      cert.change_of_basis.all_square = false;
      cert.failure = "no words of codimension " + std::to_string(d) + " but " +
                     std::to_string(mons.size()) + " standard monomials";
      return cert;
    }
  }

  for (auto& [d, group] : rows) {
    const auto& mons = standard_by_degree[d];
    IntMatrix block(static_cast<int>(group.size()), static_cast<int>(mons.size()));
    for (size_t i = 0; i < group.size(); ++i) {
      const Polynomial& nf = group[i].second;
      // The ideal is homogeneous, so the normal form must stay in degree d;
      // anything else would silently fall outside the block columns.
      if (!nf.is_homogeneous() || (!nf.is_zero() && nf.degree() != d)) {
        cert.ok = false;
        cert.failure = "normal form of word " + group[i].first.to_string() +
                       " leaves its degree block";
        return cert;
      }
      for (size_t j = 0; j < mons.size(); ++j) {
        const Rational c = nf.coefficient_of(mons[j]);
        if (!polyalg::is_integer(c)) {
          cert.ok = false;
          cert.integral = false;
          cert.failure = "non-integer coefficient " + polyalg::to_string(c) + " for word " +
                         group[i].first.to_string();
          return cert;
        }
        block.at(static_cast<int>(i), static_cast<int>(j)) = c.get_num();
      }
    }
    Integer det = determinant(block);
    cert.change_of_basis.determinants[d] = det;
    if (det != 1 && det != -1) {
      cert.ok = false;
      cert.change_of_basis.unimodular = false;
      cert.snf_diagnostics[d] = smith_normal_form_diagonal(block);
      cert.failure = "degree " + std::to_string(d) + " determinant is " + polyalg::to_string(det);
    }
    cert.change_of_basis.blocks[d] = std::move(block);
  }
  return cert;
}

DemazureReport demazure_membership(const Parameters& p, const VerifyOptions& opt) {
  opt.check_groebner(p);
  DemazureReport report{p, true, 0, {}};
  auto quotient = stirling_quotient(p);

  for_each_subset(p.n, p.n - p.k + 1, [&](const std::vector<int>& subset) {
    ++report.subsets_checked;
    const std::vector<int> gamma_star = reverse_skip(subset, p.n);
    const Polynomial kappa = demazure(gamma_star);
    const Monomial expected_lead = monomial_from_code(gamma_star);

    std::string subset_text;
    for (size_t t = 0; t < subset.size(); ++t)
      subset_text += (t ? "," : "") + std::to_string(subset[t]);

    if (kappa.is_zero() || kappa.leading_monomial() != expected_lead ||
        kappa.leading_coefficient() != 1) {
      report.ok = false;
      report.failures.push_back("S={" + subset_text + "}: leading term of the key polynomial is " +
                                (kappa.is_zero() ? std::string("0")
                                                 : kappa.leading_monomial().to_string()) +
                                ", expected " + expected_lead.to_string());
    }
    if (!quotient->normal_form(kappa).is_zero()) {
      report.ok = false;
      report.failures.push_back("S={" + subset_text + "}: key polynomial is not in the ideal");
    }
  });
  return report;
}

Permutation embed_pair(const Permutation& w1, const Permutation& w2, int n) {
  const int r = w1.size();
  if (r + w2.size() != n) throw DomainError("embed_pair: ranks must satisfy r + (n-r) = n");
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= r; ++i) img[static_cast<size_t>(i - 1)] = w1(i);
  for (int i = 1; i <= w2.size(); ++i) img[static_cast<size_t>(r + i - 1)] = r + w2(i);
  return Permutation(std::move(img));
}

namespace {

// Stability of the ideal under S_r x S_{n-r} is checked once per triple,
// through the subgroup's adjacent-transposition generators.
bool ideal_stable(const Parameters& p) {
  static std::mutex mu;
  static std::set<std::tuple<int, int, int>> verified;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (verified.count({p.n, p.k, p.r})) return true;
  }
  auto quotient = stirling_quotient(p);
  const auto generators = build_ideal(p).all_generators();
  std::vector<Permutation> moves;
  for (int i = 1; i < p.r; ++i) moves.push_back(Permutation::identity(p.n).swap_positions(i));
  for (int i = p.r + 1; i < p.n; ++i) moves.push_back(Permutation::identity(p.n).swap_positions(i));
  for (const auto& u : moves)
    for (const auto& g : generators)
      if (!quotient->normal_form(permute_variables(u, g)).is_zero()) return false;
  std::lock_guard<std::mutex> lock(mu);
  verified.insert({p.n, p.k, p.r});
  return true;
}

}  // namespace

bool verify_ideal_stability(const Parameters& p, const VerifyOptions& opt) {
  opt.check_groebner(p);
  return ideal_stable(p);
}

std::vector<std::int64_t> graded_traces(const Permutation& u, const Parameters& p,
                                        const VerifyOptions& opt) {
  opt.check_character(p);
  if (u.size() != p.n) throw DomainError("graded_traces: permutation must lie in S_n");
  if (!ideal_stable(p))
    throw DomainError("graded_traces: ideal is not stable under the group action");

  auto quotient = stirling_quotient(p);
  const auto& standard = quotient->standard_monomials();

  int maxdeg = 0;
  for (const auto& m : standard) maxdeg = std::max(maxdeg, m.degree());
  std::vector<Rational> traces(static_cast<size_t>(maxdeg) + 1, 0);
  for (const auto& m : standard) {
    const Polynomial image =
        quotient->normal_form(permute_variables(u, Polynomial::from_monomial(m, 1)));
    traces[static_cast<size_t>(m.degree())] += image.coefficient_of(m);
  }
  std::vector<std::int64_t> out;
  for (const auto& t : traces) {
    if (!polyalg::is_integer(t))
      throw DomainError("graded_traces: non-integer graded trace " + polyalg::to_string(t));
    out.push_back(t.get_num().get_si());
  }
  return out;
}

std::vector<std::int64_t> character_trace(const Permutation& w1, const Permutation& w2,
                                          const Parameters& p, const VerifyOptions& opt) {
  if (w1.size() != p.r || w2.size() != p.n - p.r)
    throw DomainError("character_trace: expected ranks (r, n-r) = (" + std::to_string(p.r) + ", " +
                      std::to_string(p.n - p.r) + ")");
  return graded_traces(embed_pair(w1, w2, p.n), p, opt);
}

std::int64_t fixed_partition_count(const Permutation& w1, const Permutation& w2,
                                   const Parameters& p) {
  const Permutation u = embed_pair(w1, w2, p.n);
  std::int64_t count = 0;
  for_each_partition(p, [&](const OrderedSetPartition& sigma) {
    std::vector<std::vector<int>> relabeled;
    for (const auto& block : sigma.blocks()) {
      std::vector<int> image;
      for (int x : block) image.push_back(u(x));
      relabeled.push_back(std::move(image));
    }
    if (OrderedSetPartition(std::move(relabeled)) == sigma) ++count;
  });
  return count;
}

ChevalleyReport verify_chevalley(const Parameters& p, const VerifyOptions& opt) {
  opt.check_character(p);
  ChevalleyReport report{p, true, 0, {}};
  const auto group1 = combinatorics::all_permutations(p.r);
  const auto group2 = combinatorics::all_permutations(p.n - p.r);
  for (const auto& w1 : group1) {
    for (const auto& w2 : group2) {
      ++report.pairs_checked;
      const auto traces = character_trace(w1, w2, p, opt);
      std::int64_t total = 0;
      for (auto t : traces) total += t;
      const std::int64_t fixed = fixed_partition_count(w1, w2, p);
      if (total != fixed) {
        report.ok = false;
        report.failures.push_back("(" + w1.to_string() + ", " + w2.to_string() + "): trace " +
                                  std::to_string(total) + " != fixed points " +
                                  std::to_string(fixed));
      }
    }
  }
  return report;
}

Word increasing_word_missing(int i, const Parameters& p) {
  if (p.k < 2) throw DomainError("increasing_word_missing: no word exists for k < 2");
  if (i < 1 || i > p.k) throw DomainError("increasing_word_missing: need 1 <= i <= k");
  Word w;
  for (int a = 1; a <= p.k; ++a)
    if (a != i) w.letters.push_back(a);
  while (w.size() < p.n) w.letters.push_back(w.letters.back());
  return w;
}

Word increasing_word_doubled(int i, const Parameters& p) {
  if (p.k >= p.n) throw DomainError("increasing_word_doubled: needs k < n");
  if (i < 1 || i > p.k - 1) throw DomainError("increasing_word_doubled: need 1 <= i <= k-1");
  Word w;
  for (int a = 1; a <= i; ++a) w.letters.push_back(a);
  w.letters.push_back(i);
  for (int a = i + 1; a <= p.k - 1; ++a) w.letters.push_back(a);
  while (w.size() < p.n) w.letters.push_back(p.k);
  return w;
}

GeneratorIdentityReport verify_generator_identities(const Parameters& p,
                                                    const VerifyOptions& opt) {
  opt.check_groebner(p);
  GeneratorIdentityReport report{p, true, 0, {}};
  // No missing-letter word exists over a one-letter alphabet.
  for (int i = 1; p.k >= 2 && i <= p.k; ++i) {
    ++report.checked;
    const Word w = increasing_word_missing(i, p);
    const Polynomial lhs = word_schubert(w, p);
    const Polynomial rhs = polyalg::elementary(p.n - i + 1, p.n, p.n);
    if (!(lhs == rhs)) {
      report.ok = false;
      report.failures.push_back("missing-letter word " + w.to_string() +
                                ": Schubert polynomial differs from e_" +
                                std::to_string(p.n - i + 1));
    }
  }
  if (p.k < p.n) {
    for (int i = 1; i <= p.r - 1; ++i) {
      ++report.checked;
      const Word v = increasing_word_doubled(i, p);
      const Polynomial lhs = word_schubert(v, p);
      const Polynomial rhs = polyalg::homogeneous(p.k - i, i + 1, p.n);
      if (!(lhs == rhs)) {
        report.ok = false;
        report.failures.push_back("doubled-letter word " + v.to_string() +
                                  ": Schubert polynomial differs from h_" +
                                  std::to_string(p.k - i));
      }
    }
  }
  return report;
}

namespace {

std::vector<std::int64_t> series_product(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TensorProbeReport tensor_conjecture_probe(const Parameters& p, const VerifyOptions& opt) {
  opt.check_character(p);
  TensorProbeReport report{p, {}, {}, false, true};
  report.lhs = trimmed(stirling_quotient(p)->hilbert_series());

  // Hilb(R_r):  classical coinvariants, computed through the same pipeline.
  std::vector<std::int64_t> coinvariant_series{1};
  if (p.r >= 1) coinvariant_series = stirling_quotient(Parameters(p.r, p.r, p.r))->hilbert_series();

  // Graded dimension of the antisymmetrized component of R_{n,k}: averaged
  // signed trace (1/r!) sum_w sign(w) tr(w x id) by degree.
  const Parameters base(p.n, p.k, 0);
  std::vector<std::int64_t> eps_series;
  if (p.r == 0) {
    eps_series = stirling_quotient(base)->hilbert_series();
  } else {
    const auto group = combinatorics::all_permutations(p.r);
    const Permutation tail_identity = Permutation::identity(p.n - p.r);
    std::vector<std::int64_t> signed_sum;
    for (const auto& w : group) {
      const int sign = w.length() % 2 == 0 ? 1 : -1;
      const auto traces = graded_traces(embed_pair(w, tail_identity, p.n), base, opt);
      if (traces.size() > signed_sum.size()) signed_sum.resize(traces.size(), 0);
      for (size_t d = 0; d < traces.size(); ++d) signed_sum[d] += sign * traces[d];
    }
    const std::int64_t order = combinatorics::factorial(p.r);
    for (auto& v : signed_sum) {
      if (v % order != 0) report.exact_antisymmetrization = false;
      v /= order;
    }
    // The sign component cannot appear below the Vandermonde degree C(r,2);
    // regrade so its lowest piece sits in degree zero.
    const size_t shift = static_cast<size_t>(p.r) * static_cast<size_t>(p.r - 1) / 2;
    for (size_t d = 0; d < shift && d < signed_sum.size(); ++d) {
      if (signed_sum[d] != 0) report.exact_antisymmetrization = false;
    }
    if (signed_sum.size() >= shift)
      eps_series.assign(signed_sum.begin() + static_cast<long>(shift), signed_sum.end());
  }

  report.rhs = trimmed(series_product(trimmed(coinvariant_series), trimmed(eps_series)));
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace rstirling::rings
