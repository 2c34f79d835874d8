#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rstirling/enumeration.hpp"
#include "rstirling/integer_matrix.hpp"
#include "rstirling/permutation.hpp"
#include "rstirling/stirling_ideal.hpp"
#include "rstirling/words.hpp"

namespace rstirling::rings {

using combinatorics::Permutation;
using combinatorics::Word;

/// Size budgets for the verification suites.  Groebner-backed ops default to
/// n <= 6, character-theoretic ops to n <= 5; `force` overrides both.
struct VerifyOptions {
  int max_groebner_n = 6;
  int max_character_n = 5;
  bool force = false;

  void check_groebner(const Parameters& p) const;
  void check_character(const Parameters& p) const;
};

/// Set comparison between {x^{code(sigma)}} and the Groebner standard
/// monomial basis of the quotient, with symmetric-difference witnesses.
struct StandardBasisReport {
  Parameters params;
  bool equal = false;
  std::size_t count = 0;
  std::vector<polyalg::Monomial> missing_from_groebner;
  std::vector<polyalg::Monomial> extra_in_groebner;
};
StandardBasisReport verify_standard_basis(const Parameters& p, const VerifyOptions& opt = {});

/// Groebner-side Hilbert series against the coinv generating function.
struct HilbertReport {
  Parameters params;
  std::vector<std::int64_t> groebner_series;
  std::vector<std::int64_t> coinv_series;
  bool equal = false;
};
HilbertReport verify_hilbert_series(const Parameters& p, const VerifyOptions& opt = {});

/// Expansion of the word Schubert family in the standard monomial basis:
/// integer coefficients, square degree blocks, determinant +-1 per degree.
struct SchubertCertificate {
  Parameters params;
  bool ok = false;
  bool integral = true;
  GradedIntegerMatrix change_of_basis;
  std::map<int, std::vector<Integer>> snf_diagnostics;
  std::string failure;
};
SchubertCertificate schubert_basis_certificate(const Parameters& p, const VerifyOptions& opt = {});

/// For every subset S with |S| = n-k+1: the key polynomial of the reverse
/// skip composition has normal form 0, leading monomial x(S)*, and unit
/// leading coefficient.
struct DemazureReport {
  Parameters params;
  bool ok = false;
  int subsets_checked = 0;
  std::vector<std::string> failures;
};
DemazureReport demazure_membership(const Parameters& p, const VerifyOptions& opt = {});

/// Embeds (w1, w2) in S_r x S_{n-r} into S_n.
Permutation embed_pair(const Permutation& w1, const Permutation& w2, int n);

/// Checks each permuted ideal generator has normal form zero (the group
/// action on the quotient is well-defined).
bool verify_ideal_stability(const Parameters& p, const VerifyOptions& opt = {});

/// Graded traces of an arbitrary u in S_n acting on the quotient by variable
/// permutation followed by normal form, in the standard monomial basis.
/// Requires the ideal to be stable under u (checked via the parabolic
/// subgroup generators).
std::vector<std::int64_t> graded_traces(const Permutation& u, const Parameters& p,
                                        const VerifyOptions& opt = {});

/// Graded traces of (w1 x w2) acting on the quotient by variable
/// permutation followed by normal form, in the standard monomial basis.
std::vector<std::int64_t> character_trace(const Permutation& w1, const Permutation& w2,
                                          const Parameters& p, const VerifyOptions& opt = {});

/// Number of partitions in OP_{n,k}^{(r)} fixed by letter permutation.
std::int64_t fixed_partition_count(const Permutation& w1, const Permutation& w2,
                                   const Parameters& p);

/// Total trace equals fixed-point count, for every group element.
struct ChevalleyReport {
  Parameters params;
  bool ok = false;
  int pairs_checked = 0;
  std::vector<std::string> failures;
};
ChevalleyReport verify_chevalley(const Parameters& p, const VerifyOptions& opt = {});

/// word_schubert identities pinning the generator families:
/// S_{w^i} = e_{n-i+1}(x_n) for 1 <= i <= k, and for k < n
/// S_{v^i} = h_{k-i}(x_{i+1}) for 1 <= i <= r-1.
struct GeneratorIdentityReport {
  Parameters params;
  bool ok = false;
  int checked = 0;
  std::vector<std::string> failures;
};
GeneratorIdentityReport verify_generator_identities(const Parameters& p,
                                                    const VerifyOptions& opt = {});

/// Hilbert-level comparison of the graded tensor decomposition: reports
/// Hilb(R_{n,k}^{(r)}) against Hilb(R_r) * Hilb(eps_r R_{n,k}).  Conjecture
/// evidence only, never a theorem check.
struct TensorProbeReport {
  Parameters params;
  std::vector<std::int64_t> lhs;
  std::vector<std::int64_t> rhs;
  bool equal = false;
  bool exact_antisymmetrization = true;
  std::string note =
      "conjecture evidence (Hilbert level); antisymmetrized factor regraded to degree zero";
};
TensorProbeReport tensor_conjecture_probe(const Parameters& p, const VerifyOptions& opt = {});

/// The increasing word in [k]^n missing exactly the letter i (first k-1
/// letters distinct).  Its word Schubert polynomial is e_{n-i+1}(x_n).
Word increasing_word_missing(int i, const Parameters& p);

/// The increasing word 1..(i-1) i i (i+1)..(k-1) k..k; needs k < n.  Its
/// word Schubert polynomial is h_{k-i}(x_{i+1}).
Word increasing_word_doubled(int i, const Parameters& p);

}  // namespace rstirling::rings
