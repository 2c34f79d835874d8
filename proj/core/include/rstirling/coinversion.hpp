#pragma once

#include <span>
#include <string>
#include <vector>

#include "rstirling/ordered_set_partition.hpp"
#include "rstirling/parameters.hpp"

namespace rstirling::combinatorics {

/// Skip composition of a subset S = {s_1 < ... < s_m} of [n]:
/// gamma(S)_i = i - j + 1 if i = s_j, and 0 otherwise.
std::vector<int> skip_composition(const std::vector<int>& subset, int n);

/// Reversal (gamma(S)_n, ..., gamma(S)_1) of the skip composition.
std::vector<int> reverse_skip(const std::vector<int>& subset, int n);

/// Which of the three code-validity conditions failed.
enum class CodeCondition {
  ok,
  entry_bound,     // c_i <  k        for r+1 <= i <= n
  prefix_bound,    // c_i <  k - i + 1 for 1 <= i <= r
  skip_dominance,  // reverse_skip(S) <= c componentwise for some |S| = n-k+1
};

/// Result of validating a candidate coinversion code.
///
/// On skip_dominance failure, `witness` is a subset S of [n] with
/// |S| = n-k+1 whose reverse skip composition is dominated by the code;
/// on a bound failure, `index` is the offending 1-based position.
struct CodeCheck {
  bool ok = false;
  CodeCondition failed = CodeCondition::ok;
  int index = 0;
  std::vector<int> witness;

  std::string describe() const;
};

/// Validates the three characterization conditions for (n, k, r).
/// The dominance condition is decided by a greedy chain scan over the
/// reversed code, not by iterating all C(n, n-k+1) subsets.
CodeCheck check_code(std::span<const int> code, const Parameters& p);

inline bool is_valid_code(std::span<const int> code, const Parameters& p) {
  return check_code(code, p).ok;
}

/// Coinversion code (c_1, ..., c_n) of an ordered set partition:
/// for i in B_j, c_i counts blocks right of B_j with minimum > i, plus
/// (j - 1) when i is not minimal in B_j.
std::vector<int> coinversion_code(const OrderedSetPartition& sigma);

/// Validating overload: throws DomainError unless sigma is in OP_{n,k}^{(r)}.
std::vector<int> coinversion_code(const OrderedSetPartition& sigma, const Parameters& p);

/// Thrown by partition_from_code on an invalid code.
struct CodeValidityError : DomainError {
  CodeCheck check;
  explicit CodeValidityError(CodeCheck c)
      : DomainError("invalid coinversion code: " + c.describe()), check(std::move(c)) {}
};

/// Inverse of coinversion_code: inserts 1..n successively into the block
/// whose coinversion label equals c_i.  Labels assign 0..j to the empty
/// blocks right-to-left and j+1..k-1 to the nonempty blocks left-to-right.
OrderedSetPartition partition_from_code(std::span<const int> code, const Parameters& p);

}  // namespace rstirling::combinatorics
