#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rstirling/parameters.hpp"

namespace rstirling::combinatorics {

/// An ordered set partition (B_1 | ... | B_k) of {1, ..., n}.
///
/// Blocks are stored with sorted elements.  Well-formedness (nonempty,
/// pairwise disjoint, union = [n]) is enforced at construction; the
/// r-Stirling property is a separate predicate so that non-Stirling
/// partitions can be represented and rejected explicitly.
class OrderedSetPartition {
 public:
  explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  /// 0-based index of the block containing `letter`.
  int block_index_of(int letter) const;

  /// Minimum of block j (0-based j); blocks are sorted so this is the front.
  int block_min(int j) const { return blocks_[static_cast<size_t>(j)].front(); }

  bool is_letter_block_minimal(int letter) const;

  /// True iff the letters 1..r lie in pairwise distinct blocks.
  bool is_r_stirling(int r) const;

  bool operator==(const OrderedSetPartition&) const = default;

  /// "25|1|34" for n < 10; comma-separated block elements ("3,5|1,2|4") for n >= 10.
  std::string to_string() const;

  /// Parses both forms accepted by to_string.
  static OrderedSetPartition parse(std::string_view text);

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;  // letter -> 0-based block index
  int n_ = 0;
};

/// Number of pairs i < j with the block of i strictly right of the block of j
/// and i minimal in its block.
int inv(const OrderedSetPartition& sigma);

/// (n-k)(k-1) + C(k,2) - inv(sigma), with n, k taken from sigma.
int coinv(const OrderedSetPartition& sigma);

/// Maximum value of inv on OP_{n,k}: (n-k)(k-1) + C(k,2).
int max_inv(int n, int k);

/// The unique inv-maximizer (k, k+1, ..., n | k-1 | ... | 1).
OrderedSetPartition inv_maximizer(const Parameters& p);

}  // namespace rstirling::combinatorics
