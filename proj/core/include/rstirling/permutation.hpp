#pragma once

#include <string>
#include <vector>

#include "rstirling/parameters.hpp"

namespace rstirling::combinatorics {

/// A permutation of [m] in one-line notation (1-based values).
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int m);
  /// The longest element m (m-1) ... 2 1.
  static Permutation longest(int m);

  int size() const { return static_cast<int>(img_.size()); }
  /// Image of i (1-based).  Positions beyond size() are fixed.
  int operator()(int i) const {
    return i <= size() ? img_[static_cast<size_t>(i - 1)] : i;
  }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const;
  /// (ab)(i) = a(b(i)).
  Permutation after(const Permutation& b) const;
  /// Swaps the values at positions i, i+1 (right multiplication by s_i).
  Permutation swap_positions(int i) const;

  bool is_identity() const;
  /// Number of inversions (Coxeter length).
  int length() const;
  /// Smallest i with w_i < w_{i+1}, or 0 if w is the longest element.
  int first_ascent() const;
  int last_ascent() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  /// One-line digits for m < 10, comma-separated otherwise.
  std::string to_string() const;
  static Permutation parse(const std::string& text);

 private:
  std::vector<int> img_;
};

/// All of S_m in lexicographic one-line order.
std::vector<Permutation> all_permutations(int m);

}  // namespace rstirling::combinatorics
