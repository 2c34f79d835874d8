#pragma once

#include <string>
#include <vector>

#include "rstirling/parameters.hpp"
#include "rstirling/permutation.hpp"

namespace rstirling::combinatorics {

/// A word w_1 ... w_n over the alphabet {1, ..., k}.
struct Word {
  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const { return letters < o.letters; }

  std::string to_string() const;
  static Word parse(const std::string& text);
};

/// Membership in W_{n,k}^{(r)}: length n, every letter of [k] present,
/// first r letters pairwise distinct.
bool word_in_family(const Word& w, const Parameters& p);

/// Positions (1-based) of the first occurrence of each letter.
std::vector<int> initial_indices(const Word& w);

/// A word is convex if it has no subword i ... j ... i with i != j.
bool is_convex(const Word& w);

/// The unique convex word with the same letter multiplicities whose initial
/// letters appear in the same left-to-right order as in w.
Word convexify(const Word& w);

/// The minimal-inversion permutation sorting w onto convexify(w):
/// conv(w)_{sigma(j)} = w_j, with equal letters kept in order.
Permutation sorting_permutation(const Word& w);

/// Standardization of a convex word with m distinct letters: initial
/// letters are fixed, non-initial letters become k+1, ..., n+k-m left to
/// right, and the missing letters of [k] are appended in increasing order.
/// Throws DomainError if w is not convex.
Permutation standardize(const Word& w, int k);

}  // namespace rstirling::combinatorics
