#pragma once

#include <string>
#include <vector>

#include "rstirling/parameters.hpp"
#include "rstirling/words.hpp"

namespace rstirling::geometry {

using combinatorics::Word;
using combinatorics::initial_indices;

enum class Cell : unsigned char { zero, one, star };

/// k x n grid over {0, 1, *} describing the affine cell of a word: exactly
/// one 1 per column (in row w_j), all-zero rows for absent letters.
struct PatternMatrix {
  int k = 0;
  int n = 0;
  std::vector<Cell> entries;  // row-major

  Cell at(int i, int j) const {  // 1-based
    return entries[static_cast<size_t>(i - 1) * static_cast<size_t>(n) + static_cast<size_t>(j - 1)];
  }
  int star_count() const;

  /// Fixed ASCII grid, one row per line, cells separated by single spaces.
  std::string ascii() const;
};

PatternMatrix pattern_matrix(const Word& w, const Parameters& p);

/// Codimension of the cell of w: the total degree of the word Schubert
/// polynomial, computed as the length of the standardized convexification.
/// Throws DomainError if w is not in W_{n,k}^{(r)}.
int codim(const Word& w, const Parameters& p);

}  // namespace rstirling::geometry
