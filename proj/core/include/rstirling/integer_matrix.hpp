#pragma once

#include <map>
#include <string>
#include <vector>

#include "rstirling/rational.hpp"

namespace rstirling::rings {

using polyalg::Integer;

/// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

  Integer& at(int i, int j) { return data[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
  const Integer& at(int i, int j) const {
    return data[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)];
  }
  bool is_square() const { return rows == cols; }
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(IntMatrix m);

/// Diagonal of the Smith normal form (nonnegative, each dividing the next),
/// padded with zeros up to min(rows, cols).  Diagnostic for non-unimodular
/// change-of-basis blocks.
std::vector<Integer> smith_normal_form_diagonal(IntMatrix m);

/// Square integer change-of-basis matrices per degree, expressing one graded
/// basis in another.  Unimodular iff every degree block is square with
/// determinant +-1.
struct GradedIntegerMatrix {
  std::map<int, IntMatrix> blocks;
  std::map<int, Integer> determinants;  // only for square blocks
  bool all_square = true;
  bool unimodular = true;

  std::string summary() const;
};

}  // namespace rstirling::rings
