#include "rstirling/pattern_matrix.hpp"

#include <algorithm>

namespace rstirling::geometry {

int PatternMatrix::star_count() const {
  return static_cast<int>(std::count(entries.begin(), entries.end(), Cell::star));
}

std::string PatternMatrix::ascii() const {
  std::string out;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out += ' ';
      switch (at(i, j)) {
        case Cell::zero: out += '0'; break;
        case Cell::one: out += '1'; break;
        case Cell::star: out += '*'; break;
      }
    }
    out += '\n';
  }
  return out;
}

PatternMatrix pattern_matrix(const Word& w, const Parameters& p) {
  if (w.size() != p.n) throw DomainError("pattern_matrix: word length must be n");
  for (int a : w.letters)
    if (a < 1 || a > p.k) throw DomainError("pattern_matrix: letter outside [k]");

  // first_pos[a] = 1-based position of the first occurrence of a (0 if absent).
  std::vector<int> first_pos(static_cast<size_t>(p.k) + 1, 0);
  for (int j = 1; j <= p.n; ++j) {
    const int a = w.letters[static_cast<size_t>(j - 1)];
    if (first_pos[static_cast<size_t>(a)] == 0) first_pos[static_cast<size_t>(a)] = j;
  }

  PatternMatrix pm;
  pm.k = p.k;
  pm.n = p.n;
  pm.entries.assign(static_cast<size_t>(p.k) * static_cast<size_t>(p.n), Cell::zero);
  auto set = [&](int i, int j, Cell c) {
    pm.entries[static_cast<size_t>(i - 1) * static_cast<size_t>(p.n) + static_cast<size_t>(j - 1)] = c;
  };

  for (int j = 1; j <= p.n; ++j) {
    const int wj = w.letters[static_cast<size_t>(j - 1)];
    const bool initial = first_pos[static_cast<size_t>(wj)] == j;
    for (int i = 1; i <= p.k; ++i) {
      if (wj == i) {
        set(i, j, Cell::one);
      } else if (first_pos[static_cast<size_t>(i)] == 0) {
        set(i, j, Cell::zero);
      } else if (initial) {
        // Initial column: a star iff the letter i is smaller than w_j and
        // has already occurred strictly earlier.
        if (i < wj && first_pos[static_cast<size_t>(i)] < j) set(i, j, Cell::star);
      } else {
        // Non-initial column: a star iff the first i precedes the first w_j.
        if (first_pos[static_cast<size_t>(i)] < first_pos[static_cast<size_t>(wj)])
          set(i, j, Cell::star);
      }
    }
  }
  return pm;
}

int codim(const Word& w, const Parameters& p) {
  if (!combinatorics::word_in_family(w, p))
    throw DomainError("codim: word is not in the family for " + p.to_string());
  return combinatorics::standardize(combinatorics::convexify(w), p.k).length();
}

}  // namespace rstirling::geometry
