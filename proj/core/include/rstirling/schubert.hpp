#pragma once

#include <cstddef>

#include "rstirling/parameters.hpp"
#include "rstirling/permutation.hpp"
#include "rstirling/polynomial.hpp"
#include "rstirling/words.hpp"

namespace rstirling::polyalg {

/// Schubert polynomial of w, by the descending divided-difference recursion
/// from the staircase monomial of the longest element.  Results are memoized
/// in a process-wide LRU cache keyed by one-line notation; the returned
/// ambient ring has w.size() variables.
Polynomial schubert(const combinatorics::Permutation& w);

/// Un-memoized reference route.  Walks ascents from the back instead of the
/// front when `last_ascent` is set, so tests can compare two independent
/// recursion paths.
Polynomial schubert_unmemoized(const combinatorics::Permutation& w, bool last_ascent = false);

/// Entry budget of the Schubert LRU cache (default 1 << 16).
void set_schubert_cache_budget(std::size_t entries);
void clear_schubert_cache();

/// Word Schubert polynomial: the Schubert polynomial of the standardized
/// convexification, with variables permuted by the inverse of the sorting
/// permutation (x_i -> x_{sigma(w)^{-1}(i)}).  The result is asserted to
/// involve only x_1..x_n and is returned in ambient n.
Polynomial word_schubert(const combinatorics::Word& w, const Parameters& p);

}  // namespace rstirling::polyalg
