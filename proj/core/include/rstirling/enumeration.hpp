#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rstirling/coinversion.hpp"
#include "rstirling/ordered_set_partition.hpp"
#include "rstirling/parameters.hpp"
#include "rstirling/words.hpp"

namespace rstirling::combinatorics {

/// r-Stirling number Stir^{(r)}_{n,k}, by the recurrence
/// Stir^{(r)}_{n,k} = k Stir^{(r)}_{n-1,k} + Stir^{(r)}_{n-1,k-1}
/// with base Stir^{(r)}_{r,k} = [k == r].
std::int64_t stirling_r(const Parameters& p);

std::int64_t factorial(int m);

/// |OP_{n,k}^{(r)}| = k! * Stir^{(r)}_{n,k}.
std::int64_t ordered_partition_count(const Parameters& p);

/// Visits every valid coinversion code for (n, k, r) in lexicographic
/// order.  The search is pruned so only viable prefixes are expanded.
void for_each_code(const Parameters& p, const std::function<void(std::span<const int>)>& visit);

/// Visits OP_{n,k}^{(r)} in lexicographic order of coinversion codes.
void for_each_partition(const Parameters& p,
                        const std::function<void(const OrderedSetPartition&)>& visit);

std::vector<OrderedSetPartition> enumerate_partitions(const Parameters& p);

/// Visits W_{n,k}^{(r)} (words in [k]^n with all letters present and the
/// first r letters distinct) in lexicographic order.
void for_each_word(const Parameters& p, const std::function<void(const Word&)>& visit);

std::vector<Word> enumerate_words(const Parameters& p);

std::int64_t word_count(const Parameters& p);

}  // namespace rstirling::combinatorics
