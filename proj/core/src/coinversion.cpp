#include "rstirling/coinversion.hpp"

#include <algorithm>

namespace rstirling::combinatorics {

std::vector<int> skip_composition(const std::vector<int>& subset, int n) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw DomainError("skip_composition: repeated element");
  std::vector<int> gamma(static_cast<size_t>(n), 0);
  for (size_t j = 0; j < s.size(); ++j) {
    const int i = s[j];
    if (i < 1 || i > n) throw DomainError("skip_composition: element outside [n]");
    gamma[static_cast<size_t>(i - 1)] = i - static_cast<int>(j + 1) + 1;
  }
  return gamma;
}

std::vector<int> reverse_skip(const std::vector<int>& subset, int n) {
  std::vector<int> gamma = skip_composition(subset, n);
  std::reverse(gamma.begin(), gamma.end());
  return gamma;
}

std::string CodeCheck::describe() const {
  switch (failed) {
    case CodeCondition::ok:
      return "ok";
    case CodeCondition::entry_bound:
      return "entry bound c_i < k violated at i = " + std::to_string(index);
    case CodeCondition::prefix_bound:
      return "prefix bound c_i < k - i + 1 violated at i = " + std::to_string(index);
    case CodeCondition::skip_dominance: {
      std::string s = "reverse skip composition of S = {";
      for (size_t t = 0; t < witness.size(); ++t) {
        if (t) s += ',';
        s += std::to_string(witness[t]);
      }
      s += "} is dominated by the code";
      return s;
    }
  }
  return "unknown";
}

namespace {

// Length of the longest chain s_1 < ... < s_m with d_{s_j} >= s_j - j + 1,
// computed greedily (taking every eligible position is optimal).  If chain
// is non-null, the chosen positions are appended to it.
int longest_skip_chain(std::span<const int> d, std::vector<int>* chain) {
  int taken = 0;
  for (int i = 1; i <= static_cast<int>(d.size()); ++i) {
    if (d[static_cast<size_t>(i - 1)] >= i - taken) {
      ++taken;
      if (chain) chain->push_back(i);
    }
  }
  return taken;
}

}  // namespace

CodeCheck check_code(std::span<const int> code, const Parameters& p) {
  CodeCheck res;
  if (static_cast<int>(code.size()) != p.n) {
    res.failed = CodeCondition::entry_bound;
    res.index = 0;
    return res;
  }
  for (int i = 1; i <= p.n; ++i) {
    const int c = code[static_cast<size_t>(i - 1)];
    if (c < 0 || (i <= p.r && c >= p.k - i + 1)) {
      res.failed = CodeCondition::prefix_bound;
      res.index = i;
      return res;
    }
    if (c >= p.k) {
      res.failed = CodeCondition::entry_bound;
      res.index = i;
      return res;
    }
  }
  // Dominance scan: gamma(S)* <= code for some |S| = n-k+1 iff the reversed
  // code carries a skip chain of length n-k+1.
  std::vector<int> rev(code.rbegin(), code.rend());
  std::vector<int> chain;
  const int m = p.n - p.k + 1;
  if (longest_skip_chain(rev, &chain) >= m) {
    res.failed = CodeCondition::skip_dominance;
    res.witness.assign(chain.begin(), chain.begin() + m);
    return res;
  }
  res.ok = true;
  res.failed = CodeCondition::ok;
  return res;
}

std::vector<int> coinversion_code(const OrderedSetPartition& sigma) {
  const int n = sigma.n();
  const int k = sigma.block_count();
  std::vector<int> code(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const int j = sigma.block_index_of(i);
    int c = 0;
    for (int l = j + 1; l < k; ++l) {
      if (sigma.block_min(l) > i) ++c;
    }
    if (!sigma.is_letter_block_minimal(i)) c += j;
    code[static_cast<size_t>(i - 1)] = c;
  }
  return code;
}

std::vector<int> coinversion_code(const OrderedSetPartition& sigma, const Parameters& p) {
  if (sigma.n() != p.n || sigma.block_count() != p.k)
    throw DomainError("coinversion_code: partition shape does not match parameters");
  if (!sigma.is_r_stirling(p.r))
    throw DomainError("coinversion_code: partition is not r-Stirling for r = " +
                      std::to_string(p.r));
  return coinversion_code(sigma);
}

OrderedSetPartition partition_from_code(std::span<const int> code, const Parameters& p) {
  CodeCheck check = check_code(code, p);
  if (!check.ok) throw CodeValidityError(std::move(check));

  std::vector<std::vector<int>> blocks(static_cast<size_t>(p.k));
  std::vector<int> label(static_cast<size_t>(p.k), 0);
  for (int i = 1; i <= p.n; ++i) {
    // Coinversion labels: empty blocks get 0..j right-to-left, nonempty
    // blocks get j+1..k-1 left-to-right.
    int empties = 0;
    for (const auto& b : blocks)
      if (b.empty()) ++empties;
    int next_empty = empties - 1;
    int next_filled = empties;
    for (size_t j = 0; j < blocks.size(); ++j) {
      if (blocks[j].empty())
        label[j] = next_empty--;
      else
        label[j] = next_filled++;
    }
    const int c = code[static_cast<size_t>(i - 1)];
    for (size_t j = 0; j < blocks.size(); ++j) {
      if (label[j] == c) {
        blocks[j].push_back(i);
        break;
      }
    }
  }
  return OrderedSetPartition(std::move(blocks));
}

}  // namespace rstirling::combinatorics
