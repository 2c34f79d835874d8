#include "rstirling/enumeration.hpp"

#include <algorithm>

namespace rstirling::combinatorics {

std::int64_t factorial(int m) {
  std::int64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

std::int64_t stirling_r(const Parameters& p) {
  // Rows n' = r..n, columns k' = 0..k.
  const int r = p.r;
  std::vector<std::int64_t> row(static_cast<size_t>(p.k) + 1, 0);
  if (r <= p.k) row[static_cast<size_t>(r)] = 1;
  for (int np = r + 1; np <= p.n; ++np) {
    std::vector<std::int64_t> next(row.size(), 0);
    for (int kp = 0; kp <= p.k; ++kp) {
      std::int64_t v = kp * row[static_cast<size_t>(kp)];
      if (kp > 0) v += row[static_cast<size_t>(kp - 1)];
      next[static_cast<size_t>(kp)] = v;
    }
    row.swap(next);
  }
  return row[static_cast<size_t>(p.k)];
}

std::int64_t ordered_partition_count(const Parameters& p) {
  return factorial(p.k) * stirling_r(p);
}

namespace {

// Longest skip chain of the reversed code prefix (c_1..c_len), i.e. over
// d = (0,...,0, c_len, ..., c_1).  Zero entries are never chain-eligible,
// so the all-zero unassigned region contributes nothing.
int prefix_chain(const std::vector<int>& code, int len, int n) {
  int taken = 0;
  for (int t = 0; t < len; ++t) {
    const int pos = n - len + 1 + t;           // absolute position in d
    const int value = code[static_cast<size_t>(len - 1 - t)];
    if (value >= pos - taken) ++taken;
  }
  return taken;
}

}  // namespace

void for_each_code(const Parameters& p, const std::function<void(std::span<const int>)>& visit) {
  const int n = p.n, k = p.k, r = p.r;
  const int m = n - k + 1;
  std::vector<int> code(static_cast<size_t>(n), 0);

  // DFS in lexicographic order.  A prefix is viable iff its chain is < m:
  // the all-zero completion is then a valid code, and any completion of a
  // non-viable prefix stays dominated (chains only grow entrywise).
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      visit(std::span<const int>(code));
      return;
    }
    const int bound = (i <= r) ? (k - i + 1) : k;
    for (int v = 0; v < bound; ++v) {
      code[static_cast<size_t>(i - 1)] = v;
      if (prefix_chain(code, i, n) < m) self(self, i + 1);
    }
    code[static_cast<size_t>(i - 1)] = 0;
  };
  rec(rec, 1);
}

void for_each_partition(const Parameters& p,
                        const std::function<void(const OrderedSetPartition&)>& visit) {
  for_each_code(p, [&](std::span<const int> code) { visit(partition_from_code(code, p)); });
}

std::vector<OrderedSetPartition> enumerate_partitions(const Parameters& p) {
  std::vector<OrderedSetPartition> out;
  for_each_partition(p, [&](const OrderedSetPartition& s) { out.push_back(s); });
  return out;
}

void for_each_word(const Parameters& p, const std::function<void(const Word&)>& visit) {
  const int n = p.n, k = p.k, r = p.r;
  Word w;
  w.letters.assign(static_cast<size_t>(n), 0);
  std::vector<int> multiplicity(static_cast<size_t>(k) + 1, 0);
  int missing = k;

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos > n) {
      visit(w);
      return;
    }
    for (int a = 1; a <= k; ++a) {
      if (pos <= r && multiplicity[static_cast<size_t>(a)] > 0) continue;  // first r distinct
      const int now_missing = missing - (multiplicity[static_cast<size_t>(a)] == 0 ? 1 : 0);
      if (now_missing > n - pos) continue;  // cannot cover [k] any more
      w.letters[static_cast<size_t>(pos - 1)] = a;
      ++multiplicity[static_cast<size_t>(a)];
      missing = now_missing;
      self(self, pos + 1);
      --multiplicity[static_cast<size_t>(a)];
      if (multiplicity[static_cast<size_t>(a)] == 0) ++missing;
    }
  };
  rec(rec, 1);
}

std::vector<Word> enumerate_words(const Parameters& p) {
  std::vector<Word> out;
  for_each_word(p, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::int64_t word_count(const Parameters& p) {
  std::int64_t c = 0;
  for_each_word(p, [&](const Word&) { ++c; });
  return c;
}

}  // namespace rstirling::combinatorics
