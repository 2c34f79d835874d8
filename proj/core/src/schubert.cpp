#include "rstirling/schubert.hpp"

#include <list>
#include <mutex>
#include <unordered_map>

namespace rstirling::polyalg {

using combinatorics::Permutation;
using combinatorics::Word;

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// LRU cache keyed by trimmed one-line notation.
class SchubertCache {
 public:
  static SchubertCache& instance() {
    static SchubertCache cache;
    return cache;
  }

  bool lookup(const std::vector<int>& key, Polynomial& out) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    recency_.splice(recency_.begin(), recency_, it->second.second);
    out = it->second.first;
    return true;
  }

  void insert(const std::vector<int>& key, const Polynomial& value) {
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.count(key)) return;
    recency_.push_front(key);
    map_.emplace(key, std::make_pair(value, recency_.begin()));
    while (map_.size() > budget_) {
      map_.erase(recency_.back());
      recency_.pop_back();
    }
  }

  void set_budget(size_t entries) {
    std::lock_guard<std::mutex> lock(mu_);
    budget_ = entries == 0 ? 1 : entries;
    while (map_.size() > budget_) {
      map_.erase(recency_.back());
      recency_.pop_back();
    }
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    map_.clear();
    recency_.clear();
  }

 private:
  std::mutex mu_;
  size_t budget_ = 1 << 16;
  std::list<std::vector<int>> recency_;
  std::unordered_map<std::vector<int>,
                     std::pair<Polynomial, std::list<std::vector<int>>::iterator>, VecHash>
      map_;
};

std::vector<int> trim_trailing_fixed(const std::vector<int>& one_line) {
  size_t m = one_line.size();
  while (m > 0 && one_line[m - 1] == static_cast<int>(m)) --m;
  return std::vector<int>(one_line.begin(), one_line.begin() + static_cast<long>(m));
}

Polynomial staircase(int m) {
  Monomial mono(m);
  for (int i = 0; i < m; ++i) mono[static_cast<size_t>(i)] = m - 1 - i;
  return Polynomial::from_monomial(mono, 1);
}

Polynomial schubert_trimmed(const std::vector<int>& key) {
  const int m = static_cast<int>(key.size());
  if (m == 0) return Polynomial::one(0);
  Polynomial cached(0);
  if (SchubertCache::instance().lookup(key, cached)) return cached;

  Permutation w(key);
  Polynomial result(0);
  if (w == Permutation::longest(m)) {
    result = staircase(m);
  } else {
    const int i = w.first_ascent();
    // w s_i has one more inversion; S_w = d_i S_{w s_i}.
    const Permutation up = w.swap_positions(i);
    Polynomial higher = schubert_trimmed(trim_trailing_fixed(up.one_line()));
    result = divided_difference(i, higher.extended(m));
  }
  SchubertCache::instance().insert(key, result);
  return result;
}

}  // namespace

Polynomial schubert(const Permutation& w) {
  return schubert_trimmed(trim_trailing_fixed(w.one_line())).extended(w.size());
}

Polynomial schubert_unmemoized(const Permutation& w, bool last_ascent) {
  const std::vector<int> key = trim_trailing_fixed(w.one_line());
  const int m = static_cast<int>(key.size());
  if (m == 0) return Polynomial::one(w.size());
  Permutation v(key);
  if (v == Permutation::longest(m)) return staircase(m).extended(w.size());
  const int i = last_ascent ? v.last_ascent() : v.first_ascent();
  const Polynomial higher = schubert_unmemoized(v.swap_positions(i), last_ascent);
  return divided_difference(i, higher.extended(m)).extended(w.size());
}

void set_schubert_cache_budget(std::size_t entries) {
  SchubertCache::instance().set_budget(entries);
}

void clear_schubert_cache() { SchubertCache::instance().clear(); }

Polynomial word_schubert(const Word& w, const Parameters& p) {
  if (w.size() != p.n) throw DomainError("word_schubert: word length must be n");
  for (int a : w.letters)
    if (a < 1 || a > p.k) throw DomainError("word_schubert: letter outside [k]");

  const Word conv = combinatorics::convexify(w);
  const Permutation sigma = combinatorics::sorting_permutation(w);
  const Permutation st = combinatorics::standardize(conv, p.k);

  Polynomial s = schubert(st);
  s = permute_variables(sigma.inverse(), s);
  if (!s.supported_within(p.n))
    throw DomainError("word_schubert: result touches variables beyond x_n");
  return s.restricted(p.n);
}

}  // namespace rstirling::polyalg
