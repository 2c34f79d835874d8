#include "rstirling/words.hpp"

#include <algorithm>

namespace rstirling::combinatorics {

std::string Word::to_string() const {
  std::string out;
  const bool commas =
      !letters.empty() && *std::max_element(letters.begin(), letters.end()) >= 10;
  for (size_t t = 0; t < letters.size(); ++t) {
    if (commas && t) out += ',';
    out += std::to_string(letters[t]);
  }
  return out;
}

Word Word::parse(const std::string& text) {
  Word w;
  if (text.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos < text.size()) {
      size_t end = text.find(',', pos);
      if (end == std::string::npos) end = text.size();
      w.letters.push_back(std::stoi(text.substr(pos, end - pos)));
      pos = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw DomainError("word: cannot parse '" + text + "'");
      w.letters.push_back(c - '0');
    }
  }
  return w;
}

bool word_in_family(const Word& w, const Parameters& p) {
  if (w.size() != p.n) return false;
  std::vector<bool> present(static_cast<size_t>(p.k) + 1, false);
  for (int a : w.letters) {
    if (a < 1 || a > p.k) return false;
    present[static_cast<size_t>(a)] = true;
  }
  for (int a = 1; a <= p.k; ++a)
    if (!present[static_cast<size_t>(a)]) return false;
  for (int i = 0; i < p.r; ++i)
    for (int j = i + 1; j < p.r; ++j)
      if (w.letters[static_cast<size_t>(i)] == w.letters[static_cast<size_t>(j)]) return false;
  return true;
}

std::vector<int> initial_indices(const Word& w) {
  std::vector<int> out;
  std::vector<bool> seen;
  for (int j = 0; j < w.size(); ++j) {
    const int a = w.letters[static_cast<size_t>(j)];
    if (a < 1) throw DomainError("initial_indices: letters must be positive");
    if (static_cast<size_t>(a) >= seen.size()) seen.resize(static_cast<size_t>(a) + 1, false);
    if (!seen[static_cast<size_t>(a)]) {
      seen[static_cast<size_t>(a)] = true;
      out.push_back(j + 1);
    }
  }
  return out;
}

bool is_convex(const Word& w) {
  // Convex means every letter's occurrences are contiguous.
  std::vector<int> last;
  for (int j = 0; j < w.size(); ++j) {
    const int a = w.letters[static_cast<size_t>(j)];
    if (static_cast<size_t>(a) >= last.size()) last.resize(static_cast<size_t>(a) + 1, -1);
    if (last[static_cast<size_t>(a)] != -1 && last[static_cast<size_t>(a)] != j - 1) return false;
    last[static_cast<size_t>(a)] = j;
  }
  return true;
}

Word convexify(const Word& w) {
  std::vector<int> order;  // distinct letters by first occurrence
  std::vector<int> mult;
  for (int a : w.letters) {
    if (static_cast<size_t>(a) >= mult.size()) mult.resize(static_cast<size_t>(a) + 1, 0);
    if (mult[static_cast<size_t>(a)] == 0) order.push_back(a);
    ++mult[static_cast<size_t>(a)];
  }
  Word out;
  out.letters.reserve(w.letters.size());
  for (int a : order)
    out.letters.insert(out.letters.end(), static_cast<size_t>(mult[static_cast<size_t>(a)]), a);
  return out;
}

Permutation sorting_permutation(const Word& w) {
  // Stable: equal letters keep their relative order, so the result has the
  // minimal number of inversions among permutations with conv(w)_{sigma(j)} = w_j.
  std::vector<int> order;
  std::vector<int> mult;
  for (int a : w.letters) {
    if (static_cast<size_t>(a) >= mult.size()) mult.resize(static_cast<size_t>(a) + 1, 0);
    if (mult[static_cast<size_t>(a)] == 0) order.push_back(a);
    ++mult[static_cast<size_t>(a)];
  }
  std::vector<int> next_slot(mult.size(), 0);
  int start = 0;
  for (int a : order) {
    next_slot[static_cast<size_t>(a)] = start;
    start += mult[static_cast<size_t>(a)];
  }
  std::vector<int> img(w.letters.size());
  for (size_t j = 0; j < w.letters.size(); ++j) {
    const int a = w.letters[j];
    img[j] = ++next_slot[static_cast<size_t>(a)];
  }
  return Permutation(std::move(img));
}

Permutation standardize(const Word& w, int k) {
  if (!is_convex(w)) throw DomainError("standardize: word is not convex");
  const int n = w.size();
  std::vector<bool> appears(static_cast<size_t>(k) + 1, false);
  for (int a : w.letters) {
    if (a < 1 || a > k) throw DomainError("standardize: letter outside [k]");
    appears[static_cast<size_t>(a)] = true;
  }
  int m = 0;
  for (int a = 1; a <= k; ++a)
    if (appears[static_cast<size_t>(a)]) ++m;

  std::vector<int> img;
  img.reserve(static_cast<size_t>(n + k - m));
  std::vector<bool> seen(static_cast<size_t>(k) + 1, false);
  int next_big = k + 1;
  for (int a : w.letters) {
    if (!seen[static_cast<size_t>(a)]) {
      seen[static_cast<size_t>(a)] = true;
      img.push_back(a);
    } else {
      img.push_back(next_big++);
    }
  }
  for (int a = 1; a <= k; ++a)
    if (!appears[static_cast<size_t>(a)]) img.push_back(a);
  return Permutation(std::move(img));
}

}  // namespace rstirling::combinatorics
