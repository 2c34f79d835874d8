#include "rstirling/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace rstirling::combinatorics {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  const int m = static_cast<int>(img_.size());
  std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
  for (int v : img_) {
    if (v < 1 || v > m || seen[static_cast<size_t>(v)])
      throw DomainError("permutation: one-line notation must contain 1..m once each");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int m) {
  std::vector<int> v(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = m - i;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 1; i <= size(); ++i) v[static_cast<size_t>(img_[static_cast<size_t>(i - 1)] - 1)] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::after(const Permutation& b) const {
  const int m = std::max(size(), b.size());
  std::vector<int> v(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) v[static_cast<size_t>(i - 1)] = (*this)(b(i));
  return Permutation(std::move(v));
}

Permutation Permutation::swap_positions(int i) const {
  if (i < 1 || i >= size()) throw DomainError("swap_positions: index out of range");
  std::vector<int> v = img_;
  std::swap(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(i)]);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

int Permutation::length() const {
  int count = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if ((*this)(i) > (*this)(j)) ++count;
  return count;
}

int Permutation::first_ascent() const {
  for (int i = 1; i < size(); ++i)
    if ((*this)(i) < (*this)(i + 1)) return i;
  return 0;
}

int Permutation::last_ascent() const {
  for (int i = size() - 1; i >= 1; --i)
    if ((*this)(i) < (*this)(i + 1)) return i;
  return 0;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool commas = size() >= 10;
  for (int i = 1; i <= size(); ++i) {
    if (commas && i > 1) out += ',';
    out += std::to_string((*this)(i));
  }
  return out;
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> v;
  if (text.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos < text.size()) {
      size_t end = text.find(',', pos);
      if (end == std::string::npos) end = text.size();
      v.push_back(std::stoi(text.substr(pos, end - pos)));
      pos = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw DomainError("permutation: cannot parse '" + text + "'");
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> v(static_cast<size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace rstirling::combinatorics
