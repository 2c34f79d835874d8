#include "rstirling/ordered_set_partition.hpp"

#include <algorithm>
#include <sstream>

namespace rstirling::combinatorics {

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DomainError("ordered set partition: no blocks");
  int n = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw DomainError("ordered set partition: empty block");
    std::sort(b.begin(), b.end());
    n += static_cast<int>(b.size());
  }
  n_ = n;
  block_of_.assign(static_cast<size_t>(n) + 1, -1);
  for (size_t j = 0; j < blocks_.size(); ++j) {
    for (int x : blocks_[j]) {
      if (x < 1 || x > n)
        throw DomainError("ordered set partition: letter " + std::to_string(x) + " outside [n]");
      if (block_of_[static_cast<size_t>(x)] != -1)
        throw DomainError("ordered set partition: letter " + std::to_string(x) + " repeated");
      block_of_[static_cast<size_t>(x)] = static_cast<int>(j);
    }
  }
}

int OrderedSetPartition::block_index_of(int letter) const {
  if (letter < 1 || letter > n_) throw DomainError("block_index_of: letter outside [n]");
  return block_of_[static_cast<size_t>(letter)];
}

bool OrderedSetPartition::is_letter_block_minimal(int letter) const {
  return block_min(block_index_of(letter)) == letter;
}

bool OrderedSetPartition::is_r_stirling(int r) const {
  if (r > n_) return false;
  std::vector<bool> seen(blocks_.size(), false);
  for (int i = 1; i <= r; ++i) {
    int j = block_index_of(i);
    if (seen[static_cast<size_t>(j)]) return false;
    seen[static_cast<size_t>(j)] = true;
  }
  return true;
}

std::string OrderedSetPartition::to_string() const {
  const bool commas = n_ >= 10;
  std::string out;
  for (size_t j = 0; j < blocks_.size(); ++j) {
    if (j) out += '|';
    for (size_t t = 0; t < blocks_[j].size(); ++t) {
      if (commas && t) out += ',';
      out += std::to_string(blocks_[j][t]);
    }
  }
  return out;
}

OrderedSetPartition OrderedSetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  blocks.emplace_back();
  const bool commas = text.find(',') != std::string_view::npos;
  for (size_t pos = 0; pos < text.size();) {
    char c = text[pos];
    if (c == '|') {
      blocks.emplace_back();
      ++pos;
    } else if (c == ',') {
      ++pos;
    } else if (c >= '0' && c <= '9') {
      if (commas) {
        size_t end = pos;
        while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
        blocks.back().push_back(std::stoi(std::string(text.substr(pos, end - pos))));
        pos = end;
      } else {
        blocks.back().push_back(c - '0');
        ++pos;
      }
    } else {
      throw DomainError("cannot parse ordered set partition: unexpected character");
    }
  }
  return OrderedSetPartition(std::move(blocks));
}

int inv(const OrderedSetPartition& sigma) {
  const int n = sigma.n();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (!sigma.is_letter_block_minimal(i)) continue;
    const int bi = sigma.block_index_of(i);
    for (int j = i + 1; j <= n; ++j) {
      if (sigma.block_index_of(j) < bi) ++count;
    }
  }
  return count;
}

int max_inv(int n, int k) { return (n - k) * (k - 1) + k * (k - 1) / 2; }

int coinv(const OrderedSetPartition& sigma) {
  return max_inv(sigma.n(), sigma.block_count()) - inv(sigma);
}

OrderedSetPartition inv_maximizer(const Parameters& p) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> first;
  for (int x = p.k; x <= p.n; ++x) first.push_back(x);
  blocks.push_back(std::move(first));
  for (int x = p.k - 1; x >= 1; --x) blocks.push_back({x});
  return OrderedSetPartition(std::move(blocks));
}

}  // namespace rstirling::combinatorics
