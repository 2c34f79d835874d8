#include "rstirling/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace rstirling::polyalg {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int v : e_)
    if (v < 0) throw DomainError("monomial: negative exponent");
}

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw DomainError("monomial: ambient mismatch");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (nvars() != other.nvars()) throw DomainError("monomial: ambient mismatch");
  Monomial out(*this);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] += other.e_[i];
  return out;
}

Monomial Monomial::quotient_by(const Monomial& other) const {
  if (!other.divides(*this)) throw DomainError("monomial: not divisible");
  Monomial out(*this);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] -= other.e_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DomainError("monomial: ambient mismatch");
  Monomial out(a);
  for (size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = std::max(a.e_[i], b.e_[i]);
  return out;
}

Monomial Monomial::extended(int new_nvars) const {
  if (new_nvars < nvars()) throw DomainError("monomial: extended() must not shrink");
  Monomial out(new_nvars);
  std::copy(e_.begin(), e_.end(), out.e_.begin());
  return out;
}

Monomial Monomial::restricted(int new_nvars) const {
  if (new_nvars > nvars()) throw DomainError("monomial: restricted() must not grow");
  for (size_t i = static_cast<size_t>(new_nvars); i < e_.size(); ++i)
    if (e_[i] != 0)
      throw DomainError("monomial: nonzero exponent beyond the requested ambient");
  Monomial out(new_nvars);
  std::copy(e_.begin(), e_.begin() + new_nvars, out.e_.begin());
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (e_[i] > 1) {
      out += '^';
      out += std::to_string(e_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering neglex_cmp(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DomainError("neglex: ambient mismatch");
  for (int i = a.nvars() - 1; i >= 0; --i) {
    const size_t t = static_cast<size_t>(i);
    if (a[t] != b[t]) return a[t] <=> b[t];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw DomainError("monomial order: ambient mismatch");
  switch (kind_) {
    case Kind::neglex:
      return neglex_cmp(a, b);
    case Kind::lex:
      for (int i = 0; i < a.nvars(); ++i) {
        const size_t t = static_cast<size_t>(i);
        if (a[t] != b[t]) return a[t] <=> b[t];
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

}  // namespace rstirling::polyalg
