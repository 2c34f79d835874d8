#include "rstirling/polynomial.hpp"

namespace rstirling::polyalg {

Polynomial elementary(int d, int m, int nvars, MonomialOrder order) {
  if (d < 0 || m < 1 || m > nvars) throw DomainError("elementary: bad (d, m, nvars)");
  if (d == 0) return Polynomial::one(nvars, order);
  if (d > m) return Polynomial::zero(nvars, order);
  std::vector<Polynomial::Term> terms;
  std::vector<int> idx(static_cast<size_t>(d));
  auto rec = [&](auto&& self, int depth, int start) -> void {
    if (depth == d) {
      Monomial mono(nvars);
      for (int t : idx) mono[static_cast<size_t>(t)] = 1;
      terms.push_back({std::move(mono), 1});
      return;
    }
    for (int v = start; v < m; ++v) {
      idx[static_cast<size_t>(depth)] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return Polynomial::from_terms(nvars, std::move(terms), order);
}

Polynomial homogeneous(int d, int m, int nvars, MonomialOrder order) {
  if (d < 0 || m < 1 || m > nvars) throw DomainError("homogeneous: bad (d, m, nvars)");
  if (d == 0) return Polynomial::one(nvars, order);
  std::vector<Polynomial::Term> terms;
  Monomial mono(nvars);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == m - 1) {
      Monomial out = mono;
      out[static_cast<size_t>(var)] = remaining;
      terms.push_back({std::move(out), 1});
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      mono[static_cast<size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
    mono[static_cast<size_t>(var)] = 0;
  };
  rec(rec, 0, d);
  return Polynomial::from_terms(nvars, std::move(terms), order);
}

}  // namespace rstirling::polyalg
