#include "rstirling/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rstirling::groebner {

Ideal::Ideal(std::vector<Polynomial> gens, MonomialOrder ord) : order(ord), nvars(0) {
  if (gens.empty()) throw DomainError("ideal: empty generator list");
  nvars = gens.front().nvars();
  for (auto& g : gens) {
    if (g.is_zero()) throw DomainError("ideal: zero generator");
    if (g.nvars() != nvars) throw DomainError("ideal: mixed ambient rings");
    generators.push_back(g.with_order(order));
  }
}

namespace {

// Full reduction of f against basis (all monic); returns the remainder.
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& basis) {
  Polynomial remainder = Polynomial::zero(f.nvars(), f.order());
  while (!f.is_zero()) {
    const Monomial& lm = f.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      f -= divisor->times_term(lm.quotient_by(divisor->leading_monomial()),
                               f.leading_coefficient());
    } else {
      remainder += Polynomial::from_monomial(lm, f.leading_coefficient(), f.order());
      f -= Polynomial::from_monomial(lm, f.leading_coefficient(), f.order());
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial lcm = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a = f.times_term(lcm.quotient_by(f.leading_monomial()),
                                    1 / f.leading_coefficient());
  const Polynomial b = g.times_term(lcm.quotient_by(g.leading_monomial()),
                                    1 / g.leading_coefficient());
  return a - b;
}

struct PairKey {
  int degree;
  Monomial lcm;
  int i, j;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    const auto c = order.compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerQuotient buchberger(const Ideal& ideal) {
  const MonomialOrder order = ideal.order;
  std::vector<Polynomial> basis;
  std::set<PairKey, PairLess> queue(PairLess{order});
  std::set<std::pair<int, int>> pending;

  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      const Monomial lcm =
          Monomial::lcm(basis[static_cast<size_t>(i)].leading_monomial(),
                        basis[static_cast<size_t>(j)].leading_monomial());
      queue.insert({lcm.degree(), lcm, i, j});
      pending.insert({i, j});
    }
  };

  for (const auto& g : ideal.generators) {
    Polynomial r = reduce_full(g, basis).primitive_part();
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  while (!queue.empty()) {
    const PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});

    const Polynomial& f = basis[static_cast<size_t>(pk.i)];
    const Polynomial& g = basis[static_cast<size_t>(pk.j)];

    // Product criterion: coprime leading terms reduce to zero.
    if (pk.lcm == f.leading_monomial().times(g.leading_monomial())) continue;
    // Chain criterion: some l with lt_l | lcm and both mixed pairs settled.
    bool skip = false;
    for (int l = 0; l < static_cast<int>(basis.size()) && !skip; ++l) {
      if (l == pk.i || l == pk.j) continue;
      if (!basis[static_cast<size_t>(l)].leading_monomial().divides(pk.lcm)) continue;
      const auto il = std::minmax(pk.i, l);
      const auto jl = std::minmax(pk.j, l);
      if (!pending.count({il.first, il.second}) && !pending.count({jl.first, jl.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial r = reduce_full(s_polynomial(f, g), basis).primitive_part();
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: drop elements whose leading term another leading term divides.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce tails: each element fully reduced against the others.
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_full(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });

  return GroebnerQuotient(std::move(reduced), order, ideal.nvars);
}

GroebnerQuotient::GroebnerQuotient(std::vector<Polynomial> reduced_basis, MonomialOrder order,
                                   int nvars)
    : basis_(std::move(reduced_basis)), order_(order), nvars_(nvars) {
  for (const auto& g : basis_) leading_.push_back(g.leading_monomial());

  // Finite-dimensional iff every variable has a pure power among the
  // leading terms; the product of those bounds caps the staircase walk.
  std::vector<int> bound(static_cast<size_t>(nvars_), -1);
  for (const auto& m : leading_) {
    int var = -1;
    bool pure = true;
    for (int i = 0; i < nvars_ && pure; ++i) {
      if (m[static_cast<size_t>(i)] > 0) {
        if (var == -1)
          var = i;
        else
          pure = false;
      }
    }
    if (pure && var != -1) {
      const int e = m[static_cast<size_t>(var)];
      if (bound[static_cast<size_t>(var)] == -1 || e < bound[static_cast<size_t>(var)])
        bound[static_cast<size_t>(var)] = e;
    }
  }
  finite_ = std::all_of(bound.begin(), bound.end(), [](int b) { return b != -1; });
  if (nvars_ == 0) finite_ = true;

  if (finite_) {
    Monomial m(nvars_);
    auto rec = [&](auto&& self, int var) -> void {
      if (var == nvars_) {
        if (is_standard(m)) standard_.push_back(m);
        return;
      }
      for (int e = 0; e < bound[static_cast<size_t>(var)]; ++e) {
        m[static_cast<size_t>(var)] = e;
        self(self, var + 1);
      }
      m[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0);
    std::sort(standard_.begin(), standard_.end(),
              [&](const Monomial& a, const Monomial& b) { return order_.less(a, b); });
  }
}

const std::vector<Monomial>& GroebnerQuotient::standard_monomials() const {
  if (!finite_)
    throw UnsupportedError("standard monomial basis requested for an infinite-dimensional quotient");
  return standard_;
}

bool GroebnerQuotient::is_standard(const Monomial& m) const {
  for (const auto& lt : leading_)
    if (lt.divides(m)) return false;
  return true;
}

Polynomial GroebnerQuotient::reduce_cached(const Monomial& mono) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = nf_cache_.find(mono);
    if (it != nf_cache_.end()) return *it->second;
  }
  Polynomial pending = Polynomial::from_monomial(mono, 1, order_);
  Polynomial out = Polynomial::zero(nvars_, order_);
  while (!pending.is_zero()) {
    const Monomial lm = pending.leading_monomial();
    const Rational lc = pending.leading_coefficient();
    {
      std::lock_guard<std::mutex> lock(cache_mu_);
      auto it = nf_cache_.find(lm);
      if (it != nf_cache_.end()) {
        out += it->second->scaled(lc);
        pending -= Polynomial::from_monomial(lm, lc, order_);
        continue;
      }
    }
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis_) {
      if (g.leading_monomial().divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      pending -= divisor->times_term(lm.quotient_by(divisor->leading_monomial()), lc);
    } else {
      out += Polynomial::from_monomial(lm, lc, order_);
      pending -= Polynomial::from_monomial(lm, lc, order_);
    }
  }
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (nf_cache_.size() < kCacheCap)
      nf_cache_.emplace(mono, std::make_shared<const Polynomial>(out));
  }
  return out;
}

Polynomial GroebnerQuotient::normal_form(const Polynomial& f) const {
  if (f.nvars() != nvars_) throw DomainError("normal_form: ambient mismatch");
  const Polynomial g = f.with_order(order_);
  Polynomial out = Polynomial::zero(nvars_, order_);
  for (const auto& t : g.terms()) out += reduce_cached(t.monomial).scaled(t.coefficient);
  return out;
}

std::vector<std::int64_t> GroebnerQuotient::hilbert_series() const {
  const auto& mons = standard_monomials();
  int maxdeg = 0;
  for (const auto& m : mons) maxdeg = std::max(maxdeg, m.degree());
  std::vector<std::int64_t> coeffs(static_cast<size_t>(maxdeg) + 1, 0);
  for (const auto& m : mons) ++coeffs[static_cast<size_t>(m.degree())];
  return coeffs;
}

bool verify_buchberger_criterion(const GroebnerQuotient& q) {
  const auto& basis = q.reduced_basis();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce_full(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

}  // namespace rstirling::groebner
