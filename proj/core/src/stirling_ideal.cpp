#include "rstirling/stirling_ideal.hpp"

#include <map>
#include <mutex>

namespace rstirling::rings {

using polyalg::elementary;
using polyalg::homogeneous;
using polyalg::Monomial;

std::vector<Polynomial> StirlingIdealSpec::all_generators() const {
  std::vector<Polynomial> out = variable_powers;
  out.insert(out.end(), elementary_generators.begin(), elementary_generators.end());
  out.insert(out.end(), homogeneous_generators.begin(), homogeneous_generators.end());
  return out;
}

Ideal StirlingIdealSpec::to_ideal(MonomialOrder order) const {
  return Ideal(all_generators(), order);
}

StirlingIdealSpec build_ideal(const Parameters& p) {
  StirlingIdealSpec spec{p, {}, {}, {}};
  for (int i = 1; i <= p.n; ++i) {
    Monomial m(p.n);
    m[static_cast<size_t>(i - 1)] = p.k;
    spec.variable_powers.push_back(Polynomial::from_monomial(m, 1));
  }
  for (int d = p.n; d >= p.n - p.k + 1; --d)
    spec.elementary_generators.push_back(elementary(d, p.n, p.n));
  for (int d = p.k - p.r + 1; d <= p.k; ++d)
    spec.homogeneous_generators.push_back(homogeneous(d, p.r, p.n));
  return spec;
}

namespace {

struct QuotientCache {
  std::mutex mu;
  std::map<std::tuple<int, int, int>, std::shared_ptr<const GroebnerQuotient>> map;

  static QuotientCache& instance() {
    static QuotientCache c;
    return c;
  }
};

}  // namespace

std::shared_ptr<const GroebnerQuotient> stirling_quotient(const Parameters& p) {
  auto& cache = QuotientCache::instance();
  const auto key = std::make_tuple(p.n, p.k, p.r);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return it->second;
  }
  auto q = std::make_shared<const GroebnerQuotient>(groebner::buchberger(build_ideal(p).to_ideal()));
  std::lock_guard<std::mutex> lock(cache.mu);
  auto [it, inserted] = cache.map.emplace(key, std::move(q));
  return it->second;
}

void clear_quotient_cache() {
  auto& cache = QuotientCache::instance();
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.map.clear();
}

}  // namespace rstirling::rings
