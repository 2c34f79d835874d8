#pragma once

#include <memory>
#include <vector>

#include "rstirling/groebner.hpp"
#include "rstirling/parameters.hpp"
#include "rstirling/polynomial.hpp"

namespace rstirling::rings {

using groebner::GroebnerQuotient;
using groebner::Ideal;
using polyalg::MonomialOrder;
using polyalg::Polynomial;

/// The three generator families of the defining ideal for (n, k, r):
/// variable powers x_1^k..x_n^k, elementaries e_n..e_{n-k+1} in all n
/// variables, and h_{k-r+1}(x_1..x_r)..h_k(x_1..x_r).  r = 0 emits no
/// h-generators.  Exactly n + k + r generators in total.
struct StirlingIdealSpec {
  Parameters params;
  std::vector<Polynomial> variable_powers;
  std::vector<Polynomial> elementary_generators;
  std::vector<Polynomial> homogeneous_generators;

  std::vector<Polynomial> all_generators() const;
  int generator_count() const { return params.n + params.k + params.r; }
  Ideal to_ideal(MonomialOrder order = MonomialOrder::neglex()) const;
};

StirlingIdealSpec build_ideal(const Parameters& p);

/// Computes (or retrieves from a process-wide cache) the neglex Groebner
/// quotient of the defining ideal for p.
std::shared_ptr<const GroebnerQuotient> stirling_quotient(const Parameters& p);

void clear_quotient_cache();

}  // namespace rstirling::rings
