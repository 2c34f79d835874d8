#include "rstirling/demazure.hpp"

#include <algorithm>

namespace rstirling::polyalg {

Polynomial isobaric_divided_difference(int i, const Polynomial& f) {
  Monomial xi(f.nvars());
  xi[static_cast<size_t>(i - 1)] = 1;
  return divided_difference(i, f.times_term(xi, 1));
}

Polynomial demazure(const std::vector<int>& gamma) {
  const int n = static_cast<int>(gamma.size());
  for (int g : gamma)
    if (g < 0) throw DomainError("demazure: composition entries must be nonnegative");

  // Sort toward the dominant rearrangement one adjacent swap at a time,
  // recording which isobaric operator undoes each swap.
  std::vector<int> current = gamma;
  std::vector<int> ops;
  for (;;) {
    int i = 0;
    for (int t = 0; t + 1 < n; ++t) {
      if (current[static_cast<size_t>(t)] < current[static_cast<size_t>(t + 1)]) {
        i = t + 1;
        break;
      }
    }
    if (i == 0) break;
    ops.push_back(i);
    std::swap(current[static_cast<size_t>(i - 1)], current[static_cast<size_t>(i)]);
  }

  Monomial dominant(n);
  for (int t = 0; t < n; ++t) dominant[static_cast<size_t>(t)] = current[static_cast<size_t>(t)];
  Polynomial kappa = Polynomial::from_monomial(dominant, 1);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    kappa = isobaric_divided_difference(*it, kappa);
  return kappa;
}

}  // namespace rstirling::polyalg
