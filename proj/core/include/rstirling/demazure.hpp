#pragma once

#include <vector>

#include "rstirling/polynomial.hpp"

namespace rstirling::polyalg {

/// Isobaric divided difference pi_i(f) = d_i(x_i f).
Polynomial isobaric_divided_difference(int i, const Polynomial& f);

/// Key polynomial of a composition: x^gamma for weakly decreasing gamma,
/// and kappa_gamma = pi_i kappa_{gamma s_i} whenever gamma_i < gamma_{i+1}.
/// Monomial-positive with integer coefficients.
Polynomial demazure(const std::vector<int>& gamma);

}  // namespace rstirling::polyalg
