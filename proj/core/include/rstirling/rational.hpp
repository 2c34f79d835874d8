#pragma once

#include <gmpxx.h>

#include <string>

namespace rstirling::polyalg {

/// Exact rational coefficient, arbitrary precision.  No floating point
/// appears anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace rstirling::polyalg
