#include "rstirling/integer_matrix.hpp"

#include <algorithm>

#include "rstirling/parameters.hpp"

namespace rstirling::rings {

Integer determinant(IntMatrix m) {
  if (!m.is_square()) throw DomainError("determinant: matrix is not square");
  const int n = m.rows;
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int p = 0; p < n - 1; ++p) {
    if (m.at(p, p) == 0) {
      int swap_row = -1;
      for (int i = p + 1; i < n; ++i) {
        if (m.at(i, p) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == -1) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (int i = p + 1; i < n; ++i) {
      for (int j = p + 1; j < n; ++j) {
        Integer v = m.at(i, j) * m.at(p, p) - m.at(i, p) * m.at(p, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
      m.at(i, p) = 0;
    }
    prev = m.at(p, p);
  }
  return sign * m.at(n - 1, n - 1);
}

std::vector<Integer> smith_normal_form_diagonal(IntMatrix m) {
  const int rank_bound = std::min(m.rows, m.cols);
  std::vector<Integer> diag;

  int top = 0;
  while (top < std::min(m.rows, m.cols)) {
    // Find a nonzero pivot in the remaining block.
    int pi = -1, pj = -1;
    for (int i = top; i < m.rows && pi == -1; ++i)
      for (int j = top; j < m.cols; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == -1) break;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(top, j), m.at(pi, j));
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, top), m.at(i, pj));

    // Clear row and column `top` by gcd steps.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = top + 1; i < m.rows; ++i) {
        if (m.at(i, top) == 0) continue;
        if (m.at(i, top) % m.at(top, top) == 0) {
          Integer q = m.at(i, top) / m.at(top, top);
          for (int j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(top, j);
        } else {
          // Replace pivot by gcd via row combination.
          Integer g, s, t;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.at(top, top).get_mpz_t(),
                     m.at(i, top).get_mpz_t());
          Integer a = m.at(top, top) / g, b = m.at(i, top) / g;
          for (int j = 0; j < m.cols; ++j) {
            Integer r1 = s * m.at(top, j) + t * m.at(i, j);
            Integer r2 = -b * m.at(top, j) + a * m.at(i, j);
            m.at(top, j) = r1;
            m.at(i, j) = r2;
          }
          dirty = true;
        }
      }
      for (int j = top + 1; j < m.cols; ++j) {
        if (m.at(top, j) == 0) continue;
        if (m.at(top, j) % m.at(top, top) == 0) {
          Integer q = m.at(top, j) / m.at(top, top);
          for (int i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, top);
        } else {
          Integer g, s, t;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.at(top, top).get_mpz_t(),
                     m.at(top, j).get_mpz_t());
          Integer a = m.at(top, top) / g, b = m.at(top, j) / g;
          for (int i = 0; i < m.rows; ++i) {
            Integer c1 = s * m.at(i, top) + t * m.at(i, j);
            Integer c2 = -b * m.at(i, top) + a * m.at(i, j);
            m.at(i, top) = c1;
            m.at(i, j) = c2;
          }
          dirty = true;
        }
      }
    }
    diag.push_back(abs(m.at(top, top)));
    ++top;
  }

  while (static_cast<int>(diag.size()) < rank_bound) diag.push_back(0);

  // Enforce the divisibility chain d_i | d_{i+1}.
  for (size_t i = 0; i + 1 < diag.size(); ++i) {
    for (size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % (diag[i] == 0 ? Integer(1) : diag[i]) != 0 || (diag[i] == 0 && diag[j] != 0)) {
        Integer g, l;
        mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
        if (g == 0) {
          l = 0;
        } else {
          mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
        }
        diag[i] = g;
        diag[j] = l;
      }
    }
  }
  return diag;
}

std::string GradedIntegerMatrix::summary() const {
  std::string out;
  for (const auto& [d, block] : blocks) {
    if (!out.empty()) out += "; ";
    out += "deg " + std::to_string(d) + ": " + std::to_string(block.rows) + "x" +
           std::to_string(block.cols);
    auto it = determinants.find(d);
    if (it != determinants.end()) out += " det " + polyalg::to_string(it->second);
  }
  return out;
}

}  // namespace rstirling::rings
