#pragma once

// Slow reference implementations used only by tests. Polynomials are plain
// coefficient vectors (index = exponent), matrices are vectors of 0/1 rows.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "xorcount/gf2mat.hpp"
#include "xorcount/gf2poly.hpp"

namespace oracle {

using Coeffs = std::vector<int>;

inline void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

inline Coeffs coeffs(const xorcount::Gf2Poly& p) {
  Coeffs c(static_cast<std::size_t>(p.degree() + 1), 0);
  for (int k = 0; k <= p.degree(); ++k) c[k] = p.coeff(k) ? 1 : 0;
  return c;
}

inline xorcount::Gf2Poly poly(const Coeffs& c) {
  xorcount::Gf2Poly p;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] & 1) p.set_coeff(static_cast<int>(k), true);
  return p;
}

inline Coeffs add(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] ^= b[k];
  trim(a);
  return a;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] ^= a[i] & b[j];
  trim(c);
  return c;
}

// Remainder of a mod b by repeated subtraction of shifted b.
inline Coeffs mod(Coeffs a, const Coeffs& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    for (int k = 0; k <= db; ++k) a[k + shift] ^= b[k];
    trim(a);
  }
  return a;
}

// Trial division by every polynomial of degree 1..deg/2.
inline bool irreducible(const xorcount::Gf2Poly& p) {
  const int n = p.degree();
  if (n < 1) return false;
  const Coeffs c = coeffs(p);
  for (int d = 1; d <= n / 2; ++d) {
    for (std::uint64_t low = 0; low < (1ull << d); ++low) {
      Coeffs divisor(static_cast<std::size_t>(d + 1), 0);
      for (int k = 0; k < d; ++k) divisor[k] = (low >> k) & 1;
      divisor[d] = 1;
      if (mod(c, divisor).empty()) return false;
    }
  }
  return true;
}

using Matrix = std::vector<std::vector<int>>;

inline Matrix dense(const xorcount::Gf2Mat& a) {
  Matrix m(a.dim(), std::vector<int>(a.dim(), 0));
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = 1; j <= a.dim(); ++j) m[i - 1][j - 1] = a.get(i, j) ? 1 : 0;
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] ^= a[i][k] & b[k][j];
  return c;
}

// det(A + lambda I) by the Leibniz expansion; every sign is +1 over F_2.
inline Coeffs char_poly_leibniz(const xorcount::Gf2Mat& a) {
  const int n = a.dim();
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Coeffs total;
  do {
    Coeffs term{1};
    for (int i = 0; i < n && !term.empty(); ++i) {
      Coeffs entry{a.get(i + 1, sigma[i] + 1) ? 1 : 0};
      if (sigma[i] == i) entry = add(entry, Coeffs{0, 1});
      trim(entry);
      term = mul(term, entry);
    }
    total = add(total, term);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

// det over F_2 by the Leibniz expansion.
inline int det_leibniz(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  int total = 0;
  do {
    int term = 1;
    for (int i = 0; i < n; ++i) term &= m[i][sigma[i]];
    total ^= term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

inline Matrix drop(const Matrix& m, int i, int j) {
  Matrix out;
  for (int r = 0; r < static_cast<int>(m.size()); ++r) {
    if (r == i - 1) continue;
    std::vector<int> row;
    for (int c = 0; c < static_cast<int>(m.size()); ++c)
      if (c != j - 1) row.push_back(m[r][c]);
    out.push_back(row);
  }
  return out;
}

}  // namespace oracle
