#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xorcount/gf2poly.hpp"

namespace xorcount {

/// Square matrix over F_2 of dimension 1..24, one 32-bit word per row.
///
/// Public indices are 1-based: get(i, j) is the entry in row i, column j.
/// Internally row i-1 holds column j-1 in bit j-1. Bits past column n are
/// always clear, so the defaulted equality is exact.
class Gf2Mat {
public:
  using Row = std::uint32_t;
  static constexpr int kMaxDim = 24;

  Gf2Mat() = default;
  /// n x n zero matrix.
  explicit Gf2Mat(int n);

  static Gf2Mat zero(int n) { return Gf2Mat(n); }
  static Gf2Mat identity(int n);
  /// E_{i,j}: a single one in row i, column j.
  static Gf2Mat unit(int n, int i, int j);
  /// Matrix sending e_j to e_{image[j-1]}; image is 1-based.
  static Gf2Mat permutation(std::span<const int> image);
  /// Rows given as 0-based bit masks.
  static Gf2Mat from_rows(std::span<const Row> rows);

  int dim() const { return n_; }
  bool get(int i, int j) const;
  void set(int i, int j, bool value);
  void flip(int i, int j);
  /// Row i (1-based) as a bit mask of columns.
  Row row(int i) const;
  Row column(int j) const;
  std::span<const Row> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  int weight() const;
  bool is_permutation() const;
  /// image[j-1] = i such that entry (i, j) is set; requires is_permutation().
  std::vector<int> permutation_image() const;

  /// Right-multiplication by I + E_{i,j}: adds column i into column j.
  void add_column(int i, int j);
  /// Left-multiplication by I + E_{i,j}: adds row j into row i.
  void add_row(int i, int j);

  Gf2Mat transpose() const;
  /// A*v with v packed LSB-first (bit k is coordinate k+1).
  Row apply(Row v) const;

  friend Gf2Mat operator*(const Gf2Mat& a, const Gf2Mat& b);
  friend Gf2Mat operator+(const Gf2Mat& a, const Gf2Mat& b);
  friend bool operator==(const Gf2Mat&, const Gf2Mat&) = default;

  /// n lines of '0'/'1' characters, each terminated by '\n'.
  std::string to_text() const;
  static Gf2Mat parse_text(std::string_view text);
  /// {"n": n, "rows": ["0101", ...]} as a compact JSON string.
  std::string to_json() const;
  static Gf2Mat parse_json(std::string_view text);
  /// Row strings as used by both serial formats.
  std::vector<std::string> row_strings() const;
  static Gf2Mat from_row_strings(std::span<const std::string> rows);

private:
  int n_ = 0;
  std::array<Row, kMaxDim> rows_{};
};

/// Companion matrix of a polynomial q of degree n: ones on the subdiagonal
/// and (q_0, ..., q_{n-1}) down the last column.
Gf2Mat companion(const Gf2Poly& q);
Gf2Mat block_diag(std::span<const Gf2Mat> blocks);

std::optional<Gf2Mat> inverse(const Gf2Mat& a);
bool det(const Gf2Mat& a);
int rank(const Gf2Mat& a);

/// A^{(i,j)}: delete row i and column j (1-based).
Gf2Mat minor_delete(const Gf2Mat& a, int i, int j);
/// A^{(i1,j1),(i2,j2)}: delete rows i1, i2 and columns j1, j2, all indices
/// referring to the original matrix.
Gf2Mat minor_delete_original(const Gf2Mat& a, int i1, int j1, int i2, int j2);

/// p(A) by Horner's rule.
Gf2Mat poly_eval_matrix(const Gf2Poly& p, const Gf2Mat& a);

/// det(A + xI) via fraction-free elimination over F_2[x].
Gf2Poly char_poly(const Gf2Mat& a);
/// Least-degree monic annihilator, the lcm of the per-basis-vector Krylov
/// minimal polynomials.
Gf2Poly min_poly(const Gf2Mat& a);

/// Square matrix with entries in F_2[x].
class PolyMat {
public:
  explicit PolyMat(int n);
  /// A + xI.
  static PolyMat plus_lambda(const Gf2Mat& a);
  /// xI.
  static PolyMat lambda_identity(int n);

  int dim() const { return n_; }
  const Gf2Poly& at(int i, int j) const;
  Gf2Poly& at(int i, int j);

  friend bool operator==(const PolyMat&, const PolyMat&) = default;

private:
  int n_ = 0;
  std::vector<Gf2Poly> entries_;
};

PolyMat minor_delete(const PolyMat& m, int i, int j);
PolyMat minor_delete_original(const PolyMat& m, int i1, int j1, int i2, int j2);
/// Exact determinant in F_2[x] by Bareiss elimination.
Gf2Poly sym_det(PolyMat m);

}  // namespace xorcount
