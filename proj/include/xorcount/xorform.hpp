#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xorcount/gf2mat.hpp"
#include "xorcount/gf2poly.hpp"

namespace xorcount {

/// Largest dimension for product enumeration and identity checks.
inline constexpr int kEnumerationMaxDim = 12;
/// Largest dimension for XOR-count searches.
inline constexpr int kSearchMaxDim = 8;
/// Largest number of transvection factors for enumeration and search.
inline constexpr int kMaxFactors = 3;

/// Cycle type of a permutation: parts sorted descending, summing to n.
class CycleType {
public:
  CycleType() = default;
  /// Validates that parts are positive and descending. Throws
  /// std::invalid_argument otherwise.
  explicit CycleType(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int dim() const;
  int size() const { return static_cast<int>(parts_.size()); }
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
  std::vector<int> parts_;
};

/// All partitions of n, ascending lexicographically as descending tuples:
/// (1,...,1) first, (n) last.
std::vector<CycleType> partitions(int n);

/// Block-diagonal sum of the cyclic shifts C_{x^m+1}, one per part.
Gf2Mat cycle_block_matrix(const CycleType& type);

/// The factor I + E_{row,col}, 1-based, row != col.
struct Transvection {
  int row = 0;
  int col = 0;

  friend bool operator==(const Transvection&, const Transvection&) = default;
  friend auto operator<=>(const Transvection&, const Transvection&) = default;
};

/// A matrix in the form C * prod_k (I + E_{i_k,j_k}) with C a cycle normal
/// form. Factors are listed left to right.
struct XorProduct {
  CycleType cycle_type;
  std::vector<Transvection> factors;

  int dim() const { return cycle_type.dim(); }
  int cost() const { return static_cast<int>(factors.size()); }

  friend bool operator==(const XorProduct&, const XorProduct&) = default;
  friend auto operator<=>(const XorProduct&, const XorProduct&) = default;
};

/// Throws std::invalid_argument if any factor has i == j or an index out of
/// range.
void validate(const XorProduct& x);
Gf2Mat realize(const XorProduct& x);

/// A matrix in the form P * prod_k (I + E_{i_k,j_k}) with an arbitrary
/// permutation P (given by its image, P e_j = e_{image[j-1]}).
struct PermutedProduct {
  std::vector<int> permutation;
  std::vector<Transvection> factors;

  Gf2Mat realize() const;
  friend bool operator==(const PermutedProduct&, const PermutedProduct&) = default;
};

struct CycleNormalForm {
  CycleType type;
  /// Q with Q P Q^{-1} == cycle_block_matrix(type).
  Gf2Mat conjugator;
};

/// Throws std::invalid_argument when p is not a permutation matrix.
CycleNormalForm cycle_normal_form(const Gf2Mat& p);

/// Conjugates P * prod(I + E) into cycle normal form. The returned product
/// realizes Q A Q^{-1} where Q is written to `conjugator` when non-null.
XorProduct to_cycle_normal_form(const PermutedProduct& product, Gf2Mat* conjugator = nullptr);

/// Every XorProduct with a cycle type of n and exactly t factors, in the
/// order (partition, factor tuple), each compared lexicographically. Indexed
/// access makes the space splittable across workers.
class ProductSpace {
public:
  /// Throws std::out_of_range unless 1 <= n <= kEnumerationMaxDim and
  /// 0 <= t <= kMaxFactors.
  ProductSpace(int n, int t);

  int dim() const { return n_; }
  int factor_count() const { return t_; }
  std::uint64_t size() const { return static_cast<std::uint64_t>(partitions_.size()) * tuples_; }
  std::uint64_t pair_count() const { return pairs_; }

  XorProduct at(std::uint64_t index) const;
  Gf2Mat realize_at(std::uint64_t index) const;
  const CycleType& cycle_type_at(std::uint64_t index) const { return partitions_[index / tuples_]; }

  class iterator {
  public:
    using value_type = XorProduct;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const ProductSpace* space, std::uint64_t index) : space_(space), index_(index) {}
    XorProduct operator*() const { return space_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++index_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

  private:
    const ProductSpace* space_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

private:
  Transvection pair_at(std::uint64_t p) const;

  int n_;
  int t_;
  std::uint64_t pairs_;
  std::uint64_t tuples_;
  std::vector<CycleType> partitions_;
  std::vector<Gf2Mat> bases_;
};

std::uint64_t partition_count(int n);

/// Multiplication-by-element verdict: the classified matrix has char poly
/// f^d and min poly f with f irreducible of degree m, n = m*d.
struct ElementClass {
  Gf2Poly f;
  int m = 0;
  int d = 0;
  int n = 0;

  /// f = x+1, i.e. the element 1.
  bool trivial() const { return f == Gf2Poly::from_bits(0b11); }
  friend bool operator==(const ElementClass&, const ElementClass&) = default;
};

/// Throws std::invalid_argument for singular input.
std::optional<ElementClass> element_check(const Gf2Mat& a);

struct ExactCount {
  /// Smallest t <= t_max, or nullopt when the count exceeds t_max.
  std::optional<int> t;
  int t_max = 0;
  /// a == witness->realize(); factors are lexicographically smallest for t.
  std::optional<PermutedProduct> witness;
};

/// Exact XOR-count by stripping transvections until a permutation remains.
/// Requires an invertible matrix, n <= kSearchMaxDim and t_max <= kMaxFactors.
ExactCount xor_count_exact(const Gf2Mat& a, int t_max);

struct ScanOptions {
  unsigned threads = 1;
  int max_dim = kSearchMaxDim;
};

struct SearchReport {
  Gf2Poly poly;
  int n = 0;
  std::optional<int> t;
  int t_max = 0;
  std::optional<XorProduct> witness;
  std::int64_t elapsed_ms = 0;
  /// Products realized and classified during the scan.
  std::uint64_t products_scanned = 0;
};

/// Smallest t <= t_max such that some product with t factors is a
/// multiplication matrix of an element with minimal polynomial f in
/// dimension n, with the first such product in enumeration order as witness.
/// Throws std::invalid_argument for reducible f (naming a factor) or when
/// deg f does not divide n; std::out_of_range on cap violations.
SearchReport min_xor_count_for_poly(const Gf2Poly& f, int n, int t_max, const ScanOptions& options = {});

/// min_xor_count_for_poly(f, n, t_max) for every irreducible f of degree n,
/// ascending, computed from one classification pass per t. Each report's
/// elapsed_ms and products_scanned describe the whole batch.
std::vector<SearchReport> min_xor_count_table(int n, int t_max, const ScanOptions& options = {});

/// One achievable element class among the products of a ProductSpace.
struct ClassWitness {
  ElementClass cls;
  /// First product in enumeration order realizing the class.
  XorProduct witness;
  std::uint64_t first_index = 0;
  std::uint64_t hits = 0;
};

/// Classifies every product with exactly t factors in dimension n. Entries
/// are sorted by (f, d).
std::vector<ClassWitness> scan_classes(int n, int t, const ScanOptions& options = {});

}  // namespace xorcount
