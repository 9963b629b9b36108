#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace xorcount {

/// Polynomial over F_2 with bit-packed coefficients, LSB-first: bit k of the
/// packed words is the coefficient of x^k. Storage is always trimmed so that
/// equal polynomials have identical representations.
class Gf2Poly {
public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Gf2Poly() = default;

  /// Polynomial whose coefficients are the bits of `bits` (bit k -> x^k).
  static Gf2Poly from_bits(Word bits);
  static Gf2Poly from_words(std::span<const Word> words);
  static Gf2Poly monomial(int k);
  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly x() { return monomial(1); }
  /// Sum of x^e over the given exponents; repeated exponents cancel.
  static Gf2Poly from_exponents(std::initializer_list<int> exponents);
  static Gf2Poly from_exponents(std::span<const int> exponents);

  /// Parses "x^8+x^4+x^3+x+1", "x", "1", "0" or LSB-first hex "0x11b".
  /// Throws std::invalid_argument on malformed text.
  static Gf2Poly parse(std::string_view text);

  int degree() const;
  int weight() const;
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(int k) const;
  void set_coeff(int k, bool value);
  std::span<const Word> words() const { return {words_.data(), words_.size()}; }
  /// Low 64 coefficients; only meaningful when degree() < 64.
  Word low_word() const { return words_.empty() ? 0 : words_[0]; }
  /// Exponents of the nonzero terms, highest first.
  std::vector<int> exponents() const;

  /// Human-readable form, e.g. "x^4+x+1".
  std::string to_string() const;
  /// Lowercase hex of the coefficient bit string, e.g. "0x13" for x^4+x+1.
  std::string to_hex() const;

  Gf2Poly& operator+=(const Gf2Poly& other);
  Gf2Poly& operator*=(const Gf2Poly& other);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);

  /// Multiplies by x^k.
  Gf2Poly shifted(int k) const;
  /// p(x)^2 computed by spreading bits.
  Gf2Poly squared() const;
  /// g with g^2 == *this when every odd coefficient is zero.
  std::optional<Gf2Poly> sqrt_if_square() const;

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
  /// Orders by the coefficient bit string read as a binary integer.
  friend std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b);

private:
  void trim();

  boost::container::small_vector<Word, 2> words_;
};

struct DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

/// a = quotient*b + remainder with deg remainder < deg b. Throws
/// std::domain_error when b is zero.
DivMod divmod(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b);

Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly lcm(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly pow(const Gf2Poly& p, int d);

inline int weight(const Gf2Poly& p) { return p.weight(); }

/// Largest degree accepted by is_irreducible and enumerate_irreducibles.
inline constexpr int kDefaultDegreeCap = 16;

/// Trial division against the irreducibles of degree <= deg(p)/2. Throws
/// std::invalid_argument for constants and std::out_of_range above `cap`.
bool is_irreducible(const Gf2Poly& p, int cap = kDefaultDegreeCap);

/// Smallest nontrivial factor by ascending (degree, bit string) order, if p
/// is reducible. Same preconditions as is_irreducible.
std::optional<Gf2Poly> smallest_factor(const Gf2Poly& p, int cap = kDefaultDegreeCap);

/// All irreducible polynomials of exactly `degree`, ascending, optionally
/// restricted to weight <= max_weight.
std::vector<Gf2Poly> enumerate_irreducibles(int degree, std::optional<int> max_weight = std::nullopt,
                                            int cap = kDefaultDegreeCap);

struct PowerFactorization {
  Gf2Poly base;
  int exponent = 0;

  friend bool operator==(const PowerFactorization&, const PowerFactorization&) = default;
};

/// (f, d) with f irreducible and p == f^d, or nullopt when p has two distinct
/// irreducible factors. Requires p monic of degree >= 1 and the smallest
/// factor of p to have degree <= `cap`.
std::optional<PowerFactorization> factor_as_power(const Gf2Poly& p, int cap = kDefaultDegreeCap);

}  // namespace xorcount
