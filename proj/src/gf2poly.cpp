#include "xorcount/gf2poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <mutex>
#include <stdexcept>

namespace xorcount {

namespace {

using Word = Gf2Poly::Word;
constexpr int kWordBits = Gf2Poly::kWordBits;

int word_degree(Word w) { return w == 0 ? -1 : kWordBits - 1 - std::countl_zero(w); }

// Remainder of a mod b for single-word operands, b != 0.
Word mod_word(Word a, Word b) {
  const int db = word_degree(b);
  for (int da = word_degree(a); da >= db; da = word_degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

// Interleaves zero bits: bit k of w moves to bit 2k.
std::uint64_t spread_bits(std::uint32_t w) {
  std::uint64_t x = w;
  x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
  x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
  x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
  x = (x | (x << 2)) & 0x3333333333333333ull;
  x = (x | (x << 1)) & 0x5555555555555555ull;
  return x;
}

// Inverse of spread_bits on the even positions of w.
std::uint32_t gather_even_bits(std::uint64_t x) {
  x &= 0x5555555555555555ull;
  x = (x | (x >> 1)) & 0x3333333333333333ull;
  x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0Full;
  x = (x | (x >> 4)) & 0x00FF00FF00FF00FFull;
  x = (x | (x >> 8)) & 0x0000FFFF0000FFFFull;
  x = (x | (x >> 16)) & 0x00000000FFFFFFFFull;
  return static_cast<std::uint32_t>(x);
}

// Carry-less 64x64 -> 128 product.
std::pair<Word, Word> clmul(Word a, Word b) {
  Word lo = 0;
  Word hi = 0;
  while (b != 0) {
    const int k = std::countr_zero(b);
    lo ^= a << k;
    if (k != 0) hi ^= a >> (kWordBits - k);
    b &= b - 1;
  }
  return {lo, hi};
}

constexpr int kMaxCachedDegree = 32;

// Irreducibles of a single degree, computed on first use.
class IrreducibleCache {
public:
  const std::vector<Gf2Poly>& of_degree(int degree) {
    std::call_once(flags_[degree], [&] { tables_[degree] = compute(degree); });
    return tables_[degree];
  }

private:
  static std::vector<Gf2Poly> compute(int degree) {
    std::vector<Gf2Poly> out;
    if (degree == 1) {
      out.push_back(Gf2Poly::from_bits(0b10));
      out.push_back(Gf2Poly::from_bits(0b11));
      return out;
    }
    const Word top = Word{1} << degree;
    // Constant term must be 1, otherwise x divides the candidate.
    for (Word low = 1; low < top; low += 2) {
      const Word candidate = top | low;
      if (std::popcount(candidate) % 2 == 0) continue;  // divisible by x+1
      if (!has_factor_up_to(candidate, degree / 2)) out.push_back(Gf2Poly::from_bits(candidate));
    }
    return out;
  }

  static bool has_factor_up_to(Word p, int max_degree);

  std::array<std::once_flag, kMaxCachedDegree + 1> flags_;
  std::array<std::vector<Gf2Poly>, kMaxCachedDegree + 1> tables_;
};

IrreducibleCache& cache() {
  static IrreducibleCache instance;
  return instance;
}

bool IrreducibleCache::has_factor_up_to(Word p, int max_degree) {
  for (int d = 1; d <= max_degree; ++d) {
    for (const Gf2Poly& f : cache().of_degree(d)) {
      if (mod_word(p, f.low_word()) == 0) return true;
    }
  }
  return false;
}

void check_degree_cap(int degree, int cap) {
  if (cap < 1 || cap > kMaxCachedDegree) {
    throw std::out_of_range("degree cap must be in 1.." + std::to_string(kMaxCachedDegree));
  }
  if (degree > cap) {
    throw std::out_of_range("degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

Gf2Poly Gf2Poly::from_bits(Word bits) {
  Gf2Poly p;
  if (bits != 0) p.words_.push_back(bits);
  return p;
}

Gf2Poly Gf2Poly::from_words(std::span<const Word> words) {
  Gf2Poly p;
  p.words_.assign(words.begin(), words.end());
  p.trim();
  return p;
}

Gf2Poly Gf2Poly::monomial(int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Gf2Poly p;
  p.set_coeff(k, true);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<int> exponents) {
  return from_exponents(std::span<const int>(exponents.begin(), exponents.size()));
}

Gf2Poly Gf2Poly::from_exponents(std::span<const int> exponents) {
  Gf2Poly p;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    p.set_coeff(e, !p.coeff(e));
  }
  return p;
}

Gf2Poly Gf2Poly::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    Gf2Poly p;
    int bit = 0;
    for (auto it = s.rbegin(); it != s.rend() - 2; ++it) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
      int nibble = 0;
      if (c >= '0' && c <= '9') {
        nibble = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        nibble = c - 'a' + 10;
      } else {
        throw std::invalid_argument("bad hex digit in '" + std::string(text) + "'");
      }
      for (int k = 0; k < 4; ++k) {
        if ((nibble >> k) & 1) p.set_coeff(bit + k, true);
      }
      bit += 4;
    }
    return p;
  }

  if (s == "0") return {};

  Gf2Poly p;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find('+', pos), s.size());
    const std::string_view term(s.data() + pos, end - pos);
    int exponent = -1;
    if (term == "1") {
      exponent = 0;
    } else if (term == "x" || term == "X") {
      exponent = 1;
    } else if (term.size() > 2 && (term[0] == 'x' || term[0] == 'X') && term[1] == '^') {
      const std::string_view digits = term.substr(2);
      if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          digits.size() > 6) {
        throw std::invalid_argument("bad exponent in term '" + std::string(term) + "'");
      }
      exponent = std::stoi(std::string(digits));
    } else {
      throw std::invalid_argument("bad term '" + std::string(term) + "' in '" + std::string(text) + "'");
    }
    p.set_coeff(exponent, !p.coeff(exponent));
    pos = end + 1;
  }
  return p;
}

int Gf2Poly::degree() const {
  if (words_.empty()) return kZeroDegree;
  return static_cast<int>(words_.size() - 1) * kWordBits + word_degree(words_.back());
}

int Gf2Poly::weight() const {
  int w = 0;
  for (Word word : words_) w += std::popcount(word);
  return w;
}

bool Gf2Poly::coeff(int k) const {
  if (k < 0) return false;
  const auto idx = static_cast<std::size_t>(k / kWordBits);
  if (idx >= words_.size()) return false;
  return (words_[idx] >> (k % kWordBits)) & 1;
}

void Gf2Poly::set_coeff(int k, bool value) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  const auto idx = static_cast<std::size_t>(k / kWordBits);
  if (idx >= words_.size()) {
    if (!value) return;
    words_.resize(idx + 1, 0);
  }
  const Word mask = Word{1} << (k % kWordBits);
  if (value) {
    words_[idx] |= mask;
  } else {
    words_[idx] &= ~mask;
    trim();
  }
}

std::vector<int> Gf2Poly::exponents() const {
  std::vector<int> out;
  for (int k = degree(); k >= 0; --k) {
    if (coeff(k)) out.push_back(k);
  }
  return out;
}

std::string Gf2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k : exponents()) {
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += '1';
    } else if (k == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(k);
    }
  }
  return out;
}

std::string Gf2Poly::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (is_zero()) return "0x0";
  std::string digits;
  const int deg = degree();
  for (int base = 0; base <= deg; base += 4) {
    int nibble = 0;
    for (int k = 0; k < 4; ++k) nibble |= static_cast<int>(coeff(base + k)) << k;
    digits.push_back(kDigits[nibble]);
  }
  std::reverse(digits.begin(), digits.end());
  return "0x" + digits;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

Gf2Poly& Gf2Poly::operator*=(const Gf2Poly& other) {
  *this = *this * other;
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Gf2Poly out;
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    for (std::size_t j = 0; j < b.words_.size(); ++j) {
      const auto [lo, hi] = clmul(a.words_[i], b.words_[j]);
      out.words_[i + j] ^= lo;
      out.words_[i + j + 1] ^= hi;
    }
  }
  out.trim();
  return out;
}

Gf2Poly Gf2Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero() || k == 0) return *this;
  const auto word_shift = static_cast<std::size_t>(k / kWordBits);
  const int bit_shift = k % kWordBits;
  Gf2Poly out;
  out.words_.assign(words_.size() + word_shift + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + word_shift] ^= words_[i] << bit_shift;
    if (bit_shift != 0) out.words_[i + word_shift + 1] ^= words_[i] >> (kWordBits - bit_shift);
  }
  out.trim();
  return out;
}

Gf2Poly Gf2Poly::squared() const {
  Gf2Poly out;
  out.words_.assign(words_.size() * 2, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[2 * i] = spread_bits(static_cast<std::uint32_t>(words_[i]));
    out.words_[2 * i + 1] = spread_bits(static_cast<std::uint32_t>(words_[i] >> 32));
  }
  out.trim();
  return out;
}

std::optional<Gf2Poly> Gf2Poly::sqrt_if_square() const {
  constexpr Word kOdd = 0xAAAAAAAAAAAAAAAAull;
  for (Word w : words_) {
    if (w & kOdd) return std::nullopt;
  }
  Gf2Poly out;
  out.words_.assign((words_.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word half = gather_even_bits(words_[i]);
    out.words_[i / 2] |= (i % 2 == 0) ? half : half << 32;
  }
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

DivMod divmod(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {Gf2Poly{}, a};
  if (a.degree() < kWordBits) {
    Word r = a.low_word();
    Word q = 0;
    const Word bw = b.low_word();
    for (int dr = word_degree(r); dr >= db; dr = word_degree(r)) {
      q |= Word{1} << (dr - db);
      r ^= bw << (dr - db);
    }
    return {Gf2Poly::from_bits(q), Gf2Poly::from_bits(r)};
  }
  Gf2Poly q;
  Gf2Poly r = a;
  for (int dr = r.degree(); dr >= db; dr = r.degree()) {
    q.set_coeff(dr - db, true);
    r += b.shifted(dr - db);
  }
  return {q, r};
}

Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).remainder; }
Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).quotient; }

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Poly lcm(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a / gcd(a, b)) * b;
}

Gf2Poly pow(const Gf2Poly& p, int d) {
  if (d < 0) throw std::invalid_argument("negative exponent");
  Gf2Poly result = Gf2Poly::one();
  Gf2Poly base = p;
  while (d > 0) {
    if (d & 1) result *= base;
    d >>= 1;
    if (d > 0) base = base.squared();
  }
  return result;
}

std::optional<Gf2Poly> smallest_factor(const Gf2Poly& p, int cap) {
  const int deg = p.degree();
  if (deg < 1) throw std::invalid_argument("irreducibility is undefined for constant " + p.to_string());
  check_degree_cap(deg, cap);
  for (int d = 1; 2 * d <= deg; ++d) {
    for (const Gf2Poly& f : cache().of_degree(d)) {
      if ((p % f).is_zero()) return f;
    }
  }
  return std::nullopt;
}

bool is_irreducible(const Gf2Poly& p, int cap) { return !smallest_factor(p, cap).has_value(); }

std::vector<Gf2Poly> enumerate_irreducibles(int degree, std::optional<int> max_weight, int cap) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  check_degree_cap(degree, cap);
  const auto& all = cache().of_degree(degree);
  if (!max_weight) return all;
  std::vector<Gf2Poly> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [&](const Gf2Poly& f) { return f.weight() <= *max_weight; });
  return out;
}

std::optional<PowerFactorization> factor_as_power(const Gf2Poly& p, int cap) {
  if (p.degree() < 1) throw std::invalid_argument("factor_as_power needs degree >= 1");
  Gf2Poly rest = p;
  int exponent = 1;
  while (auto root = rest.sqrt_if_square()) {
    rest = std::move(*root);
    exponent *= 2;
  }
  // rest = g^e with e odd; its smallest irreducible factor must be g's.
  const int deg = rest.degree();
  Gf2Poly base = rest;
  for (int d = 1; 2 * d <= deg && d <= cap; ++d) {
    bool found = false;
    for (const Gf2Poly& f : cache().of_degree(d)) {
      if ((rest % f).is_zero()) {
        base = f;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (base == rest) {
    if (deg > 2 * cap) check_degree_cap(deg, 2 * cap);
    return PowerFactorization{rest, exponent};
  }
  int multiplicity = 0;
  while (!rest.is_one()) {
    auto [q, r] = divmod(rest, base);
    if (!r.is_zero()) return std::nullopt;
    rest = std::move(q);
    ++multiplicity;
  }
  return PowerFactorization{base, exponent * multiplicity};
}

}  // namespace xorcount
