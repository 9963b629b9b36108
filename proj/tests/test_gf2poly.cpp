#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "xorcount/gf2poly.hpp"

using xorcount::Gf2Poly;

namespace {

Gf2Poly P(const char* text) { return Gf2Poly::parse(text); }

Gf2Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  const int d = deg(rng);
  Gf2Poly p;
  for (int k = 0; k < d; ++k) p.set_coeff(k, rng() & 1);
  if (d >= 0) p.set_coeff(d, true);
  return p;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(P("x^4+x+1").to_string() == "x^4+x+1");
  CHECK(P("1+x+x^4") == P("x^4+x+1"));
  CHECK(P("0x13") == P("x^4+x+1"));
  CHECK(P("x^4+x+1").to_hex() == "0x13");
  CHECK(P("0").is_zero());
  CHECK(P("0").to_string() == "0");
  CHECK(P("1").is_one());
  CHECK(P("x") == Gf2Poly::x());
  CHECK(P(" x^2 + x ").to_string() == "x^2+x");
  CHECK(P("x^70+1").degree() == 70);
  CHECK(Gf2Poly::parse(P("x^70+x^3+1").to_string()) == P("x^70+x^3+1"));
  CHECK_THROWS_AS(P("x^^2"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);
  CHECK_THROWS_AS(P("y+1"), std::invalid_argument);
}

TEST_CASE("degree, weight, coefficients") {
  CHECK(Gf2Poly().degree() == -1);
  CHECK(Gf2Poly::one().degree() == 0);
  CHECK(P("x^4+x+1").weight() == 3);
  CHECK(P("x^8+x^4+x^3+x+1").weight() == 5);
  CHECK(Gf2Poly().weight() == 0);
  CHECK(P("x^4+x+1").exponents() == std::vector<int>{4, 1, 0});
  Gf2Poly p = P("x^100");
  p.set_coeff(100, false);
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
}

TEST_CASE("addition") {
  CHECK(P("x^2+1") + P("x^2+x") == P("x+1"));
  const Gf2Poly p = P("x^5+x^2+1");
  CHECK((p + p).is_zero());
  CHECK(P("x^4+x+1") + Gf2Poly() == P("x^4+x+1"));
}

TEST_CASE("multiplication") {
  CHECK(P("x+1") * P("x+1") == P("x^2+1"));
  CHECK(P("x^2+x+1") * P("x+1") == P("x^3+1"));
  CHECK(P("x^4+x+1") * Gf2Poly::one() == P("x^4+x+1"));
  CHECK((P("x^4+x+1") * Gf2Poly()).is_zero());
  CHECK(P("x^63+1") * P("x+1") == P("x^64+x^63+x+1"));
}

TEST_CASE("division") {
  auto [q, r] = xorcount::divmod(P("x^3+1"), P("x+1"));
  CHECK(q == P("x^2+x+1"));
  CHECK(r.is_zero());
  const Gf2Poly p = P("x^7+x^3+x");
  CHECK(xorcount::divmod(p, p).quotient.is_one());
  CHECK(xorcount::divmod(p, p).remainder.is_zero());
  auto small = xorcount::divmod(P("x^2"), P("x^3+1"));
  CHECK(small.quotient.is_zero());
  CHECK(small.remainder == P("x^2"));
  CHECK_THROWS_AS(xorcount::divmod(p, Gf2Poly()), std::domain_error);
}

TEST_CASE("gcd, lcm, pow") {
  CHECK(xorcount::gcd(P("x^3+1"), P("x^2+1")) == P("x+1"));
  CHECK(xorcount::lcm(P("x+1"), P("x^2+x+1")) == P("x^3+1"));
  CHECK(xorcount::pow(P("x+1"), 2) == P("x^2+1"));
  CHECK(xorcount::pow(P("x^3+x+1"), 0).is_one());
  CHECK(xorcount::pow(P("x^4+x^3+x^2+x+1"), 3).weight() >= 5);
}

TEST_CASE("irreducibility") {
  CHECK(xorcount::is_irreducible(P("x^4+x+1")));
  CHECK(xorcount::is_irreducible(P("x^4+x^3+x^2+x+1")));
  CHECK_FALSE(xorcount::is_irreducible(P("x^2+1")));
  CHECK(xorcount::smallest_factor(P("x^2+1")) == P("x+1"));
  CHECK_FALSE(xorcount::smallest_factor(P("x^4+x+1")).has_value());
  CHECK_THROWS_AS(xorcount::is_irreducible(Gf2Poly::one()), std::invalid_argument);
  CHECK_THROWS_AS(xorcount::is_irreducible(P("x^17+x^3+1")), std::out_of_range);
  CHECK(xorcount::is_irreducible(P("x^17+x^3+1"), 32));
}

TEST_CASE("irreducibility agrees with trial division up to degree 10") {
  for (Gf2Poly::Word bits = 2; bits < (1u << 11); ++bits) {
    const Gf2Poly p = Gf2Poly::from_bits(bits);
    CAPTURE(p.to_string());
    CHECK(xorcount::is_irreducible(p) == oracle::irreducible(p));
  }
}

TEST_CASE("enumerate irreducibles") {
  CHECK(xorcount::enumerate_irreducibles(2) == std::vector<Gf2Poly>{P("x^2+x+1")});
  CHECK(xorcount::enumerate_irreducibles(3) == std::vector<Gf2Poly>{P("x^3+x+1"), P("x^3+x^2+1")});
  CHECK(xorcount::enumerate_irreducibles(8, 3).empty());
  // Counts follow the necklace formula: 1, 1, 2, 3, 6, 9, 18, 30, 56, 99.
  const std::vector<std::size_t> counts{2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
  for (int d = 1; d <= 10; ++d) {
    auto list = xorcount::enumerate_irreducibles(d);
    CHECK(list.size() == counts[d - 1]);
    CHECK(std::is_sorted(list.begin(), list.end()));
    for (const auto& f : list) CHECK(oracle::irreducible(f));
  }
}

TEST_CASE("factor as power") {
  using xorcount::PowerFactorization;
  CHECK(xorcount::factor_as_power(P("x^4+x^2+1")) == PowerFactorization{P("x^2+x+1"), 2});
  CHECK(xorcount::factor_as_power(P("x^4+x+1")) == PowerFactorization{P("x^4+x+1"), 1});
  CHECK_FALSE(xorcount::factor_as_power(P("x^3+x^2")).has_value());
  CHECK(xorcount::factor_as_power(P("x^3+x^2+x+1")) == PowerFactorization{P("x+1"), 3});
  for (const auto& f : xorcount::enumerate_irreducibles(3)) {
    for (int d = 1; d <= 5; ++d) {
      CHECK(xorcount::factor_as_power(xorcount::pow(f, d)) == PowerFactorization{f, d});
    }
  }
  CHECK_FALSE(xorcount::factor_as_power(P("x^3+x+1") * P("x^3+x^2+1")).has_value());
}

TEST_CASE("ring laws against schoolbook arithmetic") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Gf2Poly a = random_poly(rng, 150);
    const Gf2Poly b = random_poly(rng, 150);
    const Gf2Poly c = random_poly(rng, 40);
    CHECK(oracle::coeffs(a * b) == oracle::mul(oracle::coeffs(a), oracle::coeffs(b)));
    CHECK(oracle::coeffs(a + b) == oracle::add(oracle::coeffs(a), oracle::coeffs(b)));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.squared() == a * a);
    CHECK(a.squared().weight() == a.weight());
    CHECK(a.squared().sqrt_if_square() == a);
    if (!c.is_zero()) {
      auto [q, r] = xorcount::divmod(a, c);
      CHECK(q * c + r == a);
      CHECK(r.degree() < c.degree());
      CHECK(oracle::coeffs(r) == oracle::mod(oracle::coeffs(a), oracle::coeffs(c)));
    }
  }
}

TEST_CASE("ordering follows the integer value of the bit string") {
  CHECK(P("x^2") < P("x^2+1"));
  CHECK(P("x^2+x+1") < P("x^3"));
  CHECK(Gf2Poly() < Gf2Poly::one());
  CHECK(P("x^70") > P("x^69+x^68"));
}
