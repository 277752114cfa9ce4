#include "doctest.h"
#include "skewqp/cyclotomic.hpp"

#include <random>

using namespace skewqp;

namespace {

// Test-side exact polynomial division over the integers, independent of the
// library's implementation.  Returns the quotient; requires exactness.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& div) {
  std::vector<long> quot(num.size() - div.size() + 1, 0);
  for (size_t shift = quot.size(); shift-- > 0;) {
    long c = num[shift + div.size() - 1] / div.back();
    quot[shift] = c;
    for (size_t i = 0; i < div.size(); ++i) num[shift + i] -= c * div[i];
  }
  for (long r : num) REQUIRE(r == 0);
  return quot;
}

std::vector<long> multiply(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Cyclotomic random_element(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> poly(euler_totient(order));
  for (auto& c : poly) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return Cyclotomic::from_poly(order, std::move(poly));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});

  // Oracle: Phi_6 = (x^6 - 1) / (Phi_1 * Phi_2 * Phi_3), divided exactly.
  std::vector<long> divisor = multiply(multiply({-1, 1}, {1, 1}), {1, 1, 1});
  std::vector<long> phi6 = divide_exact({-1, 0, 0, 0, 0, 0, 1}, divisor);
  CHECK(phi6 == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});

  CHECK(euler_totient(1) == 1);
  CHECK(euler_totient(12) == 4);
  for (int n = 1; n <= 16; ++n)
    CHECK(cyclotomic_polynomial(n).size() == static_cast<size_t>(euler_totient(n)) + 1);
}

TEST_CASE("zeta powers") {
  CHECK(Cyclotomic::zeta_pow(3, 3).is_one());
  CHECK(Cyclotomic::zeta_pow(3, 2) ==
        Cyclotomic::from_poly(3, {Rational(-1), Rational(-1)}));  // -1 - z
  // Reduce x^2 by the Phi_6 computed above: remainder x - 1.
  CHECK(Cyclotomic::zeta_pow(6, 2) == Cyclotomic::zeta_pow(6, 1) - Cyclotomic::one(6));
  CHECK(Cyclotomic::zeta_pow(6, 2).coeffs() == std::vector<Rational>{Rational(-1), Rational(1)});
  CHECK(Cyclotomic::zeta_pow(5, -1) == Cyclotomic::zeta_pow(5, 4));
}

TEST_CASE("basic arithmetic") {
  // n=3: z + z^2 = -1.
  CHECK(Cyclotomic::zeta_pow(3, 1) + Cyclotomic::zeta_pow(3, 2) == Cyclotomic(3, -1));
  // n=4: inv(z) = z^3 = -z.
  CHECK(Cyclotomic::zeta_pow(4, 1).inv() == Cyclotomic::zeta_pow(4, 3));
  CHECK(Cyclotomic::zeta_pow(4, 3) == -Cyclotomic::zeta_pow(4, 1));
  // n=5: (1+z) * inv(1+z) = 1.
  Cyclotomic x = Cyclotomic::one(5) + Cyclotomic::zeta_pow(5, 1);
  CHECK((x * x.inv()).is_one());

  CHECK_THROWS_AS(Cyclotomic::zero(3).inv(), std::domain_error);
  CHECK_THROWS_AS(Cyclotomic::one(3) + Cyclotomic::one(4), std::invalid_argument);
  CHECK(Cyclotomic(3, Rational(2, 4)).coeffs()[0] == Rational(1, 2));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 400; ++trial) {
    int order = 1 + static_cast<int>(rng() % 12);
    Cyclotomic a = random_element(rng, order);
    Cyclotomic b = random_element(rng, order);
    Cyclotomic c = random_element(rng, order);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == Cyclotomic::zero(order));
    if (!a.is_zero()) CHECK((a * a.inv()).is_one());
  }
}

TEST_CASE("root of unity identities") {
  for (int n = 2; n <= 12; ++n) {
    Cyclotomic sum = Cyclotomic::zero(n);
    for (int i = 0; i < n; ++i) sum += Cyclotomic::zeta_pow(n, i);
    CHECK(sum.is_zero());
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    long a = static_cast<long>(rng() % 41) - 20;
    long b = static_cast<long>(rng() % 41) - 20;
    CHECK(Cyclotomic::zeta_pow(n, a) * Cyclotomic::zeta_pow(n, b) ==
          Cyclotomic::zeta_pow(n, a + b));
  }
}

TEST_CASE("printing") {
  CHECK(Cyclotomic::zero(4).str() == "0");
  CHECK((Cyclotomic(3, 1) - Cyclotomic::zeta_pow(3, 1)).str() == "1 - z");
  CHECK((Cyclotomic(5, Rational(-2, 3)) * Cyclotomic::zeta_pow(5, 2)).str() == "-2/3*z^2");
}
