#include "skewqp/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skewqp {

namespace {

// Polynomials over Q, constant term first, no trailing zero coefficients.
using PolyQ = std::vector<Rational>;

void strip(PolyQ& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  strip(out);
  return out;
}

PolyQ poly_sub(PolyQ a, const PolyQ& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  strip(a);
  return a;
}

void poly_divmod(PolyQ num, const PolyQ& div, PolyQ& quot, PolyQ& rem) {
  strip(num);
  size_t dn = div.size();
  if (dn == 0) throw std::domain_error("poly_divmod: division by zero polynomial");
  if (num.size() < dn) {
    quot.clear();
    rem = std::move(num);
    return;
  }
  const Rational& lead = div.back();
  quot.assign(num.size() - dn + 1, Rational(0));
  for (size_t shift = num.size() - dn + 1; shift-- > 0;) {
    Rational c = num[shift + dn - 1] / lead;
    if (c == 0) continue;
    quot[shift] = c;
    for (size_t i = 0; i < dn; ++i) num[shift + i] -= c * div[i];
  }
  num.resize(dn - 1);
  strip(num);
  rem = std::move(num);
}

}  // namespace

int euler_totient(int n) {
  if (n < 1) throw std::invalid_argument("euler_totient: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::map<int, std::vector<Integer>> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
  PolyQ num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<Integer> phi_d = cyclotomic_polynomial(d);
    PolyQ div(phi_d.size());
    for (size_t i = 0; i < phi_d.size(); ++i) div[i] = Rational(phi_d[i]);
    PolyQ quot, rem;
    poly_divmod(std::move(num), div, quot, rem);
    if (!rem.empty()) throw std::logic_error("cyclotomic_polynomial: non-exact division");
    num = std::move(quot);
  }
  std::vector<Integer> result(num.size());
  for (size_t i = 0; i < num.size(); ++i) {
    if (num[i].get_den() != 1) throw std::logic_error("cyclotomic_polynomial: non-integer coefficient");
    result[i] = num[i].get_num();
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, result);
  }
  return result;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  coeffs_.assign(euler_totient(order), Rational(0));
}

Cyclotomic::Cyclotomic(int order, const Rational& constant) : Cyclotomic(order) {
  coeffs_[0] = constant;
  coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::from_poly(int order, std::vector<Rational> poly) {
  Cyclotomic result(order);
  std::vector<Integer> phi = cyclotomic_polynomial(order);
  PolyQ div(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) div[i] = Rational(phi[i]);
  PolyQ quot, rem;
  poly_divmod(std::move(poly), div, quot, rem);
  for (size_t i = 0; i < rem.size(); ++i) {
    rem[i].canonicalize();
    result.coeffs_[i] = rem[i];
  }
  return result;
}

Cyclotomic Cyclotomic::zeta_pow(int order, long k) {
  long r = k % order;
  if (r < 0) r += order;
  std::vector<Rational> poly(static_cast<size_t>(r) + 1, Rational(0));
  poly[static_cast<size_t>(r)] = 1;
  return from_poly(order, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

const Rational& Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("Cyclotomic: not a rational element");
  return coeffs_[0];
}

void Cyclotomic::check_order(const Cyclotomic& rhs) const {
  if (order_ != rhs.order_)
    throw std::invalid_argument("Cyclotomic: order mismatch (" + std::to_string(order_) + " vs " +
                                std::to_string(rhs.order_) + ")");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic result(*this);
  for (Rational& c : result.coeffs_) c = -c;
  return result;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_order(rhs);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  check_order(rhs);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_order(rhs);
  PolyQ prod = poly_mul(coeffs_, rhs.coeffs_);
  *this = from_poly(order_, std::move(prod));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (Rational& c : coeffs_) {
    c *= rhs;
    c.canonicalize();
  }
  return *this;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
  // Extended Euclid in Q[x] against Phi_n; Phi_n is irreducible, so the gcd
  // with any nonzero residue is a nonzero constant.
  std::vector<Integer> phi = cyclotomic_polynomial(order_);
  PolyQ r0(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) r0[i] = Rational(phi[i]);
  PolyQ r1(coeffs_);
  strip(r1);
  PolyQ u0;               // cofactor of *this in r0
  PolyQ u1{Rational(1)};  // cofactor of *this in r1
  while (r1.size() > 1) {
    PolyQ quot, rem;
    poly_divmod(r0, r1, quot, rem);
    PolyQ u2 = poly_sub(u0, poly_mul(quot, u1));
    r0 = std::move(r1);
    u0 = std::move(u1);
    r1 = std::move(rem);
    u1 = std::move(u2);
  }
  if (r1.empty()) throw std::logic_error("Cyclotomic::inv: gcd with Phi_n not constant");
  const Rational g = r1[0];
  for (Rational& c : u1) c /= g;
  return from_poly(order_, std::move(u1));
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    Rational a = coeffs_[i];
    if (a == 0) continue;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool print_coeff = (i == 0) || a != 1;
    if (print_coeff) out << a.get_str();
    if (i > 0) {
      if (print_coeff) out << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace skewqp
