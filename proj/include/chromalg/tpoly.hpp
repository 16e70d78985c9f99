#pragma once

// Polynomials in t with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace chromalg {

class TPoly {
 public:
  TPoly() = default;
  TPoly(long c);  // NOLINT: constants convert implicitly
  TPoly(const mpz_class& c);  // NOLINT
  explicit TPoly(std::vector<mpz_class> coeffs);
  static TPoly monomial(int power, const mpz_class& c = 1);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(int i) const;
  mpz_class at_one() const;
  mpz_class eval(const mpz_class& t) const;
  bool is_constant() const { return c_.size() <= 1; }

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly& operator*=(const mpz_class& k);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(TPoly a, const mpz_class& k) { return a *= k; }
  TPoly operator-() const;

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// "3", "1+t", "2+3t^2".
std::string to_string(const TPoly& p);

}  // namespace chromalg
