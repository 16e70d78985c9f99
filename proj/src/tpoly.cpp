#include "chromalg/tpoly.hpp"

#include <algorithm>

namespace chromalg {

TPoly::TPoly(long c) : c_{mpz_class(c)} { trim(); }
TPoly::TPoly(const mpz_class& c) : c_{c} { trim(); }
TPoly::TPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::monomial(int power, const mpz_class& c) {
  std::vector<mpz_class> v(power + 1);
  v[power] = c;
  return TPoly(std::move(v));
}

void TPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class TPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : mpz_class(0);
}

mpz_class TPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

mpz_class TPoly::eval(const mpz_class& t) const {
  mpz_class s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + *it;
  return s;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return TPoly(std::move(r));
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly& TPoly::operator*=(const mpz_class& k) {
  for (auto& x : c_) x *= k;
  trim();
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= p.degree(); ++i) {
    const mpz_class& c = p.coeffs()[i];
    if (c == 0) continue;
    std::string mag = mpz_class(abs(c)).get_str();
    if (!s.empty()) s += c < 0 ? "-" : "+";
    else if (c < 0) s += "-";
    if (i == 0) {
      s += mag;
    } else {
      if (mag != "1") s += mag;
      s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace chromalg
