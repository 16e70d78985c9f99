#pragma once

// Finite formal sums: key -> TPoly, zero coefficients never stored.

#include <map>
#include <utility>

#include "chromalg/tpoly.hpp"

namespace chromalg {

template <class Key>
class LinearCombination {
 public:
  using map_type = std::map<Key, TPoly>;

  LinearCombination() = default;
  static LinearCombination single(const Key& k, const TPoly& c = TPoly(1)) {
    LinearCombination r;
    r.add(k, c);
    return r;
  }

  void add(const Key& k, const TPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TPoly coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? TPoly() : it->second;
  }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const TPoly& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a,
                                     const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a,
                                     const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator*(LinearCombination a, const TPoly& s) {
    return a *= s;
  }
  friend LinearCombination operator*(const TPoly& s, LinearCombination a) {
    return a *= s;
  }

  template <class F>
  LinearCombination filter(F&& keep) const {
    LinearCombination r;
    for (const auto& [k, c] : terms_)
      if (keep(k)) r.terms_.emplace(k, c);
    return r;
  }

  // Applies f to every coefficient, dropping zeros.
  template <class F>
  LinearCombination map_coeffs(F&& f) const {
    LinearCombination r;
    for (const auto& [k, c] : terms_) r.add(k, f(c));
    return r;
  }

  friend bool operator==(const LinearCombination& a,
                         const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

}  // namespace chromalg
