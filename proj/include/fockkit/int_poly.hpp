#pragma once

// Integer polynomials (ascending coefficients) and Laurent polynomials.
// Coefficients are 64-bit with overflow detection: a result either is exact
// or the computation fails.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "fockkit/error.hpp"

namespace fockkit {

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::unsupported, "integer overflow in polynomial arithmetic");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::unsupported, "integer overflow in polynomial arithmetic");
  return r;
}
}  // namespace detail

class IntPoly {
public:
  IntPoly() = default;
  IntPoly(std::int64_t c) {  // NOLINT: constants convert implicitly
    if (c != 0) c_.push_back(c);
  }
  explicit IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(int power, std::int64_t coeff = 1) {
    if (coeff == 0) return {};
    std::vector<std::int64_t> c(static_cast<std::size_t>(power) + 1, 0);
    c.back() = coeff;
    return IntPoly(std::move(c));
  }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  std::int64_t eval(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = detail::checked_add(detail::checked_mul(acc, x), *it);
    return acc;
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = detail::checked_add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) { return *this += -o; }
  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = detail::checked_add(r[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
    return IntPoly(std::move(r));
  }
  // multiply by q^k
  IntPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> r(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPoly(std::move(r));
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(const char* var = "q") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::int64_t a = c_[i];
      if (!out.empty()) out += a < 0 ? " - " : " + ";
      else if (a < 0) out += "-";
      std::int64_t mag = a < 0 ? -a : a;
      if (i == 0 || mag != 1) out += std::to_string(mag);
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

// sum_k c_k v^{low + k}
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c) {  // NOLINT
    if (c != 0) c_.push_back(c);
  }
  static LaurentPoly monomial(int power, std::int64_t coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) {
      p.low_ = power;
      p.c_.push_back(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int power) const {
    int i = power - low_;
    return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
    std::vector<std::int64_t> r(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + (low_ - lo)] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      r[i + (o.low_ - lo)] = detail::checked_add(r[i + (o.low_ - lo)], o.c_[i]);
    c_ = std::move(r);
    low_ = lo;
    normalize();
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] = detail::checked_add(r.c_[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
    r.normalize();
    return r;
  }
  // multiply by v^k
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }
  // v -> v^{-1}
  LaurentPoly bar() const {
    LaurentPoly r;
    if (is_zero()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.low_ = -high();
    return r;
  }

  std::int64_t eval_at_one() const {
    std::int64_t acc = 0;
    for (auto x : c_) acc = detail::checked_add(acc, x);
    return acc;
  }
  std::int64_t eval_at_minus_one() const {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      bool odd = ((low_ + static_cast<int>(i)) % 2) != 0;
      acc = detail::checked_add(acc, odd ? -c_[i] : c_[i]);
    }
    return acc;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
  }

private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
  }

  int low_ = 0;
  std::vector<std::int64_t> c_;
};

}  // namespace fockkit
