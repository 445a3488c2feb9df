#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "fockkit/error.hpp"
#include "fockkit/rational.hpp"

namespace fockkit {

namespace detail {

using RatPoly = std::vector<Rational>;  // ascending coefficients

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient a / b for monic b.
inline RatPoly divide_monic(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  RatPoly q(a.size() - db, 0);
  for (std::size_t d = a.size(); d-- > db;) {
    Rational c = a[d];
    if (c == 0) continue;
    q[d - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[d - db + i] -= c * b[i];
  }
  trim(a);
  if (!a.empty()) fail(errc::internal_non_divisible, "cyclotomic polynomial division left a remainder");
  return q;
}

inline RatPoly compute_cyclotomic(int n) {
  RatPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, compute_cyclotomic(d));
  return p;
}

inline const RatPoly& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, RatPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  auto p = compute_cyclotomic(n);
  std::lock_guard lock(mu);
  return memo.emplace(n, std::move(p)).first->second;
}

}  // namespace detail

// Element of Q(eps), eps = exp(2 pi i / l), as a polynomial in eps of degree
// below phi(l), reduced modulo the l-th cyclotomic polynomial.
class CycloNumber {
public:
  CycloNumber() = default;
  explicit CycloNumber(int ell, Rational value = 0) : ell_(ell) {
    require(ell >= 1, "cyclotomic order must be positive");
    c_.assign(degree(), 0);
    c_[0] = std::move(value);
  }

  // eps^k
  static CycloNumber eps_power(int ell, std::int64_t k) {
    CycloNumber out(ell);
    std::int64_t r = ((k % ell) + ell) % ell;
    detail::RatPoly raw(static_cast<std::size_t>(r) + 1, 0);
    raw[r] = 1;
    out.assign_reduced(std::move(raw));
    return out;
  }

  int ell() const { return ell_; }
  std::size_t degree() const { return detail::cyclotomic_polynomial(ell_).size() - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  CycloNumber& operator+=(const CycloNumber& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycloNumber& operator-=(const CycloNumber& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycloNumber& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator-(CycloNumber a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend CycloNumber operator*(CycloNumber a, const Rational& s) { return a *= s; }
  friend CycloNumber operator*(const Rational& s, CycloNumber a) { return a *= s; }

  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    a.check_same(b);
    detail::RatPoly raw(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) raw[i + j] += a.c_[i] * b.c_[j];
    }
    CycloNumber out(a.ell_);
    out.assign_reduced(std::move(raw));
    return out;
  }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

  // Solves x * this = 1 by Gaussian elimination on the multiplication matrix.
  CycloNumber inverse() const {
    if (is_zero()) fail(errc::invalid_argument, "division by zero in cyclotomic field");
    const std::size_t d = c_.size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1, 0));
    for (std::size_t j = 0; j < d; ++j) {
      auto col = *this * eps_power(ell_, static_cast<std::int64_t>(j));
      for (std::size_t i = 0; i < d; ++i) a[i][j] = col.c_[i];
    }
    a[0][d] = 1;
    for (std::size_t col = 0; col < d; ++col) {
      std::size_t piv = col;
      while (a[piv][col] == 0) ++piv;
      std::swap(a[piv], a[col]);
      for (std::size_t r = 0; r < d; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col] / a[col][col];
        for (std::size_t k = col; k <= d; ++k) a[r][k] -= f * a[col][k];
      }
    }
    CycloNumber out(ell_);
    for (std::size_t i = 0; i < d; ++i) out.c_[i] = a[i][d] / a[i][i];
    return out;
  }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) { return a.ell_ == b.ell_ && a.c_ == b.c_; }

  // "a + b e + c e^2", e standing for eps
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::string coef = fockkit::to_string(c_[i]);
      std::string mono = i == 0 ? "" : (i == 1 ? "e" : "e^" + std::to_string(i));
      if (!out.empty()) {
        if (coef[0] == '-') {
          out += " - ";
          coef.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (mono.empty()) out += coef;
      else if (coef == "1") out += mono;
      else if (coef == "-1") out += "-" + mono;
      else out += coef + " " + mono;
    }
    return out.empty() ? "0" : out;
  }

private:
  void check_same(const CycloNumber& o) const {
    if (ell_ != o.ell_) fail(errc::invalid_argument, "mixing different cyclotomic fields");
  }

  void assign_reduced(detail::RatPoly raw) {
    const auto& phi = detail::cyclotomic_polynomial(ell_);
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = raw.size(); k-- > d;) {
      Rational c = raw[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= d; ++i) raw[k - d + i] -= c * phi[i];
    }
    raw.resize(d, 0);
    c_ = std::move(raw);
  }

  int ell_ = 1;
  std::vector<Rational> c_{Rational(0)};
};

}  // namespace fockkit
