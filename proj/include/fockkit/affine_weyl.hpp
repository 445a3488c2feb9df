#pragma once

// The affine symmetric group in window notation, its linear and dot actions
// on affine weights t* = C delta + C^m + C omega_0, Bruhat order,
// nu-dominant projection, antidominant representatives and the order ⊴ on
// nu-dominant affine weights.
//
// An affine permutation is a bijection w of Z with w(i + m) = w(i) + m and
// sum_{i=1..m} w(i) = m(m+1)/2, stored through its window [w(1), ..., w(m)].
// Simple reflections: s_i (1 <= i < m) swaps i and i+1, s_0 swaps 0 and 1
// (mod m). Finite S_m is the subgroup of windows permuting {1..m}.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fockkit/combinatorics.hpp"
#include "fockkit/error.hpp"
#include "fockkit/rational.hpp"

namespace fockkit {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t mod_pos(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

class AffinePermutation {
public:
  AffinePermutation() = default;

  explicit AffinePermutation(std::vector<std::int64_t> window) : w_(std::move(window)) {
    const auto m = static_cast<std::int64_t>(w_.size());
    require(m >= 1, "affine permutation needs m >= 1");
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::int64_t sum = 0;
    for (auto x : w_) {
      auto r = mod_pos(x, m);
      require(!seen[r], "window entries must be distinct modulo m");
      seen[r] = 1;
      sum += x;
    }
    require(sum == m * (m + 1) / 2, "window sum must equal m(m+1)/2");
  }

  static AffinePermutation identity(int m) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    return from_window_unchecked(std::move(w));
  }

  // s_i, 0 <= i < m.
  static AffinePermutation simple(int i, int m) {
    require(m >= 2 && i >= 0 && i < m, "simple reflection index out of range");
    return identity(m).times_simple(i);
  }

  // Reflection in the real root (eps_a - eps_b) + k delta, a != b in 1..m.
  static AffinePermutation reflection(int a, int b, std::int64_t k, int m) {
    require(a != b && a >= 1 && b >= 1 && a <= m && b <= m, "bad root indices");
    auto w = identity(m);
    w.w_[a - 1] = b + k * m;
    w.w_[b - 1] = a - k * m;
    return w;
  }

  // Translation by tau in the root lattice (integer vector with zero sum).
  static AffinePermutation translation(const std::vector<std::int64_t>& tau) {
    const auto m = static_cast<std::int64_t>(tau.size());
    std::vector<std::int64_t> w(tau.size());
    for (std::int64_t i = 0; i < m; ++i) w[i] = i + 1 + m * tau[i];
    return AffinePermutation(std::move(w));
  }

  static AffinePermutation from_word(const std::vector<int>& word, int m) {
    auto w = identity(m);
    for (int i : word) w = w.times_simple(i);
    return w;
  }

  int rank() const { return static_cast<int>(w_.size()); }
  const std::vector<std::int64_t>& window() const { return w_; }

  // w(j) for any integer j.
  std::int64_t operator()(std::int64_t j) const {
    const auto m = static_cast<std::int64_t>(w_.size());
    std::int64_t r = mod_pos(j - 1, m);
    return w_[r] + (j - 1 - r);
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] != static_cast<std::int64_t>(i) + 1) return false;
    return true;
  }

  bool is_finite() const {
    const auto m = static_cast<std::int64_t>(w_.size());
    return std::all_of(w_.begin(), w_.end(), [m](std::int64_t x) { return x >= 1 && x <= m; });
  }

  // (this ∘ other)(i) = this(other(i))
  AffinePermutation operator*(const AffinePermutation& other) const {
    require(rank() == other.rank(), "rank mismatch in product");
    std::vector<std::int64_t> out(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) out[i] = (*this)(other.w_[i]);
    return from_window_unchecked(std::move(out));
  }

  AffinePermutation inverse() const {
    const auto m = static_cast<std::int64_t>(w_.size());
    std::vector<std::int64_t> out(w_.size());
    for (std::int64_t i = 1; i <= m; ++i) {
      std::int64_t x = w_[i - 1];
      std::int64_t r = mod_pos(x - 1, m);
      out[r] = i - (x - 1 - r);
    }
    return from_window_unchecked(std::move(out));
  }

  // Coxeter length: sum_{i<j} |floor((w(j) - w(i)) / m)|.
  int length() const {
    const auto m = static_cast<std::int64_t>(w_.size());
    std::int64_t len = 0;
    for (std::int64_t i = 0; i < m; ++i)
      for (std::int64_t j = i + 1; j < m; ++j) {
        auto f = floor_div(w_[j] - w_[i], m);
        len += f < 0 ? -f : f;
      }
    return static_cast<int>(len);
  }

  // this * s_i
  AffinePermutation times_simple(int i) const {
    const int m = rank();
    auto out = w_;
    if (i == 0) {
      out[0] = w_[m - 1] - m;
      out[m - 1] = w_[0] + m;
    } else {
      std::swap(out[i - 1], out[i]);
    }
    return from_window_unchecked(std::move(out));
  }

  // s_i * this
  AffinePermutation simple_times(int i) const {
    const auto m = static_cast<std::int64_t>(w_.size());
    auto out = w_;
    for (auto& x : out) {
      auto r = mod_pos(x, m);
      if (r == i) ++x;
      else if (r == mod_pos(i + 1, m)) --x;
    }
    return from_window_unchecked(std::move(out));
  }

  bool has_right_descent(int i) const {
    const int m = rank();
    if (i == 0) return w_[m - 1] - m > w_[0];
    return w_[i - 1] > w_[i];
  }

  bool has_left_descent(int i) const { return inverse().has_right_descent(i); }

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

private:
  static AffinePermutation from_window_unchecked(std::vector<std::int64_t> w) {
    AffinePermutation p;
    p.w_ = std::move(w);
    return p;
  }

  std::vector<std::int64_t> w_;
};

struct AffinePermutationHash {
  std::size_t operator()(const AffinePermutation& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w.window()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Simple reflections generating the group: 1..m-1 for finite S_m, 0..m-1 for
// the affine group.
inline std::vector<int> generators(int m, bool affine) {
  std::vector<int> g;
  if (affine && m >= 2) g.push_back(0);
  for (int i = 1; i < m; ++i) g.push_back(i);
  return g;
}

struct LengthAndWord {
  int length;
  std::vector<int> word;
};

// Lexicographically first reduced word (greedy smallest left descent).
inline LengthAndWord length_and_reduce(const AffinePermutation& w) {
  LengthAndWord out{w.length(), {}};
  auto cur = w;
  const int m = w.rank();
  while (!cur.is_identity()) {
    auto inv = cur.inverse();
    int pick = -1;
    for (int i = 0; i < m; ++i)
      if (inv.has_right_descent(i)) {
        pick = i;
        break;
      }
    out.word.push_back(pick);
    cur = cur.simple_times(pick);
  }
  return out;
}

// Bruhat order via the lifting property: for a right descent s of w,
// v <= w iff min(v, vs) <= ws.
class BruhatOrder {
public:
  bool leq(const AffinePermutation& v, const AffinePermutation& w) {
    return leq_impl(v, v.length(), w, w.length());
  }

private:
  bool leq_impl(const AffinePermutation& v, int lv, const AffinePermutation& w, int lw) {
    if (lv > lw) return false;
    if (lv == lw) return v == w;
    if (lv == 0) return true;
    auto key = std::make_pair(v, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int s = -1;
    for (int i = 0; i < w.rank(); ++i)
      if (w.has_right_descent(i)) {
        s = i;
        break;
      }
    auto ws = w.times_simple(s);
    bool result;
    if (v.has_right_descent(s))
      result = leq_impl(v.times_simple(s), lv - 1, ws, lw - 1);
    else
      result = leq_impl(v, lv, ws, lw - 1);
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::map<std::pair<AffinePermutation, AffinePermutation>, bool> memo_;
};

inline bool bruhat_leq(const AffinePermutation& v, const AffinePermutation& w) {
  BruhatOrder order;
  return order.leq(v, w);
}

// ---------------------------------------------------------------------------
// Affine weights.

struct AffineWeight {
  Rational delta;                  // coefficient of delta
  std::vector<Rational> classical; // coordinates in eps_1..eps_m
  Rational level;                  // coefficient of omega_0

  int rank() const { return static_cast<int>(classical.size()); }

  static AffineWeight zero(int m) { return {0, std::vector<Rational>(static_cast<std::size_t>(m)), 0}; }
  static AffineWeight delta_weight(int m) { auto x = zero(m); x.delta = 1; return x; }
  static AffineWeight omega0(int m) { auto x = zero(m); x.level = 1; return x; }
  static AffineWeight eps(int i, int m) { auto x = zero(m); x.classical[i - 1] = 1; return x; }
  static AffineWeight from_classical(const std::vector<Rational>& c, Rational level = 0,
                                     Rational delta = 0) {
    return {std::move(delta), c, std::move(level)};
  }

  AffineWeight& operator+=(const AffineWeight& o) {
    delta += o.delta;
    level += o.level;
    for (std::size_t i = 0; i < classical.size(); ++i) classical[i] += o.classical.at(i);
    return *this;
  }
  AffineWeight& operator-=(const AffineWeight& o) {
    delta -= o.delta;
    level -= o.level;
    for (std::size_t i = 0; i < classical.size(); ++i) classical[i] -= o.classical.at(i);
    return *this;
  }
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator*(const Rational& s, AffineWeight a) {
    a.delta *= s;
    a.level *= s;
    for (auto& c : a.classical) c *= s;
    return a;
  }

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  friend bool operator<(const AffineWeight& a, const AffineWeight& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.delta != b.delta) return a.delta < b.delta;
    return a.classical < b.classical;
  }
};

// <omega_0 : delta> = 1, <eps_i : eps_j> = delta_ij, <delta:delta> = <omega_0:omega_0> = 0.
inline Rational pairing(const AffineWeight& x, const AffineWeight& y) {
  Rational acc = x.delta * y.level + x.level * y.delta;
  for (std::size_t i = 0; i < x.classical.size(); ++i) acc += x.classical[i] * y.classical.at(i);
  return acc;
}

// rho-hat = rho + m omega_0
inline AffineWeight rho_hat(int m) {
  auto r = rho(m);
  AffineWeight x = AffineWeight::zero(m);
  for (int i = 0; i < m; ++i) x.classical[i] = r[i];
  x.level = m;
  return x;
}

// Real affine root (eps_a - eps_b) + k delta.
struct AffineRoot {
  int a;
  int b;
  std::int64_t k;

  bool positive() const { return k > 0 || (k == 0 && a < b); }

  AffineWeight as_weight(int m) const {
    auto x = AffineWeight::zero(m);
    x.classical[a - 1] += 1;
    x.classical[b - 1] -= 1;
    x.delta = k;
    return x;
  }

  static AffineRoot simple(int i, int m) {
    if (i == 0) return {m, 1, 1};  // alpha_0 = delta - eps_1 + eps_m
    return {i, i + 1, 0};
  }
};

inline Rational pairing(const AffineWeight& x, const AffineRoot& alpha) {
  return x.classical[alpha.a - 1] - x.classical[alpha.b - 1] + alpha.k * x.level;
}

// Linear action. Writing w = t_tau ∘ sigma with w(i) = sigma(i) + m k_i and
// tau_{sigma(i)} = k_i: sigma permutes coordinates, then
// t_tau (d, x, L) = (d - <x:tau> - L|tau|^2/2, x + L tau, L).
inline AffineWeight act(const AffinePermutation& w, const AffineWeight& x) {
  const int m = w.rank();
  require(x.rank() == m, "rank mismatch between permutation and weight");
  AffineWeight out = x;
  std::vector<std::int64_t> tau(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    std::int64_t wi = w.window()[i - 1];
    std::int64_t sigma = mod_pos(wi - 1, m) + 1;
    tau[sigma - 1] = (wi - sigma) / m;
    out.classical[sigma - 1] = x.classical[i - 1];
  }
  Rational x_dot_tau = 0;
  std::int64_t tau_sq = 0;
  for (int j = 0; j < m; ++j) {
    x_dot_tau += out.classical[j] * tau[j];
    tau_sq += tau[j] * tau[j];
  }
  out.delta = x.delta - x_dot_tau - x.level * Rational(tau_sq, 2);
  for (int j = 0; j < m; ++j) out.classical[j] += x.level * tau[j];
  return out;
}

// s_alpha(x) = x - <x:alpha> alpha
inline AffineWeight reflect(const AffineRoot& alpha, const AffineWeight& x) {
  return x - pairing(x, alpha) * alpha.as_weight(x.rank());
}

// w • x = w(x + rho-hat) - rho-hat
inline AffineWeight dot_act(const AffinePermutation& w, const AffineWeight& x) {
  auto rh = rho_hat(x.rank());
  return act(w, x + rh) - rh;
}

inline AffineWeight dot_act(const AffineRoot& alpha, const AffineWeight& x) {
  auto rh = rho_hat(x.rank());
  return reflect(alpha, x + rh) - rh;
}

// lambda-hat = lambda + c omega_0 with c = kappa - m, and
// lambda-tilde = lambda-hat + z delta, z = -<lambda : 2 rho + lambda> / 2 kappa.
inline AffineWeight tilde_weight(const std::vector<Rational>& lambda, const Rational& kappa) {
  const int m = static_cast<int>(lambda.size());
  require(kappa != 0, "kappa must be nonzero");
  auto r = rho(m);
  Rational q = 0;
  for (int i = 0; i < m; ++i) q += lambda[i] * (2 * r[i] + lambda[i]);
  return {-q / (2 * kappa), lambda, kappa - m};
}

// ---------------------------------------------------------------------------
// nu-dominance.

// lambda is nu-dominant iff (lambda + rho)_i - (lambda + rho)_{i+1} is a
// positive integer inside every block.
inline bool is_nu_dominant(const AffineWeight& lambda, const Composition& nu) {
  for (const auto& b : nu.blocks())
    for (int j = b.first; j < b.last; ++j) {
      Rational d = lambda.classical[j - 1] - lambda.classical[j];
      if (!is_integer(d) || d < 0) return false;
    }
  return true;
}

inline bool is_nu_regular(const AffineWeight& x, const Composition& nu) {
  for (const auto& b : nu.blocks())
    for (int i = b.first; i <= b.last; ++i)
      for (int j = i + 1; j <= b.last; ++j)
        if (x.classical[i - 1] == x.classical[j - 1]) return false;
  return true;
}

inline bool is_nu_integral(const AffineWeight& x, const Composition& nu) {
  for (const auto& b : nu.blocks())
    for (int i = b.first; i < b.last; ++i)
      if (!is_integer(x.classical[i - 1] - x.classical[i])) return false;
  return true;
}

struct NuProjection {
  AffineWeight weight;
  int sign;
};

// The unique w in S_nu with w • lambda nu-dominant, and (-1)^{l(w)}.
inline NuProjection nu_project(const AffineWeight& lambda, const Composition& nu) {
  require(nu.total() == lambda.rank(), "composition size differs from weight rank");
  auto shifted = lambda + rho_hat(lambda.rank());
  if (!is_nu_integral(shifted, nu)) fail(errc::invalid_argument, "weight is not nu-integral");
  if (!is_nu_regular(shifted, nu)) fail(errc::not_nu_regular, "lambda + rho-hat is not nu-regular");
  int inversions = 0;
  for (const auto& b : nu.blocks()) {
    auto first = shifted.classical.begin() + (b.first - 1);
    auto last = shifted.classical.begin() + b.last;
    for (auto i = first; i != last; ++i)
      for (auto j = i + 1; j != last; ++j)
        if (*i < *j) ++inversions;
    std::sort(first, last, std::greater<>());
  }
  return {shifted - rho_hat(lambda.rank()), inversions % 2 == 0 ? 1 : -1};
}

// x - y in N Pi-hat^+ (nonnegative integer combination of alpha_0..alpha_{m-1}).
inline bool in_positive_root_cone(const AffineWeight& x, const AffineWeight& y) {
  if (x.level != y.level) return false;
  Rational dd = x.delta - y.delta;
  if (!is_integer(dd) || dd < 0) return false;
  Rational partial = dd;
  Rational total = 0;
  const int m = x.rank();
  for (int i = 0; i < m; ++i) {
    Rational dx = x.classical[i] - y.classical[i];
    if (!is_integer(dx)) return false;
    total += dx;
    if (i < m - 1) {
      partial += dx;
      if (partial < 0) return false;
    }
  }
  return total == 0;
}

// ---------------------------------------------------------------------------
// Antidominant representatives.

struct AntidominantRep {
  AffineWeight gamma;
  AffinePermutation v;
  std::vector<int> stabilizer;  // simple reflections fixing gamma (dot action)
};

// For lambda with <lambda + rho-hat : delta> = kappa a negative integer and
// integral classical differences: the antidominant gamma in the dot orbit and
// the minimal v with v • gamma = lambda.
inline AntidominantRep antidominant_rep(const AffineWeight& lambda) {
  const int m = lambda.rank();
  auto x = lambda + rho_hat(m);
  const Rational kappa = x.level;
  if (kappa >= 0) fail(errc::unsupported, "kappa must be negative");
  if (!is_integer(kappa))
    fail(errc::unsupported, "non-integral kappa gives a proper integral root subsystem");
  for (int i = 1; i < m; ++i)
    if (!is_integer(x.classical[i] - x.classical[0]))
      fail(errc::unsupported, "classical part of lambda + rho-hat is not integral");
  std::vector<int> word;
  if (m >= 2) {
    for (;;) {
      int pick = -1;
      for (int i = 0; i < m; ++i)
        if (pairing(x, AffineRoot::simple(i, m)) > 0) {
          pick = i;
          break;
        }
      if (pick < 0) break;
      x = reflect(AffineRoot::simple(pick, m), x);
      word.push_back(pick);
    }
  }
  AntidominantRep rep{x - rho_hat(m), AffinePermutation::from_word(word, m), {}};
  if (m >= 2)
    for (int i = 0; i < m; ++i)
      if (pairing(x, AffineRoot::simple(i, m)) == 0) rep.stabilizer.push_back(i);
  return rep;
}

// ---------------------------------------------------------------------------
// The order ⊴ on nu-dominant affine weights.

struct TriangleOptions {
  // Only delta-free roots are used (kappa treated as irrational).
  bool irrational_kappa = false;
  std::size_t node_budget = 1'000'000;
};

// Weights lambda with lambda ↑ mu: for a positive real root alpha outside
// Pi_nu^+ with <mu + rho-hat : alpha> a positive integer and s_alpha • mu +
// rho-hat nu-regular, lambda = (s_alpha • mu)_+ < mu.
inline std::vector<AffineWeight> up_arrow_predecessors(const AffineWeight& mu, const Composition& nu,
                                                       const TriangleOptions& opts = {}) {
  const int m = mu.rank();
  auto x = mu + rho_hat(m);
  const Rational kappa = x.level;
  std::set<AffineWeight> out;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      if (a == b) continue;
      Rational base = x.classical[a - 1] - x.classical[b - 1];
      std::int64_t kmin = a < b ? 0 : 1;
      std::int64_t kmax = kmin;
      if (!opts.irrational_kappa && kappa < 0) {
        // base + k kappa > 0  <=>  k < base / |kappa|
        Rational bound = base / (-kappa);
        Integer f = floor_of(bound);
        if (is_integer(bound)) f -= 1;
        kmax = static_cast<std::int64_t>(f);
      } else if (!opts.irrational_kappa) {
        fail(errc::unsupported, "order search requires kappa < 0 or an irrational kappa");
      }
      if (opts.irrational_kappa) kmax = std::min<std::int64_t>(kmax, 0);
      bool same_block = nu.block_of(a) == nu.block_of(b);
      for (std::int64_t k = kmin; k <= kmax; ++k) {
        if (k == 0 && same_block) continue;  // alpha in Pi_nu^+
        AffineRoot alpha{a, b, k};
        Rational n = pairing(x, alpha);
        if (n <= 0 || !is_integer(n)) continue;
        auto reflected = reflect(alpha, x);
        if (!is_nu_regular(reflected, nu) || !is_nu_integral(reflected, nu)) continue;
        auto proj = nu_project(reflected - rho_hat(m), nu).weight;
        if (proj == mu || !in_positive_root_cone(mu, proj)) continue;
        out.insert(std::move(proj));
      }
    }
  return {out.begin(), out.end()};
}

// All lambda with lambda ⊴ mu (mu included).
inline std::vector<AffineWeight> triangle_down_set(const AffineWeight& mu, const Composition& nu,
                                                   const TriangleOptions& opts = {}) {
  std::set<AffineWeight> seen{mu};
  std::deque<AffineWeight> frontier{mu};
  while (!frontier.empty()) {
    auto cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& nxt : up_arrow_predecessors(cur, nu, opts))
      if (seen.insert(nxt).second) {
        if (seen.size() > opts.node_budget)
          fail(errc::budget_exceeded, "order search exceeded its node budget");
        frontier.push_back(std::move(nxt));
      }
  }
  return {seen.begin(), seen.end()};
}

// lambda ⊴ mu, by downward breadth-first search from mu pruned to weights
// lying above lambda in the root order.
inline bool order_triangle_leq(const AffineWeight& lambda, const AffineWeight& mu,
                               const Composition& nu, const TriangleOptions& opts = {}) {
  if (lambda == mu) return true;
  if (!in_positive_root_cone(mu, lambda)) return false;
  std::set<AffineWeight> seen{mu};
  std::deque<AffineWeight> frontier{mu};
  while (!frontier.empty()) {
    auto cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& nxt : up_arrow_predecessors(cur, nu, opts)) {
      if (nxt == lambda) return true;
      if (!in_positive_root_cone(nxt, lambda)) continue;
      if (seen.insert(nxt).second) {
        if (seen.size() > opts.node_budget)
          fail(errc::budget_exceeded, "order search exceeded its node budget");
        frontier.push_back(std::move(nxt));
      }
    }
  }
  return false;
}

}  // namespace fockkit
