#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockkit/cyclotomic.hpp"
#include "fockkit/error.hpp"
#include "fockkit/params.hpp"
#include "fockkit/rational.hpp"

namespace fockkit {

using Monomial = std::vector<int>;  // exponents of x_1..x_n

// g = sigma * eps_1^{a_1} ... eps_n^{a_n} in S_n ⋉ (D_l)^n, acting on
// polynomials by algebra automorphisms with g(x_i) = eps^{-a_i} x_{sigma(i)}.
struct GroupElement {
  std::vector<int> perm;  // 0-based images
  std::vector<int> exps;  // residues mod l

  static GroupElement identity(int n) {
    GroupElement g{std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int i = 0; i < n; ++i) g.perm[i] = i;
    return g;
  }

  // eps_i^p, i 1-based
  static GroupElement eps(int i, int p, int n, int l) {
    auto g = identity(n);
    g.exps[i - 1] = ((p % l) + l) % l;
    return g;
  }

  // s_{ij}^{(p)} = s_{ij} eps_i^p eps_j^{-p}
  static GroupElement reflection(int i, int j, int p, int n, int l) {
    require(i != j, "s_ij needs distinct indices");
    auto g = identity(n);
    std::swap(g.perm[i - 1], g.perm[j - 1]);
    g.exps[i - 1] = ((p % l) + l) % l;
    g.exps[j - 1] = ((-p % l) + l) % l;
    return g;
  }

  GroupElement inverse(int l) const {
    const std::size_t n = perm.size();
    GroupElement out{std::vector<int>(n), std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) out.perm[perm[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < n; ++i) out.exps[i] = ((-exps[out.perm[i]]) % l + l) % l;
    return out;
  }

  // (g h)(x_i) = g(h(x_i))
  GroupElement compose(const GroupElement& h, int l) const {
    const std::size_t n = perm.size();
    GroupElement out{std::vector<int>(n), std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      out.perm[i] = perm[h.perm[i]];
      out.exps[i] = (h.exps[i] + exps[h.perm[i]]) % l;
    }
    return out;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Polynomial in x_1..x_n over Q(eps).
class PolyN {
public:
  PolyN(int n, int l) : n_(n), l_(l) {}

  static PolyN monomial(const Monomial& e, const CycloNumber& c) {
    PolyN out(static_cast<int>(e.size()), c.ell());
    out.add_term(e, c);
    return out;
  }
  static PolyN monomial(const Monomial& e, int l) { return monomial(e, CycloNumber(l, 1)); }

  int nvars() const { return n_; }
  int ell() const { return l_; }
  const std::map<Monomial, CycloNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& e, const CycloNumber& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolyN& operator+=(const PolyN& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyN& operator-=(const PolyN& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend PolyN operator+(PolyN a, const PolyN& b) { return a += b; }
  friend PolyN operator-(PolyN a, const PolyN& b) { return a -= b; }
  friend PolyN operator*(const CycloNumber& s, const PolyN& f) {
    PolyN out(f.n_, f.l_);
    for (const auto& [e, c] : f.terms_) out.add_term(e, s * c);
    return out;
  }
  friend PolyN operator*(const Rational& s, const PolyN& f) { return CycloNumber(f.l_, s) * f; }
  friend bool operator==(const PolyN& a, const PolyN& b) { return a.terms_ == b.terms_; }

  // x_i f, i 1-based
  PolyN times_var(int i) const {
    PolyN out(n_, l_);
    for (const auto& [e0, c] : terms_) {
      Monomial e = e0;
      ++e[i - 1];
      out.terms_.emplace(std::move(e), c);
    }
    return out;
  }

  PolyN partial(int i) const {
    PolyN out(n_, l_);
    for (const auto& [e0, c] : terms_) {
      Monomial e = e0;
      int d = e[i - 1];
      if (d == 0) continue;
      --e[i - 1];
      out.add_term(e, c * Rational(d));
    }
    return out;
  }

  PolyN act(const GroupElement& g) const {
    PolyN out(n_, l_);
    for (const auto& [e, c] : terms_) {
      Monomial img(e.size(), 0);
      std::int64_t twist = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        img[g.perm[i]] += e[i];
        twist -= static_cast<std::int64_t>(g.exps[i]) * e[i];
      }
      out.add_term(img, CycloNumber::eps_power(l_, twist) * c);
    }
    return out;
  }

  // f / x_i, exact
  PolyN divide_by_var(int i) const {
    PolyN out(n_, l_);
    for (const auto& [e0, c] : terms_) {
      Monomial e = e0;
      if (e[i - 1] == 0) fail(errc::internal_non_divisible, "polynomial not divisible by x_" + std::to_string(i));
      --e[i - 1];
      out.terms_.emplace(std::move(e), c);
    }
    return out;
  }

  // f / (x_i - a x_j), exact; eliminates terms by decreasing x_i-degree.
  PolyN divide_linear(int i, int j, const CycloNumber& a) const {
    PolyN rem = *this, q(n_, l_);
    auto key = [&](const Monomial& e) { return e[i - 1]; };
    while (!rem.is_zero()) {
      auto it = std::max_element(rem.terms_.begin(), rem.terms_.end(),
                                 [&](const auto& x, const auto& y) { return key(x.first) < key(y.first); });
      Monomial e = it->first;
      CycloNumber c = it->second;
      if (e[i - 1] == 0)
        fail(errc::internal_non_divisible, "polynomial not divisible by x_" + std::to_string(i) + " - a x_" +
                                               std::to_string(j));
      --e[i - 1];
      q.add_term(e, c);
      Monomial ei = e, ej = e;
      ++ei[i - 1];
      ++ej[j - 1];
      rem.add_term(ei, -c);
      rem.add_term(ej, a * c);
    }
    return q;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

private:
  int n_, l_;
  std::map<Monomial, CycloNumber> terms_;
};

// All monomials of total degree <= max_deg in n variables.
inline std::vector<Monomial> monomials_up_to(int n, int max_deg) {
  std::vector<Monomial> out;
  Monomial cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      cur[i] = d;
      rec(i + 1, left - d);
    }
    cur[i] = 0;
  };
  rec(0, max_deg);
  return out;
}

// ---------------------------------------------------------------------------
// Parameters.

// H_{k,gamma}; gamma[p] for p = 0..l-1 (gamma_0 = 0 by convention of the
// sums over p != 0).
struct DunklParams {
  int l = 1;
  Rational k;
  std::vector<CycloNumber> gamma;
};

struct ParamConversion {
  DunklParams kg;
  Rational q_exponent;                   // q = exp(2 pi i h)
  std::vector<Rational> q_p_exponents;   // p = 1..l
};

// k = -h, gamma_p = -sum_{p'} eps^{-p p'} h_{p'};
// q_p exponent = h_1 + ... + h_{p-1} + (p-1)/l
inline ParamConversion param_convert(const CherednikParams& params) {
  const int l = params.level();
  ParamConversion out;
  out.kg.l = l;
  out.kg.k = -params.h;
  for (int p = 0; p < l; ++p) {
    CycloNumber g(l);
    for (int pp = 1; pp <= l; ++pp) g -= CycloNumber::eps_power(l, -static_cast<std::int64_t>(p) * pp) * params.h_p(pp);
    out.kg.gamma.push_back(g);
  }
  out.q_exponent = params.h;
  for (int p = 1; p <= l; ++p) out.q_p_exponents.push_back(params.partial_sum(p) + Rational(p - 1, l));
  return out;
}

// Rational gamma_1..gamma_{l-1} as given on the command line.
inline DunklParams dunkl_params(int l, const Rational& k, const std::vector<Rational>& gamma) {
  require(l >= 1, "l must be positive");
  require(static_cast<int>(gamma.size()) == l - 1, "expected l-1 gamma values");
  DunklParams out{l, k, {CycloNumber(l)}};
  for (const auto& g : gamma) out.gamma.push_back(CycloNumber(l, g));
  return out;
}

// ---------------------------------------------------------------------------
// Dunkl operators.

class DunklOperators {
public:
  DunklOperators(int n, DunklParams params) : n_(n), p_(std::move(params)) {
    require(n >= 1, "n must be positive");
    require(static_cast<int>(p_.gamma.size()) == p_.l, "gamma must have l entries");
    for (int p = 1; p < p_.l; ++p) {
      auto denom = CycloNumber(p_.l, 1) - CycloNumber::eps_power(p_.l, -p);
      coeff_.push_back(p_.gamma[p] * denom.inverse());
    }
  }

  int n() const { return n_; }
  int ell() const { return p_.l; }
  const DunklParams& params() const { return p_; }

  PolyN apply(int i, const PolyN& f) const {
    require(i >= 1 && i <= n_, "Dunkl index out of range");
    const int l = p_.l;
    PolyN out = f.partial(i);
    for (int j = 1; j <= n_; ++j) {
      if (j == i) continue;
      for (int p = 0; p < l; ++p) {
        auto g = f.act(GroupElement::reflection(i, j, p, n_, l)) - f;
        out += p_.k * g.divide_linear(i, j, CycloNumber::eps_power(l, -p));
      }
    }
    for (int p = 1; p < l; ++p) {
      auto g = f.act(GroupElement::eps(i, p, n_, l)) - f;
      out += coeff_[p - 1] * g.divide_by_var(i);
    }
    return out;
  }

private:
  int n_;
  DunklParams p_;
  std::vector<CycloNumber> coeff_;  // gamma_p / (1 - eps^{-p})
};

inline PolyN dunkl_apply(int i, const PolyN& f, const DunklParams& params) {
  return DunklOperators(f.nvars(), params).apply(i, f);
}

// ---------------------------------------------------------------------------
// Relation checks.

struct RelationResult {
  std::string relation;
  bool pass = true;
  std::optional<Monomial> witness;  // first monomial where the two sides differ
};

using RelationReport = std::vector<RelationResult>;

inline bool all_pass(const RelationReport& r) {
  return std::all_of(r.begin(), r.end(), [](const RelationResult& x) { return x.pass; });
}

using Operator = std::function<PolyN(const PolyN&)>;

namespace detail {

inline RelationResult compare_on(const std::string& name, const std::vector<Monomial>& basis, int l, const Operator& lhs,
                                 const Operator& rhs) {
  RelationResult r{name, true, std::nullopt};
  for (const auto& e : basis) {
    auto f = PolyN::monomial(e, l);
    if (!(lhs(f) == rhs(f))) {
      r.pass = false;
      r.witness = e;
      break;
    }
  }
  return r;
}

inline std::string sub(const char* sym, int i) { return std::string(sym) + "_" + std::to_string(i); }

}  // namespace detail

struct VerifyOptions {
  Rational k_shift = 0;  // added to k inside the Dunkl operators only (negative control)
};

// Defining relations and W-equivariance as operators on monomials of degree
// <= max_deg.
inline RelationReport verify_relations(int n, const DunklParams& params, int max_deg, const VerifyOptions& opts = {}) {
  require(max_deg >= 1, "max_deg must be at least 1");
  const int l = params.l;
  auto used = params;
  used.k += opts.k_shift;
  DunklOperators y(n, used);
  const auto& k = params.k;
  auto basis = monomials_up_to(n, max_deg);
  RelationReport out;
  auto Y = [&](int i) { return [&y, i](const PolyN& f) { return y.apply(i, f); }; };
  auto X = [](int i) { return [i](const PolyN& f) { return f.times_var(i); }; };
  auto G = [](const GroupElement& g) { return [g](const PolyN& f) { return f.act(g); }; };
  auto comm = [](Operator a, Operator b) -> Operator {
    return [a, b](const PolyN& f) { return a(b(f)) - b(a(f)); };
  };
  using detail::sub;

  for (int i = 1; i <= n; ++i) {
    Operator rhs = [&, i](const PolyN& f) {
      PolyN r = f;
      for (int j = 1; j <= n; ++j)
        if (j != i)
          for (int p = 0; p < l; ++p) r -= k * f.act(GroupElement::reflection(i, j, p, n, l));
      for (int p = 1; p < l; ++p) r -= params.gamma[p] * f.act(GroupElement::eps(i, p, n, l));
      return r;
    };
    out.push_back(detail::compare_on("[" + sub("y", i) + "," + sub("x", i) + "]", basis, l, comm(Y(i), X(i)), rhs));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Operator rhs = [&, i, j](const PolyN& f) {
        PolyN r(n, l);
        for (int p = 0; p < l; ++p)
          r += CycloNumber::eps_power(l, p) * (k * f.act(GroupElement::reflection(i, j, p, n, l)));
        return r;
      };
      out.push_back(detail::compare_on("[" + sub("y", i) + "," + sub("x", j) + "]", basis, l, comm(Y(i), X(j)), rhs));
    }
  Operator zero = [n, l](const PolyN&) { return PolyN(n, l); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(detail::compare_on("[" + sub("x", i) + "," + sub("x", j) + "]", basis, l, comm(X(i), X(j)), zero));
      out.push_back(detail::compare_on("[" + sub("y", i) + "," + sub("y", j) + "]", basis, l, comm(Y(i), Y(j)), zero));
    }
  // s_ij y_i s_ij = y_j
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto s = GroupElement::reflection(i, j, 0, n, l);
      Operator lhs = [=](const PolyN& f) { return G(s)(Y(i)(G(s)(f))); };
      out.push_back(detail::compare_on("s_" + std::to_string(i) + std::to_string(j) + " " + sub("y", i) + " s_" +
                                           std::to_string(i) + std::to_string(j) + " = " + sub("y", j),
                                       basis, l, lhs, Y(j)));
    }
  // eps_i y_j eps_i^{-1} = eps^{delta_ij} y_j
  if (l > 1)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        auto g = GroupElement::eps(i, 1, n, l);
        auto gi = g.inverse(l);
        Operator lhs = [=](const PolyN& f) { return G(g)(Y(j)(G(gi)(f))); };
        auto scale = CycloNumber::eps_power(l, i == j ? 1 : 0);
        Operator rhs = [=](const PolyN& f) { return scale * Y(j)(f); };
        out.push_back(detail::compare_on(sub("eps", i) + " " + sub("y", j) + " " + sub("eps", i) + "^-1 = " +
                                             (i == j ? "eps " : "") + sub("y", j),
                                         basis, l, lhs, rhs));
      }
  return out;
}

// eu_0 = -h sum_{i<j} sum_p (1 - s_ij^(p)) + sum_i sum_{p,p'=1}^{l-1} eps^{-pp'} (h_1+...+h_{p'}) eps_i^p.
// plus_h puts +h in front of the first sum instead; with k = -h that breaks
// [eu, x_i] = x_i once n >= 2.
inline PolyN euler_zero(const PolyN& f, const CherednikParams& params, bool plus_h = false) {
  const int n = f.nvars(), l = params.level();
  const Rational hs = plus_h ? params.h : -params.h;
  PolyN out(n, l);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int p = 0; p < l; ++p) out += hs * (f - f.act(GroupElement::reflection(i, j, p, n, l)));
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p < l; ++p) {
      CycloNumber c(l);
      for (int pp = 1; pp < l; ++pp)
        c += CycloNumber::eps_power(l, -static_cast<std::int64_t>(p) * pp) * params.partial_sum(pp + 1);
      out += c * f.act(GroupElement::eps(i, p, n, l));
    }
  return out;
}

// [eu, x_i] = x_i and [eu, y_i] = -y_i with eu = sum_i x_i y_i + eu_0.
inline RelationReport euler_grading_check(int n, const CherednikParams& params, int max_deg,
                                          bool plus_h = false) {
  require(max_deg >= 1, "max_deg must be at least 1");
  const int l = params.level();
  DunklOperators y(n, param_convert(params).kg);
  Operator eu = [&](const PolyN& f) {
    PolyN out = euler_zero(f, params, plus_h);
    for (int i = 1; i <= n; ++i) out += y.apply(i, f).times_var(i);
    return out;
  };
  auto basis = monomials_up_to(n, max_deg);
  RelationReport out;
  using detail::sub;
  for (int i = 1; i <= n; ++i) {
    Operator lhs = [&, i](const PolyN& f) { return eu(f.times_var(i)) - eu(f).times_var(i); };
    Operator rhs = [i](const PolyN& f) { return f.times_var(i); };
    out.push_back(detail::compare_on("[eu," + sub("x", i) + "]", basis, l, lhs, rhs));
  }
  for (int i = 1; i <= n; ++i) {
    Operator lhs = [&, i](const PolyN& f) { return eu(y.apply(i, f)) - y.apply(i, eu(f)); };
    Operator rhs = [&, i](const PolyN& f) { return Rational(-1) * y.apply(i, f); };
    out.push_back(detail::compare_on("[eu," + sub("y", i) + "]", basis, l, lhs, rhs));
  }
  return out;
}

}  // namespace fockkit
