#pragma once

// Level-l Fock space combinatorics: index decoding, the bijection
// between strictly decreasing tuples and (alpha, nu) pairs, wedge vectors
// with the level-zero sl_e action, and the canonical basis G^- with the
// matrices Delta^-, nabla^-, Delta^+.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fockkit/affine_weyl.hpp"
#include "fockkit/combinatorics.hpp"
#include "fockkit/kl_engine.hpp"

namespace fockkit {

struct IndexDecomposition {
  std::int64_t a;
  std::int64_t c;  // 1..e
  std::int64_t p;  // 1..l
  std::int64_t r;
  std::int64_t phi;
  friend bool operator==(const IndexDecomposition&, const IndexDecomposition&) = default;
};

inline void check_fock_params(int e, int l) {
  require(e > 1, "e must be greater than 1");
  require(l >= 1, "level must be positive");
}

// a = c + e(p-1) + e l r, phi = c + e r, c in {1..e}
inline IndexDecomposition decode_index(std::int64_t a, int e, int l) {
  check_fock_params(e, l);
  const std::int64_t el = static_cast<std::int64_t>(e) * l;
  const std::int64_t t = a - 1;
  const std::int64_t r = floor_div(t, el);
  const std::int64_t rem = t - el * r;
  const std::int64_t p = rem / e + 1;
  const std::int64_t c = rem % e + 1;
  return {a, c, p, r, c + static_cast<std::int64_t>(e) * r};
}

inline std::int64_t encode_index(std::int64_t phi, std::int64_t p, int e, int l) {
  check_fock_params(e, l);
  require(p >= 1 && p <= l, "p out of range");
  const std::int64_t r = floor_div(phi - 1, e);
  const std::int64_t c = phi - static_cast<std::int64_t>(e) * r;
  return c + static_cast<std::int64_t>(e) * (p - 1) + static_cast<std::int64_t>(e) * l * r;
}

inline bool strictly_decreasing(const IntTuple& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i - 1] <= x[i]) return false;
  return true;
}

struct A7Image {
  IntTuple alpha;
  Composition nu;
  friend bool operator==(const A7Image&, const A7Image&) = default;
};

// nu_p = #{entries with p-value p}; alpha lists phi-values of p = l entries
// first, then p = l-1, ..., p = 1, keeping the original order inside a group.
inline A7Image bijection_A7(const IntTuple& tuple, int e, int l) {
  require(strictly_decreasing(tuple), "tuple must be strictly decreasing");
  std::vector<int> nu(static_cast<std::size_t>(l), 0);
  std::vector<IndexDecomposition> dec;
  for (auto a : tuple) {
    dec.push_back(decode_index(a, e, l));
    ++nu[static_cast<std::size_t>(dec.back().p - 1)];
  }
  IntTuple alpha;
  for (int p = l; p >= 1; --p)
    for (const auto& d : dec)
      if (d.p == p) alpha.push_back(d.phi);
  return {std::move(alpha), Composition(std::move(nu))};
}

// The unique strictly decreasing tuple mapped to (alpha, mu) by bijection_A7.
inline IntTuple inverse_A7(const IntTuple& alpha, const Composition& mu, int e, int l) {
  require(mu.level() == l, "composition level differs from l");
  require(static_cast<int>(alpha.size()) == mu.total(), "alpha length differs from |mu|");
  auto mu_o = mu.reversed();
  require(is_nu_strict(alpha, mu_o), "alpha must strictly decrease inside blocks");
  IntTuple out;
  auto blocks = mu_o.blocks();
  for (int q = 1; q <= l; ++q) {
    const auto& b = blocks[static_cast<std::size_t>(q - 1)];
    for (int j = b.first; j <= b.last; ++j) out.push_back(encode_index(alpha[j - 1], l + 1 - q, e, l));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// entry j in block p: lambda_j + i_p - j + s_p
inline IntTuple alpha_map(const IntTuple& lambda, const Composition& nu, const IntTuple& s) {
  require(static_cast<int>(lambda.size()) == nu.total(), "lambda length differs from |nu|");
  require(static_cast<int>(s.size()) == nu.level(), "charge length differs from level");
  require(is_nu_dominant(lambda, nu), "lambda is not nu-dominant");
  IntTuple out(lambda.size());
  auto blocks = nu.blocks();
  for (int p = 0; p < nu.level(); ++p)
    for (int j = blocks[p].first; j <= blocks[p].last; ++j)
      out[j - 1] = lambda[j - 1] + blocks[p].first - j + s[p];
  return out;
}

inline IntTuple underline_alpha(const IntTuple& lambda, const Composition& nu, const IntTuple& s, int e) {
  return inverse_A7(alpha_map(lambda, nu, s), nu.reversed(), e, nu.level());
}

// ---------------------------------------------------------------------------
// Wedge vectors in Lambda^m.

class WedgeVector {
public:
  using Terms = std::map<IntTuple, std::int64_t, std::greater<>>;

  WedgeVector() = default;

  // u_{a_1} ∧ ... ∧ u_{a_m} for an arbitrary tuple, straightened.
  static WedgeVector basis(IntTuple tuple, std::int64_t coeff = 1) {
    WedgeVector v;
    v.add(std::move(tuple), coeff);
    return v;
  }

  void add(IntTuple tuple, std::int64_t coeff) {
    if (coeff == 0) return;
    // insertion sort into decreasing order, tracking the sign
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i)
      for (std::size_t j = i; j > 0 && tuple[j - 1] <= tuple[j]; --j) {
        if (tuple[j - 1] == tuple[j]) return;
        std::swap(tuple[j - 1], tuple[j]);
        sign = -sign;
      }
    auto& slot = terms_[tuple];
    slot = detail::checked_add(slot, sign * coeff);
    if (slot == 0) terms_.erase(tuple);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const WedgeVector&, const WedgeVector&) = default;

private:
  Terms terms_;
};

enum class Chevalley { e, f };

inline std::optional<std::int64_t> chevalley_on_index(Chevalley op, std::int64_t b, std::int64_t a, int e, int l) {
  const std::int64_t bb = mod_pos(b, e);
  if (op == Chevalley::f) {
    if (mod_pos(a, e) != bb) return std::nullopt;
    return bb != 0 ? a + 1 : a + 1 - e + static_cast<std::int64_t>(e) * l;
  }
  // e_b(u_{a'+1}) with a' in b
  if (mod_pos(a - 1, e) != bb) return std::nullopt;
  return bb != 0 ? a - 1 : a - 1 + e - static_cast<std::int64_t>(e) * l;
}

// Generator applied as a derivation on every wedge factor.
inline WedgeVector chevalley_apply(Chevalley op, std::int64_t b, const WedgeVector& v, int e, int l) {
  check_fock_params(e, l);
  WedgeVector out;
  for (const auto& [tuple, coeff] : v.terms())
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (auto img = chevalley_on_index(op, b, tuple[i], e, l)) {
        auto t = tuple;
        t[i] = *img;
        out.add(std::move(t), coeff);
      }
  return out;
}

// |lambda, nu, s°, e> with lambda in Z^nu_{>=0}
struct FockLabel {
  IntTuple lam;
  Composition nu;
  IntTuple s;
  int e = 2;

  int level() const { return nu.level(); }
  friend bool operator==(const FockLabel&, const FockLabel&) = default;
  friend auto operator<=>(const FockLabel&, const FockLabel&) = default;
};

inline IntTuple underline_alpha(const FockLabel& x) { return underline_alpha(x.lam, x.nu, x.s, x.e); }

// Entries of underline-alpha listed block by block in the bijection order
// (p-values l, ..., 1) instead of decreasingly.
inline IntTuple block_ordered_alpha(const FockLabel& x) {
  auto alpha = alpha_map(x.lam, x.nu, x.s);
  const int l = x.level();
  IntTuple out;
  auto blocks = x.nu.blocks();
  for (int q = 1; q <= l; ++q)
    for (int j = blocks[q - 1].first; j <= blocks[q - 1].last; ++j)
      out.push_back(encode_index(alpha[j - 1], l + 1 - q, x.e, l));
  return out;
}

// u_{a_1} ∧ ... ∧ u_{a_m} in block order: differs from |underline-alpha> by
// the sign of the sorting permutation. In this normalization the generators
// act on labels with all coefficients +1.
inline WedgeVector label_wedge(const FockLabel& x) { return WedgeVector::basis(block_ordered_alpha(x)); }

// sign with label_wedge(x) = sign * |underline-alpha(x)>
inline int block_order_sign(const FockLabel& x) { return label_wedge(x).terms().begin()->second > 0 ? 1 : -1; }

using LabelCombination = std::map<IntTuple, std::int64_t>;

// Arrows alpha(lambda) -b-> alpha(mu) with b in the class a.
inline LabelCombination chevalley_standard(Chevalley op, std::int64_t a, const FockLabel& x) {
  check_fock_params(x.e, x.level());
  auto alpha = alpha_map(x.lam, x.nu, x.s);
  LabelCombination out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    // f: entry b -> b+1 with b in a; e: entry b+1 -> b with b in a
    std::int64_t b = op == Chevalley::f ? alpha[j] : alpha[j] - 1;
    if (mod_pos(b, x.e) != mod_pos(a, x.e)) continue;
    auto lam = x.lam;
    lam[j] += op == Chevalley::f ? 1 : -1;
    if (!is_nu_dominant(lam, x.nu)) continue;
    out[lam] += 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical basis G^- and decomposition matrices.

// alpha(lambda, nu, s) - rho at level -e - m, tilde-normalized.
inline AffineWeight fock_weight(const IntTuple& lam, const Composition& nu, const IntTuple& s, int e) {
  auto alpha = alpha_map(lam, nu, s);
  auto r = rho(nu.total());
  std::vector<Rational> x(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) x[i] = alpha[i] - r[i];
  return tilde_weight(x, -e);
}

// Inverse of fock_weight on nu-dominant weights of the same shape.
inline IntTuple fock_label_of(const AffineWeight& w, const Composition& nu, const IntTuple& s) {
  auto x = w + rho_hat(w.rank());
  IntTuple lam(x.classical.size());
  auto blocks = nu.blocks();
  for (int p = 0; p < nu.level(); ++p)
    for (int j = blocks[p].first; j <= blocks[p].last; ++j) {
      Rational v = x.classical[j - 1] - (blocks[p].first - j + s[p]);
      if (!is_integer(v)) fail(errc::internal_non_divisible, "weight does not come from a Fock label");
      lam[j - 1] = static_cast<std::int64_t>(numerator_of(v));
    }
  return lam;
}

struct GminusTerm {
  std::int64_t value;  // (-1)^{l(v_mu)-l(v_lambda)} P^{gamma,-1}(1)
  IntPoly q_analog;    // the same with P^{gamma,-1}(q)
};

// Canonical basis route at kappa = -e.
inline std::map<IntTuple, GminusTerm> canonical_Gminus_terms(const FockLabel& mu) {
  check_fock_params(mu.e, mu.level());
  auto x = fock_weight(mu.lam, mu.nu, mu.s, mu.e);
  auto rep = antidominant_rep(x);
  auto& eng = EngineRegistry::instance().engine(CoxeterContext::affine_a(x.rank(), rep.stabilizer));
  std::map<IntTuple, GminusTerm> out;
  const int lw = rep.v.length();
  for (const auto& [v, n] : eng.module_row(rep.v)) {
    auto y = dot_act(v, rep.gamma);
    if (!is_nu_dominant(y, mu.nu)) continue;
    const int d = lw - v.length();
    auto p = minus_poly_from_module_coeff(n, d);
    out[fock_label_of(y, mu.nu, mu.s)] = {n.eval_at_minus_one(), d % 2 ? -p : p};
  }
  return out;
}

inline LabelCombination canonical_Gminus(const FockLabel& mu) {
  LabelCombination out;
  for (const auto& [lam, t] : canonical_Gminus_terms(mu))
    if (t.value != 0) out[lam] = t.value;
  return out;
}

struct DecompMatrix {
  std::vector<MultiPartition> rows;
  std::vector<MultiPartition> cols;
  std::vector<std::vector<std::int64_t>> entries;
};

// For nu = s: lambda in N^s_{>=0} maps to (lambda°, s°), any
// negative entry maps to zero.
inline std::optional<std::pair<MultiPartition, IntTuple>> to_fock_label(const FockLabel& x) {
  require(x.nu.parts().size() == x.s.size(), "charge length differs from level");
  for (int p = 0; p < x.nu.level(); ++p)
    require(x.nu[p] == x.s[p], "to_fock_label needs nu = s");
  if (std::any_of(x.lam.begin(), x.lam.end(), [](std::int64_t v) { return v < 0; })) return std::nullopt;
  auto lam = unembed_weight(x.lam, x.nu);
  IntTuple s_o(x.s.rbegin(), x.s.rend());
  return std::make_pair(lam.reversed(), s_o);
}

inline Composition composition_of_charge(const IntTuple& s) {
  std::vector<int> parts;
  for (auto v : s) {
    require(v >= 0, "charge entries must be nonnegative for nu = s");
    parts.push_back(static_cast<int>(v));
  }
  return Composition(std::move(parts));
}

struct FockMatrices {
  DecompMatrix delta_minus;  // G^-(row) = sum_col Delta^-[row][col] |col>
  DecompMatrix nabla_minus;  // inverse
};

// Rows and columns are Fock labels lambda° for lambda in P^l_{n,s}.
inline FockMatrices decomposition_matrices(int n, const IntTuple& s, int e) {
  require(n >= 0, "n must be nonnegative");
  auto nu = composition_of_charge(s);
  check_fock_params(e, nu.level());
  auto labels = multipartitions_fitting(n, nu);
  std::map<IntTuple, std::size_t> index;
  std::vector<FockLabel> fl;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto tup = embed_weight(labels[i], nu);
    index[tup] = i;
    fl.push_back({tup, nu, s, e});
  }
  const std::size_t k = labels.size();
  std::vector<std::vector<std::int64_t>> dm(k, std::vector<std::int64_t>(k, 0));
  std::vector<int> rank(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto x = fock_weight(fl[i].lam, nu, s, e);
    rank[i] = antidominant_rep(x).v.length();
    for (const auto& [lam, c] : canonical_Gminus(fl[i]))
      if (auto it = index.find(lam); it != index.end()) dm[i][it->second] = c;
  }
  auto nab = unitriangular_inverse(dm, rank);
  std::vector<MultiPartition> fock_labels;
  for (const auto& l : labels) fock_labels.push_back(l.reversed());
  return {{fock_labels, fock_labels, dm}, {fock_labels, fock_labels, nab}};
}

// Delta^+_{^t mu, ^t lambda, -s, e} = nabla^-_{lambda, mu, s°, e}.
inline DecompMatrix yvonne_delta_plus(int n, const IntTuple& s, int e) {
  auto nab = decomposition_matrices(n, s, e).nabla_minus;
  DecompMatrix out;
  for (const auto& l : nab.rows) out.rows.push_back(l.transpose());
  out.cols = out.rows;
  const std::size_t k = nab.rows.size();
  out.entries.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.entries[j][i] = nab.entries[i][j];
  return out;
}

}  // namespace fockkit
