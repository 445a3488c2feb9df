#pragma once

// Kazhdan-Lusztig polynomials for finite and affine type A, Deodhar's
// parabolic polynomials P^{J,-1} and the character matrices built from them.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fockkit/affine_weyl.hpp"
#include "fockkit/int_poly.hpp"
#include "fockkit/kl_cache.hpp"

namespace fockkit {

enum class CoxeterKind { finite, affine };

struct CoxeterContext {
  CoxeterKind kind = CoxeterKind::affine;
  int m = 2;
  std::vector<int> J;  // parabolic subset, sorted

  static CoxeterContext finite_a(int m, std::vector<int> J = {}) { return make(CoxeterKind::finite, m, std::move(J)); }
  static CoxeterContext affine_a(int m, std::vector<int> J = {}) { return make(CoxeterKind::affine, m, std::move(J)); }

  bool affine() const { return kind == CoxeterKind::affine; }

  // cache token: "finite", "affine", "finite/J1.3", ...
  std::string token() const {
    std::string t = affine() ? "affine" : "finite";
    if (!J.empty()) {
      t += "/J";
      for (std::size_t i = 0; i < J.size(); ++i) t += (i ? "." : "") + std::to_string(J[i]);
    }
    return t;
  }

  bool in_J(int s) const { return std::binary_search(J.begin(), J.end(), s); }

  // minimal length in its left coset w W_J
  bool is_minimal(const AffinePermutation& w) const {
    for (int s : J)
      if (w.has_right_descent(s)) return false;
    return true;
  }

  void check_element(const AffinePermutation& w) const {
    require(w.rank() == m, "element rank differs from context rank");
    if (!affine()) require(w.is_finite(), "element is not in the finite symmetric group");
  }

  friend bool operator<(const CoxeterContext& a, const CoxeterContext& b) {
    return std::tie(a.kind, a.m, a.J) < std::tie(b.kind, b.m, b.J);
  }
  friend bool operator==(const CoxeterContext&, const CoxeterContext&) = default;

private:
  static CoxeterContext make(CoxeterKind kind, int m, std::vector<int> J) {
    require(m >= 1, "rank must be positive");
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    int lo = kind == CoxeterKind::affine ? 0 : 1;
    for (int s : J) require(s >= lo && s < m, "parabolic index out of range");
    if (kind == CoxeterKind::affine)
      require(static_cast<int>(J.size()) < m || m == 1, "parabolic subset must generate a finite group");
    return {kind, m, std::move(J)};
  }
};

// Elements of the parabolic subgroup W_J.
inline std::vector<AffinePermutation> parabolic_subgroup(int m, const std::vector<int>& J) {
  std::set<AffinePermutation> seen{AffinePermutation::identity(m)};
  std::vector<AffinePermutation> todo{AffinePermutation::identity(m)};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (int s : J) {
      auto y = x.times_simple(s);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

inline int first_left_descent(const AffinePermutation& w) {
  auto inv = w.inverse();
  for (int i = 0; i < w.rank(); ++i)
    if (inv.has_right_descent(i)) return i;
  return -1;
}

// P^{J,-1}(q) from n = sum_z (-v)^{l(z)} h_{xz,w}, n = v^{d} P(v^{-2}).
inline IntPoly minus_poly_from_module_coeff(const LaurentPoly& n, int d) {
  if (n.is_zero()) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>((d - n.low()) / 2 + 1), 0);
  for (int k = n.low(); k <= n.high(); ++k) {
    auto a = n.coeff(k);
    if (a == 0) continue;
    if ((d - k) % 2 != 0 || d < k) fail(errc::internal_non_divisible, "parity defect in parabolic coefficient");
    c[static_cast<std::size_t>((d - k) / 2)] = a;
  }
  return IntPoly(std::move(c));
}

class KLEngine {
public:
  using Row = std::unordered_map<AffinePermutation, IntPoly, AffinePermutationHash>;
  using ModuleRow = std::unordered_map<AffinePermutation, LaurentPoly, AffinePermutationHash>;

  explicit KLEngine(CoxeterContext ctx, std::shared_ptr<KLCache> cache = nullptr)
      : ctx_(std::move(ctx)), cache_(std::move(cache)) {}

  const CoxeterContext& context() const { return ctx_; }

  // Ordinary P_{v,w} (J is ignored).
  IntPoly kl_poly(const AffinePermutation& v, const AffinePermutation& w) {
    ctx_.check_element(v);
    ctx_.check_element(w);
    const std::string kind = plain_token();
    if (cache_)
      if (auto hit = cache_->lookup(kind, v, w)) return *hit;
    IntPoly p;
    {
      std::shared_lock read(mutex_);
      if (auto it = rows_.find(w); it != rows_.end()) {
        auto jt = it->second->find(v);
        p = jt == it->second->end() ? IntPoly{} : jt->second;
        read.unlock();
        if (cache_) cache_->store(kind, v, w, p);
        return p;
      }
    }
    {
      std::unique_lock write(mutex_);
      const Row& r = row_locked(w);
      auto jt = r.find(v);
      p = jt == r.end() ? IntPoly{} : jt->second;
    }
    if (cache_) cache_->store(kind, v, w, p);
    return p;
  }

  // The full row {x <= w : P_{x,w}}.
  Row row(const AffinePermutation& w) {
    ctx_.check_element(w);
    std::unique_lock write(mutex_);
    return row_locked(w);
  }

  std::int64_t mu(const AffinePermutation& x, const AffinePermutation& w) {
    int d = w.length() - x.length();
    if (d <= 0 || d % 2 == 0) return 0;
    return kl_poly(x, w)[static_cast<std::size_t>((d - 1) / 2)];
  }

  // sum_{z in W_J} (-1)^{l(z)} P_{uz,w}
  IntPoly parabolic_kl_minus(const AffinePermutation& u, const AffinePermutation& w) {
    check_minimal(u);
    check_minimal(w);
    IntPoly acc;
    for (const auto& z : subgroup()) {
      auto p = kl_poly(u * z, w);
      if (z.length() % 2) acc -= p;
      else acc += p;
    }
    return acc;
  }

  // P^{J,-1}_{u,w} from the parabolic module (same value as the alternating
  // sum, computed without leaving W^J).
  IntPoly parabolic_minus(const AffinePermutation& u, const AffinePermutation& w) {
    check_minimal(u);
    check_minimal(w);
    const std::string kind = ctx_.token();
    if (cache_)
      if (auto hit = cache_->lookup(kind, u, w)) return *hit;
    LaurentPoly n;
    {
      std::unique_lock write(mutex_);
      const ModuleRow& r = module_row_locked(w);
      if (auto it = r.find(u); it != r.end()) n = it->second;
    }
    auto p = minus_poly_from_module_coeff(n, w.length() - u.length());
    if (cache_) cache_->store(kind, u, w, p);
    return p;
  }

  // Coefficients n_{x,w} of the parabolic canonical basis element, x in W^J.
  ModuleRow module_row(const AffinePermutation& w) {
    check_minimal(w);
    std::unique_lock write(mutex_);
    return module_row_locked(w);
  }

  // {x in W^J : x <= w}
  std::vector<AffinePermutation> minimal_interval(const AffinePermutation& w) {
    check_minimal(w);
    std::unique_lock write(mutex_);
    const auto& s = interval_locked(w);
    return {s.begin(), s.end()};
  }

private:
  std::string plain_token() const { return ctx_.affine() ? "affine" : "finite"; }

  void check_minimal(const AffinePermutation& w) const {
    ctx_.check_element(w);
    if (!ctx_.is_minimal(w)) fail(errc::not_minimal_coset_rep, "element has a right descent in J");
  }

  const std::vector<AffinePermutation>& subgroup() {
    std::call_once(subgroup_once_, [&] { subgroup_ = parabolic_subgroup(ctx_.m, ctx_.J); });
    return subgroup_;
  }

  // P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_{z<v, sz<z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z},
  // s a left descent of w, v = sw, c = [sx < x].
  const Row& row_locked(const AffinePermutation& w) {
    if (auto it = rows_.find(w); it != rows_.end()) return *it->second;
    auto out = std::make_shared<Row>();
    if (w.is_identity()) {
      out->emplace(w, IntPoly(1));
    } else {
      const int s = first_left_descent(w);
      const auto v = w.simple_times(s);
      const int lw = w.length(), lv = lw - 1;
      const Row& rv = row_locked(v);
      std::vector<std::pair<AffinePermutation, std::int64_t>> corrections;
      for (const auto& [z, p] : rv) {
        int d = lv - z.length();
        if (d <= 0 || d % 2 == 0) continue;
        std::int64_t mu = p[static_cast<std::size_t>((d - 1) / 2)];
        if (mu != 0 && z.has_left_descent(s)) corrections.emplace_back(z, mu);
      }
      std::vector<const Row*> zrows;
      for (const auto& [z, mu] : corrections) zrows.push_back(&row_locked(z));
      auto lookup = [](const Row& r, const AffinePermutation& x) {
        auto it = r.find(x);
        return it == r.end() ? IntPoly{} : it->second;
      };
      std::set<AffinePermutation> interval;
      for (const auto& [x, p] : rv) {
        interval.insert(x);
        interval.insert(x.simple_times(s));
      }
      for (const auto& x : interval) {
        const auto sx = x.simple_times(s);
        const bool c = x.has_left_descent(s);
        IntPoly p = c ? lookup(rv, sx) + lookup(rv, x).shifted(1) : lookup(rv, sx).shifted(1) + lookup(rv, x);
        for (std::size_t k = 0; k < corrections.size(); ++k) {
          auto pz = lookup(*zrows[k], x);
          if (pz.is_zero()) continue;
          p -= (IntPoly(corrections[k].second) * pz).shifted((lw - corrections[k].first.length()) / 2);
        }
        if (!p.is_zero()) out->emplace(x, std::move(p));
      }
    }
    auto [it, _] = rows_.emplace(w, std::move(out));
    return *it->second;
  }

  // Left action of C_s = H_s + v on N_x (x in W^J):
  //   N_{sx} + v N_x (sx > x, sx in W^J), N_{sx} + v^{-1} N_x (sx < x), 0 otherwise.
  // Then subtract constant terms times lower canonical elements.
  const ModuleRow& module_row_locked(const AffinePermutation& w) {
    if (auto it = module_rows_.find(w); it != module_rows_.end()) return *it->second;
    auto out = std::make_shared<ModuleRow>();
    if (w.is_identity()) {
      out->emplace(w, LaurentPoly(1));
    } else {
      const int s = first_left_descent(w);
      const auto v = w.simple_times(s);
      // copy: the recursion below may rehash module_rows_
      const ModuleRow rv = module_row_locked(v);
      using Key = std::pair<int, AffinePermutation>;
      std::map<Key, LaurentPoly, std::greater<>> acc;
      for (const auto& [x, n] : rv) {
        const auto sx = x.simple_times(s);
        const int lx = x.length();
        if (x.has_left_descent(s)) {
          acc[{lx - 1, sx}] += n;
          acc[{lx, x}] += n.shifted(-1);
        } else if (ctx_.is_minimal(sx)) {
          acc[{lx + 1, sx}] += n;
          acc[{lx, x}] += n.shifted(1);
        }
      }
      const int lw = w.length();
      for (auto it = acc.begin(); it != acc.end(); ++it) {
        if (it->first.first >= lw) continue;
        const std::int64_t c = it->second.coeff(0);
        if (c == 0) continue;
        const ModuleRow lower = module_row_locked(it->first.second);
        for (const auto& [y, ny] : lower) acc[{y.length(), y}] -= LaurentPoly(c) * ny;
      }
      for (auto& [key, n] : acc) {
        if (n.is_zero()) continue;
        if (key.second != w && n.low() < 1)
          fail(errc::internal_non_divisible, "parabolic canonical basis lost positivity of degree");
        out->emplace(key.second, std::move(n));
      }
    }
    auto [it, _] = module_rows_.emplace(w, std::move(out));
    return *it->second;
  }

  // {x in W^J : x <= w} = I(sw) ∪ {sy : y in I(sw), sy > y, sy in W^J}
  const std::set<AffinePermutation>& interval_locked(const AffinePermutation& w) {
    if (auto it = intervals_.find(w); it != intervals_.end()) return *it->second;
    auto out = std::make_shared<std::set<AffinePermutation>>();
    if (w.is_identity()) {
      out->insert(w);
    } else {
      const int s = first_left_descent(w);
      const auto below = interval_locked(w.simple_times(s));
      for (const auto& y : below) {
        out->insert(y);
        auto sy = y.simple_times(s);
        if (!y.has_left_descent(s) && ctx_.is_minimal(sy)) out->insert(sy);
      }
    }
    auto [it, _] = intervals_.emplace(w, std::move(out));
    return *it->second;
  }

  CoxeterContext ctx_;
  std::shared_ptr<KLCache> cache_;
  std::shared_mutex mutex_;
  std::unordered_map<AffinePermutation, std::shared_ptr<Row>, AffinePermutationHash> rows_;
  std::unordered_map<AffinePermutation, std::shared_ptr<ModuleRow>, AffinePermutationHash> module_rows_;
  std::unordered_map<AffinePermutation, std::shared_ptr<std::set<AffinePermutation>>, AffinePermutationHash>
      intervals_;
  std::once_flag subgroup_once_;
  std::vector<AffinePermutation> subgroup_;
};

// ---------------------------------------------------------------------------
// Process-wide engines, one per context, sharing the cache named by
// FOCKKIT_CACHE unless another path is set first.

class EngineRegistry {
public:
  static EngineRegistry& instance() {
    static EngineRegistry r;
    return r;
  }

  void set_cache_path(const std::string& path) {
    std::lock_guard lock(mutex_);
    cache_ = path.empty() ? nullptr : std::make_shared<KLCache>(path);
    engines_.clear();
    configured_ = true;
  }

  std::shared_ptr<KLCache> cache() {
    std::lock_guard lock(mutex_);
    configure_locked();
    return cache_;
  }

  KLEngine& engine(const CoxeterContext& ctx) {
    std::lock_guard lock(mutex_);
    configure_locked();
    auto it = engines_.find(ctx);
    if (it == engines_.end()) it = engines_.emplace(ctx, std::make_unique<KLEngine>(ctx, cache_)).first;
    return *it->second;
  }

private:
  void configure_locked() {
    if (configured_) return;
    configured_ = true;
    if (const char* env = std::getenv("FOCKKIT_CACHE"); env && *env) cache_ = std::make_shared<KLCache>(env);
  }

  std::mutex mutex_;
  bool configured_ = false;
  std::shared_ptr<KLCache> cache_;
  std::map<CoxeterContext, std::unique_ptr<KLEngine>> engines_;
};

inline IntPoly kl_poly(const CoxeterContext& ctx, const AffinePermutation& v, const AffinePermutation& w) {
  return EngineRegistry::instance().engine(ctx).kl_poly(v, w);
}

inline IntPoly parabolic_kl_minus(const CoxeterContext& ctx, const AffinePermutation& u,
                                  const AffinePermutation& w) {
  return EngineRegistry::instance().engine(ctx).parabolic_kl_minus(u, w);
}

// ---------------------------------------------------------------------------
// Character matrices.

struct CharacterMatrix {
  std::vector<AffineWeight> labels;
  std::vector<AffinePermutation> reps;
  // matrix[i][j] = (-1)^{l(w_i) - l(w_j)} P^{gamma,-1}_{w_j, w_i}(1): [L(w_i)] in terms of [M(w_j)]_nu
  std::vector<std::vector<std::int64_t>> matrix;
  // inverse[i][j] = [M(w_i • gamma)_nu : L(w_j • gamma)]
  std::vector<std::vector<std::int64_t>> inverse;
};

// Inverse of a matrix that is unitriangular after ordering indices by `rank`
// (entries a[i][j] vanish unless rank[j] < rank[i] or i == j).
inline std::vector<std::vector<std::int64_t>> unitriangular_inverse(
    const std::vector<std::vector<std::int64_t>>& a, const std::vector<int>& rank) {
  const std::size_t n = a.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return rank[x] < rank[y]; });
  for (std::size_t i = 0; i < n; ++i) {
    require(a[i][i] == 1, "matrix is not unitriangular");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a[i][j] != 0 && rank[j] >= rank[i]) fail(errc::invalid_argument, "matrix is not triangular");
  }
  // b = a^{-1}: sum_k a[i][k] b[k][j] = delta_ij, solved upward in rank.
  std::vector<std::vector<std::int64_t>> b(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t ii = 0; ii < n; ++ii) {
    std::size_t i = order[ii];
    for (std::size_t jj = 0; jj <= ii; ++jj) {
      std::size_t j = order[jj];
      std::int64_t acc = i == j ? 1 : 0;
      for (std::size_t kk = jj; kk < ii; ++kk) {
        std::size_t k = order[kk];
        if (a[i][k] != 0 && b[k][j] != 0) acc = detail::checked_add(acc, -detail::checked_mul(a[i][k], b[k][j]));
      }
      b[i][j] = acc;
    }
  }
  return b;
}

struct CharacterMatrixOptions {
  bool use_alternating_sum = false;  // route P^{J,-1} through ordinary KL polynomials
};

inline CharacterMatrix character_matrix(const AffineWeight& gamma, const Composition& nu,
                                        const std::vector<AffineWeight>& targets,
                                        const CharacterMatrixOptions& opts = {}) {
  const int m = gamma.rank();
  require(nu.total() == m, "composition size differs from weight rank");
  auto g = antidominant_rep(gamma);
  require(g.v.is_identity(), "gamma is not antidominant");
  auto ctx = CoxeterContext::affine_a(m, g.stabilizer);
  auto& eng = EngineRegistry::instance().engine(ctx);

  CharacterMatrix out;
  out.labels = targets;
  for (const auto& t : targets) {
    require(is_nu_dominant(t, nu), "target weight is not nu-dominant");
    auto rep = antidominant_rep(t);
    require(rep.gamma == gamma, "target lies outside the dot orbit of gamma");
    out.reps.push_back(rep.v);
  }

  // Bruhat-closed set of nu-dominant minimal representatives below the targets.
  std::set<AffinePermutation> closure_set;
  for (const auto& v : out.reps)
    for (const auto& x : eng.minimal_interval(v))
      if (is_nu_dominant(dot_act(x, gamma), nu)) closure_set.insert(x);
  std::vector<AffinePermutation> closure(closure_set.begin(), closure_set.end());
  std::map<AffinePermutation, std::size_t> index;
  for (std::size_t i = 0; i < closure.size(); ++i) index[closure[i]] = i;

  const std::size_t n = closure.size();
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  std::vector<int> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = closure[i];
    rank[i] = w.length();
    if (opts.use_alternating_sum) {
      for (std::size_t j = 0; j < n; ++j) {
        if (closure[j].length() > w.length()) continue;
        auto p = eng.parabolic_kl_minus(closure[j], w);
        if (!p.is_zero()) a[i][j] = ((w.length() - closure[j].length()) % 2 ? -1 : 1) * p.eval(1);
      }
    } else {
      for (const auto& [x, nx] : eng.module_row(w))
        if (auto it = index.find(x); it != index.end()) a[i][it->second] = nx.eval_at_minus_one();
    }
  }
  auto b = unitriangular_inverse(a, rank);

  const std::size_t t = targets.size();
  out.matrix.assign(t, std::vector<std::int64_t>(t, 0));
  out.inverse.assign(t, std::vector<std::int64_t>(t, 0));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      auto ii = index.at(out.reps[i]), jj = index.at(out.reps[j]);
      out.matrix[i][j] = a[ii][jj];
      out.inverse[i][j] = b[ii][jj];
    }
  return out;
}

}  // namespace fockkit
