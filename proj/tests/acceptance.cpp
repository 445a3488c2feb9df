// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fockkit/category_o.hpp"
#include "fockkit/cherednik.hpp"
#include "fockkit/fock_space.hpp"
#include "fockkit/kl_engine.hpp"
#include "hecke_oracle.hpp"
#include "test_support.hpp"

using namespace fockkit;
using namespace fockkit::testing_support;

namespace {

// seconds
constexpr double kLimitBijection = 1;
constexpr double kLimitRoundTrip = 5;
constexpr double kLimitKL = 30;
constexpr double kLimitChain = 10;
constexpr double kLimitBlock = 300;
constexpr double kLimitMatrices = 300;
constexpr double kLimitChevalley = 120;
constexpr double kLimitCrossRoute = 600;
constexpr double kLimitIdentity = 60;
constexpr double kLimitClosure = 300;
constexpr double kLimitDunkl = 120;

constexpr int kRoundTrips = 1000;
constexpr int kIdentitySamples = 500;
constexpr int kClosureSamples = 500;
constexpr int kDunklMaxDeg = 4;
constexpr int kDunklParameterSets = 3;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures++ < 3) note << (failures > 1 ? "; " : "") << what;
  }
};

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string str(const IntTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

MultiPartition box_at(int p, int l) {
  std::vector<Partition> comps(static_cast<std::size_t>(l));
  comps[static_cast<std::size_t>(p - 1)] = Partition({1});
  return MultiPartition(comps);
}

Composition random_composition(std::mt19937_64& rng, int l, int lo, int hi) {
  std::vector<int> parts;
  for (int p = 0; p < l; ++p) parts.push_back(lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)));
  return Composition(parts);
}

template <class V>
const typename V::value_type& pick(std::mt19937_64& rng, const V& v) {
  return v[rng() % v.size()];
}

Rational random_rational(std::mt19937_64& rng) {
  return Rational(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 7));
}

// Unit diagonal and acyclic off-diagonal support.
bool unitriangular(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    if (a[i][i] != 1) return false;
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a[i][j] != 0) ++indeg[j];
  std::vector<bool> done(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n && k == n; ++i)
      if (!done[i] && indeg[i] == 0) k = i;
    if (k == n) return false;
    done[k] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k && a[k][j] != 0) --indeg[j];
  }
  return true;
}

// 1
void bijection_vectors(Outcome& out) {
  auto img = bijection_A7({3, 1, 0, -2, -4, -6, -7}, 2, 3);
  out.expect(img.nu == Composition{2, 2, 3}, "nu = " + str(img.nu));
  out.expect(img.alpha == IntTuple{0, -2, -3, 1, 0, 1, 0}, "alpha = " + str(img.alpha));
  auto a = alpha_map({2, 0, 1, -3, 1, -2, -4}, Composition{2, 2, 3}, {1, 1, 4});
  out.expect(a == IntTuple{3, 0, 2, -3, 5, 1, -2}, "alpha = " + str(a));
  auto u = underline_alpha({2, 0, 1, -3, 1, -2, -4}, Composition{2, 2, 3}, {1, 1, 4}, 2);
  out.expect(u == IntTuple{13, 11, 4, 1, 0, -9, -10}, "underline alpha = " + str(u));
  auto b = underline_alpha({1, 1, 2, 1, 0, 1}, Composition{2, 3, 1}, {2, 3, 1}, 2);
  out.expect(b == IntTuple{15, 11, 9, 6, 3, 2}, "underline alpha = " + str(b));
  out.note << "4 vectors exact";
}

// 2
void round_trips(Outcome& out) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < kRoundTrips; ++t) {
    int e = 2 + static_cast<int>(rng() % 4), l = 1 + static_cast<int>(rng() % 4);
    std::int64_t a = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
    auto d = decode_index(a, e, l);
    out.expect(encode_index(d.phi, d.p, e, l) == a, "decode/encode at a=" + std::to_string(a));
  }
  for (int t = 0; t < kRoundTrips; ++t) {
    int e = 2 + static_cast<int>(rng() % 3), l = 1 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 7);
    std::set<std::int64_t> vals;
    while (static_cast<int>(vals.size()) < m) vals.insert(static_cast<std::int64_t>(rng() % 61) - 30);
    IntTuple tup(vals.rbegin(), vals.rend());
    auto img = bijection_A7(tup, e, l);
    out.expect(is_nu_strict(img.alpha, img.nu.reversed()), "block strictness at " + str(tup));
    out.expect(inverse_A7(img.alpha, img.nu, e, l) == tup, "inverse at " + str(tup));
  }
  out.note << kRoundTrips << " + " << kRoundTrips << " round trips";
}

// 3
void kl_oracle(Outcome& out) {
  std::size_t pairs = 0;
  for (auto [m, affine, len] : {std::tuple{4, false, 10}, std::tuple{2, true, 8}}) {
    auto all = flatten(elements_by_length(m, affine, len));
    HeckeOracle oracle(all);
    KLEngine eng(affine ? CoxeterContext::affine_a(m) : CoxeterContext::finite_a(m));
    for (const auto& w : all)
      for (const auto& x : all) {
        ++pairs;
        out.expect(eng.kl_poly(x, w) == oracle.kl(x, w), "mismatch m=" + std::to_string(m));
      }
  }
  KLEngine s4(CoxeterContext::finite_a(4));
  auto p = s4.kl_poly(AffinePermutation::from_word({2}, 4), AffinePermutation::from_word({2, 1, 3, 2}, 4));
  out.expect(p == IntPoly({1, 1}), "P_{s2,s2s1s3s2} = " + p.to_string());
  out.note << pairs << " pairs vs oracle, P_{s2,s2s1s3s2} = " << p.to_string();
}

// 4
void order_chain(Outcome& out) {
  auto params = params_from_nu_kappa({2, 1, 6, 1}, -2);
  std::vector<Rational> got;
  for (int q : {3, 2, 1, 4}) got.push_back(theta(box_at(q, 4).reversed(), params));
  out.expect(got == std::vector<Rational>{-7, -4, -3, 0}, "theta values differ");
  auto b = [](int q) { return box_at(q, 4).reversed(); };
  out.expect(cherednik_order(b(3), b(2), params) == CherednikOrder::lambda_greater, "theta chain 3 > 2");
  out.expect(cherednik_order(b(2), b(1), params) == CherednikOrder::lambda_greater, "theta chain 2 > 1");
  out.expect(cherednik_order(b(1), b(4), params) == CherednikOrder::lambda_greater, "theta chain 1 > 4");
  Composition nu{2, 1, 6, 1};
  std::vector<bool> pattern{order_triangle_leq(chain_weight(3), chain_weight(4), nu),
                            order_triangle_leq(chain_weight(1), chain_weight(3), nu),
                            order_triangle_leq(chain_weight(10), chain_weight(1), nu)};
  out.expect(pattern == std::vector<bool>{true, false, true}, "triangle pattern differs");
  out.note << "theta = (";
  for (std::size_t i = 0; i < got.size(); ++i) out.note << (i ? "," : "") << to_string(got[i]);
  out.note << "), pattern = (" << pattern[0] << "," << pattern[1] << "," << pattern[2] << ")";
}

// 5
void example_block(Outcome& out) {
  Composition nu{1, 1, 4, 1};
  auto d = block_decomposition_sec6(1, nu, -1);
  out.expect(d.rows.size() == 4, "expected 4 labels");
  int ones = 0;
  for (std::size_t i = 0; i < d.rows.size(); ++i)
    for (std::size_t j = 0; j < d.rows.size(); ++j) {
      bool below = order_triangle_leq(sec6_weight(d.cols[j], nu, -1), sec6_weight(d.rows[i], nu, -1), nu);
      out.expect(d.entries[i][j] == (below ? 1 : 0), "entry " + str(d.rows[i]) + "," + str(d.cols[j]));
      ones += d.entries[i][j] == 1;
    }
  out.note << "4x4, " << ones << " ones, all matching the order";
}

// 6
void matrix_algebra(Outcome& out) {
  int instances = 0;
  const std::vector<IntTuple> charges{{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}};
  for (int e : {2, 3})
    for (const auto& s : charges)
      for (int n = 0; n <= 3; ++n) {
        auto dm = decomposition_matrices(n, s, e);
        const auto& D = dm.delta_minus.entries;
        const auto& N = dm.nabla_minus.entries;
        const auto k = D.size();
        std::string tag = "e=" + std::to_string(e) + " s=" + str(s) + " n=" + std::to_string(n);
        out.expect(unitriangular(D), "Delta not unitriangular " + tag);
        out.expect(unitriangular(N), "nabla not unitriangular " + tag);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) {
            std::int64_t acc = 0;
            for (std::size_t t = 0; t < k; ++t) acc += D[i][t] * N[t][j];
            out.expect(acc == (i == j ? 1 : 0), "product not identity " + tag);
            out.expect(N[i][j] >= 0, "negative nabla entry " + tag);
          }
        ++instances;
      }
  out.note << instances << " instances";
}

// 7
void chevalley(Outcome& out) {
  std::size_t actions = 0;
  int sign_flips = 0;
  for (int e : {2, 3})
    for (int l : {1, 2})
      for (int m = 1; m <= 4; ++m)
        for (const auto& nu : compositions(m, l)) {
          IntTuple s(static_cast<std::size_t>(l));
          for (int p = 0; p < l; ++p) s[p] = p;
          for (const auto& lam : window_labels(nu, -1, m <= 3 ? 2 : 1)) {
            FockLabel x{lam, nu, s, e};
            for (auto op : {Chevalley::e, Chevalley::f})
              for (int a = 0; a < e; ++a) {
                ++actions;
                auto combo = chevalley_standard(op, a, x);
                WedgeVector rhs;
                for (const auto& [mu, c] : combo) {
                  out.expect(c == 1, "coefficient " + std::to_string(c));
                  auto w = label_wedge({mu, nu, s, e});
                  for (const auto& [t, sc] : w.terms()) rhs.add(t, sc * c);
                }
                out.expect(chevalley_apply(op, a, label_wedge(x), e, l) == rhs, "presentations differ at " + str(lam));
                auto plain = chevalley_apply(op, a, WedgeVector::basis(underline_alpha(x)), e, l);
                for (const auto& [t, c] : plain.terms()) {
                  out.expect(bijection_A7(t, e, l).nu == nu.reversed(), "left Lambda^nu at " + str(lam));
                  if (c < 0) ++sign_flips;
                }
              }
          }
        }
  out.note << actions << " actions; block-ordered wedges, " << sign_flips
           << " sorted-wedge terms carry the reordering sign";
}

// 8
void cross_route(Outcome& out) {
  int entries = 0;
  for (const IntTuple& s : {IntTuple{2, 1}, IntTuple{2, 2}})
    for (int n = 0; n <= 2; ++n) {
      auto blk = block_decomposition_numbers(n, s, 2);
      auto fock = decomposition_matrices(n, s, 2).nabla_minus;
      out.expect(blk.rows.size() == fock.rows.size(), "label sets differ");
      std::map<MultiPartition, std::size_t> at;
      for (std::size_t i = 0; i < fock.rows.size(); ++i) at[fock.rows[i]] = i;
      for (std::size_t i = 0; i < blk.rows.size(); ++i)
        for (std::size_t j = 0; j < blk.rows.size(); ++j) {
          auto fi = at.find(blk.rows[i].reversed()), fj = at.find(blk.cols[j].reversed());
          bool ok = fi != at.end() && fj != at.end() && blk.entries[i][j] == fock.entries[fi->second][fj->second];
          out.expect(ok, "entry " + str(blk.rows[i]) + "," + str(blk.cols[j]) + " s=" + str(s));
          ++entries;
        }
    }
  out.note << entries << " entries, s in {(2,1),(2,2)}, n <= 2";
}

// 9
void identity_check(Outcome& out) {
  std::mt19937_64 rng(63);
  for (int t = 0; t < kIdentitySamples; ++t) {
    auto nu = random_composition(rng, 1 + static_cast<int>(rng() % 4), 1, 3);
    Rational kappa(-static_cast<int>(1 + rng() % 7), 1 + static_cast<int>(rng() % 4));
    auto labels = multipartitions_fitting(static_cast<int>(rng() % 4), nu);
    const auto& lam = pick(rng, labels);
    const auto& mu = pick(rng, labels);
    auto sides = theta_pairing_sides(lam, mu, nu, kappa);
    out.expect(sides.holds(), str(nu) + " " + str(lam) + " " + str(mu));
  }
  out.note << kIdentitySamples << " random instances";
}

// 10
void closure_and_implication(Outcome& out) {
  std::mt19937_64 rng(61);
  std::size_t below = 0;
  for (int t = 0; t < kClosureSamples; ++t) {
    const int l = 1 + static_cast<int>(rng() % 2);
    IntTuple s;
    for (int p = 0; p < l; ++p) s.push_back(1 + static_cast<std::int64_t>(rng() % 3));
    int e = 2 + static_cast<int>(rng() % 2);
    int n = 1 + static_cast<int>(rng() % 2);
    auto nu = composition_of_charge(s);
    auto labels = multipartitions_fitting(n, nu);
    const auto& lam = pick(rng, labels);
    auto pi = pi_shift_sec8(s);
    for (const auto& y : triangle_down_set(sec8_weight(lam, s, e), nu)) {
      ++below;
      std::int64_t total = 0;
      bool ok = true;
      for (std::size_t i = 0; i < pi.size(); ++i) {
        Rational v = y.classical[i] - pi[i];
        if (!is_integer(v) || v < 0) {
          ok = false;
          break;
        }
        total += static_cast<std::int64_t>(numerator_of(v));
      }
      out.expect(ok && total == n, "down set leaves the multipartitions, s=" + str(s));
    }
  }
  int related = 0;
  for (int t = 0; t < kClosureSamples; ++t) {
    auto nu = random_composition(rng, 1 + static_cast<int>(rng() % 3), 1, 3);
    Rational kappa = t % 3 == 0 ? Rational(-static_cast<int>(1 + rng() % 3), 2)
                                : Rational(-static_cast<int>(1 + rng() % 3));
    auto labels = multipartitions_fitting(1 + static_cast<int>(rng() % 2), nu);
    const auto& lam = pick(rng, labels);
    const auto& mu = pick(rng, labels);
    if (!order_triangle_leq(sec6_weight(mu, nu, kappa), sec6_weight(lam, nu, kappa), nu)) continue;
    ++related;
    out.expect(cherednik_leq(mu.reversed(), lam.reversed(), params_from_nu_kappa(nu, kappa)),
               "theta order fails for " + str(nu) + " " + str(lam) + " " + str(mu));
  }
  out.expect(related > 0, "no related pair sampled");
  out.note << kClosureSamples << " closure samples (" << below << " weights below), " << kClosureSamples
           << " implication samples (" << related << " related)";
}

// 11
void dunkl_suite(Outcome& out) {
  std::mt19937_64 rng(17);
  int reports = 0;
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}})
    for (int set = 0; set < kDunklParameterSets; ++set) {
      CherednikParams p{random_rational(rng), {}};
      if (p.h == 0) p.h = Rational(1, 3);
      for (int q = 1; q < l; ++q) p.H.push_back(random_rational(rng));
      std::string tag = "n=" + std::to_string(n) + " l=" + std::to_string(l);
      for (const auto& r : verify_relations(n, param_convert(p).kg, kDunklMaxDeg)) {
        out.expect(r.pass, r.relation + " " + tag);
        ++reports;
      }
      for (const auto& r : euler_grading_check(n, p, kDunklMaxDeg)) {
        out.expect(r.pass, r.relation + " " + tag);
        ++reports;
      }
    }
  auto control = verify_relations(2, dunkl_params(2, Rational(1, 3), {Rational(2, 5)}), kDunklMaxDeg, {.k_shift = 1});
  out.expect(!all_pass(control), "perturbed operator satisfied every relation");
  out.note << reports << " relation checks at max_deg " << kDunklMaxDeg << ", perturbed control fails";
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "bijection vectors", kLimitBijection, bijection_vectors},
      {2, "round trips", kLimitRoundTrip, round_trips},
      {3, "KL oracle equivalence", kLimitKL, kl_oracle},
      {4, "order chain", kLimitChain, order_chain},
      {5, "level -1 block", kLimitBlock, example_block},
      {6, "matrix algebra", kLimitMatrices, matrix_algebra},
      {7, "Chevalley agreement", kLimitChevalley, chevalley},
      {8, "cross-route agreement", kLimitCrossRoute, cross_route},
      {9, "theta/pairing identity", kLimitIdentity, identity_check},
      {10, "closure and implication", kLimitClosure, closure_and_implication},
      {11, "Dunkl suite", kLimitDunkl, dunkl_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& ex) {
      out.pass = false;
      out.note << " threw: " << ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= c.limit;
    bool pass = out.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s %2d %-30s %8.2fs (limit %gs%s)  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                in_time ? "" : ", exceeded", out.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
