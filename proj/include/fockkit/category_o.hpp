#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fockkit/affine_weyl.hpp"
#include "fockkit/combinatorics.hpp"
#include "fockkit/fock_space.hpp"
#include "fockkit/kl_engine.hpp"
#include "fockkit/params.hpp"
#include "fockkit/rational.hpp"

namespace fockkit {

// h = 1/kappa, h_p = nu•_p / kappa - m / (l kappa)
inline CherednikParams params_from_nu_kappa(const Composition& nu, const Rational& kappa) {
  require(kappa != 0, "kappa must be nonzero");
  const int l = nu.level();
  require(l >= 1, "composition must have at least one part");
  const Rational m = nu.total();
  auto bullet = nu.bullet();
  CherednikParams out{1 / kappa, {}};
  for (int p = 0; p + 1 < l; ++p) out.H.push_back(Rational(bullet[p]) / kappa - m / (l * kappa));
  return out;
}

// theta_0 = 0
inline Rational theta(const MultiPartition& lambda, const CherednikParams& params) {
  const int l = params.level();
  require(lambda.level() == l, "multipartition level differs from parameter level");
  Rational first = 0, second = 0;
  for (int p = 1; p <= l; ++p) {
    const auto& part = lambda[static_cast<std::size_t>(p - 1)];
    if (p >= 2) first += Rational(part.weight()) * params.partial_sum(p);
    second += Rational(part.n_statistic() - part.transpose().n_statistic());
  }
  return l * first - params.h * l * second;
}

enum class CherednikOrder { lambda_greater, mu_greater, incomparable };

// Delta_mu ≻ Delta_lambda iff theta_lambda - theta_mu is a positive integer.
inline CherednikOrder cherednik_order(const MultiPartition& lambda, const MultiPartition& mu,
                                      const CherednikParams& params) {
  Rational d = theta(lambda, params) - theta(mu, params);
  if (is_integer(d) && d > 0) return CherednikOrder::mu_greater;
  if (is_integer(d) && d < 0) return CherednikOrder::lambda_greater;
  return CherednikOrder::incomparable;
}

// Delta_mu ≼ Delta_lambda
inline bool cherednik_leq(const MultiPartition& mu, const MultiPartition& lambda, const CherednikParams& params) {
  return mu == lambda || cherednik_order(lambda, mu, params) == CherednikOrder::lambda_greater;
}

// pi = c(-1,...,-1,-2,...,-l)/l, the value -p repeated nu_p times
inline std::vector<Rational> pi_shift_sec6(const Composition& nu, const Rational& c) {
  std::vector<Rational> pi;
  for (int p = 1; p <= nu.level(); ++p)
    for (int j = 0; j < nu[p - 1]; ++j) pi.push_back(c * (-p) / nu.level());
  return pi;
}

// pi + rho = (s_1, ..., 1, s_2, ..., 1, ..., s_l, ..., 1)
inline std::vector<Rational> pi_shift_sec8(const IntTuple& s) {
  std::vector<Rational> pi;
  for (auto sp : s) {
    require(sp >= 0, "charge entries must be nonnegative");
    for (std::int64_t v = sp; v >= 1; --v) pi.push_back(Rational(v));
  }
  auto r = rho(static_cast<int>(pi.size()));
  for (std::size_t i = 0; i < pi.size(); ++i) pi[i] -= r[i];
  return pi;
}

// tilde(lambda + pi) at the given kappa
inline AffineWeight shifted_weight(const IntTuple& lambda, const std::vector<Rational>& pi, const Rational& kappa) {
  require(lambda.size() == pi.size(), "weight and shift have different ranks");
  std::vector<Rational> x(pi);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += lambda[i];
  return tilde_weight(x, kappa);
}

struct ThetaPairingSides {
  Rational lhs;  // c (theta_{mu°} - theta_{lambda°}) / l
  Rational rhs;  // <lambda~_pi - mu~_pi : pi + c omega_0>
  bool holds() const { return lhs == rhs; }
};

inline ThetaPairingSides theta_pairing_sides(const MultiPartition& lambda, const MultiPartition& mu, const Composition& nu,
                                     const Rational& kappa) {
  require(fits(lambda, nu) && fits(mu, nu), "multipartitions must fit the composition");
  require(lambda.weight() == mu.weight(), "multipartitions must have the same size");
  const int m = nu.total(), l = nu.level();
  const Rational c = kappa - m;
  auto params = params_from_nu_kappa(nu, kappa);
  auto pi = pi_shift_sec6(nu, c);
  ThetaPairingSides out;
  out.lhs = c * (theta(mu.reversed(), params) - theta(lambda.reversed(), params)) / l;
  AffineWeight anchor{0, pi, c};
  out.rhs = pairing(shifted_weight(embed_weight(lambda, nu), pi, kappa) -
                        shifted_weight(embed_weight(mu, nu), pi, kappa),
                    anchor);
  return out;
}

inline bool check_identity_6_3(const MultiPartition& lambda, const MultiPartition& mu, const Composition& nu,
                               const Rational& kappa) {
  return theta_pairing_sides(lambda, mu, nu, kappa).holds();
}

// Weight of Delta_{lambda,nu,kappa} with the pi of the functor E.
inline AffineWeight sec6_weight(const MultiPartition& lambda, const Composition& nu, const Rational& kappa) {
  return shifted_weight(embed_weight(lambda, nu), pi_shift_sec6(nu, kappa - nu.total()), kappa);
}

inline AffineWeight sec8_weight(const MultiPartition& lambda, const IntTuple& s, int e) {
  auto nu = composition_of_charge(s);
  return shifted_weight(embed_weight(lambda, nu), pi_shift_sec8(s), Rational(-e));
}

// entries[i][j] = [Delta_i : S_j] for nu-dominant integral weights, one
// character matrix per dot orbit.
inline std::vector<std::vector<std::int64_t>> multiplicities_from_weights(
    const std::vector<AffineWeight>& weights, const Composition& nu, const CharacterMatrixOptions& opts = {}) {
  const std::size_t k = weights.size();
  std::map<AffineWeight, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < k; ++i) orbits[antidominant_rep(weights[i]).gamma].push_back(i);
  std::vector<std::vector<std::int64_t>> out(k, std::vector<std::int64_t>(k, 0));
  for (const auto& [gamma, members] : orbits) {
    std::vector<AffineWeight> targets;
    for (auto i : members) targets.push_back(weights[i]);
    auto cm = character_matrix(gamma, nu, targets, opts);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = 0; b < members.size(); ++b) out[members[a]][members[b]] = cm.inverse[a][b];
  }
  return out;
}

// [Delta_{lambda,s,-e} : S_{mu,s,-e}] over lambda, mu in P^l_{n,s}, rows and
// columns labeled by lambda itself.
inline DecompMatrix block_decomposition_numbers(int n, const IntTuple& s, int e,
                                                const CharacterMatrixOptions& opts = {}) {
  require(n >= 0, "n must be nonnegative");
  require(e >= 1, "e must be a positive integer");
  auto nu = composition_of_charge(s);
  auto labels = multipartitions_fitting(n, nu);
  std::vector<AffineWeight> weights;
  for (const auto& l : labels) weights.push_back(sec8_weight(l, s, e));
  return {labels, labels, multiplicities_from_weights(weights, nu, opts)};
}

// Same with the shift used by the functor E (any integral kappa < 0).
inline DecompMatrix block_decomposition_sec6(int n, const Composition& nu, const Rational& kappa,
                                             const CharacterMatrixOptions& opts = {}) {
  require(n >= 0, "n must be nonnegative");
  auto labels = multipartitions_fitting(n, nu);
  std::vector<AffineWeight> weights;
  for (const auto& l : labels) weights.push_back(sec6_weight(l, nu, kappa));
  return {labels, labels, multiplicities_from_weights(weights, nu, opts)};
}

}  // namespace fockkit
