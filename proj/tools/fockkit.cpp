#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fockkit/affine_weyl.hpp"
#include "fockkit/category_o.hpp"
#include "fockkit/cherednik.hpp"
#include "fockkit/fock_space.hpp"
#include "fockkit/json_io.hpp"
#include "fockkit/kl_engine.hpp"

using namespace fockkit;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

IntTuple parse_ints(const std::string& text) {
  IntTuple out;
  for (const auto& tok : split(text, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) fail(errc::parse, "bad integer '" + tok + "' in '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_rational(tok));
  return out;
}

Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  for (auto v : parse_ints(text)) parts.push_back(static_cast<int>(v));
  return Composition(std::move(parts));
}

// "e" or "" for the identity, else simple reflections separated by '.' or ','
AffinePermutation parse_word(const std::string& text, int m) {
  if (text.empty() || text == "e") return AffinePermutation::identity(m);
  std::string t = text;
  std::replace(t.begin(), t.end(), '.', ',');
  std::vector<int> word;
  for (auto v : parse_ints(t)) word.push_back(static_cast<int>(v));
  return AffinePermutation::from_word(word, m);
}

Chevalley parse_op(const std::string& s) {
  if (s == "e") return Chevalley::e;
  if (s == "f") return Chevalley::f;
  fail(errc::parse, "--op must be e or f");
}

struct ParamFlags {
  std::string h, H, nu, kappa;

  void attach(CLI::App* app) {
    app->add_option("--h", h, "parameter h as a/b");
    app->add_option("--H", H, "h_1,...,h_{l-1} as a/b");
    app->add_option("--nu", nu, "composition; with --kappa gives h = 1/kappa, h_p = nu•_p/kappa - m/(l kappa)");
    app->add_option("--kappa", kappa, "level kappa as a/b");
  }

  CherednikParams resolve() const {
    if (!nu.empty() || !kappa.empty()) {
      if (nu.empty() || kappa.empty()) fail(errc::parse, "--nu and --kappa go together");
      return params_from_nu_kappa(parse_composition(nu), parse_rational(kappa));
    }
    if (h.empty()) fail(errc::parse, "give either --h/--H or --nu/--kappa");
    return {parse_rational(h), parse_rationals(H)};
  }
};

Json report_json(const RelationReport& r) {
  Json out = Json::object();
  for (const auto& x : r) {
    Json v{{"status", x.pass ? "pass" : "fail"}};
    if (x.witness) v["witness"] = *x.witness;
    out[x.relation] = v;
  }
  return out;
}

Json poly_json(const IntPoly& p) {
  std::vector<std::int64_t> c;
  for (int i = 0; i <= p.degree(); ++i) c.push_back(p[static_cast<std::size_t>(i)]);
  return Json{{"coeffs", c}, {"poly", p.to_string()}, {"value_at_1", p.eval(1)}};
}

DecompMatrix relabel_reversed(DecompMatrix d) {
  for (auto& r : d.rows) r = r.reversed();
  for (auto& c : d.cols) c = c.reversed();
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fockkit: Fock spaces, affine KL polynomials and cyclotomic Cherednik algebras"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  std::string out_format = "json", cache_path;
  app.add_option("--out", out_format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache", cache_path, "KL cache file (default: $FOCKKIT_CACHE)");

  std::function<Json()> run;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--out", out_format, "output format")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--cache", cache_path, "KL cache file");
    return s;
  };

  // --- Fock space maps
  int e = 2, l = 1;
  std::int64_t a_index = 0, phi = 0, p_value = 1;
  std::string tuple_s, nu_s, s_s, lambda_s, op_s = "f", presentation = "standard";

  auto* decode = sub("decode", "split an index a into (c, p, r, phi)");
  decode->add_option("--e", e)->required();
  decode->add_option("--l", l)->required();
  decode->add_option("--a", a_index)->required()->allow_extra_args(false);
  decode->callback([&] {
    run = [&] {
      auto d = decode_index(a_index, e, l);
      return Json{{"c", d.c}, {"p", d.p}, {"r", d.r}, {"phi", d.phi}};
    };
  });

  auto* encode = sub("encode", "index a from (phi, p)");
  encode->add_option("--e", e)->required();
  encode->add_option("--l", l)->required();
  encode->add_option("--phi", phi)->required();
  encode->add_option("--p", p_value)->required();
  encode->callback([&] { run = [&] { return Json{{"a", encode_index(phi, p_value, e, l)}}; }; });

  auto* bij = sub("bij-a7", "strictly decreasing tuple to (nu, alpha)");
  bij->add_option("--e", e)->required();
  bij->add_option("--l", l)->required();
  bij->add_option("--tuple", tuple_s)->required();
  bij->callback([&] {
    run = [&] {
      auto img = bijection_A7(parse_ints(tuple_s), e, l);
      return Json{{"nu", to_json(img.nu)}, {"alpha", img.alpha}};
    };
  });

  auto* alpha = sub("alpha", "alpha(lambda, nu, s)");
  alpha->add_option("--nu", nu_s)->required();
  alpha->add_option("--s", s_s)->required();
  alpha->add_option("--lambda", lambda_s)->required();
  alpha->callback([&] {
    run = [&] { return Json(alpha_map(parse_ints(lambda_s), parse_composition(nu_s), parse_ints(s_s))); };
  });

  int l_opt = 0;
  auto* ualpha = sub("underline-alpha", "strictly decreasing tuple of the label (lambda, nu, s, e)");
  ualpha->add_option("--e", e)->required();
  ualpha->add_option("--l", l_opt, "level (checked against --nu)");
  ualpha->add_option("--nu", nu_s)->required();
  ualpha->add_option("--s", s_s)->required();
  ualpha->add_option("--lambda", lambda_s)->required();
  ualpha->callback([&] {
    run = [&] {
      auto nu = parse_composition(nu_s);
      if (l_opt) require(l_opt == nu.level(), "--l differs from the number of parts of --nu");
      return Json(underline_alpha(parse_ints(lambda_s), nu, parse_ints(s_s), e));
    };
  });

  std::int64_t residue = 0;
  auto* chev = sub("chevalley", "apply e_a or f_a to a label (standard) or to its wedge (wedge)");
  chev->add_option("--e", e)->required();
  chev->add_option("--nu", nu_s)->required();
  chev->add_option("--s", s_s)->required();
  chev->add_option("--lambda", lambda_s)->required();
  chev->add_option("--op", op_s)->check(CLI::IsMember({"e", "f"}));
  chev->add_option("--a", residue)->required();
  chev->add_option("--presentation", presentation)->check(CLI::IsMember({"standard", "wedge", "wedge-block"}));
  chev->callback([&] {
    run = [&] {
      FockLabel x{parse_ints(lambda_s), parse_composition(nu_s), parse_ints(s_s), e};
      auto op = parse_op(op_s);
      if (presentation == "standard") {
        Json out = Json::array();
        for (const auto& [lam, c] : chevalley_standard(op, residue, x)) out.push_back(Json{{"lambda", lam}, {"coeff", c}});
        return out;
      }
      auto v = presentation == "wedge" ? WedgeVector::basis(underline_alpha(x)) : label_wedge(x);
      return to_json(chevalley_apply(op, residue, v, e, x.level()));
    };
  });

  // --- matrices
  int n = 0;
  std::string which = "nabla", route = "fock", kappa_s;
  auto* gminus = sub("gminus", "canonical basis element G^- of a label");
  gminus->add_option("--e", e)->required();
  gminus->add_option("--nu", nu_s)->required();
  gminus->add_option("--s", s_s)->required();
  gminus->add_option("--lambda", lambda_s)->required();
  gminus->callback([&] {
    run = [&] {
      FockLabel x{parse_ints(lambda_s), parse_composition(nu_s), parse_ints(s_s), e};
      Json out = Json::array();
      for (const auto& [lam, t] : canonical_Gminus_terms(x))
        if (t.value != 0) out.push_back(Json{{"lambda", lam}, {"coeff", t.value}, {"q_analog", t.q_analog.to_string()}});
      return out;
    };
  });

  auto* decomp = sub("decomp", "decomposition matrices over P_{n,s}, labels lambda°");
  decomp->add_option("--n", n)->required();
  decomp->add_option("--s", s_s);
  decomp->add_option("--e", e);
  decomp->add_option("--nu", nu_s, "blocks route: parabolic composition (instead of --s/--e)");
  decomp->add_option("--kappa", kappa_s, "blocks route: level kappa");
  decomp->add_option("--which", which)->check(CLI::IsMember({"nabla", "delta"}));
  decomp->add_option("--route", route, "fock (canonical basis) or blocks (character matrices)")
      ->check(CLI::IsMember({"fock", "blocks"}));
  decomp->callback([&] {
    run = [&] {
      if (!nu_s.empty()) {
        require(route == "blocks" && which == "nabla" && !kappa_s.empty(), "--nu needs --kappa and --route blocks");
        return to_json(block_decomposition_sec6(n, parse_composition(nu_s), parse_rational(kappa_s)));
      }
      if (s_s.empty()) fail(errc::parse, "--s is required");
      auto s = parse_ints(s_s);
      if (route == "blocks") {
        require(which == "nabla", "the blocks route only yields nabla");
        return to_json(relabel_reversed(block_decomposition_numbers(n, s, e)));
      }
      auto m = decomposition_matrices(n, s, e);
      return to_json(which == "nabla" ? m.nabla_minus : m.delta_minus);
    };
  });

  auto* yv = sub("yvonne", "Delta^+ matrix, labels are transposed multipartitions");
  yv->add_option("--n", n)->required();
  yv->add_option("--s", s_s)->required();
  yv->add_option("--e", e)->required();
  yv->callback([&] { run = [&] { return to_json(yvonne_delta_plus(n, parse_ints(s_s), e)); }; });

  // --- KL polynomials
  int m = 2;
  bool affine = false, alternating = false;
  std::string v_s, w_s, J_s;
  auto* kl = sub("kl", "Kazhdan-Lusztig polynomial P_{v,w}");
  kl->add_option("--m", m)->required();
  kl->add_flag("--affine", affine, "affine symmetric group (default finite)");
  kl->add_option("--v", v_s)->required();
  kl->add_option("--w", w_s)->required();
  kl->callback([&] {
    run = [&] {
      auto ctx = affine ? CoxeterContext::affine_a(m) : CoxeterContext::finite_a(m);
      return poly_json(kl_poly(ctx, parse_word(v_s, m), parse_word(w_s, m)));
    };
  });

  auto* pkl = sub("pkl", "parabolic polynomial P^{J,-1}_{u,w}");
  pkl->add_option("--m", m)->required();
  pkl->add_flag("--affine", affine);
  pkl->add_option("--J", J_s, "simple reflections generating W_J");
  pkl->add_option("--u", v_s)->required();
  pkl->add_option("--w", w_s)->required();
  pkl->add_flag("--alternating", alternating, "use the alternating sum over W_J");
  pkl->callback([&] {
    run = [&] {
      std::vector<int> J;
      for (auto x : parse_ints(J_s)) J.push_back(static_cast<int>(x));
      auto ctx = affine ? CoxeterContext::affine_a(m, J) : CoxeterContext::finite_a(m, J);
      auto& eng = EngineRegistry::instance().engine(ctx);
      auto u = parse_word(v_s, m), w = parse_word(w_s, m);
      return poly_json(alternating ? eng.parabolic_kl_minus(u, w) : eng.parabolic_minus(u, w));
    };
  });

  std::vector<std::string> weights_s;
  auto* charmat = sub("charmat", "character matrix of nu-dominant weights in one dot orbit");
  charmat->add_option("--nu", nu_s)->required();
  charmat->add_option("--kappa", kappa_s)->required();
  charmat->add_option("--weight", weights_s, "classical coordinates a/b,...; repeat per weight")->required();
  charmat->add_option("--which", which, "inverse = [M : L], matrix = [L] in terms of [M]")
      ->check(CLI::IsMember({"inverse", "matrix"}));
  charmat->add_flag("--alternating", alternating);
  charmat->callback([&] {
    run = [&] {
      auto nu = parse_composition(nu_s);
      auto kappa = parse_rational(kappa_s);
      std::vector<AffineWeight> ws;
      for (const auto& t : weights_s) ws.push_back(tilde_weight(parse_rationals(t), kappa));
      auto gamma = antidominant_rep(ws.front()).gamma;
      auto cm = character_matrix(gamma, nu, ws, {.use_alternating_sum = alternating});
      Json labels = Json::array();
      for (const auto& w : ws) labels.push_back(to_json(w.classical));
      return Json{{"rows", labels}, {"cols", labels}, {"entries", which == "matrix" ? cm.matrix : cm.inverse}};
    };
  });

  // --- category O dictionary
  ParamFlags pf;
  std::string mu_s;
  auto* th = sub("theta", "theta_lambda with theta_0 = 0");
  pf.attach(th);
  th->add_option("--lambda", lambda_s, "multipartition as JSON")->required();
  th->callback([&] {
    run = [&] { return Json{{"theta", to_json(theta(parse_multipartition(lambda_s), pf.resolve()))}}; };
  });

  auto* ord = sub("order", "compare Delta_lambda and Delta_mu by theta");
  pf.attach(ord);
  ord->add_option("--lambda", lambda_s)->required();
  ord->add_option("--mu", mu_s)->required();
  ord->callback([&] {
    run = [&] {
      auto p = pf.resolve();
      auto lam = parse_multipartition(lambda_s), mu = parse_multipartition(mu_s);
      const char* names[] = {"lambda-greater", "mu-greater", "incomparable"};
      return Json{{"order", names[static_cast<int>(cherednik_order(lam, mu, p))]},
                  {"theta_lambda", to_json(theta(lam, p))},
                  {"theta_mu", to_json(theta(mu, p))}};
    };
  });

  auto* c63 = sub("check63", "compare theta differences with the affine pairing");
  c63->add_option("--nu", nu_s)->required();
  c63->add_option("--kappa", kappa_s)->required();
  c63->add_option("--lambda", lambda_s)->required();
  c63->add_option("--mu", mu_s)->required();
  c63->callback([&] {
    run = [&] {
      auto sides = theta_pairing_sides(parse_multipartition(lambda_s), parse_multipartition(mu_s),
                                      parse_composition(nu_s), parse_rational(kappa_s));
      return Json{{"holds", sides.holds()}, {"lhs", to_json(sides.lhs)}, {"rhs", to_json(sides.rhs)}};
    };
  });

  bool raw = false;
  std::size_t budget = 1'000'000;
  auto* tri = sub("triangle-order", "decide Delta_mu ⊴ Delta_lambda");
  tri->add_option("--nu", nu_s)->required();
  tri->add_option("--kappa", kappa_s)->required();
  tri->add_option("--lambda", lambda_s)->required();
  tri->add_option("--mu", mu_s)->required();
  tri->add_flag("--raw", raw, "lambda and mu are classical weights a/b,... instead of multipartitions");
  tri->add_option("--budget", budget);
  tri->callback([&] {
    run = [&] {
      auto nu = parse_composition(nu_s);
      auto kappa = parse_rational(kappa_s);
      auto weight = [&](const std::string& t) {
        return raw ? tilde_weight(parse_rationals(t), kappa) : sec6_weight(parse_multipartition(t), nu, kappa);
      };
      TriangleOptions opts;
      opts.node_budget = budget;
      return Json{{"leq", order_triangle_leq(weight(mu_s), weight(lambda_s), nu, opts)}};
    };
  });

  // --- Cherednik algebra
  int maxdeg = 3;
  std::string k_s, gamma_s, k_shift_s;
  auto* dk = sub("dunkl-check", "defining relations on monomials of degree <= maxdeg");
  dk->add_option("--n", n)->required();
  dk->add_option("--l", l)->required();
  dk->add_option("--k", k_s)->required();
  dk->add_option("--gamma", gamma_s, "gamma_1,...,gamma_{l-1}");
  dk->add_option("--maxdeg", maxdeg);
  dk->add_option("--k-shift", k_shift_s, "perturb k inside the Dunkl operators");
  dk->callback([&] {
    run = [&] {
      VerifyOptions opts;
      if (!k_shift_s.empty()) opts.k_shift = parse_rational(k_shift_s);
      return report_json(verify_relations(n, dunkl_params(l, parse_rational(k_s), parse_rationals(gamma_s)), maxdeg, opts));
    };
  });

  bool plus_h = false;
  auto* eu = sub("euler-check", "grading by the Euler element");
  pf.attach(eu);
  eu->add_option("--n", n)->required();
  eu->add_option("--maxdeg", maxdeg);
  eu->add_flag("--plus-h", plus_h, "use +h in front of the transposition part of eu_0");
  eu->callback([&] { run = [&] { return report_json(euler_grading_check(n, pf.resolve(), maxdeg, plus_h)); }; });

  auto* par = sub("params", "convert (h, H) to (k, gamma) and the exponents of (q, Q)");
  pf.attach(par);
  par->callback([&] {
    run = [&] {
      auto p = pf.resolve();
      auto c = param_convert(p);
      Json hp = Json::array(), gam = Json::array();
      for (int q = 1; q <= p.level(); ++q) hp.push_back(to_json(p.h_p(q)));
      for (std::size_t q = 1; q < c.kg.gamma.size(); ++q) gam.push_back(c.kg.gamma[q].to_string());
      return Json{{"h", to_json(p.h)},
                  {"h_p", hp},
                  {"k", to_json(c.kg.k)},
                  {"gamma", gam},
                  {"q_exponent", to_json(c.q_exponent)},
                  {"q_p_exponents", to_json(c.q_p_exponents)}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (!cache_path.empty()) EngineRegistry::instance().set_cache_path(cache_path);
    Json result = run();
    if (out_format == "csv") std::cout << to_csv(result);
    else std::cout << result.dump() << "\n";
    return 0;
  } catch (const Error& err) {
    std::cout << Json{{"error", err.code()}, {"detail", err.what()}}.dump() << "\n";
    return err.code() == errc::parse ? 2 : 1;
  } catch (const std::exception& err) {
    std::cout << Json{{"error", "Internal"}, {"detail", err.what()}}.dump() << "\n";
    return 1;
  }
}
