// Command-line front end: every evaluator and identity check of the library,
// with exact text/JSON output. Exit codes: 0 success, 1 domain error (JSON
// error object on stdout), 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>

#include "hyperdet/json_io.hpp"
#include "hyperdet/selberg.hpp"
#include "hyperdet/turanian.hpp"

using nlohmann::json;
using namespace hyperdet;

namespace {

constexpr const char* kSchema = "hyperdet/1";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Common {
  std::string input_path, inline_json;
  std::string format = "text";
  int threads = 0;

  std::string payload() const {
    if (!inline_json.empty()) return inline_json;
    if (!input_path.empty()) return slurp(input_path);
    throw std::invalid_argument("provide --input FILE or --json TEXT");
  }
};

void emit_value(const Common& c, const std::string& text_form, json value_json) {
  if (c.format == "json") {
    json out;
    out["schema"] = kSchema;
    out["value"] = std::move(value_json);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << text_form << "\n";
  }
}

void emit_scalar(const Common& c, const ExactScalar& v) { emit_value(c, v.str(), v.str()); }

json poly_json(const MultiPoly& p) { return json::parse(multipoly_json(p)); }

void emit_poly(const Common& c, const MultiPoly& p) { emit_value(c, p.str(), poly_json(p)); }

int emit_identity(const std::string& lhs, const std::string& rhs) {
  json out;
  out["schema"] = kSchema;
  out["lhs"] = lhs;
  out["rhs"] = rhs;
  out["equal"] = (lhs == rhs);
  std::cout << out.dump() << "\n";
  return lhs == rhs ? 0 : 1;
}

MultiPoly dp_unipoly_to_multi(const DPoly<UniPoly>& p, const std::string& param,
                              const std::string& yname) {
  std::vector<std::string> vars{param, yname};
  MultiPoly out(vars);
  for (size_t t = 0; t < p.c.size(); ++t)
    for (size_t j = 0; j < p.c[t].coeffs().size(); ++j)
      out.add_term({int(j), int(t)}, p.c[t].coeffs()[j]);
  return out;
}

SequenceFamily family_from_cli(const std::string& name, const Rat& alpha, const Rat& a,
                               const Rat& b) {
  SequenceFamily fam = SequenceFamily::simple(family_tag_from_string(name));
  fam.alpha = alpha;
  fam.a = a;
  fam.b = b;
  return fam;
}

// Moments for the generic evaluators; Bell is symbolic and handled upstream.
std::vector<ExactScalar> cli_moments(const std::string& family, const Rat& alpha,
                                     const Rat& a, const Rat& b, size_t count) {
  auto fam = family_from_cli(family, alpha, a, b);
  std::vector<ExactScalar> out;
  for (const auto& q : family_moments(fam, count)) out.emplace_back(q);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Hankel/Toeplitz hyperdeterminant calculator"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads,
                 "worker threads for the Hankel kernel (HYPERDET_THREADS)");

  std::string family = "factorial", variant = "jacobi", identity_name, turfam = "hermite";
  int n = 2, k = 1, r = 0, N = 0, s = 0, m = 0, kase = 1, cheb_m = 2;
  unsigned seed = 7;
  std::string alpha_s = "0", a_s = "1", b_s = "2", p_s = "1/2", beta_s = "1", gamma_s = "1/2";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", common.input_path, "JSON input file");
    cmd->add_option("--json", common.inline_json, "inline JSON input");
    cmd->add_option("--format", common.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* det = app.add_subcommand("det", "hyperdeterminant of a dense tensor (naive kernel)");
  add_common(det);

  auto* hankel = app.add_subcommand("hankel", "D_{n;r}^{(k)} by the fast expansion");
  add_common(hankel);
  hankel->add_option("--family", family, "moment family tag");
  hankel->add_option("--n", n);
  hankel->add_option("--k", k);
  hankel->add_option("--r", r);
  hankel->add_option("--alpha", alpha_s);
  hankel->add_option("--a", a_s);
  hankel->add_option("--b", b_s);

  auto* toep = app.add_subcommand("toeplitz", "Toeplitz hyperdeterminant from offsets");
  add_common(toep);

  auto* pf4 = app.add_subcommand("pfaffian4", "order-4 route via the P/P' Pfaffian");
  pf4->add_option("--family", family)->check(CLI::IsMember({"factorial", "bell"}));
  pf4->add_option("--n", n);
  pf4->add_option("--r", r);
  add_common(pf4);

  auto* closed = app.add_subcommand("closed-form", "closed form for a named family");
  add_common(closed);
  closed->add_option("--family", family);
  closed->add_option("--n", n);
  closed->add_option("--k", k);
  closed->add_option("--r", r);
  closed->add_option("--alpha", alpha_s);
  closed->add_option("--a", a_s);
  closed->add_option("--b", b_s);

  auto* tur = app.add_subcommand("turanian", "Hankel hyperdeterminant of orthogonal polynomials");
  add_common(tur);
  tur->add_option("--family", turfam);
  tur->add_option("--n", n);
  tur->add_option("--k", k);
  tur->add_option("--r", r);
  tur->add_option("--alpha", alpha_s);
  tur->add_option("--beta", beta_s);
  tur->add_option("--gamma", gamma_s);
  tur->add_option("--p", p_s);
  tur->add_option("--N", N);
  tur->add_flag("--closed", "use the closed form instead of brute force");

  auto* kan = app.add_subcommand("kaneko-check", "rectangular Jacobi-polynomial identity");
  add_common(kan);
  kan->add_option("--n", n);
  kan->add_option("--r", r);
  kan->add_option("--a", a_s);
  kan->add_option("--b", b_s);
  kan->add_option("--k", k);
  kan->add_option("--variant", variant)->check(CLI::IsMember({"jacobi"}));

  auto* schur = app.add_subcommand("schur", "Schur expansion of D_n^{(k)}(h)");
  add_common(schur);
  schur->add_option("--n", n);
  schur->add_option("--k", k);

  auto* ident = app.add_subcommand("identity", "named identity checks");
  add_common(ident);
  ident->add_option("name", identity_name,
                    "appendixA|appendixC|KZbell|bQ|fibonacci|laplacian|binomial-shift|"
                    "chebyshev|heine|leclerc")
      ->required();
  ident->add_option("--n", n);
  ident->add_option("--k", k);
  ident->add_option("--r", r);
  ident->add_option("--N", N);
  ident->add_option("--s", s);
  ident->add_option("--m", m);
  ident->add_option("--case", kase);
  ident->add_option("--cheb-m", cheb_m);
  ident->add_option("--a", a_s);
  ident->add_option("--b", b_s);
  ident->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const Rat alpha = rat_from_string(alpha_s), av = rat_from_string(a_s),
            bv = rat_from_string(b_s);

  if (det->parsed()) {
    auto req = parse_tensor_json(common.payload());
    HyperTensor<ExactScalar> A(req.order, req.dim, ExactScalar());
    A.data() = req.entries;
    ExactScalar v = (req.order % 2 == 0) ? det_even(A, req.order / 2) : det_plus(A);
    emit_scalar(common, v);
    return 0;
  }
  if (hankel->parsed()) {
    if (!common.inline_json.empty() || !common.input_path.empty()) {
      auto req = parse_hankel_json(common.payload());
      emit_scalar(common, hankel_fast(req.moments, req.n, req.k, req.r, common.threads));
      return 0;
    }
    const size_t need = size_t(2 * k * (n - 1) + r) + 1;
    if (family == "bell") {
      std::vector<MultiPoly> mom;
      for (const auto& q : bell_polynomials(need)) mom.push_back(MultiPoly::from_unipoly(q));
      emit_poly(common, hankel_fast(mom, n, k, r, common.threads));
    } else {
      auto mom = cli_moments(family, alpha, av, bv, need);
      emit_scalar(common, hankel_fast(mom, n, k, r, common.threads));
    }
    return 0;
  }
  if (toep->parsed()) {
    auto req = parse_toeplitz_json(common.payload());
    emit_scalar(common, toeplitz_det(req.offsets, req.n, req.k));
    return 0;
  }
  if (pf4->parsed()) {
    const size_t need = size_t(4 * n - 3 + r) + 1;
    if (family == "bell") {
      std::vector<MultiPoly> mom;
      for (const auto& q : bell_polynomials(need)) mom.push_back(MultiPoly::from_unipoly(q));
      auto fam = monic_from_moments(mom, 2 * n - 1);
      emit_poly(common, det4_via_pfaffian(mom, fam, n, r));
    } else {
      auto mom = family_moments(SequenceFamily::simple(FamilyTag::factorial), need);
      auto fam = monic_from_moments(mom, 2 * n - 1);
      Rat v = det4_via_pfaffian(mom, fam, n, r);
      emit_value(common, rat_to_string(v), rat_to_string(v));
    }
    return 0;
  }
  if (closed->parsed()) {
    emit_scalar(common, closed_form_hankel(family_from_cli(family, alpha, av, bv), n, k, r));
    return 0;
  }
  if (tur->parsed()) {
    TuranianSpec spec;
    spec.family = turanian_family_from_string(turfam);
    spec.n = n;
    spec.k = k;
    spec.r = r;
    spec.alpha = alpha;
    spec.beta = rat_from_string(beta_s);
    spec.gamma = rat_from_string(gamma_s);
    spec.p = rat_from_string(p_s);
    spec.N = N;
    MultiPoly v = tur->count("--closed") ? turanian_closed_form(spec)
                                         : turanian_bruteforce(spec);
    emit_poly(common, v);
    return 0;
  }
  if (kan->parsed()) {
    auto [lhs, rhs] = kaneko_check(n, r, av, bv, k);
    return emit_identity(lhs.str(), rhs.str());
  }
  if (schur->parsed()) {
    auto [direct, route2] = hankel_hyperdet_schur(n, k);
    if (!(direct == route2)) throw std::domain_error("schur route mismatch");
    std::cout << sym_expansion_json(direct) << "\n";
    return 0;
  }
  if (ident->parsed()) {
    if (identity_name == "appendixA") {
      auto rep = appendixA_consistency(n, av, bv, k);
      json out;
      out["schema"] = kSchema;
      out["direct"] = rat_to_string(rep.direct);
      out["via_hilbert"] = rat_to_string(rep.via_hilbert);
      out["via_inverse_factorial"] = rat_to_string(rep.via_inverse_factorial);
      out["via_factorial"] = rat_to_string(rep.via_factorial);
      out["equal"] = rep.all_equal();
      std::cout << out.dump() << "\n";
      return rep.all_equal() ? 0 : 1;
    } else if (identity_name == "appendixC") {
      ExactScalar closed_v = pseudo_closed_form(kase, n, k, s, m, av, bv);
      auto mom = pseudo_moments(kase, av, bv, size_t(2 * k * (n - 1) + 2) + 1);
      std::vector<int> mvec;
      for (int t = 0; t < m; ++t) mvec.push_back(2);
      for (int t = 0; t < s; ++t) mvec.push_back(1);
      while (static_cast<int>(mvec.size()) < n) mvec.push_back(0);
      auto A = hankel_tensor_shifted_rows(mom, mvec, 2 * k + 1);
      return emit_identity(closed_v.str(), det_plus(A).str());
    } else if (identity_name == "KZbell") {
      std::vector<UniPoly> b = bell_polynomials(size_t(2 * (n + r - 1)) + 1);
      auto [lhs, rhs] = karlin_szego_check(b, n, r);
      return emit_identity(dp_unipoly_to_multi(lhs, "a", "y").str(),
                           dp_unipoly_to_multi(rhs, "a", "y").str());
    } else if (identity_name == "bQ") {
      auto [lhs, rhs] = falling_factorial_check(r, n, k);
      return emit_identity(lhs.str(), rhs.str());
    } else if (identity_name == "fibonacci") {
      auto [lhs, rhs] = fibonacci_identity(k);
      return emit_identity(rat_to_string(lhs), rat_to_string(rhs));
    } else if (identity_name == "laplacian") {
      auto [lhs, rhs] = laplacian_power_check(n, k);
      return emit_identity(rat_to_string(lhs), rat_to_string(rhs));
    } else if (identity_name == "binomial-shift") {
      auto [lhs, rhs] = binomial_shift_check(r, N, n, k);
      return emit_identity(lhs.str(), rhs.str());
    } else if (identity_name == "chebyshev") {
      auto [lhs, rhs] = chebyshev_identity(cheb_m);
      return emit_identity(lhs.str(), rhs.str());
    } else if (identity_name == "heine") {
      auto [lhs, rhs] = heine_hyperdet_check(n, r, k, av, bv);
      return emit_identity(lhs.str(), rhs.str());
    } else if (identity_name == "leclerc") {
      std::mt19937 rng(seed);
      std::vector<Rat> mom;
      for (int t = 0; t < 2 * (n - 1) + r + n + 4; ++t)
        mom.push_back(rat(long(rng() % 17) + 1, long(rng() % 7) + 1));
      auto [lhs, rhs] = leclerc_check(mom, n, r);
      return emit_identity(lhs.str(), rhs.str());
    } else {
      std::cerr << "unknown identity: " << identity_name << "\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    json err;
    err["schema"] = kSchema;
    err["error"] = e.what();
    std::cout << err.dump() << "\n";
    return 1;
  }
}
