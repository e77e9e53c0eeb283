#include "ncdr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <sstream>

#include "ncdr/dspace.hpp"
#include "ncdr/gateaux.hpp"
#include "ncdr/linmap.hpp"
#include "ncdr/ncpoly.hpp"
#include "ncdr/sampling.hpp"
#include "ncdr/taylor.hpp"

namespace ncdr {

using nlohmann::json;

bool Report::all_pass() const { return all_pass_except({}); }

bool Report::all_pass_except(const std::vector<std::string>& allowed) const {
  return std::all_of(checks.begin(), checks.end(), [&](const CheckResult& c) {
    return c.pass || std::find(allowed.begin(), allowed.end(), c.name) != allowed.end();
  });
}

json Report::to_json() const {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name},
                   {"status", c.pass ? "pass" : "fail"},
                   {"residual", c.residual},
                   {"detail", c.detail},
                   {"elapsed_ms", c.elapsed_ms}});
  return json{{"checks", out}, {"all_pass", all_pass()}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(30) << c.name << " residual=" << std::setprecision(3)
       << std::scientific << c.residual << std::defaultfloat << "  (" << std::fixed << std::setprecision(1)
       << c.elapsed_ms << " ms)" << std::defaultfloat;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  return os.str();
}

namespace {

double rel_error(const FElement& got, const FElement& want) {
  const double d = euclidean_norm(got - want), w = euclidean_norm(want);
  return w > 1e-12 ? d / w : d;
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

// Collects pass/fail for one check. Exact checks record the first witness.
struct Tally {
  bool ok = true;
  double worst = 0;
  std::string witness;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) witness = what;
    ok = ok && cond;
  }
  void bound(double residual, double tol, const std::string& what) {
    worst = std::max(worst, residual);
    if (!(residual <= tol) && ok) witness = what + " residual " + sci(residual) + " > " + sci(tol);
    ok = ok && residual <= tol;
  }
  CheckResult result(std::string summary) const {
    CheckResult r;
    r.pass = ok;
    r.residual = worst;
    r.detail = ok ? std::move(summary) : witness;
    return r;
  }
};

FElement f(const Element& e) { return to_float(e); }

StdComponents random_std(Sampler& s, const AlgebraPtr& alg) {
  auto c = StdComponents::zero(alg);
  for (std::size_t a = 0; a < alg->dim(); ++a)
    for (std::size_t b = 0; b < alg->dim(); ++b) c.comps(a, b) = s.rational();
  return c;
}

NCPoly random_poly(Sampler& s, const AlgebraPtr& alg, int max_degree, int max_terms) {
  NCPoly p{alg, {}};
  const int terms = s.integer(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int d = s.integer(1, max_degree);
    for (int k = 0; k <= d; ++k) m.coeffs.push_back(s.invertible(alg));
    p.terms.push_back(std::move(m));
  }
  return p;
}

MapEvaluator poly_map(const NCPoly& p) {
  return MapEvaluator::unary(p.alg, [p](const FElement& x) { return eval_poly(p, x); });
}

std::map<std::string, std::string> diagonal_names(std::size_t m, const std::string& to = "h") {
  std::map<std::string, std::string> out;
  for (const auto& s : h_symbols(m)) out[s] = to;
  return out;
}

CheckResult algebra_kernel(const VerifyOptions& o) {
  Tally t;
  const auto axioms = o.h->check_axioms();
  std::string witness = "unit axiom";
  if (axioms.witness) {
    const auto& w = *axioms.witness;
    witness = "associativity fails on (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
              std::to_string(w[2]) + ")";
  }
  t.require(axioms.ok(), witness);
  t.require(axioms.triples_checked == 64, "expected 64 basis triples");
  t.require(*o.h == *make_quaternion_algebra(-1, -1), "structure constants differ from the quaternion table");
  Sampler s(o.seed);
  for (int k = 0; k < 1000 && t.ok; ++k) {
    const auto a = s.element(o.h), b = s.element(o.h);
    t.require(norm_sq(a * b) == norm_sq(a) * norm_sq(b), "norm not multiplicative at " + to_string(a) + ", " + to_string(b));
  }
  return t.result("64 triples, 1000 norm pairs exact");
}

CheckResult conversion(const VerifyOptions& o) {
  Tally t;
  t.require(quaternion_group_matrix() * quaternion_group_matrix_inverse() == QMatrix::identity(4),
            "group matrices do not multiply to identity");
  Sampler s(o.seed + 2);
  for (int k = 0; k < 100 && t.ok; ++k) {
    const auto comps = random_std(s, o.h);
    const auto m = std_to_coord(comps);
    const auto back = coord_to_std(m);
    t.require(back.unique && back.comps == comps, "round trip failed on sample " + std::to_string(k));
    t.require(quaternion_std_from_coord(m) == back.comps, "closed form (coord->std) differs on sample " + std::to_string(k));
    t.require(quaternion_coord_from_std(comps) == m, "closed form (std->coord) differs on sample " + std::to_string(k));
  }
  return t.result("100 round trips and closed forms exact");
}

CheckResult non_representability(const VerifyOptions& o) {
  Tally t;
  const auto c = make_complex_algebra();
  bool rejected = false;
  try {
    coord_to_std({c, QMatrix{{1, 0}, {0, -1}}});
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotRepresentable;
  }
  t.require(rejected, "complex conjugation was accepted");
  const auto rc = big_c(c).rank, rh = big_c(o.h).rank;
  t.require(rc == 2, "complex BigC rank " + std::to_string(rc));
  t.require(rh == 16, "quaternion BigC rank " + std::to_string(rh));
  return t.result("conj rejected; ranks C=2, H=16");
}

CheckResult composition(const VerifyOptions& o) {
  Tally t;
  Sampler s(o.seed + 3);
  for (int k = 0; k < 100 && t.ok; ++k) {
    const auto g = random_std(s, o.h), fc = random_std(s, o.h);
    t.require(std_to_coord(compose_std(g, fc)).mat == std_to_coord(g).mat * std_to_coord(fc).mat,
              "composition mismatch on pair " + std::to_string(k));
  }
  return t.result("100 pairs exact");
}

CheckResult derivative_table_check(const VerifyOptions& o) {
  Tally t;
  for (const auto& row : derivative_table(o.seed + 4, 100, o.h)) t.bound(row.max_rel_residual, 1e-8, row.identity);
  return t.result("7 identities x 100 points");
}

CheckResult conjugation_differential(const VerifyOptions& o) {
  Tally t;
  const auto conj_map = MapEvaluator::unary(o.h, [](const FElement& x) { return conj(x); });
  Sampler s(o.seed + 5);
  for (int k = 0; k < 10; ++k) {
    const auto x = f(s.element(o.h));
    const auto jac = jacobian(conj_map, x);
    double dev = 0;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) dev = std::max(dev, std::abs(jac(r, c) - (r == c ? (r == 0 ? 1 : -1) : 0)));
    t.bound(dev, 1e-10, "Jacobian of conjugation");
  }
  const auto d = differential_std_components(conj_map, f(s.element(o.h)));
  auto expect = StdComponents::zero(o.h);
  for (std::size_t a = 0; a < 4; ++a) expect.comps(a, a) = Scalar(-1, 2);
  t.require(d.comps == expect, "standard components are not -1/2 on the diagonal");

  // Symbolic side: sum f^{ij} e_i h e_j against -1/2 (h + ihi + jhj + khk).
  WordPoly rebuilt(o.h);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (d.comps.comps(i, j) != 0)
        rebuilt = rebuilt + d.comps.comps(i, j) * (WordPoly::constant(Element::basis(o.h, i)) *
                                                   WordPoly::variable(o.h, "h") *
                                                   WordPoly::constant(Element::basis(o.h, j)));
  t.require(extensional_equal(rebuilt, parse_wordpoly("-1/2*(h + i*h*i + j*h*j + k*h*k)", o.h)),
            "reconstructed differential differs from -1/2(h + ihi + jhj + khk)");
  return t.result("Jacobian diag(1,-1,-1,-1); components -1/2; symbolic form equal");
}

CheckResult norm_derivative(const VerifyOptions& o) {
  Tally t;
  const auto nsq = MapEvaluator::unary(o.h, [h = o.h](const FElement& x) { return FElement::real(h, norm_sq(x)); });
  Sampler s(o.seed + 6);
  double scalar_part = 0, corrected = 0;
  for (int k = 0; k < 100; ++k) {
    const auto x = f(s.element(o.h)), h = f(s.element(o.h));
    const auto d = gateaux(nsq, x, h);
    const auto literal = x * conj(h) + conj(x) * h;
    t.bound(rel_error(d, literal), 1e-8, "d|x|^2(h) vs x conj(h) + conj(x) h at point " + std::to_string(k));
    scalar_part = std::max(scalar_part, std::abs(d[0] - literal[0]) / std::max(1e-12, std::abs(literal[0])));
    corrected = std::max(corrected, rel_error(d, h * conj(x) + x * conj(h)));
  }
  auto r = t.result("100 points");
  r.detail += "; scalar part residual " + sci(scalar_part) + "; h conj(x) + x conj(h) residual " + sci(corrected);
  return r;
}

CheckResult embedding(const VerifyOptions& o) {
  Tally t;
  Sampler s(o.seed + 7);
  for (int k = 0; k < 100 && t.ok; ++k) {
    const auto a = s.element(o.h), b = s.element(o.h);
    t.require(embed_matrix(a) * embed_matrix(b) == embed_matrix(a * b), "J_a J_b != J_ab at pair " + std::to_string(k));
  }
  return t.result("100 pairs exact");
}

CheckResult polynomial_calculus(const VerifyOptions& o) {
  Tally t;
  Sampler s(o.seed + 8);
  const WordPoly zero(o.h);
  for (int k = 0; k < 50 && t.ok; ++k) {
    const auto n = static_cast<std::size_t>(s.integer(1, 5));
    Monomial m;
    for (std::size_t c = 0; c <= n; ++c) m.coeffs.push_back(s.invertible(o.h));
    const NCPoly p{o.h, {m}};
    const std::string id = "monomial " + std::to_string(k) + " (degree " + std::to_string(n) + ")";

    t.require(extensional_equal(sym_derivative(p, n + 1), zero), id + ": order n+1 derivative not zero");
    const auto dn = sym_derivative(p, n);
    t.require(extensional_equal(rename(dn, diagonal_names(n)),
                                factorial(static_cast<unsigned>(n)) * rename(to_wordpoly(p), {{"x", "h"}})),
              id + ": diagonal derivative is not n! p(h)");
    for (std::size_t mm = 1; mm < n; ++mm)
      t.require(extensional_equal(substitute(sym_derivative(p, mm), "x", zero), zero),
                id + ": derivative at 0 of order " + std::to_string(mm) + " not zero");
    for (std::size_t mm = 2; mm <= n; ++mm) {
      const auto d = sym_derivative(p, mm);
      const auto hs = h_symbols(mm);
      std::vector<std::string> perm = hs;
      std::shuffle(perm.begin(), perm.end(), s.engine());
      std::map<std::string, std::string> rn;
      for (std::size_t q = 0; q < mm; ++q) rn[hs[q]] = perm[q];
      t.require(extensional_equal(d, rename(d, rn)), id + ": not symmetric at order " + std::to_string(mm));
    }
  }
  return t.result("50 monomials: vanishing, diagonal n!, zero at 0, symmetry");
}

CheckResult chain_product_rules(const VerifyOptions& o) {
  Tally t;
  Sampler s(o.seed + 9);
  const auto recip = MapEvaluator::unary(o.h, [](const FElement& x) { return inverse(x); });
  for (int k = 0; k < 50; ++k) {
    const auto fm = k % 5 == 0 ? recip : poly_map(random_poly(s, o.h, 3, 2));
    const auto gm = poly_map(random_poly(s, o.h, 3, 2));
    const auto x = f(s.invertible(o.h)), a = f(s.element(o.h));
    if (euclidean_norm(a) == 0) continue;
    t.bound(verify_product_rule(fm, gm, x, a), 1e-7, "product rule pair " + std::to_string(k));
    t.bound(verify_chain_rule(gm, fm, x, a), 1e-7, "chain rule pair " + std::to_string(k));
  }
  for (int k = 0; k < 20; ++k) {
    Monomial m;
    for (int c = 0; c <= 3; ++c) m.coeffs.push_back(s.invertible(o.h));
    const auto cube = poly_map({o.h, {m}});
    const auto x = f(s.element(o.h)), a1 = f(s.invertible(o.h)), a2 = f(s.invertible(o.h));
    const auto sec = second_gateaux(cube, x, a1, a2);
    t.bound(sec.swap_residual / std::max(1.0, tuple_norm(sec.value)), 1e-6, "mixed partials cubic " + std::to_string(k));
  }
  return t.result("50 product/chain pairs, 20 mixed-partial cubics");
}

CheckResult ode_suite(const VerifyOptions& o) {
  Tally t;
  const auto zero = Element::zero(o.h);
  const auto cubic = solve_ode_taylor(parse_wordpoly("h*x^2 + x*h*x + x^2*h", o.h), zero, zero);
  t.require(cubic.solution == parse_wordpoly("x^3", o.h), "cubic right-hand side did not give x^3");

  Sampler s(o.seed + 10);
  WordPoly rhs(o.h), primitive(o.h);
  for (int k = 0; k < 3; ++k) {
    const auto a = WordPoly::constant(s.invertible(o.h)), b = WordPoly::constant(s.invertible(o.h));
    rhs = rhs + a * WordPoly::variable(o.h, "h") * b;
    primitive = primitive + a * WordPoly::variable(o.h, "x") * b;
  }
  t.require(extensional_equal(solve_ode_taylor(rhs, zero, zero).solution, primitive),
            "component-sum right-hand side did not give its primitive");

  bool no_solution = false;
  try {
    solve_ode_taylor(parse_wordpoly("3*h*x^2", o.h), zero, zero);
  } catch (const Error& e) {
    no_solution = e.code() == ErrorCode::NoSolution;
  }
  t.require(no_solution, "3 h x^2 was not rejected");
  return t.result("x^3; component-sum primitive; NoSolution");
}

CheckResult exponent(const VerifyOptions& o) {
  Tally t;
  Sampler s(o.seed + 11);
  for (int k = 0; k < 20; ++k) {
    FElement u(o.h, {0, s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)});
    u = (1.0 / euclidean_norm(u)) * u;
    const double theta = s.uniform(-4, 4);
    const auto z = std::exp(std::complex<double>(0, theta));
    const auto want = FElement::real(o.h, z.real()) + z.imag() * u;
    t.bound(euclidean_norm(exp(theta * u, 1e-16) - want), 1e-12, "exp(theta u) sample " + std::to_string(k));
  }
  const auto i = FElement::basis(o.h, 1), j = FElement::basis(o.h, 2);
  const double gap = exp_additivity_gap(i, j);
  t.require(gap > 0.01, "gap(i, j) = " + sci(gap));
  t.bound(exp_additivity_gap(i, i * i), 1e-10, "gap(i, i^2)");
  for (int k = 0; k < 10; ++k) {
    const auto u = f(s.element(o.h));
    t.bound(exp_additivity_gap(s.uniform(-1, 1) * u, s.uniform(-1, 1) * u), 1e-10, "commuting pair " + std::to_string(k));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto perms = exp_permutations(n);
    t.require(perms.size() == (std::size_t{1} << n), "wrong count at n=" + std::to_string(n));
    for (const auto& p : perms) t.require(p.satisfies_conditions(), "ordering violated: " + to_string(p));
    const auto diag = substitute(rename(exp_derivative_word(o.h, n), diagonal_names(n)), "y",
                                 WordPoly::constant(Element::unit(o.h)));
    t.require(diag == WordPoly(o.h, {{Scalar(1), Word(n, Factor::var("h"))}}), "diagonal is not h^n at n=" + std::to_string(n));
  }
  auto r = t.result("20 rotations; gap(i,j)=" + sci(gap) + "; 2^n arrangements n<=10");
  return r;
}

CheckResult euler(const VerifyOptions& o) {
  Tally t;
  const auto sq = MapEvaluator::unary(o.h, [](const FElement& v) { return v * v; });
  const auto cube = MapEvaluator::unary(o.h, [](const FElement& v) { return v * v * v; });
  t.bound(euler_check(sq, 2, 50, o.seed + 12), 1e-7, "v^2, k=2");
  t.bound(euler_check(cube, 3, 50, o.seed + 13), 1e-7, "v^3, k=3");
  return t.result("v^2, v^3");
}

CheckResult dual_basis_check(const VerifyOptions& o) {
  Tally t;
  Sampler s(o.seed + 14);
  int done = 0;
  while (done < 50 && t.ok) {
    const DMatrix a({{s.element(o.h), s.element(o.h)}, {s.element(o.h), s.element(o.h)}});
    DMatrix b;
    try {
      b = dual_basis(a);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Singular) continue;
      throw;
    }
    t.require(b * a == DMatrix::identity(o.h, 2), "B A != I for matrix " + std::to_string(done));
    ++done;
  }
  for (int k = 0; k < 50 && t.ok; ++k) {
    const auto a = s.element(o.h), m = s.element(o.h), b = s.element(o.h);
    const DVector v({s.element(o.h), s.element(o.h), s.element(o.h)});
    t.require(right_scale(left_scale(a, right_scale(v, m)), b) == left_scale(a, right_scale(right_scale(v, m), b)),
              "twin associativity failed");
  }
  return t.result("50 matrices; twin associativity exact");
}

struct NamedCheck {
  const char* name;
  CheckResult (*run)(const VerifyOptions&);
};

constexpr NamedCheck kChecks[] = {
    {"01-algebra-kernel", algebra_kernel},
    {"02-conversion", conversion},
    {"03-non-representability", non_representability},
    {"04-composition", composition},
    {"05-derivative-table", derivative_table_check},
    {"06-conjugation-differential", conjugation_differential},
    {"07-norm-derivative", norm_derivative},
    {"08-embedding", embedding},
    {"09-polynomial-calculus", polynomial_calculus},
    {"10-chain-product-rules", chain_product_rules},
    {"11-ode-suite", ode_suite},
    {"12-exponent", exponent},
    {"13-euler", euler},
    {"14-dual-basis", dual_basis_check},
};

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : kChecks) out.emplace_back(c.name);
  return out;
}

Report run_verify_all(const VerifyOptions& opts) {
  VerifyOptions o = opts;
  if (!o.h) o.h = builtin_algebra("H");
  Report report;
  for (const auto& c : kChecks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run(o);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    r.name = c.name;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

std::vector<TableRow> derivative_table(std::uint64_t seed, std::size_t points, const AlgebraPtr& alg) {
  const AlgebraPtr h = alg ? alg : builtin_algebra("H");
  using Closed = std::function<FElement(const FElement& x, const FElement& d, const FElement& b, const FElement& c)>;
  using Fn = std::function<FElement(const FElement& x, const FElement& b, const FElement& c)>;
  struct Identity {
    const char* name;
    Fn map;
    Closed derivative;
  };
  const std::vector<Identity> ids = {
      {"d(b) = 0", [](const FElement&, const FElement& b, const FElement&) { return b; },
       [](const FElement& x, const FElement&, const FElement&, const FElement&) { return FElement::zero(x.alg()); }},
      {"d(b f c) = b df c, f = x^2", [](const FElement& x, const FElement& b, const FElement& c) { return b * x * x * c; },
       [](const FElement& x, const FElement& d, const FElement& b, const FElement& c) { return b * (x * d + d * x) * c; }},
      {"d(b x c)(h) = b h c", [](const FElement& x, const FElement& b, const FElement& c) { return b * x * c; },
       [](const FElement&, const FElement& d, const FElement& b, const FElement& c) { return b * d * c; }},
      {"d(x b - b x)(h) = h b - b h", [](const FElement& x, const FElement& b, const FElement&) { return x * b - b * x; },
       [](const FElement&, const FElement& d, const FElement& b, const FElement&) { return d * b - b * d; }},
      {"d(x^2)(h) = x h + h x", [](const FElement& x, const FElement&, const FElement&) { return x * x; },
       [](const FElement& x, const FElement& d, const FElement&, const FElement&) { return x * d + d * x; }},
      {"d(x^-1)(h) = -x^-1 h x^-1", [](const FElement& x, const FElement&, const FElement&) { return inverse(x); },
       [](const FElement& x, const FElement& d, const FElement&, const FElement&) {
         const auto xi = inverse(x);
         return -(xi * d * xi);
       }},
      {"d(x b x^-1)(h) = h b x^-1 - x b x^-1 h x^-1",
       [](const FElement& x, const FElement& b, const FElement&) { return x * b * inverse(x); },
       [](const FElement& x, const FElement& d, const FElement& b, const FElement&) {
         const auto xi = inverse(x);
         return d * b * xi - x * b * xi * d * xi;
       }},
  };
  Sampler s(seed);
  std::vector<TableRow> rows;
  for (const auto& id : ids) {
    TableRow row{id.name, 0, points};
    for (std::size_t k = 0; k < points; ++k) {
      const auto x = f(s.invertible(h)), d = f(s.invertible(h)), b = f(s.invertible(h)), c = f(s.invertible(h));
      const auto m = MapEvaluator::unary(h, [&](const FElement& y) { return id.map(y, b, c); });
      row.max_rel_residual = std::max(row.max_rel_residual, rel_error(gateaux(m, x, d), id.derivative(x, d, b, c)));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ncdr
