// Command-line front end: exit 0 on success, 1 on a domain error, 2 on a usage error.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include "ncdr/gateaux.hpp"
#include "ncdr/linmap.hpp"
#include "ncdr/ncpoly.hpp"
#include "ncdr/serialize.hpp"
#include "ncdr/taylor.hpp"
#include "ncdr/verify.hpp"

using nlohmann::json;
using namespace ncdr;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_json = false;

json read_json_arg(const std::string& arg) {
  std::ifstream in(arg);
  try {
    if (in) return json::parse(in);
    return json::parse(arg);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("JSON input: ") + e.what());
  }
}

AlgebraPtr select_algebra(const std::string& name, const std::string& spec_file, bool validate = true) {
  if (!spec_file.empty()) {
    std::ifstream in(spec_file);
    if (!in) throw UsageError("cannot open " + spec_file);
    return algebra_from_json(read_json_arg(spec_file), validate);
  }
  static const std::regex e_form(R"(E\(\s*([^,]+?)\s*,\s*([^)]+?)\s*\))");
  std::smatch m;
  if (std::regex_match(name, m, e_form)) return make_quaternion_algebra(parse_scalar(m[1].str()), parse_scalar(m[2].str()));
  if (name == "H" || name == "C") return builtin_algebra(name);
  throw UsageError("unknown algebra '" + name + "' (expected H, C or E(a,b))");
}

DiffConfig diff_config() {
  DiffConfig cfg;
  if (const char* env = std::getenv("NCDR_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) throw UsageError("NCDR_TOL must be a positive number");
    cfg.rel_tol = v;
  }
  return cfg;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string fmt(double v, int precision = 17) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

json float_element_json(const FElement& x) { return json(x.coords()); }

void print_std(const StdComponents& f) {
  if (g_json) return print_json(std_components_to_json(f));
  const std::size_t n = f.comps.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (f.comps(i, j) != 0) std::cout << "f^{" << i << j << "} = " << to_string(f.comps(i, j)) << '\n';
}

void print_coord(const CoordMatrix& m) {
  if (g_json) return print_json(coord_matrix_to_json(m));
  const std::size_t n = m.mat.rows();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (m.mat(j, i) != 0) std::cout << "f^" << j << "_" << i << " = " << to_string(m.mat(j, i)) << '\n';
}

QMatrix grid_arg(const std::string& arg, std::size_t n) {
  static const std::regex identity(R"(I(\d+))");
  std::smatch m;
  if (std::regex_match(arg, m, identity)) {
    if (std::stoul(m[1]) != n) throw Error(ErrorCode::DimensionMismatch, arg + " does not match algebra dimension");
    return QMatrix::identity(n);
  }
  return grid_from_json(read_json_arg(arg));
}

// Builtin maps by name, otherwise a polynomial expression in x.
MapEvaluator map_arg(const std::string& spec, const AlgebraPtr& alg) {
  if (spec == "conj") return MapEvaluator::unary(alg, [](const FElement& x) { return conj(x); });
  if (spec == "inverse") return MapEvaluator::unary(alg, [](const FElement& x) { return inverse(x); });
  if (spec == "square") return MapEvaluator::unary(alg, [](const FElement& x) { return x * x; });
  if (spec == "norm_sq")
    return MapEvaluator::unary(alg, [alg](const FElement& x) { return FElement::real(alg, norm_sq(x)); });
  const WordPoly w = parse_wordpoly(spec, alg);
  for (const auto& s : w.symbols())
    if (s != "x") throw Error(ErrorCode::UnboundSymbol, "map expression may only use x, found " + s);
  return MapEvaluator::unary(alg, [w](const FElement& x) { return word_eval(w, FBindings{{"x", x}}); });
}

struct AlgOpts {
  std::string name = "H";
  std::string spec;

  void add(CLI::App* cmd) {
    cmd->add_option("--alg", name, "H, C or E(a,b)");
    cmd->add_option("--spec", spec, "algebra spec JSON file");
  }
  AlgebraPtr get() const { return select_algebra(name, spec); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calculus over finite-dimensional division algebras"};
  app.add_flag("--json", g_json, "machine-readable output");
  app.require_subcommand(1);
  std::function<int()> action;

  // algebra
  auto* algebra = app.add_subcommand("algebra", "inspect an algebra")->require_subcommand(1);
  AlgOpts alg_show, alg_check;
  auto* show = algebra->add_subcommand("show", "print the structure constants");
  alg_show.add(show);
  show->callback([&] {
    action = [&] {
      const auto a = alg_show.get();
      if (g_json) {
        print_json(algebra_to_json(*a));
        return 0;
      }
      std::cout << a->name() << " (dim " << a->dim() << ")\n";
      for (std::size_t k = 0; k < a->dim(); ++k) {
        for (std::size_t l = 0; l < a->dim(); ++l) {
          Element p = Element::basis(a, k) * Element::basis(a, l);
          std::cout << (l ? "  " : "") << "e" << k << "*e" << l << " = " << to_string(p);
        }
        std::cout << '\n';
      }
      return 0;
    };
  });
  auto* check = algebra->add_subcommand("check", "verify the unit and associativity axioms");
  alg_check.add(check);
  check->callback([&] {
    action = [&] {
      const auto a = select_algebra(alg_check.name, alg_check.spec, false);
      const auto r = a->check_axioms();
      json out{{"name", a->name()}, {"unit", r.unit_ok}, {"associative", r.associative},
               {"triples_checked", r.triples_checked}};
      if (r.witness) out["witness"] = *r.witness;
      if (g_json)
        print_json(out);
      else
        std::cout << "unit: " << (r.unit_ok ? "ok" : "FAIL") << "\nassociative: " << (r.associative ? "ok" : "FAIL")
                  << " (" << r.triples_checked << " triples)\n";
      if (!r.ok()) throw Error(ErrorCode::InvalidAlgebra, a->name() + " fails the algebra axioms");
      return 0;
    };
  });

  // map
  auto* map = app.add_subcommand("map", "linear maps")->require_subcommand(1);
  AlgOpts map_alg_convert, map_alg_compose, map_alg_bigc;
  std::string dir, matrix_arg, g_arg, f_arg;
  auto* convert = map->add_subcommand("convert", "standard components <-> coordinate matrix");
  map_alg_convert.add(convert);
  convert->add_option("--dir", dir, "std2coord or coord2std")->required()->check(CLI::IsMember({"std2coord", "coord2std"}));
  convert->add_option("--matrix", matrix_arg, "I<n>, a JSON grid, or a file holding one")->required();
  convert->callback([&] {
    action = [&] {
      const auto a = map_alg_convert.get();
      const QMatrix m = grid_arg(matrix_arg, a->dim());
      if (dir == "std2coord") {
        print_coord(std_to_coord(std_components_from_json(a, grid_to_json(m))));
      } else {
        const auto s = coord_to_std(coord_matrix_from_json(a, grid_to_json(m)));
        if (!s.unique) std::cerr << "note: representation not unique; minimum-norm components shown\n";
        print_std(s.comps);
      }
      return 0;
    };
  });
  auto* compose = map->add_subcommand("compose", "standard components of g o f");
  map_alg_compose.add(compose);
  compose->add_option("--g", g_arg, "standard components of g (grid)")->required();
  compose->add_option("--f", f_arg, "standard components of f (grid)")->required();
  compose->callback([&] {
    action = [&] {
      const auto a = map_alg_compose.get();
      const auto g = std_components_from_json(a, grid_to_json(grid_arg(g_arg, a->dim())));
      const auto f = std_components_from_json(a, grid_to_json(grid_arg(f_arg, a->dim())));
      print_std(compose_std(g, f));
      return 0;
    };
  });
  bool bigc_report = false;
  auto* bigc = map->add_subcommand("bigc", "the n^2 x n^2 conversion matrix");
  map_alg_bigc.add(bigc);
  bigc->add_flag("--report", bigc_report, "rank, determinant and kernel only");
  bigc->callback([&] {
    action = [&] {
      const auto r = big_c(map_alg_bigc.get());
      json kernel = json::array();
      for (const auto& k : r.kernel) kernel.push_back(std_components_to_json(k));
      json out{{"rank", r.rank}, {"det", to_string(r.det)}, {"kernel", kernel}};
      if (!bigc_report) out["matrix"] = grid_to_json(r.mat);
      if (g_json) {
        print_json(out);
        return 0;
      }
      std::cout << "size: " << r.mat.rows() << "x" << r.mat.cols() << "\nrank: " << r.rank
                << "\ndet: " << to_string(r.det) << "\nkernel dimension: " << r.kernel.size() << '\n';
      for (const auto& k : r.kernel) std::cout << "kernel: " << std_components_to_json(k).dump() << '\n';
      if (!bigc_report) std::cout << grid_to_json(r.mat).dump() << '\n';
      return 0;
    };
  });

  // diff
  auto* diff = app.add_subcommand("diff", "Gateaux derivatives")->require_subcommand(1);
  std::uint64_t table_seed = 42;
  std::size_t table_points = 100;
  auto* table = diff->add_subcommand("table", "derivative identities against closed forms");
  table->add_option("--seed", table_seed);
  table->add_option("--points", table_points);
  table->callback([&] {
    action = [&] {
      const auto rows = derivative_table(table_seed, table_points);
      json out = json::array();
      bool ok = true;
      for (const auto& r : rows) {
        ok = ok && r.max_rel_residual <= 1e-8;
        if (g_json)
          out.push_back({{"identity", r.identity}, {"max_rel_residual", r.max_rel_residual}, {"points", r.points}});
        else
          std::cout << fmt(r.max_rel_residual, 3) << "  " << r.identity << '\n';
      }
      if (g_json) print_json(out);
      return ok ? 0 : 1;
    };
  });
  AlgOpts jac_alg, stdc_alg;
  std::string map_spec, at_arg;
  auto* jac = diff->add_subcommand("jacobian", "real Jacobian of a map");
  jac_alg.add(jac);
  jac->add_option("--map", map_spec, "conj, inverse, square, norm_sq, or a polynomial in x")->required();
  jac->add_option("--at", at_arg, "point, e.g. 1/2+0i+3j-1/4k")->required();
  jac->callback([&] {
    action = [&] {
      const auto a = jac_alg.get();
      const auto j = jacobian(map_arg(map_spec, a), to_float(parse_element(at_arg, a)), diff_config());
      json out = json::array();
      for (std::size_t r = 0; r < j.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < j.cols(); ++c) {
          row.push_back(j(r, c));
          if (!g_json) std::cout << (c ? " " : "") << fmt(j(r, c), 12);
        }
        if (!g_json) std::cout << '\n';
        out.push_back(row);
      }
      if (g_json) print_json(out);
      return 0;
    };
  });
  std::string stdc_map, stdc_at;
  auto* stdc = diff->add_subcommand("std-components", "standard components of the differential");
  stdc_alg.add(stdc);
  stdc->add_option("--map", stdc_map, "conj, inverse, square, norm_sq, or a polynomial in x")->required();
  stdc->add_option("--at", stdc_at, "point")->required();
  stdc->callback([&] {
    action = [&] {
      const auto a = stdc_alg.get();
      const auto r = differential_std_components(map_arg(stdc_map, a), to_float(parse_element(stdc_at, a)), diff_config());
      if (g_json) {
        print_json({{"comps", std_components_to_json(r.comps)},
                    {"unique", r.unique},
                    {"snapped", r.snapped},
                    {"residual", r.residual}});
        return 0;
      }
      print_std(r.comps);
      std::cout << "unique: " << (r.unique ? "yes" : "no") << "  snapped: " << (r.snapped ? "yes" : "no")
                << "  residual: " << fmt(r.residual, 3) << '\n';
      return 0;
    };
  });

  // poly
  auto* poly = app.add_subcommand("poly", "polynomials in x")->require_subcommand(1);
  AlgOpts taylor_alg, derive_alg;
  std::string poly_arg, y0_arg = "0";
  std::size_t order = 1;
  auto* taylor = poly->add_subcommand("taylor", "Taylor expansion around a point");
  taylor_alg.add(taylor);
  taylor->add_option("--poly", poly_arg, "e.g. (1+i)*x*j*x + x^2 - 3")->required();
  taylor->add_option("--at", y0_arg, "expansion point");
  taylor->callback([&] {
    action = [&] {
      const auto a = taylor_alg.get();
      const auto t = taylor_poly(parse_poly(poly_arg, a), parse_element(y0_arg, a));
      json terms = json::array();
      for (std::size_t k = 0; k < t.terms.size(); ++k) {
        terms.push_back(to_string(t.terms[k]));
        if (!g_json) std::cout << "order " << k << ": " << to_string(t.terms[k]) << '\n';
      }
      if (g_json) print_json({{"at", element_to_json(t.y0)}, {"terms", terms}, {"reconstructed", to_string(t.reconstructed)}});
      else std::cout << "reconstructed: " << to_string(t.reconstructed) << '\n';
      return 0;
    };
  });
  auto* derive = poly->add_subcommand("derive", "symbolic derivative of order m in directions h1..hm");
  derive_alg.add(derive);
  derive->add_option("--poly", poly_arg)->required();
  derive->add_option("--order", order, "m >= 0");
  derive->callback([&] {
    action = [&] {
      const auto d = sym_derivative(parse_poly(poly_arg, derive_alg.get()), order);
      if (g_json) print_json({{"order", order}, {"derivative", to_string(d)}});
      else std::cout << to_string(d) << '\n';
      return 0;
    };
  });

  // ode
  auto* ode = app.add_subcommand("ode", "differential equations")->require_subcommand(1);
  AlgOpts ode_alg;
  std::string rhs_arg, x0_arg = "0", ode_y0 = "0";
  std::size_t max_order = 16;
  auto* solve = ode->add_subcommand("solve", "solve dy(x)(h) = rhs(x, h) by Taylor series");
  ode_alg.add(solve);
  solve->add_option("--rhs", rhs_arg, "expression in x and h, one h per term")->required();
  solve->add_option("--x0", x0_arg);
  solve->add_option("--y0", ode_y0);
  solve->add_option("--max-order", max_order);
  solve->callback([&] {
    action = [&] {
      const auto a = ode_alg.get();
      const auto s = solve_ode_taylor(parse_wordpoly(rhs_arg, a), parse_element(x0_arg, a), parse_element(ode_y0, a),
                                      max_order);
      json diags = json::array();
      for (const auto& d : s.diagonals) diags.push_back(to_string(d));
      if (g_json) print_json({{"solution", to_string(s.solution)}, {"diagonals", diags}});
      else std::cout << "y(x) = " << to_string(s.solution) << '\n';
      return 0;
    };
  });

  // exp
  auto* expc = app.add_subcommand("exp", "exponential series")->require_subcommand(0, 1);
  AlgOpts exp_alg, gap_alg;
  exp_alg.add(expc);
  std::string exp_at;
  double exp_tol = 1e-15;
  auto* tol_opt = expc->add_option("--tol", exp_tol, "series tolerance");
  expc->add_option("--at", exp_at, "point");
  auto* gap = expc->add_subcommand("gap", "|exp(a+b) - exp(a) exp(b)|");
  gap_alg.add(gap);
  std::string gap_a, gap_b;
  gap->add_option("--a", gap_a)->required();
  gap->add_option("--b", gap_b)->required();
  auto exp_tolerance = [&] {
    if (tol_opt->count() == 0) {
      if (std::getenv("NCDR_TOL")) return diff_config().rel_tol;
    }
    if (!(exp_tol > 0)) throw UsageError("--tol must be positive");
    return exp_tol;
  };
  gap->callback([&] {
    action = [&] {
      const auto a = gap_alg.get();
      const double g = exp_additivity_gap(to_float(parse_element(gap_a, a)), to_float(parse_element(gap_b, a)),
                                          exp_tolerance());
      if (g_json) print_json({{"gap", g}});
      else std::cout << fmt(g) << '\n';
      return 0;
    };
  });
  expc->callback([&] {
    if (!expc->get_subcommands().empty()) return;
    if (exp_at.empty()) throw CLI::RequiredError("--at");
    action = [&] {
      const auto a = exp_alg.get();
      const auto r = exp_series(to_float(parse_element(exp_at, a)), exp_tolerance());
      if (g_json)
        print_json({{"value", float_element_json(r.value)}, {"terms", r.terms}, {"tail_bound", r.tail_bound}});
      else
        std::cout << to_string(r.value) << "\nterms: " << r.terms << "  tail bound: " << fmt(r.tail_bound, 3) << '\n';
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "acceptance checks")->require_subcommand(1);
  std::uint64_t seed = 42;
  std::string h_spec;
  auto* all = verify->add_subcommand("all", "run every check; exit 0 iff all pass");
  all->add_option("--seed", seed);
  all->add_option("--h-spec", h_spec, "quaternion spec JSON to test instead of the builtin one");
  all->add_flag("--json", g_json);
  all->callback([&] {
    action = [&] {
      VerifyOptions opts;
      opts.seed = seed;
      if (!h_spec.empty()) opts.h = select_algebra("H", h_spec, false);
      const auto report = run_verify_all(opts);
      if (g_json) print_json(report.to_json());
      else std::cout << report.to_text();
      return report.all_pass() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
