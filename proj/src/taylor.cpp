#include "ncdr/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ncdr {

namespace {

void check_rhs(const WordPoly& rhs) {
  for (const auto& s : rhs.symbols())
    if (s != "x" && s != "h")
      throw Error(ErrorCode::InvalidConfig, "right-hand side may only use x and h, found '" + s + "'");
  for (const auto& t : rhs.terms()) {
    const auto hs = std::count_if(t.word.begin(), t.word.end(), [](const Factor& f) { return f.is_var && f.name == "h"; });
    if (hs != 1) throw Error(ErrorCode::InvalidConfig, "every word of the right-hand side needs exactly one h");
  }
}

bool symmetric_in(const WordPoly& w, const std::vector<std::string>& hs) {
  for (std::size_t s = 0; s + 1 < hs.size(); ++s)
    if (!extensional_equal(w, rename(w, {{hs[s], hs[s + 1]}, {hs[s + 1], hs[s]}}))) return false;
  return true;
}

}  // namespace

TaylorSolution solve_ode_taylor(const WordPoly& rhs, const Element& x0, const Element& y0, std::size_t max_order) {
  check_rhs(rhs);
  const AlgebraPtr& alg = x0.alg();
  TaylorSolution sol{x0, y0, {}, false, WordPoly::constant(y0)};
  const WordPoly at_x0 = WordPoly::constant(x0);
  const WordPoly shift = WordPoly::variable(alg, "x") - at_x0;

  WordPoly d = rename(rhs, {{"h", "h1"}});
  for (std::size_t k = 1; k <= max_order; ++k) {
    const auto hs = h_symbols(k);
    if (k >= 2 && extensional_equal(d, WordPoly(alg))) {
      sol.terminated = true;
      break;
    }
    if (!symmetric_in(d, hs))
      throw Error(ErrorCode::NoSolution, "derivative of order " + std::to_string(k) +
                                             " is not symmetric in its directions: " + to_string(d));
    std::map<std::string, std::string> diag;
    for (const auto& s : hs) diag[s] = "h";
    sol.diagonals.push_back(rename(substitute(d, "x", at_x0), diag));
    sol.solution = sol.solution + Scalar(1) / factorial(static_cast<unsigned>(k)) *
                                      substitute(sol.diagonals.back(), "h", shift);
    d = derivative(d, "x", "h" + std::to_string(k + 1));
  }
  if (!sol.terminated) {
    if (!extensional_equal(d, WordPoly(alg)))
      throw Error(ErrorCode::OrderExceeded, "derivatives do not vanish up to order " + std::to_string(max_order));
    sol.terminated = true;
  }
  if (!extensional_equal(derivative(sol.solution, "x", "h"), rhs))
    throw Error(ErrorCode::NoSolution, "assembled series does not reproduce the right-hand side");
  return sol;
}

ExpResult exp_series(const FElement& x, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidConfig, "tolerance must be positive");
  const double r = euclidean_norm(x);
  ExpResult out{FElement::unit(x.alg()), 1, 0};
  FElement term = FElement::unit(x.alg());
  double bound = std::exp(r) * r;  // |x|^{N+1} e^{|x|} / (N+1)! at N = 0
  for (std::size_t n = 1;; ++n) {
    if (euclidean_norm(term) < tol && bound < tol) break;
    term = term * x * (1.0 / static_cast<double>(n));
    out.value += term;
    out.terms = n + 1;
    bound *= r / static_cast<double>(n + 1);
    if (n > 10000) throw Error(ErrorCode::NonConvergent, "exponent series did not settle");
  }
  out.tail_bound = bound;
  return out;
}

FElement exp(const FElement& x, double tol) { return exp_series(x, tol).value; }

double exp_additivity_gap(const FElement& a, const FElement& b, double tol) {
  return euclidean_norm(exp(a + b, tol) - exp(a, tol) * exp(b, tol));
}

std::size_t ExpPermutation::y_position() const {
  return static_cast<std::size_t>(std::find(seq.begin(), seq.end(), 0) - seq.begin());
}

bool ExpPermutation::satisfies_conditions() const {
  if (std::count(seq.begin(), seq.end(), 0) != 1) return false;
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) return false;
  const std::size_t y = y_position();
  for (std::size_t i = 0; i + 1 < y; ++i)
    if (seq[i] >= seq[i + 1]) return false;
  for (std::size_t i = y + 1; i + 1 < seq.size(); ++i)
    if (seq[i] <= seq[i + 1]) return false;
  return true;
}

std::vector<ExpPermutation> exp_permutations(std::size_t n) {
  if (n < 1 || n > 12) throw Error(ErrorCode::RangeError, "exp_permutations needs 1 <= n <= 12");
  std::vector<ExpPermutation> level{{{0}}};
  for (int k = 1; k <= static_cast<int>(n); ++k) {
    std::vector<ExpPermutation> next;
    next.reserve(level.size() * 2);
    for (const auto& p : level) {
      const auto y = static_cast<std::ptrdiff_t>(p.y_position());
      ExpPermutation left = p, right = p;
      left.seq.insert(left.seq.begin() + y, k);
      right.seq.insert(right.seq.begin() + y + 1, k);
      next.push_back(std::move(left));
      next.push_back(std::move(right));
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

WordPoly exp_derivative_word(const AlgebraPtr& alg, std::size_t n) {
  const auto perms = exp_permutations(n);
  std::vector<WordTerm> terms;
  const Scalar w = Scalar(1) / Scalar(mpz_class(1) << static_cast<mp_bitcnt_t>(n));
  for (const auto& p : perms) {
    Word word;
    for (int s : p.seq) word.push_back(Factor::var(s == 0 ? "y" : "h" + std::to_string(s)));
    terms.push_back({w, std::move(word)});
  }
  return WordPoly(alg, std::move(terms));
}

std::string to_string(const ExpPermutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.seq.size(); ++i) {
    if (i) out += '*';
    out += p.seq[i] == 0 ? "y" : "h" + std::to_string(p.seq[i]);
  }
  return out;
}

double euler_check(const MapEvaluator& f, int k, std::size_t samples, std::uint64_t seed, const DiffConfig& cfg) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  double worst = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> c(f.alg->dim());
    FElement v;
    do {
      for (auto& x : c) x = u(rng);
      v = FElement(f.alg, c);
    } while (euclidean_norm(v) < 0.5);
    const FElement fv = f(v);
    const double denom = std::max(euclidean_norm(fv), 1e-12);
    worst = std::max(worst, euclidean_norm(gateaux(f, v, v, cfg) - static_cast<double>(k) * fv) / denom);
  }
  return worst;
}

double exp_ode_residual(const FElement& y, const FElement& h, const DiffConfig& cfg) {
  const auto e = MapEvaluator::unary(y.alg(), [](const FElement& x) { return exp(x); });
  const FElement ey = exp(y);
  return euclidean_norm(gateaux(e, y, h, cfg) - 0.5 * (ey * h + h * ey));
}

}  // namespace ncdr
