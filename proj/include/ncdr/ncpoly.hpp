#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncdr/algebra.hpp"

namespace ncdr {

/// a0 x a1 x ... x ak, degree k.
struct Monomial {
  std::vector<Element> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
};

/// Sum of monomials in one algebra variable; no terms is the zero polynomial.
struct NCPoly {
  AlgebraPtr alg;
  std::vector<Monomial> terms;

  std::size_t degree() const;
};

Element eval_poly(const NCPoly& p, const Element& x);
FElement eval_poly(const NCPoly& p, const FElement& x);

/// One factor of a word: an algebra constant or a named variable.
struct Factor {
  bool is_var = false;
  std::string name;  // variable name when is_var
  Element value;     // constant when !is_var

  static Factor var(std::string name);
  static Factor constant(Element value);
};

using Word = std::vector<Factor>;

struct WordTerm {
  Scalar coeff;
  Word word;
};

/// Linear combination of words over the alphabet of constants and variables.
/// Kept canonical: adjacent constants fused, real constants absorbed into the
/// coefficient, each remaining constant scaled so its first nonzero coordinate is 1,
/// terms sorted and merged, zero terms dropped. A pure constant is the word [1].
class WordPoly {
 public:
  WordPoly() = default;
  explicit WordPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}
  WordPoly(AlgebraPtr alg, std::vector<WordTerm> terms);

  static WordPoly constant(const Element& c);
  static WordPoly variable(const AlgebraPtr& alg, const std::string& name);

  const AlgebraPtr& alg() const { return alg_; }
  const std::vector<WordTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest number of variable factors in a word.
  std::size_t total_degree() const;
  std::set<std::string> symbols() const;

  friend WordPoly operator+(const WordPoly& a, const WordPoly& b);
  friend WordPoly operator-(const WordPoly& a, const WordPoly& b);
  friend WordPoly operator*(const WordPoly& a, const WordPoly& b);
  friend WordPoly operator*(const Scalar& s, const WordPoly& a);
  /// Formal (canonical) equality.
  friend bool operator==(const WordPoly& a, const WordPoly& b);

 private:
  void canonicalize();

  AlgebraPtr alg_;
  std::vector<WordTerm> terms_;
};

WordPoly to_wordpoly(const NCPoly& p, const std::string& var = "x");
/// Inverse of to_wordpoly; throws UnboundSymbol if a symbol other than `var` occurs.
NCPoly to_ncpoly(const WordPoly& w, const std::string& var = "x");

using Bindings = std::map<std::string, Element>;
using FBindings = std::map<std::string, FElement>;

/// Throws UnboundSymbol.
Element word_eval(const WordPoly& w, const Bindings& b);
FElement word_eval(const WordPoly& w, const FBindings& b);

/// Replaces every occurrence of `symbol` by `value`.
WordPoly substitute(const WordPoly& w, const std::string& symbol, const WordPoly& value);
WordPoly rename(const WordPoly& w, const std::map<std::string, std::string>& names);

/// m-th derivative by polarization: every ordered choice of m distinct x-slots receives h1..hm.
WordPoly sym_derivative(const NCPoly& p, std::size_t m);
/// First derivative of a word polynomial in `var` along the symbol `dir` (product rule).
WordPoly derivative(const WordPoly& w, const std::string& var, const std::string& dir);

/// Symbol names h1, ..., hm.
std::vector<std::string> h_symbols(std::size_t m);

/// Equality as functions on the algebra. Decided formally when possible; otherwise each
/// multihomogeneous component of the difference is evaluated on a unisolvent lattice.
/// Throws DegreeTooLarge above total degree 8.
bool extensional_equal(const WordPoly& a, const WordPoly& b);
inline constexpr std::size_t kMaxExtensionalDegree = 8;

struct TaylorPoly {
  Element y0;
  /// terms[k] = (1/k!) d^k p(y0)(h; ...; h) in the symbol h.
  std::vector<WordPoly> terms;
  /// Sum of terms with h = x - y0, expanded in x.
  NCPoly reconstructed;
};

TaylorPoly taylor_poly(const NCPoly& p, const Element& y0);

/// Grammar: sums/differences of products of powers; atoms are rationals, a rational
/// immediately followed by a basis letter (2i, 1/4k), basis letters, identifiers, and
/// parenthesized expressions. `^` takes a nonnegative integer. Throws ParseError.
WordPoly parse_wordpoly(std::string_view text, const AlgebraPtr& alg);
/// As parse_wordpoly, with x as the only allowed symbol.
NCPoly parse_poly(std::string_view text, const AlgebraPtr& alg);
/// Constant expression such as "1/2+0i+3j-1/4k".
Element parse_element(std::string_view text, const AlgebraPtr& alg);

std::string to_string(const WordPoly& w);
std::string to_string(const NCPoly& p);

}  // namespace ncdr
