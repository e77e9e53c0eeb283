#include "ncdr/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace ncdr {

namespace {

bool is_real(const Element& c) {
  for (std::size_t i = 1; i < c.dim(); ++i)
    if (c[i] != 0) return false;
  return true;
}

int compare_elements(const Element& a, const Element& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

int compare_factors(const Factor& a, const Factor& b) {
  if (a.is_var != b.is_var) return a.is_var ? -1 : 1;
  if (a.is_var) return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
  return compare_elements(a.value, b.value);
}

int compare_words(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (const int c = compare_factors(a[i], b[i]); c != 0) return c;
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

// Fuses constants and normalizes them; returns false when the term is zero.
bool normalize_term(WordTerm& t, const AlgebraPtr& alg) {
  Word fused;
  for (auto& f : t.word) {
    if (!f.is_var && !fused.empty() && !fused.back().is_var)
      fused.back().value = fused.back().value * f.value;
    else
      fused.push_back(std::move(f));
  }
  Word out;
  for (auto& f : fused) {
    if (f.is_var) {
      out.push_back(std::move(f));
      continue;
    }
    if (f.value.is_zero()) return false;
    if (is_real(f.value)) {
      t.coeff *= f.value[0];
      continue;
    }
    std::size_t lead = 0;
    while (f.value[lead] == 0) ++lead;
    const Scalar s = f.value[lead];
    t.coeff *= s;
    f.value *= Scalar(1 / s);
    out.push_back(std::move(f));
  }
  if (out.empty()) out.push_back(Factor::constant(Element::unit(alg)));
  t.word = std::move(out);
  return t.coeff != 0;
}

template <class T>
BasicElement<T> factor_value(const Factor& f, const std::map<std::string, BasicElement<T>>& b) {
  if (f.is_var) {
    const auto it = b.find(f.name);
    if (it == b.end()) throw Error(ErrorCode::UnboundSymbol, "symbol '" + f.name + "' is not bound");
    return it->second;
  }
  if constexpr (is_exact_v<T>)
    return f.value;
  else
    return to_float(f.value);
}

template <class T>
BasicElement<T> eval_words(const WordPoly& w, const std::map<std::string, BasicElement<T>>& b) {
  auto out = BasicElement<T>::zero(w.alg());
  for (const auto& t : w.terms()) {
    auto prod = factor_value(t.word.front(), b);
    for (std::size_t i = 1; i < t.word.size(); ++i) prod = prod * factor_value(t.word[i], b);
    if constexpr (is_exact_v<T>)
      out += t.coeff * prod;
    else
      out += t.coeff.get_d() * prod;
  }
  return out;
}

template <class T>
BasicElement<T> eval_monomials(const NCPoly& p, const BasicElement<T>& x) {
  auto out = BasicElement<T>::zero(p.alg);
  auto lift = [](const Element& c) {
    if constexpr (is_exact_v<T>)
      return c;
    else
      return to_float(c);
  };
  for (const auto& m : p.terms) {
    auto prod = lift(m.coeffs.front());
    for (std::size_t i = 1; i < m.coeffs.size(); ++i) prod = prod * x * lift(m.coeffs[i]);
    out += prod;
  }
  return out;
}

}  // namespace

std::size_t NCPoly::degree() const {
  std::size_t d = 0;
  for (const auto& m : terms) d = std::max(d, m.degree());
  return d;
}

Element eval_poly(const NCPoly& p, const Element& x) {
  if (!same_algebra(p.alg, x.alg())) throw Error(ErrorCode::AlgebraMismatch, "polynomial and point differ");
  return eval_monomials(p, x);
}

FElement eval_poly(const NCPoly& p, const FElement& x) {
  if (!same_algebra(p.alg, x.alg())) throw Error(ErrorCode::AlgebraMismatch, "polynomial and point differ");
  return eval_monomials(p, x);
}

Factor Factor::var(std::string name) { return {true, std::move(name), Element()}; }
Factor Factor::constant(Element value) { return {false, {}, std::move(value)}; }

WordPoly::WordPoly(AlgebraPtr alg, std::vector<WordTerm> terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
  canonicalize();
}

WordPoly WordPoly::constant(const Element& c) { return WordPoly(c.alg(), {{Scalar(1), {Factor::constant(c)}}}); }

WordPoly WordPoly::variable(const AlgebraPtr& alg, const std::string& name) {
  return WordPoly(alg, {{Scalar(1), {Factor::var(name)}}});
}

void WordPoly::canonicalize() {
  std::vector<WordTerm> kept;
  for (auto& t : terms_) {
    if (t.word.empty()) t.word.push_back(Factor::constant(Element::unit(alg_)));
    if (normalize_term(t, alg_)) kept.push_back(std::move(t));
  }
  std::sort(kept.begin(), kept.end(),
            [](const WordTerm& a, const WordTerm& b) { return compare_words(a.word, b.word) < 0; });
  terms_.clear();
  for (auto& t : kept) {
    if (!terms_.empty() && compare_words(terms_.back().word, t.word) == 0)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const WordTerm& t) { return t.coeff == 0; }),
               terms_.end());
}

std::size_t WordPoly::total_degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_)
    d = std::max<std::size_t>(d, std::count_if(t.word.begin(), t.word.end(), [](const Factor& f) { return f.is_var; }));
  return d;
}

std::set<std::string> WordPoly::symbols() const {
  std::set<std::string> s;
  for (const auto& t : terms_)
    for (const auto& f : t.word)
      if (f.is_var) s.insert(f.name);
  return s;
}

namespace {

const AlgebraPtr& pick_alg(const WordPoly& a, const WordPoly& b) {
  if (a.alg() && b.alg() && !same_algebra(a.alg(), b.alg()))
    throw Error(ErrorCode::AlgebraMismatch, "word polynomials over different algebras");
  return a.alg() ? a.alg() : b.alg();
}

}  // namespace

WordPoly operator+(const WordPoly& a, const WordPoly& b) {
  auto terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return WordPoly(pick_alg(a, b), std::move(terms));
}

WordPoly operator-(const WordPoly& a, const WordPoly& b) { return a + Scalar(-1) * b; }

WordPoly operator*(const Scalar& s, const WordPoly& a) {
  auto terms = a.terms_;
  for (auto& t : terms) t.coeff *= s;
  return WordPoly(a.alg_, std::move(terms));
}

WordPoly operator*(const WordPoly& a, const WordPoly& b) {
  std::vector<WordTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Word w = ta.word;
      w.insert(w.end(), tb.word.begin(), tb.word.end());
      terms.push_back({ta.coeff * tb.coeff, std::move(w)});
    }
  return WordPoly(pick_alg(a, b), std::move(terms));
}

bool operator==(const WordPoly& a, const WordPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || compare_words(a.terms_[i].word, b.terms_[i].word) != 0) return false;
  return true;
}

WordPoly to_wordpoly(const NCPoly& p, const std::string& var) {
  std::vector<WordTerm> terms;
  for (const auto& m : p.terms) {
    Word w;
    for (std::size_t i = 0; i < m.coeffs.size(); ++i) {
      if (i > 0) w.push_back(Factor::var(var));
      w.push_back(Factor::constant(m.coeffs[i]));
    }
    terms.push_back({Scalar(1), std::move(w)});
  }
  return WordPoly(p.alg, std::move(terms));
}

NCPoly to_ncpoly(const WordPoly& w, const std::string& var) {
  NCPoly p{w.alg(), {}};
  for (const auto& t : w.terms()) {
    Monomial m;
    Element acc = Element::real(w.alg(), t.coeff);
    for (const auto& f : t.word) {
      if (!f.is_var) {
        acc = acc * f.value;
      } else if (f.name == var) {
        m.coeffs.push_back(acc);
        acc = Element::unit(w.alg());
      } else {
        throw Error(ErrorCode::UnboundSymbol, "polynomial has symbol '" + f.name + "' besides " + var);
      }
    }
    m.coeffs.push_back(acc);
    p.terms.push_back(std::move(m));
  }
  return p;
}

Element word_eval(const WordPoly& w, const Bindings& b) { return eval_words(w, b); }
FElement word_eval(const WordPoly& w, const FBindings& b) { return eval_words(w, b); }

WordPoly substitute(const WordPoly& w, const std::string& symbol, const WordPoly& value) {
  WordPoly out(w.alg());
  for (const auto& t : w.terms()) {
    WordPoly prod = WordPoly::constant(Element::real(w.alg(), t.coeff));
    for (const auto& f : t.word) {
      if (f.is_var && f.name == symbol)
        prod = prod * value;
      else
        prod = prod * WordPoly(w.alg(), {{Scalar(1), {f}}});
    }
    out = out + prod;
  }
  return out;
}

WordPoly rename(const WordPoly& w, const std::map<std::string, std::string>& names) {
  auto terms = w.terms();
  for (auto& t : terms)
    for (auto& f : t.word)
      if (f.is_var)
        if (const auto it = names.find(f.name); it != names.end()) f.name = it->second;
  return WordPoly(w.alg(), std::move(terms));
}

std::vector<std::string> h_symbols(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= m; ++k) out.push_back("h" + std::to_string(k));
  return out;
}

WordPoly sym_derivative(const NCPoly& p, std::size_t m) {
  if (m == 0) return to_wordpoly(p);
  const auto hs = h_symbols(m);
  std::vector<WordTerm> terms;
  for (const auto& mono : p.terms) {
    const std::size_t n = mono.degree();
    if (m > n) continue;
    // slot_of[s] = index of the h placed in x-slot s, or -1 for x.
    std::vector<int> slot_of(n, -1);
    std::function<void(std::size_t)> place = [&](std::size_t k) {
      if (k == m) {
        Word w;
        for (std::size_t s = 0; s < mono.coeffs.size(); ++s) {
          if (s > 0) w.push_back(Factor::var(slot_of[s - 1] < 0 ? "x" : hs[slot_of[s - 1]]));
          w.push_back(Factor::constant(mono.coeffs[s]));
        }
        terms.push_back({Scalar(1), std::move(w)});
        return;
      }
      for (std::size_t s = 0; s < n; ++s) {
        if (slot_of[s] >= 0) continue;
        slot_of[s] = static_cast<int>(k);
        place(k + 1);
        slot_of[s] = -1;
      }
    };
    place(0);
  }
  return WordPoly(p.alg, std::move(terms));
}

WordPoly derivative(const WordPoly& w, const std::string& var, const std::string& dir) {
  std::vector<WordTerm> terms;
  for (const auto& t : w.terms())
    for (std::size_t i = 0; i < t.word.size(); ++i)
      if (t.word[i].is_var && t.word[i].name == var) {
        WordTerm d = t;
        d.word[i].name = dir;
        terms.push_back(std::move(d));
      }
  return WordPoly(w.alg(), std::move(terms));
}

namespace {

// All c in N^n with sum d, as algebra elements sum c_r e_r.
std::vector<Element> simplex_lattice(const AlgebraPtr& alg, std::size_t d) {
  const std::size_t n = alg->dim();
  std::vector<Element> out;
  std::vector<Scalar> c(n, Scalar(0));
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t left) {
    if (r + 1 == n) {
      c[r] = static_cast<long>(left);
      out.emplace_back(alg, c);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      c[r] = static_cast<long>(v);
      fill(r + 1, left - v);
    }
  };
  fill(0, d);
  return out;
}

}  // namespace

bool extensional_equal(const WordPoly& a, const WordPoly& b) {
  const WordPoly diff = a - b;
  if (diff.is_zero()) return true;
  if (diff.total_degree() > kMaxExtensionalDegree)
    throw Error(ErrorCode::DegreeTooLarge, "extensional check supports total degree <= " +
                                               std::to_string(kMaxExtensionalDegree));
  const AlgebraPtr& alg = diff.alg();
  // A polynomial map is zero iff each multihomogeneous component is; a degree-d
  // homogeneous component is fixed by its values on the simplex lattice of size d.
  std::map<std::map<std::string, std::size_t>, std::vector<WordTerm>> groups;
  for (const auto& t : diff.terms()) {
    std::map<std::string, std::size_t> degree;
    for (const auto& f : t.word)
      if (f.is_var) ++degree[f.name];
    groups[degree].push_back(t);
  }
  for (const auto& [degree, terms] : groups) {
    const WordPoly part(alg, terms);
    std::vector<std::string> names;
    std::vector<std::vector<Element>> points;
    for (const auto& [name, d] : degree) {
      names.push_back(name);
      points.push_back(simplex_lattice(alg, d));
    }
    std::vector<std::size_t> idx(names.size(), 0);
    for (;;) {
      Bindings bind;
      for (std::size_t v = 0; v < names.size(); ++v) bind.emplace(names[v], points[v][idx[v]]);
      if (!word_eval(part, bind).is_zero()) return false;
      std::size_t v = 0;
      while (v < idx.size() && ++idx[v] == points[v].size()) idx[v++] = 0;
      if (v == idx.size()) break;
    }
  }
  return true;
}

TaylorPoly taylor_poly(const NCPoly& p, const Element& y0) {
  TaylorPoly out{y0, {}, {p.alg, {}}};
  const std::size_t n = p.degree();
  const WordPoly at_y0 = WordPoly::constant(y0);
  const WordPoly shift = WordPoly::variable(p.alg, "x") - at_y0;
  WordPoly sum(p.alg);
  for (std::size_t k = 0; k <= n; ++k) {
    std::map<std::string, std::string> to_h;
    for (const auto& s : h_symbols(k)) to_h[s] = "h";
    const WordPoly dk = rename(substitute(sym_derivative(p, k), "x", at_y0), to_h);
    out.terms.push_back(Scalar(1) / factorial(static_cast<unsigned>(k)) * dk);
    sum = sum + substitute(out.terms.back(), "h", shift);
  }
  out.reconstructed = to_ncpoly(sum);
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const AlgebraPtr& alg) : text_(text), alg_(alg) {
    for (std::size_t r = 1; r < alg->dim(); ++r) letters_[basis_letter(alg->dim(), r)] = r;
  }

  WordPoly parse() {
    WordPoly w = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WordPoly expr() {
    WordPoly w = term();
    for (;;) {
      if (accept('+'))
        w = w + term();
      else if (accept('-'))
        w = w - term();
      else
        return w;
    }
  }

  WordPoly term() {
    WordPoly w = unary();
    while (accept('*')) w = w * unary();
    return w;
  }

  WordPoly unary() {
    if (accept('-')) return Scalar(-1) * unary();
    if (accept('+')) return unary();
    return power();
  }

  WordPoly power() {
    WordPoly base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    WordPoly out = WordPoly::constant(Element::unit(alg_));
    for (unsigned long k = 0; k < e; ++k) out = out * base;
    return out;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  WordPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WordPoly w = expr();
      if (!accept(')')) fail("expected ')'");
      return w;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const Scalar value = number();
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        const std::string name = identifier();
        const auto it = letters_.find(name);
        if (it == letters_.end()) fail("'" + name + "' is not a basis letter of " + alg_->name());
        return WordPoly::constant(value * Element::basis(alg_, it->second));
      }
      return WordPoly::constant(Element::real(alg_, value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = identifier();
      if (const auto it = letters_.find(name); it != letters_.end())
        return WordPoly::constant(Element::basis(alg_, it->second));
      return WordPoly::variable(alg_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Scalar number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      digits();
    }
    return parse_scalar(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  AlgebraPtr alg_;
  std::map<std::string, std::size_t> letters_;
  std::size_t pos_ = 0;
};

}  // namespace

WordPoly parse_wordpoly(std::string_view text, const AlgebraPtr& alg) { return Parser(text, alg).parse(); }

NCPoly parse_poly(std::string_view text, const AlgebraPtr& alg) {
  const WordPoly w = parse_wordpoly(text, alg);
  for (const auto& s : w.symbols())
    if (s != "x") throw Error(ErrorCode::ParseError, "polynomial may only use the variable x, found '" + s + "'");
  return to_ncpoly(w);
}

Element parse_element(std::string_view text, const AlgebraPtr& alg) {
  const WordPoly w = parse_wordpoly(text, alg);
  if (!w.symbols().empty()) throw Error(ErrorCode::ParseError, "element literal contains a variable");
  return word_eval(w, Bindings{});
}

std::string to_string(const WordPoly& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < w.terms().size(); ++t) {
    const auto& term = w.terms()[t];
    Scalar c = term.coeff;
    if (t == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    const bool unit_word = term.word.size() == 1 && !term.word[0].is_var && is_real(term.word[0].value);
    std::vector<std::string> parts;
    if (unit_word || c != 1) parts.push_back(c.get_str());
    if (!unit_word)
      for (const auto& f : term.word) parts.push_back(f.is_var ? f.name : "(" + to_string(f.value) + ")");
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  }
  return out;
}

std::string to_string(const NCPoly& p) { return to_string(to_wordpoly(p)); }

}  // namespace ncdr
