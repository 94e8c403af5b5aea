#include "homalg/free_algebra.hpp"

#include <algorithm>
#include <cctype>

#include "homalg/errors.hpp"

namespace homalg {

Window::Window(unsigned n, unsigned w, unsigned p) : N(n), W(w), pad(p) {
  if (n == 0) throw InvalidArgument("window arity bound N must be at least 1");
}

// -- elements ------------------------------------------------------------------------

template <class M>
BasicElement<M>::BasicElement(std::size_t generator_count, const M& m, Rational c) : gens_(generator_count) {
  add_term(m, c);
}

template <class M>
void BasicElement<M>::add_term(const M& m, const Rational& c) {
  if (sgn(c) == 0) return;
  for (auto l : m.labels)
    if (l >= gens_) throw DimensionMismatch("generator index " + std::to_string(l) + " out of range");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

template <class M>
void BasicElement<M>::check(const BasicElement& o) const {
  if (o.gens_ != gens_) throw DimensionMismatch("elements over different generator sets");
}

template <class M>
BasicElement<M>& BasicElement<M>::operator+=(const BasicElement& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

template <class M>
BasicElement<M>& BasicElement<M>::operator-=(const BasicElement& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

template <class M>
BasicElement<M>& BasicElement<M>::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

template class BasicElement<Monomial>;
template class BasicElement<DiMonomial>;

// -- products and α ------------------------------------------------------------------

namespace {

template <class M>
std::vector<std::uint32_t> concat(const M& a, const M& b) {
  std::vector<std::uint32_t> l;
  l.reserve(a.labels.size() + b.labels.size());
  l.insert(l.end(), a.labels.begin(), a.labels.end());
  l.insert(l.end(), b.labels.begin(), b.labels.end());
  return l;
}

template <class E, class Op>
E bilinear(const E& a, const E& b, Op op) {
  if (a.generator_count() != b.generator_count()) throw DimensionMismatch("elements over different generator sets");
  E out(a.generator_count());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(op(ma, mb), ca * cb);
  return out;
}

template <class E, class M, class Shift>
E alpha_on(const HomModule& V, const M& m, std::size_t gens, Shift shift) {
  if (gens != V.dim) throw DimensionMismatch("element and Hom-module dimensions differ");
  E out(gens);
  if (m.arity() == 1) {
    std::uint32_t i = m.labels[0];
    for (std::uint32_t j = 0; j < V.dim; ++j) out.add_term(M::generator(j), V.alpha(j, i));
  } else {
    out.add_term(M{shift(m.tree), m.labels}, 1);
  }
  return out;
}

template <class E, class Single>
E alpha_linear(const E& a, Single single) {
  E out(a.generator_count());
  for (const auto& [m, c] : a.terms()) {
    E img = single(m);
    img *= c;
    out += img;
  }
  return out;
}

}  // namespace

Monomial mu_F(const Monomial& a, const Monomial& b) { return {graft_weighted(a.tree, b.tree), concat(a, b)}; }

Element mu_F(const Element& a, const Element& b) {
  return bilinear(a, b, [](const Monomial& x, const Monomial& y) { return mu_F(x, y); });
}

Element alpha_F(const HomModule& V, const Monomial& m) {
  return alpha_on<Element>(V, m, V.dim, [](const WeightedTree& t) { return shift_weight(t, 1); });
}

Element alpha_F(const HomModule& V, const Element& a) {
  if (a.generator_count() != V.dim) throw DimensionMismatch("element and Hom-module dimensions differ");
  return alpha_linear(a, [&](const Monomial& m) { return alpha_F(V, m); });
}

DiMonomial dimu_F(const DiMonomial& a, const DiMonomial& b, Side side) {
  return {graft_di(a.tree, b.tree, side), concat(a, b)};
}

DiElement dimu_F(const DiElement& a, const DiElement& b, Side side) {
  return bilinear(a, b, [side](const DiMonomial& x, const DiMonomial& y) { return dimu_F(x, y, side); });
}

DiElement dialpha_F(const HomModule& V, const DiMonomial& m) {
  return alpha_on<DiElement>(V, m, V.dim, [](const DiweightedTree& t) { return shift_di(t, 1); });
}

DiElement dialpha_F(const HomModule& V, const DiElement& a) {
  if (a.generator_count() != V.dim) throw DimensionMismatch("element and Hom-module dimensions differ");
  return alpha_linear(a, [&](const DiMonomial& m) { return dialpha_F(V, m); });
}

// -- windows --------------------------------------------------------------------------

namespace {

template <class M, class Enumerate>
std::vector<M> window_of(std::size_t dim_v, const Window& w, Enumerate enumerate) {
  std::vector<M> out;
  if (dim_v == 0) return out;
  for (std::size_t n = 1; n <= w.N; ++n) {
    auto trees = enumerate(n, w.W);
    std::vector<std::uint32_t> labels(n, 0);
    while (true) {
      for (const auto& t : trees) out.push_back({t, labels});
      std::size_t pos = n;
      while (pos > 0 && labels[pos - 1] + 1 == dim_v) labels[--pos] = 0;
      if (pos == 0) break;
      ++labels[pos - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Monomial> basis_window(std::size_t dim_v, const Window& w) {
  return window_of<Monomial>(dim_v, w, enumerate_weighted);
}

std::vector<DiMonomial> di_basis_window(std::size_t dim_v, const Window& w) {
  return window_of<DiMonomial>(dim_v, w, enumerate_diweighted);
}

Integer window_size(std::size_t dim_v, const Window& w, bool di) {
  Integer total = 0;
  for (unsigned n = 1; n <= w.N; ++n) {
    Integer binom, power, sides;
    mpz_bin_uiui(binom.get_mpz_t(), w.W + n - 1, n - 1);
    mpz_ui_pow_ui(power.get_mpz_t(), dim_v, n);
    mpz_ui_pow_ui(sides.get_mpz_t(), di ? 2 : 1, n - 1);
    total += catalan(n - 1) * binom * power * sides;
  }
  return total;
}

// -- evaluation -----------------------------------------------------------------------

namespace {

Vector apply_alpha_times(const HomModule& m, Vector v, unsigned r) {
  for (unsigned k = 0; k < r; ++k) v = m.apply_alpha(v);
  return v;
}

template <class Alg, class TreeT, class Leaf>
Vector eval_rec(const Alg& a, const TreeT& t, std::size_t first, Leaf leaf) {
  if (t.is_leaf()) return leaf(first);
  Vector l = eval_rec(a, t.left(), first, leaf);
  Vector r = eval_rec(a, t.right(), first + t.left().arity(), leaf);
  Vector p;
  if constexpr (std::is_same_v<Alg, HomDialgebra>) {
    p = (t.label().side == Side::left ? a.lmul : a.rmul).apply(l, r);
  } else {
    p = a.mul.apply(l, r);
  }
  return apply_alpha_times(a.module, std::move(p), t.label().value);
}

template <class Alg, class TreeT>
Vector eval_checked(const Alg& a, const TreeT& tree, std::span<const Vector> args) {
  if (args.size() != tree.arity())
    throw DimensionMismatch("tree of arity " + std::to_string(tree.arity()) + " given " +
                            std::to_string(args.size()) + " arguments");
  for (const auto& v : args)
    if (v.size() != a.dim()) throw DimensionMismatch("argument vector has the wrong dimension");
  return eval_rec(a, tree, 0, [&](std::size_t i) { return args[i]; });
}

template <class Alg>
std::vector<Vector> checked_images(const HomModule& v, const Alg& a, const Matrix& f) {
  if (f.rows() != a.dim() || f.cols() != v.dim) throw DimensionMismatch("map matrix must be dim A x dim V");
  if (Violations bad = check_module_morphism(f, v, a.module); !bad.empty())
    throw HypothesisError("map does not commute with the twisting maps", std::move(bad));
  std::vector<Vector> images;
  for (std::size_t i = 0; i < v.dim; ++i) images.push_back(f.column(i));
  return images;
}

}  // namespace

Vector eval_tree_product(const HomNonAsAlgebra& a, const WeightedTree& tree, std::span<const Vector> args) {
  return eval_checked(a, tree, args);
}

Vector eval_tree_product(const HomDialgebra& d, const DiweightedTree& tree, std::span<const Vector> args) {
  return eval_checked(d, tree, args);
}

UniversalMap::UniversalMap(const HomModule& v, const HomNonAsAlgebra& a, const Matrix& f)
    : a_(a), images_(checked_images(v, a, f)) {}

Vector UniversalMap::eval(const WeightedTree& t, std::span<const std::uint32_t> labels) const {
  return eval_rec(a_, t, 0, [&](std::size_t i) { return images_[labels[i]]; });
}

Vector UniversalMap::operator()(const Monomial& m) const {
  for (auto l : m.labels)
    if (l >= images_.size()) throw DimensionMismatch("generator index out of range");
  return eval(m.tree, m.labels);
}

Vector UniversalMap::operator()(const Element& e) const {
  if (e.generator_count() != images_.size()) throw DimensionMismatch("element over a different generator set");
  Vector out(a_.dim());
  for (const auto& [m, c] : e.terms()) {
    Vector v = eval(m.tree, m.labels);
    for (std::size_t k = 0; k < v.size(); ++k) out[k] += c * v[k];
  }
  return out;
}

DiUniversalMap::DiUniversalMap(const HomModule& v, const HomDialgebra& d, const Matrix& f)
    : d_(d), images_(checked_images(v, d, f)) {}

Vector DiUniversalMap::eval(const DiweightedTree& t, std::span<const std::uint32_t> labels) const {
  return eval_rec(d_, t, 0, [&](std::size_t i) { return images_[labels[i]]; });
}

Vector DiUniversalMap::operator()(const DiMonomial& m) const {
  for (auto l : m.labels)
    if (l >= images_.size()) throw DimensionMismatch("generator index out of range");
  return eval(m.tree, m.labels);
}

Vector DiUniversalMap::operator()(const DiElement& e) const {
  if (e.generator_count() != images_.size()) throw DimensionMismatch("element over a different generator set");
  Vector out(d_.dim());
  for (const auto& [m, c] : e.terms()) {
    Vector v = eval(m.tree, m.labels);
    for (std::size_t k = 0; k < v.size(); ++k) out[k] += c * v[k];
  }
  return out;
}

// -- text ------------------------------------------------------------------------------

namespace {

template <class M>
std::string format_monomial(const M& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    if (i) s += ",";
    s += "x" + std::to_string(m.labels[i]);
  }
  return s + ")_" + format(m.tree);
}

template <class E>
std::string format_element(const E& e) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first) s += " + ";
    first = false;
    s += to_string(c) + " * " + format_monomial(m);
  }
  return s;
}

template <class E, class ParseTree>
class ElementParser {
 public:
  ElementParser(std::string_view text, std::size_t gens, ParseTree parse_tree)
      : text_(text), gens_(gens), parse_tree_(parse_tree) {}

  E parse() {
    E out(gens_);
    skip();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (pos_ == text_.size()) return out;
      pos_ = save;
    }
    bool negate = false;
    while (true) {
      skip();
      auto [m, c] = term();
      out.add_term(m, negate ? Rational(-c) : c);
      skip();
      if (pos_ == text_.size()) break;
      char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-' between terms");
      negate = op == '-';
      ++pos_;
    }
    return out;
  }

 private:
  using M = typename E::Terms::key_type;

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::pair<M, Rational> term() {
    Rational c = 1;
    if (peek() != '(') {
      std::size_t start = pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      if (pos_ == start) fail("expected a coefficient or '('");
      try {
        c = parse_rational(text_.substr(start, pos_ - start));
      } catch (const ParseError& e) {
        throw ParseError(start + e.position(), "bad coefficient");
      }
      expect('*');
      skip();
    }
    expect('(');
    std::vector<std::uint32_t> labels;
    while (true) {
      skip();
      if (peek() != 'x') fail("expected a generator 'x<index>'");
      ++pos_;
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected a generator index");
      unsigned long v = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (v >= gens_) throw ParseError(start, "generator index out of range");
      labels.push_back(static_cast<std::uint32_t>(v));
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    expect('_');
    skip();
    std::size_t start = pos_;
    if (peek() == 'i') {
      ++pos_;
    } else if (peek() == '(' || peek() == '{') {
      int depth = 0;
      do {
        char ch = peek();
        if (ch == '\0') fail("unbalanced parentheses in tree");
        if (ch == '(' || ch == '{') ++depth;
        if (ch == ')' || ch == '}') --depth;
        ++pos_;
      } while (depth > 0);
    } else {
      fail("expected a tree");
    }
    while (true) {
      std::size_t save = pos_;
      skip();
      if (peek() != '[') {
        pos_ = save;
        break;
      }
      while (peek() != ']') {
        if (peek() == '\0') fail("unterminated weight suffix");
        ++pos_;
      }
      ++pos_;
    }
    auto tree = [&] {
      try {
        return parse_tree_(text_.substr(start, pos_ - start));
      } catch (const ParseError& e) {
        throw ParseError(start + e.position(), e.what());
      }
    }();
    if (tree.arity() != labels.size()) throw ParseError(start, "tree arity does not match the number of labels");
    return {M{tree, labels}, c};
  }

  std::string_view text_;
  std::size_t gens_;
  ParseTree parse_tree_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const Monomial& m) { return format_monomial(m); }
std::string format(const DiMonomial& m) { return format_monomial(m); }
std::string format(const Element& e) { return format_element(e); }
std::string format(const DiElement& e) { return format_element(e); }

Element parse_element(std::string_view text, std::size_t generator_count) {
  return ElementParser<Element, WeightedTree (*)(std::string_view)>(text, generator_count, parse_weighted_tree)
      .parse();
}

DiElement parse_di_element(std::string_view text, std::size_t generator_count) {
  return ElementParser<DiElement, DiweightedTree (*)(std::string_view)>(text, generator_count,
                                                                          parse_diweighted_tree)
      .parse();
}

}  // namespace homalg
