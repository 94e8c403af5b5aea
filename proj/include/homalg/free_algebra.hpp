#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/trees.hpp"

namespace homalg {

/// Truncation of the free algebra: arity ≤ N, total weight ≤ W. `pad` is the
/// extra room used when closing ideals.
struct Window {
  unsigned N = 1;
  unsigned W = 0;
  unsigned pad = 0;

  Window() = default;
  Window(unsigned n, unsigned w, unsigned p = 0);

  Window padded() const { return {N + pad, W + pad, 0}; }
  bool contains(std::size_t arity, std::uint64_t weight) const { return arity <= N && weight <= W; }

  friend bool operator==(const Window&, const Window&) = default;
};

/// A tree with a generator index on each leaf (left to right).
template <class TreeT>
struct BasicMonomial {
  TreeT tree;
  std::vector<std::uint32_t> labels;

  static BasicMonomial generator(std::uint32_t i) { return {TreeT::leaf(), {i}}; }

  std::size_t arity() const noexcept { return labels.size(); }
  std::uint64_t total_weight() const noexcept { return tree.total_weight(); }

  friend bool operator==(const BasicMonomial&, const BasicMonomial&) = default;
  /// Arity, total weight, tree, then labels.
  friend std::strong_ordering operator<=>(const BasicMonomial& a, const BasicMonomial& b) {
    if (auto c = a.arity() <=> b.arity(); c != 0) return c;
    if (auto c = a.total_weight() <=> b.total_weight(); c != 0) return c;
    if (auto c = a.tree <=> b.tree; c != 0) return c;
    return a.labels <=> b.labels;
  }
};

using Monomial = BasicMonomial<WeightedTree>;
using DiMonomial = BasicMonomial<DiweightedTree>;

struct MonomialHash {
  template <class TreeT>
  std::size_t operator()(const BasicMonomial<TreeT>& m) const noexcept {
    std::size_t h = m.tree.hash();
    for (auto l : m.labels) h = h * 1000003u + l + 1;
    return h;
  }
};

/// Finite linear combination of monomials over a fixed generator count;
/// zero coefficients are never stored.
template <class M>
class BasicElement {
 public:
  using Terms = std::map<M, Rational>;

  explicit BasicElement(std::size_t generator_count = 0) : gens_(generator_count) {}
  BasicElement(std::size_t generator_count, const M& m, Rational c = 1);

  static BasicElement generator(std::size_t generator_count, std::uint32_t i) {
    return BasicElement(generator_count, M::generator(i));
  }

  std::size_t generator_count() const noexcept { return gens_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const M& m, const Rational& c);

  BasicElement& operator+=(const BasicElement& o);
  BasicElement& operator-=(const BasicElement& o);
  BasicElement& operator*=(const Rational& c);

  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
  friend BasicElement operator-(BasicElement a) { return a *= Rational(-1); }
  friend BasicElement operator*(const Rational& c, BasicElement a) { return a *= c; }
  friend bool operator==(const BasicElement&, const BasicElement&) = default;

 private:
  void check(const BasicElement& o) const;

  std::size_t gens_;
  Terms terms_;
};

using Element = BasicElement<Monomial>;
using DiElement = BasicElement<DiMonomial>;

extern template class BasicElement<Monomial>;
extern template class BasicElement<DiMonomial>;

// -- operations ------------------------------------------------------------------

/// Grafts trees and concatenates labels.
Monomial mu_F(const Monomial& a, const Monomial& b);
Element mu_F(const Element& a, const Element& b);

/// α_V on generators, τ ↦ τ[1] on arity ≥ 2.
Element alpha_F(const HomModule& V, const Monomial& m);
Element alpha_F(const HomModule& V, const Element& a);

DiMonomial dimu_F(const DiMonomial& a, const DiMonomial& b, Side side);
DiElement dimu_F(const DiElement& a, const DiElement& b, Side side);
DiElement dialpha_F(const HomModule& V, const DiMonomial& m);
DiElement dialpha_F(const HomModule& V, const DiElement& a);

/// All monomials of arity ≤ N and total weight ≤ W, ascending.
std::vector<Monomial> basis_window(std::size_t dim_v, const Window& w);
std::vector<DiMonomial> di_basis_window(std::size_t dim_v, const Window& w);

/// Σ_{n ≤ N} C_{n−1} binom(W+n−1, n−1) d^n (times 2^{n−1} when `di`).
Integer window_size(std::size_t dim_v, const Window& w, bool di = false);

// -- evaluation in a target algebra -----------------------------------------------

/// (x_1 ⋯ x_n)_τ: leaves take the arguments, each vertex multiplies its two
/// subtrees and applies α as many times as its weight.
Vector eval_tree_product(const HomNonAsAlgebra& a, const WeightedTree& tree, std::span<const Vector> args);
/// Same with ⊣ / ⊢ chosen by the vertex side.
Vector eval_tree_product(const HomDialgebra& d, const DiweightedTree& tree, std::span<const Vector> args);

/// The extension g of a Hom-module map f : V → A to the free algebra.
/// Construction throws HypothesisError unless f ∘ α_V = α_A ∘ f.
class UniversalMap {
 public:
  UniversalMap(const HomModule& v, const HomNonAsAlgebra& a, const Matrix& f);

  Vector operator()(const Monomial& m) const;
  Vector operator()(const Element& e) const;
  const HomNonAsAlgebra& target() const noexcept { return a_; }

 private:
  Vector eval(const WeightedTree& t, std::span<const std::uint32_t> labels) const;

  HomNonAsAlgebra a_;
  std::vector<Vector> images_;
};

class DiUniversalMap {
 public:
  DiUniversalMap(const HomModule& v, const HomDialgebra& d, const Matrix& f);

  Vector operator()(const DiMonomial& m) const;
  Vector operator()(const DiElement& e) const;
  const HomDialgebra& target() const noexcept { return d_; }

 private:
  Vector eval(const DiweightedTree& t, std::span<const std::uint32_t> labels) const;

  HomDialgebra d_;
  std::vector<Vector> images_;
};

// -- text form ---------------------------------------------------------------------
//
//   element := "0" | term (("+" | "-") term)*
//   term    := [scalar "*"] "(" "x" int ("," "x" int)* ")" "_" tree
//
// e.g. "1 * (x0,x1)_(i v i)[1] + -1/2 * (x0)_i".

std::string format(const Monomial& m);
std::string format(const DiMonomial& m);
std::string format(const Element& e);
std::string format(const DiElement& e);

Element parse_element(std::string_view text, std::size_t generator_count);
DiElement parse_di_element(std::string_view text, std::size_t generator_count);

}  // namespace homalg
