#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "homalg/linalg.hpp"
#include "homalg/rational.hpp"

namespace homalg {

/// Structure constants of a bilinear map U × V → W on chosen bases:
/// e_i · e_j = Σ_k c(i, j, k) e_k.
class Bilinear {
 public:
  Bilinear() = default;
  Bilinear(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);
  /// Square case: dim × dim → dim, all zero.
  static Bilinear zero(std::size_t dim) { return Bilinear(dim, dim, dim); }

  std::size_t left_dim() const noexcept { return left_; }
  std::size_t right_dim() const noexcept { return right_; }
  std::size_t out_dim() const noexcept { return out_; }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[index(i, j, k)]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[index(i, j, k)]; }

  Vector basis_product(std::size_t i, std::size_t j) const;
  Vector apply(std::span<const Rational> x, std::span<const Rational> y) const;

  bool is_zero() const { return homalg::is_zero(data_); }

  friend bool operator==(const Bilinear&, const Bilinear&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * right_ + j) * out_ + k;
  }

  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t out_ = 0;
  std::vector<Rational> data_;
};

/// A vector space with a linear self-map. alpha acts on column vectors:
/// α(e_i) = Σ_j alpha(j, i) e_j.
struct HomModule {
  std::size_t dim = 0;
  Matrix alpha;

  HomModule() = default;
  HomModule(std::size_t dim, Matrix alpha);
  static HomModule with_identity(std::size_t dim) { return {dim, Matrix::identity(dim)}; }

  Vector apply_alpha(std::span<const Rational> x) const { return alpha.apply(x); }

  friend bool operator==(const HomModule&, const HomModule&) = default;
};

struct HomNonAsAlgebra {
  HomModule module;
  Bilinear mul;

  HomNonAsAlgebra() = default;
  HomNonAsAlgebra(HomModule module, Bilinear mul);

  std::size_t dim() const noexcept { return module.dim; }
  Vector multiply(std::span<const Rational> x, std::span<const Rational> y) const { return mul.apply(x, y); }
  Vector alpha(std::span<const Rational> x) const { return module.apply_alpha(x); }

  friend bool operator==(const HomNonAsAlgebra&, const HomNonAsAlgebra&) = default;
};

/// Two products: lmul is ⊣ and rmul is ⊢.
struct HomDialgebra {
  HomModule module;
  Bilinear lmul;
  Bilinear rmul;

  HomDialgebra() = default;
  HomDialgebra(HomModule module, Bilinear lmul, Bilinear rmul);

  std::size_t dim() const noexcept { return module.dim; }
  Vector alpha(std::span<const Rational> x) const { return module.apply_alpha(x); }

  HomNonAsAlgebra left_algebra() const { return {module, lmul}; }
  HomNonAsAlgebra right_algebra() const { return {module, rmul}; }

  friend bool operator==(const HomDialgebra&, const HomDialgebra&) = default;
};

/// A Hom-A-bimodule (M, α_M) together with a linear map f : M → A.
/// left_action: A × M → M, right_action: M × A → M, f is dim A × dim M.
struct BimoduleData {
  HomNonAsAlgebra algebra;
  HomModule module;
  Bilinear left_action;
  Bilinear right_action;
  Matrix f;

  BimoduleData() = default;
  BimoduleData(HomNonAsAlgebra algebra, HomModule module, Bilinear left_action, Bilinear right_action,
               Matrix f);
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> basis;  // basis indices the identity was evaluated on
  Vector discrepancy;              // lhs − rhs

  friend bool operator==(const Violation&, const Violation&) = default;
};

using Violations = std::vector<Violation>;

std::string describe(const Violation& v);

/// Thrown by constructions whose hypotheses fail; carries the evidence.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(const std::string& what, Violations violations)
      : std::runtime_error(what), violations_(std::move(violations)) {}
  const Violations& violations() const noexcept { return violations_; }

 private:
  Violations violations_;
};

// -- axiom checkers ------------------------------------------------------------

/// α(x)(yz) = (xy)α(z) on all basis triples. Axiom id "hom-assoc".
Violations check_hom_associative(const HomNonAsAlgebra& a);

/// Skew-symmetry (id "skew", basis pairs) and the Hom-Jacobi identity
/// (id "hom-jacobi", basis triples).
Violations check_hom_lie(const HomNonAsAlgebra& l);

/// [[x,y],α(z)] = [[x,z],α(y)] + [α(x),[y,z]]. Axiom id "hom-leibniz".
Violations check_hom_leibniz(const HomNonAsAlgebra& l);

/// The five Hom-dialgebra axioms, ids "1" … "5".
Violations check_hom_dialgebra(const HomDialgebra& d);

/// The three bimodule conditions ("bimodule-1" … "bimodule-3") and the
/// morphism conditions on f ("f-left", "f-right", "f-alpha").
Violations check_bimodule(const BimoduleData& b);

/// f commutes with α ("alpha", indexed by source basis) and with every
/// product ("mul" or "lmul"/"rmul", indexed by source basis pairs).
Violations check_morphism(const Matrix& f, const HomNonAsAlgebra& source, const HomNonAsAlgebra& target);
Violations check_morphism(const Matrix& f, const HomDialgebra& source, const HomDialgebra& target);
/// Only f ∘ α_V = α_W ∘ f.
Violations check_module_morphism(const Matrix& f, const HomModule& source, const HomModule& target);

// -- functors and constructions ------------------------------------------------

/// Commutator bracket xy − yx. Throws HypothesisError unless `a` is
/// Hom-associative.
HomNonAsAlgebra hlie(const HomNonAsAlgebra& a);

/// Bracket x ⊣ y − y ⊢ x. Throws HypothesisError unless `d` is a Hom-dialgebra.
HomNonAsAlgebra hleib(const HomDialgebra& d);

/// ⊣ = μ = ⊢. Throws HypothesisError unless `a` is Hom-associative.
HomDialgebra dialgebra_from_associative(const HomNonAsAlgebra& a);

/// m1 ⊣ m2 = m1 f(m2), m1 ⊢ m2 = f(m1) m2. Throws HypothesisError unless
/// check_bimodule passes.
HomDialgebra dialgebra_from_bimodule(const BimoduleData& b);

/// The module B over A through a Hom-associative morphism g : A → B with
/// a·b = g(a)b and b·a = b g(a). `f` : B → A completes the data (the zero
/// map when omitted).
BimoduleData bimodule_from_morphism(const HomNonAsAlgebra& a, const HomNonAsAlgebra& b, const Matrix& g);
BimoduleData bimodule_from_morphism(const HomNonAsAlgebra& a, const HomNonAsAlgebra& b, const Matrix& g,
                                    const Matrix& f);

/// Entries (i, j) where the bracket of hleib(dialgebra_from_associative(a))
/// differs from that of hlie(a); axiom id "square".
Violations check_commuting_square(const HomNonAsAlgebra& a);

}  // namespace homalg
