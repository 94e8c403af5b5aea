#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/free_algebra.hpp"
#include "homalg/linalg.hpp"

namespace homalg {

// -- ideal generators ----------------------------------------------------------------
//
// Triples range over the basis of `padded` in ascending order; a triple
// contributes only when both sides of the relation lie inside `padded`.
// Zero relations are kept so counts are predictable.

/// (ab)α(c) − α(a)(bc) for every fitting triple, then
/// Σ_k b_ijk x_k − (x_i x_j − x_j x_i) for every generator pair (only when N ≥ 2).
/// Throws HypothesisError unless `l` is Hom-Lie.
std::vector<Element> hlie_ideal_generators(const HomNonAsAlgebra& l, const Window& padded);

/// Only the twisted associators.
std::vector<Element> fhas_ideal_generators(const HomModule& v, const Window& padded);

/// For every fitting triple:
///   (x⊣y)⊣α(z) − α(x)⊣(y⊣z),   (x⊣y)⊣α(z) − α(x)⊣(y⊢z),
///   (x⊢y)⊣α(z) − α(x)⊢(y⊣z),   α(x)⊢(y⊢z) − (x⊣y)⊢α(z),
///   α(x)⊢(y⊢z) − (x⊢y)⊢α(z);
/// then [x_i,x_j] − (x_i ⊣ x_j − x_j ⊢ x_i) for generator pairs.
/// Throws HypothesisError unless `l` is Hom-Leibniz.
std::vector<DiElement> hleib_ideal_generators(const HomNonAsAlgebra& l, const Window& padded);

// -- closure ---------------------------------------------------------------------------

struct ClosureOptions {
  /// Stop after this many rounds even if the span is still growing.
  std::optional<unsigned> max_rounds;
};

/// A subspace of the span of `basis` given by its reduced echelon rows.
/// Pivots are the largest monomials present.
template <class M>
struct BasicIdealSpan {
  Window window;
  std::vector<M> basis;
  std::vector<SparseVector> rows;
  unsigned rounds = 0;
  bool saturated = true;  // false when max_rounds cut the fixpoint short

  std::size_t rank() const noexcept { return rows.size(); }
};

using IdealSpan = BasicIdealSpan<Monomial>;
using DiIdealSpan = BasicIdealSpan<DiMonomial>;

/// Least subspace of the `padded` window containing `gens` that contains
/// α(v), m·v and v·m (every product side for dialgebras) for each of its
/// vectors v and basis monomials m whenever the result lies in the window.
/// Throws InvalidArgument when a generator leaves the window.
IdealSpan ideal_closure(const HomModule& v, const std::vector<Element>& gens, const Window& padded,
                        ClosureOptions options = {});
DiIdealSpan ideal_closure(const HomModule& v, const std::vector<DiElement>& gens, const Window& padded,
                          ClosureOptions options = {});

// -- quotients ---------------------------------------------------------------------------

/// One row of the cumulative filtration: everything of arity ≤ a and total
/// weight ≤ w.
struct FiltrationRow {
  std::size_t arity;
  std::size_t weight;
  std::size_t window_dim;
  std::size_t ideal_rank;
  std::size_t quotient_dim;
};

/// Window quotient of a free algebra by an ideal computed in a padded window.
/// Products and α between standard monomials are defined when the result
/// stays inside the window and are computed on request; coordinates are
/// sparse over standard-monomial indices.
template <class M>
class BasicQuotient {
 public:
  using ElementT = BasicElement<M>;
  static constexpr bool is_dialgebra = std::is_same_v<M, DiMonomial>;

  BasicQuotient(HomModule v, Window window, const BasicIdealSpan<M>& ideal);

  const Window& window() const noexcept { return window_; }
  const HomModule& module() const noexcept { return v_; }
  const std::vector<M>& window_basis() const noexcept { return basis_; }
  const std::vector<M>& standard_monomials() const noexcept { return standard_; }
  /// Positions of the standard monomials inside window_basis().
  const std::vector<std::size_t>& standard_columns() const noexcept { return standard_cols_; }
  /// Reduced echelon rows (window coordinates) of the ideal cut to the window.
  const std::vector<SparseVector>& relations() const noexcept { return relations_; }
  std::size_t dim() const noexcept { return standard_.size(); }
  std::size_t padded_dim() const noexcept { return padded_dim_; }
  std::size_t padded_rank() const noexcept { return padded_rank_; }
  bool saturated() const noexcept { return saturated_; }

  /// Coordinates over the standard monomials. Throws InvalidArgument when the
  /// element leaves the window.
  SparseVector reduce(const ElementT& e) const;
  SparseVector reduce_window(const SparseVector& window_coords) const;
  /// The combination of standard monomials with the given coordinates.
  ElementT lift(const SparseVector& coords) const;

  /// Product of standard monomials p and q (⊣ or ⊢ by `side` for
  /// dialgebras); absent when it leaves the window.
  std::optional<SparseVector> product(std::size_t p, std::size_t q, Side side = Side::left) const;
  std::optional<SparseVector> alpha(std::size_t p) const;

  std::vector<FiltrationRow> filtration() const;

  std::optional<std::size_t> window_index(const M& m) const;

 private:
  HomModule v_;
  Window window_;
  std::vector<M> basis_;
  std::unordered_map<M, std::size_t, MonomialHash> index_;
  std::vector<M> standard_;
  std::vector<std::size_t> standard_cols_;
  std::vector<std::ptrdiff_t> standard_pos_;  // window column -> standard index or -1
  std::vector<SparseVector> relations_;
  std::vector<std::ptrdiff_t> pivot_row_;  // window column -> relation row or -1
  std::size_t padded_dim_ = 0;
  std::size_t padded_rank_ = 0;
  bool saturated_ = true;
};

using QuotientPresentation = BasicQuotient<Monomial>;
using DiQuotientPresentation = BasicQuotient<DiMonomial>;

extern template class BasicQuotient<Monomial>;
extern template class BasicQuotient<DiMonomial>;

/// U_HLie(L) cut to `w`, with the ideal closed in w.padded().
QuotientPresentation u_hlie(const HomNonAsAlgebra& l, const Window& w, ClosureOptions options = {});
/// Free Hom-associative algebra on V cut to `w`.
QuotientPresentation f_has(const HomModule& v, const Window& w, ClosureOptions options = {});
/// U_HLeib(L) cut to `w`.
DiQuotientPresentation u_hleib(const HomNonAsAlgebra& l, const Window& w, ClosureOptions options = {});

/// Column i is the reduced image of the generator x_i.
Matrix unit_map_j(const QuotientPresentation& q);
Matrix unit_map_j(const DiQuotientPresentation& q);

// -- checks ------------------------------------------------------------------------------

struct QuotientAxiomReport {
  Violations violations;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // arity fits, but some product or α left the window

  bool ok() const noexcept { return violations.empty(); }
};

/// Hom-associativity (or the five dialgebra axioms) on standard monomial
/// triples. A triple is checked only when every intermediate value is known
/// to be computed exactly inside the window.
QuotientAxiomReport check_quotient_axioms(const QuotientPresentation& q);
QuotientAxiomReport check_quotient_axioms(const DiQuotientPresentation& q);

struct MorphismReport {
  Violations violations;
  std::size_t generators_checked = 0;
  std::size_t ideal_rows_checked = 0;
  std::size_t table_entries_checked = 0;
  std::size_t quotient_dim = 0;
  /// h on the standard monomials, one column per monomial.
  Matrix h;

  bool ok() const noexcept { return violations.empty(); }
};

/// Universal property instance for U_HLie: f : L → HLie(A) must be a Hom-Lie
/// morphism into the commutator algebra of a Hom-associative A (else
/// HypothesisError). Verifies that g kills the ideal generators and the
/// closed ideal rows ("g-kills-generator", "g-kills-ideal"), that h ∘ j = f
/// ("h-j"), and that h respects the partial tables ("h-mul", "h-alpha").
MorphismReport induced_morphism_check(const HomNonAsAlgebra& l, const HomNonAsAlgebra& a, const Matrix& f,
                                      const Window& w);

/// The same for U_HLeib with a Hom-dialgebra target and f : L → HLeib(D).
MorphismReport induced_morphism_check(const HomNonAsAlgebra& l, const HomDialgebra& d, const Matrix& f,
                                      const Window& w);

}  // namespace homalg
