// Deterministic generators of algebras for property tests.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "homalg/algebra.hpp"
#include "oracles.hpp"

namespace fixture {

using homalg::Bilinear;
using homalg::BimoduleData;
using homalg::HomDialgebra;
using homalg::HomModule;
using homalg::HomNonAsAlgebra;
using homalg::Matrix;
using homalg::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1)); }
  bool coin() { return uniform(0, 1) == 1; }
  /// Numerator in [-3, 3], denominator in {1, 2, 3}.
  Rational small();
  Matrix matrix(std::size_t rows, std::size_t cols);
  Matrix invertible(std::size_t n);
  Bilinear bilinear(std::size_t l, std::size_t r, std::size_t o);

 private:
  std::mt19937_64 g_;
};

/// Multiplication tables t[i][j] of all semigroups on {0, .., n−1}.
const std::vector<std::vector<std::vector<std::size_t>>>& semigroups(std::size_t n);

/// Monoid algebra of a random semigroup with α = Id.
HomNonAsAlgebra semigroup_algebra(Rng& rng, std::size_t n);
/// (k S, σ∘μ, σ) for a random semigroup endomorphism σ.
HomNonAsAlgebra twisted_semigroup_algebra(Rng& rng, std::size_t n);
/// α = 0 makes every product Hom-associative.
HomNonAsAlgebra alpha_zero_algebra(Rng& rng, std::size_t n);
/// Same algebra written in the basis given by the columns of P.
HomNonAsAlgebra transport(const HomNonAsAlgebra& a, const Matrix& p);
HomDialgebra transport(const HomDialgebra& d, const Matrix& p);

/// Upper triangular 2×2 matrices on E11, E12, E22.
HomNonAsAlgebra upper_triangular();
/// e·e = e, e·x = x, everything else 0; α = Id.
HomNonAsAlgebra ex_algebra();
/// One-dimensional, zero product, α = Id.
HomNonAsAlgebra abelian(std::size_t dim);

/// A mixed bag of Hom-associative algebras of dimension ≤ 3.
HomNonAsAlgebra random_hom_associative(Rng& rng);

/// Dialgebras built three ways: ⊣ = ⊢ = μ; a classical dialgebra with α = Id
/// (x ⊣ y = x d(y), x ⊢ y = d(x) y for a square-zero inner derivation, or the
/// bimodule recipe with α = Id); and the bimodule recipe on A^k.
HomDialgebra dialgebra_equal_products(Rng& rng);
HomDialgebra dialgebra_classical(Rng& rng);
HomDialgebra dialgebra_from_power_bimodule(Rng& rng, const HomNonAsAlgebra& a, std::size_t k);
HomDialgebra random_hom_dialgebra(Rng& rng, int construction);

BimoduleData power_bimodule(Rng& rng, const HomNonAsAlgebra& a, std::size_t k);

/// V, A and f with f ∘ α_V = α_A ∘ f; A has an arbitrary product.
struct Intertwining {
  HomModule v;
  HomNonAsAlgebra a;
  Matrix f;
  std::string recipe;
};
Intertwining random_intertwining(Rng& rng, std::size_t dim_v, std::size_t dim_a, int recipe);

oracle::NaiveAlgebra naive(const HomNonAsAlgebra& a);
oracle::Cube cube(const Bilinear& b);
oracle::Dense dense(const Matrix& m);

}  // namespace fixture
