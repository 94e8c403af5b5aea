#include "fixtures.hpp"

#include <map>
#include <stdexcept>

#include "homalg/linalg.hpp"

namespace fixture {

using homalg::Vector;

Rational Rng::small() {
  int num = uniform(-3, 3);
  int den = uniform(1, 3);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Matrix Rng::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small();
  return m;
}

Matrix Rng::invertible(std::size_t n) {
  while (true) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = uniform(-2, 2);
    if (homalg::rank(m) == n) return m;
  }
}

Bilinear Rng::bilinear(std::size_t l, std::size_t r, std::size_t o) {
  Bilinear b(l, r, o);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < o; ++k)
        if (uniform(0, 2) == 0) b(i, j, k) = small();
  return b;
}

const std::vector<std::vector<std::vector<std::size_t>>>& semigroups(std::size_t n) {
  static std::map<std::size_t, std::vector<std::vector<std::vector<std::size_t>>>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::size_t cells = n * n, total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = c % n;
        c /= n;
      }
    bool assoc = true;
    for (std::size_t a = 0; a < n && assoc; ++a)
      for (std::size_t b = 0; b < n && assoc; ++b)
        for (std::size_t d = 0; d < n && assoc; ++d) assoc = t[t[a][b]][d] == t[a][t[b][d]];
    if (assoc) out.push_back(std::move(t));
  }
  return cache[n] = std::move(out);
}

namespace {

HomNonAsAlgebra from_table(const std::vector<std::vector<std::size_t>>& t, const std::vector<std::size_t>& sigma) {
  const std::size_t n = t.size();
  Matrix alpha(n, n);
  for (std::size_t i = 0; i < n; ++i) alpha(sigma[i], i) = 1;
  Bilinear mul = Bilinear::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul(i, j, sigma[t[i][j]]) = 1;
  return {HomModule(n, alpha), mul};
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

}  // namespace

HomNonAsAlgebra semigroup_algebra(Rng& rng, std::size_t n) {
  const auto& all = semigroups(n);
  return from_table(all[rng.index(all.size())], identity_map(n));
}

HomNonAsAlgebra twisted_semigroup_algebra(Rng& rng, std::size_t n) {
  const auto& all = semigroups(n);
  const auto& t = all[rng.index(all.size())];
  std::vector<std::vector<std::size_t>> endos;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> s(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = c % n;
      c /= n;
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) ok = s[t[a][b]] == t[s[a]][s[b]];
    if (ok) endos.push_back(std::move(s));
  }
  return from_table(t, endos[rng.index(endos.size())]);
}

HomNonAsAlgebra alpha_zero_algebra(Rng& rng, std::size_t n) {
  return {HomModule(n, Matrix(n, n)), rng.bilinear(n, n, n)};
}

namespace {

Bilinear transport_bilinear(const Bilinear& b, const Matrix& p, const Matrix& pinv) {
  const std::size_t n = p.rows();
  Bilinear out = Bilinear::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = pinv.apply(b.apply(p.column(i), p.column(j)));
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = v[k];
    }
  return out;
}

}  // namespace

HomNonAsAlgebra transport(const HomNonAsAlgebra& a, const Matrix& p) {
  Matrix pinv = homalg::inverse(p);
  return {HomModule(a.dim(), pinv * a.module.alpha * p), transport_bilinear(a.mul, p, pinv)};
}

HomDialgebra transport(const HomDialgebra& d, const Matrix& p) {
  Matrix pinv = homalg::inverse(p);
  return {HomModule(d.dim(), pinv * d.module.alpha * p), transport_bilinear(d.lmul, p, pinv),
          transport_bilinear(d.rmul, p, pinv)};
}

HomNonAsAlgebra upper_triangular() {
  // E11 = 0, E12 = 1, E22 = 2.
  Bilinear m = Bilinear::zero(3);
  m(0, 0, 0) = 1;
  m(0, 1, 1) = 1;
  m(1, 2, 1) = 1;
  m(2, 2, 2) = 1;
  return {HomModule::with_identity(3), m};
}

HomNonAsAlgebra ex_algebra() {
  Bilinear m = Bilinear::zero(2);
  m(0, 0, 0) = 1;
  m(0, 1, 1) = 1;
  return {HomModule::with_identity(2), m};
}

HomNonAsAlgebra abelian(std::size_t dim) { return {HomModule::with_identity(dim), Bilinear::zero(dim)}; }

HomNonAsAlgebra random_hom_associative(Rng& rng) {
  std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
  HomNonAsAlgebra a;
  switch (rng.uniform(0, 4)) {
    case 0: a = semigroup_algebra(rng, n); break;
    case 1: a = twisted_semigroup_algebra(rng, n); break;
    case 2: a = alpha_zero_algebra(rng, n); break;
    case 3: a = upper_triangular(); break;
    default: a = rng.coin() ? ex_algebra() : dialgebra_classical(rng).left_algebra(); break;
  }
  return rng.coin() ? transport(a, rng.invertible(a.dim())) : a;
}

HomDialgebra dialgebra_equal_products(Rng& rng) {
  HomNonAsAlgebra a = random_hom_associative(rng);
  return {a.module, a.mul, a.mul};
}

BimoduleData power_bimodule(Rng& rng, const HomNonAsAlgebra& a, std::size_t k) {
  const std::size_t n = a.dim(), m = n * k;
  Matrix alpha_m(m, m);
  Bilinear left(n, m, m), right(m, n, m);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) alpha_m(c * n + r, c * n + s) = a.module.alpha(r, s);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < n; ++t) {
          left(i, c * n + j, c * n + t) = a.mul(i, j, t);
          right(c * n + j, i, c * n + t) = a.mul(j, i, t);
        }
  }
  Matrix f(n, m);
  for (std::size_t c = 0; c < k; ++c) {
    Rational coef = rng.small();
    for (std::size_t r = 0; r < n; ++r) f(r, c * n + r) = coef;
  }
  return {a, HomModule(m, alpha_m), left, right, f};
}

HomDialgebra dialgebra_from_power_bimodule(Rng& rng, const HomNonAsAlgebra& a, std::size_t k) {
  return homalg::dialgebra_from_bimodule(power_bimodule(rng, a, k));
}

HomDialgebra dialgebra_classical(Rng& rng) {
  if (rng.coin()) {
    // x ⊣ y = x d(y), x ⊢ y = d(x) y with d = c·[E12, −], which squares to 0.
    HomNonAsAlgebra a = upper_triangular();
    Rational c = rng.small();
    Matrix d(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      Vector e12 = homalg::unit_vector(3, 1), x = homalg::unit_vector(3, i);
      Vector l = a.multiply(e12, x), r = a.multiply(x, e12);
      for (std::size_t k = 0; k < 3; ++k) d(k, i) = c * (l[k] - r[k]);
    }
    Bilinear lm = Bilinear::zero(3), rm = Bilinear::zero(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Vector x = homalg::unit_vector(3, i), y = homalg::unit_vector(3, j);
        Vector l = a.multiply(x, d.apply(y)), r = a.multiply(d.apply(x), y);
        for (std::size_t k = 0; k < 3; ++k) {
          lm(i, j, k) = l[k];
          rm(i, j, k) = r[k];
        }
      }
    HomDialgebra out{a.module, lm, rm};
    return rng.coin() ? transport(out, rng.invertible(3)) : out;
  }
  HomNonAsAlgebra a = semigroup_algebra(rng, static_cast<std::size_t>(rng.uniform(1, 2)));
  return dialgebra_from_power_bimodule(rng, a, a.dim() == 1 ? static_cast<std::size_t>(rng.uniform(1, 3)) : 1);
}

HomDialgebra random_hom_dialgebra(Rng& rng, int construction) {
  switch (construction) {
    case 1: return dialgebra_equal_products(rng);
    case 2: return dialgebra_classical(rng);
    default: {
      HomNonAsAlgebra a;
      do a = random_hom_associative(rng);
      while (a.dim() > 2);
      std::size_t k = a.dim() == 1 ? static_cast<std::size_t>(rng.uniform(1, 3)) : 1;
      return dialgebra_from_power_bimodule(rng, a, k);
    }
  }
}

Intertwining random_intertwining(Rng& rng, std::size_t dim_v, std::size_t dim_a, int recipe) {
  Intertwining out;
  Bilinear mul = rng.bilinear(dim_a, dim_a, dim_a);
  if (recipe == 0 && dim_a >= dim_v) {
    // α_A = P [[α_V, B], [0, C]] P⁻¹ and f = P [I; 0].
    Matrix av = rng.matrix(dim_v, dim_v);
    Matrix block(dim_a, dim_a), inc(dim_a, dim_v);
    for (std::size_t r = 0; r < dim_v; ++r) {
      inc(r, r) = 1;
      for (std::size_t c = 0; c < dim_v; ++c) block(r, c) = av(r, c);
    }
    for (std::size_t r = 0; r < dim_a; ++r)
      for (std::size_t c = dim_v; c < dim_a; ++c) block(r, c) = rng.small();
    Matrix p = rng.invertible(dim_a);
    out.v = HomModule(dim_v, av);
    out.a = {HomModule(dim_a, p * block * homalg::inverse(p)), mul};
    out.f = p * inc;
    out.recipe = "block";
  } else if (recipe == 1) {
    Rational s = rng.small();
    Matrix sv = Matrix::identity(dim_v), sa = Matrix::identity(dim_a);
    for (std::size_t i = 0; i < dim_v; ++i) sv(i, i) = s;
    for (std::size_t i = 0; i < dim_a; ++i) sa(i, i) = s;
    out.v = HomModule(dim_v, sv);
    out.a = {HomModule(dim_a, sa), mul};
    out.f = rng.matrix(dim_a, dim_v);
    out.recipe = "scalar";
  } else {
    out.v = HomModule(dim_v, rng.matrix(dim_v, dim_v));
    out.a = {HomModule(dim_a, rng.matrix(dim_a, dim_a)), mul};
    out.f = Matrix(dim_a, dim_v);
    out.recipe = "zero";
  }
  return out;
}

oracle::Dense dense(const Matrix& m) {
  oracle::Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

oracle::Cube cube(const Bilinear& b) {
  oracle::Cube c(b.left_dim(), oracle::Dense(b.right_dim(), std::vector<Rational>(b.out_dim())));
  for (std::size_t i = 0; i < b.left_dim(); ++i)
    for (std::size_t j = 0; j < b.right_dim(); ++j)
      for (std::size_t k = 0; k < b.out_dim(); ++k) c[i][j][k] = b(i, j, k);
  return c;
}

oracle::NaiveAlgebra naive(const HomNonAsAlgebra& a) { return {a.dim(), dense(a.module.alpha), cube(a.mul)}; }

}  // namespace fixture
