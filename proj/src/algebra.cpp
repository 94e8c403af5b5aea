#include "homalg/algebra.hpp"

#include <sstream>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatch(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

void require_shape(const Bilinear& b, std::size_t l, std::size_t r, std::size_t o, const char* what) {
  if (b.left_dim() != l || b.right_dim() != r || b.out_dim() != o)
    throw DimensionMismatch(std::string(what) + " has the wrong shape");
}

void add_scaled(Vector& acc, const Rational& c, std::span<const Rational> v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) acc[k] += c * v[k];
}

Vector difference(std::span<const Rational> a, std::span<const Rational> b) {
  Vector d(a.begin(), a.end());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] -= b[k];
  return d;
}

void record(Violations& out, std::string axiom, std::vector<std::size_t> basis, std::span<const Rational> lhs,
            std::span<const Rational> rhs) {
  Vector d = difference(lhs, rhs);
  if (!is_zero(d)) out.push_back({std::move(axiom), std::move(basis), std::move(d)});
}

// Basis images cached once per check: products e_i e_j and α(e_i).
struct Tables {
  std::vector<Vector> prod;  // i * dim + j
  std::vector<Vector> alpha;
  std::size_t dim;

  Tables(const Bilinear& mul, const HomModule& m) : dim(m.dim) {
    prod.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) prod.push_back(mul.basis_product(i, j));
    for (std::size_t i = 0; i < dim; ++i) alpha.push_back(m.alpha.column(i));
  }
  const Vector& p(std::size_t i, std::size_t j) const { return prod[i * dim + j]; }
};

}  // namespace

// -- Bilinear ------------------------------------------------------------------

Bilinear::Bilinear(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim)
    : left_(left_dim), right_(right_dim), out_(out_dim), data_(left_dim * right_dim * out_dim) {}

Vector Bilinear::basis_product(std::size_t i, std::size_t j) const {
  Vector v(out_);
  for (std::size_t k = 0; k < out_; ++k) v[k] = data_[index(i, j, k)];
  return v;
}

Vector Bilinear::apply(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != left_ || y.size() != right_) throw DimensionMismatch("bilinear map argument size");
  Vector out(out_);
  for (std::size_t i = 0; i < left_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < right_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational c = x[i] * y[j];
      const Rational* row = &data_[index(i, j, 0)];
      for (std::size_t k = 0; k < out_; ++k)
        if (sgn(row[k]) != 0) out[k] += c * row[k];
    }
  }
  return out;
}

HomModule::HomModule(std::size_t d, Matrix a) : dim(d), alpha(std::move(a)) { require_square(alpha, dim, "alpha"); }

HomNonAsAlgebra::HomNonAsAlgebra(HomModule m, Bilinear b) : module(std::move(m)), mul(std::move(b)) {
  require_shape(mul, module.dim, module.dim, module.dim, "mul");
}

HomDialgebra::HomDialgebra(HomModule m, Bilinear l, Bilinear r)
    : module(std::move(m)), lmul(std::move(l)), rmul(std::move(r)) {
  require_shape(lmul, module.dim, module.dim, module.dim, "lmul");
  require_shape(rmul, module.dim, module.dim, module.dim, "rmul");
}

BimoduleData::BimoduleData(HomNonAsAlgebra a, HomModule m, Bilinear la, Bilinear ra, Matrix fm)
    : algebra(std::move(a)), module(std::move(m)), left_action(std::move(la)), right_action(std::move(ra)),
      f(std::move(fm)) {
  std::size_t da = algebra.dim(), dm = module.dim;
  require_shape(left_action, da, dm, dm, "left action");
  require_shape(right_action, dm, da, dm, "right action");
  if (f.rows() != da || f.cols() != dm) throw DimensionMismatch("f must map the module into the algebra");
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << "axiom " << v.axiom << " at (";
  for (std::size_t i = 0; i < v.basis.size(); ++i) os << (i ? "," : "") << v.basis[i];
  os << "): difference [";
  for (std::size_t i = 0; i < v.discrepancy.size(); ++i) os << (i ? ", " : "") << to_string(v.discrepancy[i]);
  os << "]";
  return os.str();
}

// -- checkers ------------------------------------------------------------------

Violations check_hom_associative(const HomNonAsAlgebra& a) {
  const std::size_t n = a.dim();
  Tables t(a.mul, a.module);
  Violations out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = a.multiply(t.alpha[i], t.p(j, k));
        Vector rhs = a.multiply(t.p(i, j), t.alpha[k]);
        record(out, "hom-assoc", {i, j, k}, lhs, rhs);
      }
  return out;
}

Violations check_hom_lie(const HomNonAsAlgebra& l) {
  const std::size_t n = l.dim();
  Tables t(l.mul, l.module);
  Violations out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector neg = t.p(j, i);
      for (auto& c : neg) c = -c;
      record(out, "skew", {i, j}, t.p(i, j), neg);
    }
  Vector zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector s = l.multiply(t.alpha[i], t.p(j, k));
        add_scaled(s, 1, l.multiply(t.alpha[k], t.p(i, j)));
        add_scaled(s, 1, l.multiply(t.alpha[j], t.p(k, i)));
        record(out, "hom-jacobi", {i, j, k}, s, zero);
      }
  return out;
}

Violations check_hom_leibniz(const HomNonAsAlgebra& l) {
  const std::size_t n = l.dim();
  Tables t(l.mul, l.module);
  Violations out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = l.multiply(t.p(i, j), t.alpha[k]);
        Vector rhs = l.multiply(t.p(i, k), t.alpha[j]);
        add_scaled(rhs, 1, l.multiply(t.alpha[i], t.p(j, k)));
        record(out, "hom-leibniz", {i, j, k}, lhs, rhs);
      }
  return out;
}

Violations check_hom_dialgebra(const HomDialgebra& d) {
  const std::size_t n = d.dim();
  Tables tl(d.lmul, d.module), tr(d.rmul, d.module);
  const auto& al = tl.alpha;
  auto L = [&](std::span<const Rational> x, std::span<const Rational> y) { return d.lmul.apply(x, y); };
  auto R = [&](std::span<const Rational> x, std::span<const Rational> y) { return d.rmul.apply(x, y); };
  Violations out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> b{i, j, k};
        Vector ll_a = L(tl.p(i, j), al[k]);  // (x⊣y)⊣α(z)
        Vector rl_a = L(tr.p(i, j), al[k]);  // (x⊢y)⊣α(z)
        Vector lr_a = R(tl.p(i, j), al[k]);  // (x⊣y)⊢α(z)
        Vector rr_a = R(tr.p(i, j), al[k]);  // (x⊢y)⊢α(z)
        Vector a_ll = L(al[i], tl.p(j, k));  // α(x)⊣(y⊣z)
        Vector a_lr = L(al[i], tr.p(j, k));  // α(x)⊣(y⊢z)
        Vector a_rl = R(al[i], tl.p(j, k));  // α(x)⊢(y⊣z)
        Vector a_rr = R(al[i], tr.p(j, k));  // α(x)⊢(y⊢z)
        record(out, "1", b, a_ll, ll_a);
        record(out, "2", b, ll_a, a_lr);
        record(out, "3", b, rl_a, a_rl);
        record(out, "4", b, lr_a, a_rr);
        record(out, "5", b, a_rr, rr_a);
      }
  return out;
}

Violations check_bimodule(const BimoduleData& bm) {
  const auto& A = bm.algebra;
  const std::size_t da = A.dim(), dm = bm.module.dim;
  Tables ta(A.mul, A.module);
  std::vector<Vector> am(dm);
  for (std::size_t m = 0; m < dm; ++m) am[m] = bm.module.alpha.column(m);
  auto left = [&](std::span<const Rational> a, std::span<const Rational> m) { return bm.left_action.apply(a, m); };
  auto right = [&](std::span<const Rational> m, std::span<const Rational> a) {
    return bm.right_action.apply(m, a);
  };
  Violations out;
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t y = 0; y < da; ++y)
      for (std::size_t m = 0; m < dm; ++m) {
        Vector ex = unit_vector(da, x), ey = unit_vector(da, y), em = unit_vector(dm, m);
        // α_A(x)(y m) = (x y) α_M(m)
        record(out, "bimodule-1", {x, y, m}, left(ta.alpha[x], left(ey, em)), left(ta.p(x, y), am[m]));
        // (m x) α_A(y) = α_M(m) (x y)
        record(out, "bimodule-2", {m, x, y}, right(right(em, ex), ta.alpha[y]), right(am[m], ta.p(x, y)));
        // α_A(x) (m y) = (x m) α_A(y)
        record(out, "bimodule-3", {x, m, y}, left(ta.alpha[x], right(em, ey)), right(left(ex, em), ta.alpha[y]));
      }
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t m = 0; m < dm; ++m) {
      Vector ea = unit_vector(da, a), em = unit_vector(dm, m);
      Vector fm = bm.f.column(m);
      record(out, "f-left", {a, m}, bm.f.apply(left(ea, em)), A.multiply(ea, fm));
      record(out, "f-right", {m, a}, bm.f.apply(right(em, ea)), A.multiply(fm, ea));
    }
  for (std::size_t m = 0; m < dm; ++m)
    record(out, "f-alpha", {m}, bm.f.apply(am[m]), A.alpha(bm.f.column(m)));
  return out;
}

Violations check_module_morphism(const Matrix& f, const HomModule& source, const HomModule& target) {
  if (f.rows() != target.dim || f.cols() != source.dim) throw DimensionMismatch("morphism matrix shape");
  Violations out;
  for (std::size_t i = 0; i < source.dim; ++i)
    record(out, "alpha", {i}, f.apply(source.alpha.column(i)), target.apply_alpha(f.column(i)));
  return out;
}

namespace {

void check_product(Violations& out, const char* id, const Matrix& f, const Bilinear& src, const Bilinear& tgt) {
  const std::size_t n = src.left_dim();
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = f.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      record(out, id, {i, j}, f.apply(src.basis_product(i, j)), tgt.apply(images[i], images[j]));
}

}  // namespace

Violations check_morphism(const Matrix& f, const HomNonAsAlgebra& source, const HomNonAsAlgebra& target) {
  Violations out = check_module_morphism(f, source.module, target.module);
  check_product(out, "mul", f, source.mul, target.mul);
  return out;
}

Violations check_morphism(const Matrix& f, const HomDialgebra& source, const HomDialgebra& target) {
  Violations out = check_module_morphism(f, source.module, target.module);
  check_product(out, "lmul", f, source.lmul, target.lmul);
  check_product(out, "rmul", f, source.rmul, target.rmul);
  return out;
}

// -- functors ------------------------------------------------------------------

HomNonAsAlgebra hlie(const HomNonAsAlgebra& a) {
  if (Violations v = check_hom_associative(a); !v.empty())
    throw HypothesisError("algebra is not Hom-associative", std::move(v));
  const std::size_t n = a.dim();
  Bilinear b(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) b(i, j, k) = a.mul(i, j, k) - a.mul(j, i, k);
  return {a.module, std::move(b)};
}

HomNonAsAlgebra hleib(const HomDialgebra& d) {
  if (Violations v = check_hom_dialgebra(d); !v.empty())
    throw HypothesisError("not a Hom-dialgebra", std::move(v));
  const std::size_t n = d.dim();
  Bilinear b(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) b(i, j, k) = d.lmul(i, j, k) - d.rmul(j, i, k);
  return {d.module, std::move(b)};
}

HomDialgebra dialgebra_from_associative(const HomNonAsAlgebra& a) {
  if (Violations v = check_hom_associative(a); !v.empty())
    throw HypothesisError("algebra is not Hom-associative", std::move(v));
  return {a.module, a.mul, a.mul};
}

HomDialgebra dialgebra_from_bimodule(const BimoduleData& b) {
  if (Violations v = check_bimodule(b); !v.empty())
    throw HypothesisError("bimodule conditions fail", std::move(v));
  const std::size_t n = b.module.dim;
  Bilinear l(n, n, n), r(n, n, n);
  std::vector<Vector> fcol(n);
  for (std::size_t m = 0; m < n; ++m) fcol[m] = b.f.column(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lv = b.right_action.apply(unit_vector(n, i), fcol[j]);
      Vector rv = b.left_action.apply(fcol[i], unit_vector(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        l(i, j, k) = lv[k];
        r(i, j, k) = rv[k];
      }
    }
  return {b.module, std::move(l), std::move(r)};
}

BimoduleData bimodule_from_morphism(const HomNonAsAlgebra& a, const HomNonAsAlgebra& b, const Matrix& g) {
  return bimodule_from_morphism(a, b, g, Matrix(a.dim(), b.dim()));
}

BimoduleData bimodule_from_morphism(const HomNonAsAlgebra& a, const HomNonAsAlgebra& b, const Matrix& g,
                                    const Matrix& f) {
  if (g.rows() != b.dim() || g.cols() != a.dim()) throw DimensionMismatch("g must map A into B");
  const std::size_t da = a.dim(), db = b.dim();
  Bilinear left(da, db, db), right(db, da, db);
  for (std::size_t x = 0; x < da; ++x) {
    Vector gx = g.column(x);
    for (std::size_t m = 0; m < db; ++m) {
      Vector em = unit_vector(db, m);
      Vector lv = b.multiply(gx, em), rv = b.multiply(em, gx);
      for (std::size_t k = 0; k < db; ++k) {
        left(x, m, k) = lv[k];
        right(m, x, k) = rv[k];
      }
    }
  }
  return {a, b.module, std::move(left), std::move(right), f};
}

Violations check_commuting_square(const HomNonAsAlgebra& a) {
  HomNonAsAlgebra lie = hlie(a);
  HomNonAsAlgebra leib = hleib(dialgebra_from_associative(a));
  Violations out;
  if (!(leib.module == lie.module)) out.push_back({"square-alpha", {}, {}});
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      record(out, "square", {i, j}, leib.mul.basis_product(i, j), lie.mul.basis_product(i, j));
  return out;
}

}  // namespace homalg
