#include "homalg/envelope.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

// Product sides available in each free algebra: one for F_HNAs, ⊣ and ⊢ for F̄.
template <class M>
struct Free;

template <>
struct Free<Monomial> {
  using E = Element;
  static constexpr Side sides[] = {Side::left};
  static Monomial product(const Monomial& a, const Monomial& b, Side) { return mu_F(a, b); }
  static E product(const E& a, const E& b, Side) { return mu_F(a, b); }
  static E alpha(const HomModule& v, const Monomial& m) { return alpha_F(v, m); }
  static E alpha(const HomModule& v, const E& e) { return alpha_F(v, e); }
  static std::vector<Monomial> window(std::size_t d, const Window& w) { return basis_window(d, w); }
};

template <>
struct Free<DiMonomial> {
  using E = DiElement;
  static constexpr Side sides[] = {Side::left, Side::right};
  static DiMonomial product(const DiMonomial& a, const DiMonomial& b, Side s) { return dimu_F(a, b, s); }
  static E product(const E& a, const E& b, Side s) { return dimu_F(a, b, s); }
  static E alpha(const HomModule& v, const DiMonomial& m) { return dialpha_F(v, m); }
  static E alpha(const HomModule& v, const E& e) { return dialpha_F(v, e); }
  static std::vector<DiMonomial> window(std::size_t d, const Window& w) { return di_basis_window(d, w); }
};

template <class M>
bool alpha_fits(const M& m, unsigned max_weight) {
  return m.arity() == 1 || m.total_weight() + 1 <= max_weight;
}

// Calls visit(i, j, k) for basis triples (a, b, c) such that both (ab)α(c)
// and α(a)(bc) lie in `padded`.
template <class M, class Visit>
void for_each_fitting_triple(const std::vector<M>& basis, const Window& padded, Visit visit) {
  const std::size_t n = basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    const M& a = basis[i];
    if (a.arity() + 2 > padded.N) break;  // ascending arity
    for (std::size_t j = 0; j < n; ++j) {
      const M& b = basis[j];
      if (a.arity() + b.arity() + 1 > padded.N) break;
      for (std::size_t k = 0; k < n; ++k) {
        const M& c = basis[k];
        if (a.arity() + b.arity() + c.arity() > padded.N) break;
        std::uint64_t w = a.total_weight() + b.total_weight() + c.total_weight();
        std::uint64_t left = w + (c.arity() >= 2 ? 1 : 0);
        std::uint64_t right = w + (a.arity() >= 2 ? 1 : 0);
        if (left > padded.W || right > padded.W) continue;
        visit(i, j, k);
      }
    }
  }
}

Element commutator_relation(const HomNonAsAlgebra& l, std::uint32_t i, std::uint32_t j) {
  const std::size_t d = l.dim();
  Element xi = Element::generator(d, i), xj = Element::generator(d, j);
  Element rel(d);
  for (std::uint32_t k = 0; k < d; ++k) rel.add_term(Monomial::generator(k), l.mul(i, j, k));
  rel -= mu_F(xi, xj) - mu_F(xj, xi);
  return rel;
}

std::vector<Element> associator_relations(const HomModule& v, const Window& padded) {
  std::vector<Element> out;
  auto basis = basis_window(v.dim, padded);
  for_each_fitting_triple(basis, padded, [&](std::size_t i, std::size_t j, std::size_t k) {
    Element a(v.dim, basis[i]), b(v.dim, basis[j]), c(v.dim, basis[k]);
    out.push_back(mu_F(mu_F(a, b), alpha_F(v, c)) - mu_F(alpha_F(v, a), mu_F(b, c)));
  });
  return out;
}

}  // namespace

std::vector<Element> fhas_ideal_generators(const HomModule& v, const Window& padded) {
  return associator_relations(v, padded);
}

std::vector<Element> hlie_ideal_generators(const HomNonAsAlgebra& l, const Window& padded) {
  if (Violations bad = check_hom_lie(l); !bad.empty()) throw HypothesisError("not a Hom-Lie algebra", std::move(bad));
  std::vector<Element> out = associator_relations(l.module, padded);
  if (padded.N >= 2)
    for (std::uint32_t i = 0; i < l.dim(); ++i)
      for (std::uint32_t j = 0; j < l.dim(); ++j) out.push_back(commutator_relation(l, i, j));
  return out;
}

std::vector<DiElement> hleib_ideal_generators(const HomNonAsAlgebra& l, const Window& padded) {
  if (Violations bad = check_hom_leibniz(l); !bad.empty())
    throw HypothesisError("not a Hom-Leibniz algebra", std::move(bad));
  const HomModule& v = l.module;
  const std::size_t d = v.dim;
  std::vector<DiElement> out;
  auto basis = di_basis_window(d, padded);
  constexpr Side L = Side::left, R = Side::right;
  for_each_fitting_triple(basis, padded, [&](std::size_t i, std::size_t j, std::size_t k) {
    DiElement x(d, basis[i]), y(d, basis[j]), z(d, basis[k]);
    DiElement ax = dialpha_F(v, x), az = dialpha_F(v, z);
    auto m = [](const DiElement& p, const DiElement& q, Side s) { return dimu_F(p, q, s); };
    out.push_back(m(m(x, y, L), az, L) - m(ax, m(y, z, L), L));
    out.push_back(m(m(x, y, L), az, L) - m(ax, m(y, z, R), L));
    out.push_back(m(m(x, y, R), az, L) - m(ax, m(y, z, L), R));
    out.push_back(m(ax, m(y, z, R), R) - m(m(x, y, L), az, R));
    out.push_back(m(ax, m(y, z, R), R) - m(m(x, y, R), az, R));
  });
  if (padded.N >= 2)
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j) {
        DiElement xi = DiElement::generator(d, i), xj = DiElement::generator(d, j);
        DiElement rel(d);
        for (std::uint32_t k = 0; k < d; ++k) rel.add_term(DiMonomial::generator(k), l.mul(i, j, k));
        rel -= dimu_F(xi, xj, L) - dimu_F(xj, xi, R);
        out.push_back(std::move(rel));
      }
  return out;
}

// -- closure -----------------------------------------------------------------------------

namespace {

template <class M>
struct WindowIndex {
  std::vector<M> basis;
  std::unordered_map<M, std::size_t, MonomialHash> index;

  explicit WindowIndex(std::vector<M> b) : basis(std::move(b)) {
    index.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  }

  std::ptrdiff_t find(const M& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
  }

  SparseVector coords(const BasicElement<M>& e) const {
    SparseVector v;
    v.reserve(e.size());
    for (const auto& [m, c] : e.terms()) {
      std::ptrdiff_t i = find(m);
      if (i < 0) throw InvalidArgument("element leaves the window: " + format(m));
      v.emplace_back(static_cast<std::size_t>(i), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }
};

std::vector<std::size_t> descending(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.rbegin(), p.rend(), std::size_t{0});
  return p;
}

// Excluded columns first, then kept ones; each group largest first.
std::vector<std::size_t> excluded_first(const std::vector<bool>& keep) {
  std::vector<std::size_t> p;
  p.reserve(keep.size());
  for (std::size_t c = keep.size(); c-- > 0;)
    if (!keep[c]) p.push_back(c);
  for (std::size_t c = keep.size(); c-- > 0;)
    if (keep[c]) p.push_back(c);
  return p;
}

void sort_sparse(SparseVector& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

// One family of operations sharing a domain: the span restricted to the
// domain is kept in its own echelon basis so the restriction can be read
// off the pivots.
struct Domain {
  std::vector<bool> keep;
  EchelonBasis span;
  std::size_t cursor = 0;  // rows of `span` already processed
  bool is_alpha = false;
  std::vector<std::pair<std::size_t, Side>> left_ops;  // multiplier column, side; result m * v
  std::vector<std::pair<std::size_t, Side>> right_ops;  // result v * m

  Domain(std::vector<bool> k) : keep(std::move(k)), span(keep.size(), excluded_first(keep)) {}
};

template <class M>
BasicIdealSpan<M> close(const HomModule& v, const std::vector<BasicElement<M>>& gens, const Window& padded,
                        ClosureOptions options) {
  using F = Free<M>;
  WindowIndex<M> win(F::window(v.dim, padded));
  const auto& basis = win.basis;
  const std::size_t n = basis.size();

  std::vector<SparseVector> start;
  for (const auto& g : gens) {
    if (g.generator_count() != v.dim) throw DimensionMismatch("generator over a different Hom-module");
    start.push_back(win.coords(g));
  }

  // Domains: multiplication by a monomial of arity a and weight w is defined
  // on arity ≤ N − a, weight ≤ W − w; α needs arity 1 or weight ≤ W − 1.
  std::vector<Domain> domains;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_box;
  for (std::size_t m = 0; m < n; ++m) {
    const M& mono = basis[m];
    if (mono.arity() >= padded.N) break;
    std::size_t max_a = padded.N - mono.arity();
    std::size_t max_w = padded.W - mono.total_weight();
    if (max_a == 1) max_w = 0;
    auto [it, fresh] = by_box.try_emplace({max_a, max_w}, domains.size());
    if (fresh) {
      std::vector<bool> keep(n);
      for (std::size_t c = 0; c < n; ++c)
        keep[c] = basis[c].arity() <= max_a && basis[c].total_weight() <= max_w;
      domains.emplace_back(std::move(keep));
    }
    for (Side s : F::sides) {
      domains[it->second].left_ops.emplace_back(m, s);
      domains[it->second].right_ops.emplace_back(m, s);
    }
  }
  {
    std::vector<bool> keep(n);
    for (std::size_t c = 0; c < n; ++c) keep[c] = alpha_fits(basis[c], padded.W);
    domains.emplace_back(std::move(keep));
    domains.back().is_alpha = true;
  }

  // Memoized column images.
  std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> product_cache;
  auto product_column = [&](std::size_t a, std::size_t b, Side s) {
    auto key = std::make_tuple(a, b, static_cast<int>(s));
    auto it = product_cache.find(key);
    if (it != product_cache.end()) return it->second;
    std::ptrdiff_t c = win.find(F::product(basis[a], basis[b], s));
    if (c < 0) throw std::logic_error("product left the window inside its domain");
    product_cache.emplace(key, static_cast<std::size_t>(c));
    return static_cast<std::size_t>(c);
  };
  std::vector<std::optional<SparseVector>> alpha_cache(n);
  auto alpha_image = [&](std::size_t c) -> const SparseVector& {
    if (!alpha_cache[c]) alpha_cache[c] = win.coords(F::alpha(v, basis[c]));
    return *alpha_cache[c];
  };

  EchelonBasis main(n, descending(n));
  auto add = [&](const SparseVector& x) {
    if (!main.insert(x)) return;
    for (Domain& d : domains) d.span.insert(x);
  };
  for (const auto& s : start) add(s);

  BasicIdealSpan<M> out;
  out.window = padded;
  out.saturated = true;
  while (true) {
    std::vector<std::pair<Domain*, SparseVector>> work;
    for (Domain& d : domains) {
      for (; d.cursor < d.span.rank(); ++d.cursor)
        if (d.keep[d.span.pivot_column(d.cursor)]) work.emplace_back(&d, d.span.row(d.cursor));
    }
    if (work.empty()) break;
    if (options.max_rounds && out.rounds >= *options.max_rounds) {
      out.saturated = false;
      break;
    }
    ++out.rounds;
    for (auto& [d, x] : work) {
      if (d->is_alpha) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [c, coef] : x)
          for (const auto& [c2, a] : alpha_image(c)) acc[c2] += coef * a;
        SparseVector y;
        for (auto& [c, val] : acc)
          if (sgn(val) != 0) y.emplace_back(c, val);
        add(y);
        continue;
      }
      for (const auto& [m, s] : d->left_ops) {
        SparseVector y;
        y.reserve(x.size());
        for (const auto& [c, coef] : x) y.emplace_back(product_column(m, c, s), coef);
        sort_sparse(y);
        add(y);
      }
      for (const auto& [m, s] : d->right_ops) {
        SparseVector y;
        y.reserve(x.size());
        for (const auto& [c, coef] : x) y.emplace_back(product_column(c, m, s), coef);
        sort_sparse(y);
        add(y);
      }
    }
  }
  out.basis = basis;
  out.rows = main.reduced_rows();
  return out;
}

}  // namespace

IdealSpan ideal_closure(const HomModule& v, const std::vector<Element>& gens, const Window& padded,
                        ClosureOptions options) {
  return close<Monomial>(v, gens, padded, options);
}

DiIdealSpan ideal_closure(const HomModule& v, const std::vector<DiElement>& gens, const Window& padded,
                          ClosureOptions options) {
  return close<DiMonomial>(v, gens, padded, options);
}

// -- quotients ---------------------------------------------------------------------------------

template <class M>
BasicQuotient<M>::BasicQuotient(HomModule v, Window window, const BasicIdealSpan<M>& ideal)
    : v_(std::move(v)), window_(window) {
  if (ideal.window.N < window.N || ideal.window.W < window.W)
    throw InvalidArgument("ideal was closed in a window smaller than the quotient window");
  basis_ = Free<M>::window(v_.dim, Window(window.N, window.W));
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  padded_dim_ = ideal.basis.size();
  padded_rank_ = ideal.rank();
  saturated_ = ideal.saturated;

  const std::size_t n = basis_.size();
  std::vector<bool> keep(padded_dim_);
  std::vector<std::size_t> to_window(padded_dim_, 0);
  for (std::size_t c = 0; c < padded_dim_; ++c) {
    const M& m = ideal.basis[c];
    keep[c] = window.contains(m.arity(), m.total_weight());
    if (keep[c]) {
      auto it = index_.find(m);
      if (it == index_.end()) throw InvalidArgument("ideal basis does not match the Hom-module");
      to_window[c] = it->second;
    }
  }
  EchelonBasis inside(n, descending(n));
  for (const SparseVector& r : intersect_coordinate_subspace(ideal.rows, padded_dim_, keep)) {
    SparseVector w;
    w.reserve(r.size());
    for (const auto& [c, x] : r) w.emplace_back(to_window[c], x);
    sort_sparse(w);
    inside.insert(w);
  }
  relations_ = inside.reduced_rows();
  pivot_row_.assign(n, -1);
  for (std::size_t r = 0; r < relations_.size(); ++r)
    pivot_row_[relations_[r].back().first] = static_cast<std::ptrdiff_t>(r);  // pivot = largest column
  standard_pos_.assign(n, -1);
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row_[c] < 0) {
      standard_pos_[c] = static_cast<std::ptrdiff_t>(standard_.size());
      standard_.push_back(basis_[c]);
      standard_cols_.push_back(c);
    }
}

template <class M>
std::optional<std::size_t> BasicQuotient<M>::window_index(const M& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class M>
SparseVector BasicQuotient<M>::reduce_window(const SparseVector& window_coords) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [c, x] : window_coords) {
    if (c >= basis_.size()) throw DimensionMismatch("window coordinate out of range");
    if (sgn(x) == 0) continue;
    std::ptrdiff_t r = pivot_row_[c];
    if (r < 0) {
      acc[static_cast<std::size_t>(standard_pos_[c])] += x;
      continue;
    }
    // e_c ≡ e_c − row = −(row without its pivot); rows are fully reduced.
    for (const auto& [c2, y] : relations_[static_cast<std::size_t>(r)])
      if (c2 != c) acc[static_cast<std::size_t>(standard_pos_[c2])] -= x * y;
  }
  SparseVector out;
  for (auto& [p, x] : acc)
    if (sgn(x) != 0) out.emplace_back(p, x);
  return out;
}

template <class M>
SparseVector BasicQuotient<M>::reduce(const ElementT& e) const {
  if (e.generator_count() != v_.dim) throw DimensionMismatch("element over a different Hom-module");
  SparseVector w;
  for (const auto& [m, c] : e.terms()) {
    auto i = window_index(m);
    if (!i) throw InvalidArgument("element leaves the window: " + format(m));
    w.emplace_back(*i, c);
  }
  sort_sparse(w);
  return reduce_window(w);
}

template <class M>
typename BasicQuotient<M>::ElementT BasicQuotient<M>::lift(const SparseVector& coords) const {
  ElementT e(v_.dim);
  for (const auto& [p, x] : coords) {
    if (p >= standard_.size()) throw DimensionMismatch("standard coordinate out of range");
    e.add_term(standard_[p], x);
  }
  return e;
}

template <class M>
std::optional<SparseVector> BasicQuotient<M>::product(std::size_t p, std::size_t q, Side side) const {
  const M& a = standard_.at(p);
  const M& b = standard_.at(q);
  if (!window_.contains(a.arity() + b.arity(), a.total_weight() + b.total_weight())) return std::nullopt;
  auto i = window_index(Free<M>::product(a, b, side));
  if (!i) throw std::logic_error("product missing from window index");
  return reduce_window({{*i, Rational(1)}});
}

template <class M>
std::optional<SparseVector> BasicQuotient<M>::alpha(std::size_t p) const {
  const M& a = standard_.at(p);
  if (!alpha_fits(a, window_.W)) return std::nullopt;
  return reduce(Free<M>::alpha(v_, a));
}

template <class M>
std::vector<FiltrationRow> BasicQuotient<M>::filtration() const {
  std::vector<FiltrationRow> rows;
  const std::size_t n = basis_.size();
  for (std::size_t a = 1; a <= window_.N; ++a)
    for (std::size_t w = 0; w <= window_.W; ++w) {
      if (a == 1 && w > 0) break;
      std::vector<bool> keep(n);
      std::size_t count = 0;
      for (std::size_t c = 0; c < n; ++c) {
        keep[c] = basis_[c].arity() <= a && basis_[c].total_weight() <= w;
        count += keep[c];
      }
      std::size_t rank = intersect_coordinate_subspace(relations_, n, keep).size();
      rows.push_back({a, w, count, rank, count - rank});
    }
  return rows;
}

template class BasicQuotient<Monomial>;
template class BasicQuotient<DiMonomial>;

QuotientPresentation u_hlie(const HomNonAsAlgebra& l, const Window& w, ClosureOptions options) {
  auto gens = hlie_ideal_generators(l, w.padded());
  return {l.module, w, ideal_closure(l.module, gens, w.padded(), options)};
}

QuotientPresentation f_has(const HomModule& v, const Window& w, ClosureOptions options) {
  auto gens = fhas_ideal_generators(v, w.padded());
  return {v, w, ideal_closure(v, gens, w.padded(), options)};
}

DiQuotientPresentation u_hleib(const HomNonAsAlgebra& l, const Window& w, ClosureOptions options) {
  auto gens = hleib_ideal_generators(l, w.padded());
  return {l.module, w, ideal_closure(l.module, gens, w.padded(), options)};
}

namespace {

template <class M>
Matrix unit_map(const BasicQuotient<M>& q) {
  const std::size_t d = q.module().dim;
  Matrix j(q.dim(), d);
  for (std::uint32_t i = 0; i < d; ++i)
    for (const auto& [p, x] : q.reduce(BasicElement<M>::generator(d, i))) j(p, i) = x;
  return j;
}

}  // namespace

Matrix unit_map_j(const QuotientPresentation& q) { return unit_map(q); }
Matrix unit_map_j(const DiQuotientPresentation& q) { return unit_map(q); }

// -- quotient axioms ------------------------------------------------------------------------------

namespace {

// A quotient element together with bounds on the arity and weight of every
// free monomial that went into it. While the bounds stay inside the window,
// the difference between the free value and its standard lift is an ideal
// element that the window still sees, so the table arithmetic is exact.
struct Certified {
  SparseVector coords;
  std::size_t max_arity = 0;
  std::uint64_t max_weight = 0;
};

template <class M>
class Evaluator {
 public:
  explicit Evaluator(const BasicQuotient<M>& q) : q_(q) {}

  Certified standard(std::size_t p) const {
    const M& m = q_.standard_monomials()[p];
    return {{{p, Rational(1)}}, m.arity(), m.total_weight()};
  }

  std::optional<Certified> mul(const Certified& x, const Certified& y, Side side) const {
    std::size_t a = x.max_arity + y.max_arity;
    std::uint64_t w = x.max_weight + y.max_weight;
    if (!q_.window().contains(a, w)) return std::nullopt;
    std::map<std::size_t, Rational> acc;
    for (const auto& [p, cx] : x.coords)
      for (const auto& [r, cy] : y.coords) {
        auto pr = q_.product(p, r, side);
        if (!pr) throw std::logic_error("certified product left the window");
        for (const auto& [s, c] : *pr) acc[s] += cx * cy * c;
      }
    return finish(acc, a, w);
  }

  std::optional<Certified> alpha(const Certified& x) const {
    if (x.max_arity >= 2 && x.max_weight + 1 > q_.window().W) return std::nullopt;
    std::map<std::size_t, Rational> acc;
    for (const auto& [p, cx] : x.coords) {
      auto im = q_.alpha(p);
      if (!im) throw std::logic_error("certified alpha left the window");
      for (const auto& [s, c] : *im) acc[s] += cx * c;
    }
    return finish(acc, x.max_arity, x.max_arity >= 2 ? x.max_weight + 1 : 0);
  }

 private:
  Certified finish(std::map<std::size_t, Rational>& acc, std::size_t a, std::uint64_t w) const {
    Certified out{{}, a, w};
    for (auto& [s, c] : acc) {
      if (sgn(c) == 0) continue;
      out.coords.emplace_back(s, c);
      const M& m = q_.standard_monomials()[s];
      out.max_arity = std::max(out.max_arity, m.arity());
      out.max_weight = std::max(out.max_weight, m.total_weight());
    }
    return out;
  }

  const BasicQuotient<M>& q_;
};

Vector dense(const SparseVector& v, std::size_t n) { return to_dense(v, n); }

template <class M>
QuotientAxiomReport check_axioms(const BasicQuotient<M>& q) {
  QuotientAxiomReport report;
  Evaluator<M> ev(q);
  const std::size_t n = q.dim();
  const auto& std_m = q.standard_monomials();
  const std::size_t N = q.window().N;
  std::vector<std::optional<Certified>> alphas(n);
  for (std::size_t p = 0; p < n; ++p) alphas[p] = ev.alpha(ev.standard(p));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (std_m[i].arity() + std_m[j].arity() + std_m[k].arity() > N) continue;
        Certified x = ev.standard(i), y = ev.standard(j), z = ev.standard(k);
        const auto& ax = alphas[i];
        const auto& az = alphas[k];
        if (!ax || !az) {
          ++report.skipped;
          continue;
        }
        // Left-associated terms (x * y) * α(z) and right-associated α(x) * (y * z).
        auto left = [&](Side inner, Side outer) -> std::optional<Certified> {
          auto xy = ev.mul(x, y, inner);
          if (!xy) return std::nullopt;
          return ev.mul(*xy, *az, outer);
        };
        auto right = [&](Side inner, Side outer) -> std::optional<Certified> {
          auto yz = ev.mul(y, z, inner);
          if (!yz) return std::nullopt;
          return ev.mul(*ax, *yz, outer);
        };
        struct Axiom {
          const char* id;
          std::optional<Certified> lhs, rhs;
        };
        std::vector<Axiom> axioms;
        constexpr Side L = Side::left, R = Side::right;
        if constexpr (BasicQuotient<M>::is_dialgebra) {
          axioms.push_back({"1", right(L, L), left(L, L)});
          axioms.push_back({"2", left(L, L), right(R, L)});
          axioms.push_back({"3", left(R, L), right(L, R)});
          axioms.push_back({"4", left(L, R), right(R, R)});
          axioms.push_back({"5", right(R, R), left(R, R)});
        } else {
          axioms.push_back({"hom-assoc", right(L, L), left(L, L)});
        }
        bool all = true;
        for (const auto& a : axioms) all = all && a.lhs && a.rhs;
        if (!all) {
          ++report.skipped;
          continue;
        }
        ++report.checked;
        for (const auto& a : axioms) {
          Vector l = dense(a.lhs->coords, n), r = dense(a.rhs->coords, n);
          Vector d(n);
          for (std::size_t t = 0; t < n; ++t) d[t] = l[t] - r[t];
          if (!is_zero(d)) report.violations.push_back({a.id, {i, j, k}, std::move(d)});
        }
      }
  return report;
}

}  // namespace

QuotientAxiomReport check_quotient_axioms(const QuotientPresentation& q) { return check_axioms(q); }
QuotientAxiomReport check_quotient_axioms(const DiQuotientPresentation& q) { return check_axioms(q); }

// -- adjunction instances ------------------------------------------------------------------------

namespace {

void expect_equal(Violations& out, const char* id, std::vector<std::size_t> where, const Vector& a, const Vector& b) {
  Vector d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) d[k] = a[k] - b[k];
  if (!is_zero(d)) out.push_back({id, std::move(where), std::move(d)});
}

Vector combine(const std::vector<Vector>& images, const SparseVector& coords, std::size_t dim) {
  Vector out(dim);
  for (const auto& [p, c] : coords)
    for (std::size_t k = 0; k < dim; ++k)
      if (sgn(images[p][k]) != 0) out[k] += c * images[p][k];
  return out;
}

template <class M, class Target, class G>
MorphismReport verify(const HomNonAsAlgebra& l, const Target& target, const Matrix& f, const Window& w,
                      const std::vector<BasicElement<M>>& gens, const G& g) {
  using F = Free<M>;
  MorphismReport report;
  const std::size_t da = target.dim();
  auto ideal = ideal_closure(l.module, gens, w.padded());
  BasicQuotient<M> q(l.module, w, ideal);
  report.quotient_dim = q.dim();

  for (std::size_t i = 0; i < gens.size(); ++i) {
    ++report.generators_checked;
    Vector img = g(gens[i]);
    if (!is_zero(img)) report.violations.push_back({"g-kills-generator", {i}, std::move(img)});
  }
  std::vector<Vector> padded_images;
  padded_images.reserve(ideal.basis.size());
  for (const auto& m : ideal.basis) padded_images.push_back(g(m));
  for (std::size_t r = 0; r < ideal.rows.size(); ++r) {
    ++report.ideal_rows_checked;
    Vector img = combine(padded_images, ideal.rows[r], da);
    if (!is_zero(img)) report.violations.push_back({"g-kills-ideal", {r}, std::move(img)});
  }

  const std::size_t n = q.dim();
  std::vector<Vector> h_cols(n);
  report.h = Matrix(da, n);
  for (std::size_t p = 0; p < n; ++p) {
    h_cols[p] = g(q.standard_monomials()[p]);
    for (std::size_t k = 0; k < da; ++k) report.h(k, p) = h_cols[p][k];
  }

  Matrix j = unit_map(q);
  for (std::size_t i = 0; i < l.dim(); ++i)
    expect_equal(report.violations, "h-j", {i}, report.h.apply(j.column(i)), f.column(i));

  for (std::size_t p = 0; p < n; ++p) {
    if (auto a = q.alpha(p)) {
      ++report.table_entries_checked;
      expect_equal(report.violations, "h-alpha", {p}, combine(h_cols, *a, da), target.alpha(h_cols[p]));
    }
    for (std::size_t r = 0; r < n; ++r)
      for (Side s : F::sides) {
        auto pr = q.product(p, r, s);
        if (!pr) continue;
        ++report.table_entries_checked;
        Vector direct;
        if constexpr (std::is_same_v<Target, HomDialgebra>) {
          direct = (s == Side::left ? target.lmul : target.rmul).apply(h_cols[p], h_cols[r]);
        } else {
          direct = target.multiply(h_cols[p], h_cols[r]);
        }
        expect_equal(report.violations, s == Side::left ? "h-mul" : "h-rmul", {p, r}, combine(h_cols, *pr, da),
                     direct);
      }
  }
  return report;
}

}  // namespace

MorphismReport induced_morphism_check(const HomNonAsAlgebra& l, const HomNonAsAlgebra& a, const Matrix& f,
                                      const Window& w) {
  HomNonAsAlgebra lie = hlie(a);
  if (Violations bad = check_morphism(f, l, lie); !bad.empty())
    throw HypothesisError("map is not a Hom-Lie morphism into the commutator algebra", std::move(bad));
  auto gens = hlie_ideal_generators(l, w.padded());
  UniversalMap g(l.module, a, f);
  return verify<Monomial>(l, a, f, w, gens, g);
}

MorphismReport induced_morphism_check(const HomNonAsAlgebra& l, const HomDialgebra& d, const Matrix& f,
                                      const Window& w) {
  HomNonAsAlgebra leib = hleib(d);
  if (Violations bad = check_morphism(f, l, leib); !bad.empty())
    throw HypothesisError("map is not a Hom-Leibniz morphism into the bracket algebra", std::move(bad));
  auto gens = hleib_ideal_generators(l, w.padded());
  DiUniversalMap g(l.module, d, f);
  return verify<DiMonomial>(l, d, f, w, gens, g);
}

}  // namespace homalg
