#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

Integer catalan_recurrence(unsigned n) {
  std::vector<Integer> c(n + 1);
  c[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    c[m] = 0;
    for (unsigned i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  }
  return c[n];
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t bareiss_rank(const Dense& rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size(), n = rows[0].size();
  std::vector<std::vector<Integer>> a(m, std::vector<Integer>(n));
  for (std::size_t i = 0; i < m; ++i) {
    Integer l = 1;
    for (const auto& x : rows[i]) l = lcm(l, Integer(x.get_den()));
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j].get_num() * (l / rows[i][j].get_den());
  }
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t p = rank;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer t = a[i][j] * a[rank][c] - a[i][c] * a[rank][j];
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (r != 0) throw std::logic_error("Bareiss division was not exact");
        a[i][j] = q;
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

bool in_row_space(const Dense& rows, const std::vector<Rational>& v) {
  Dense ext = rows;
  ext.push_back(v);
  return bareiss_rank(ext) == bareiss_rank(rows);
}

Dense row_basis(const Dense& rows, std::size_t cols) {
  Dense a = rows;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

namespace {

// Basis of {c : c^T K = 0} for K with `rows` rows.
Dense left_null_space(const Dense& k, std::size_t rows, std::size_t cols) {
  // Solve K^T c = 0.
  Dense kt(cols, std::vector<Rational>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) kt[j][i] = k[i][j];
  Dense red = row_basis(kt, rows);
  std::vector<std::ptrdiff_t> pivot_of(rows, -1);
  for (std::size_t r = 0; r < red.size(); ++r)
    for (std::size_t c = 0; c < rows; ++c)
      if (red[r][c] != 0) {
        pivot_of[c] = static_cast<std::ptrdiff_t>(r);
        break;
      }
  Dense out;
  for (std::size_t free = 0; free < rows; ++free) {
    if (pivot_of[free] >= 0) continue;
    std::vector<Rational> v(rows);
    v[free] = 1;
    for (std::size_t c = 0; c < rows; ++c)
      if (pivot_of[c] >= 0) v[c] = -red[static_cast<std::size_t>(pivot_of[c])][free];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Dense restrict_rows(const Dense& basis, const std::vector<std::size_t>& zero_cols, std::size_t cols) {
  if (basis.empty()) return {};
  if (zero_cols.empty()) return basis;
  Dense k(basis.size(), std::vector<Rational>(zero_cols.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < zero_cols.size(); ++j) k[i][j] = basis[i][zero_cols[j]];
  Dense out;
  for (const auto& c : left_null_space(k, basis.size(), zero_cols.size())) {
    std::vector<Rational> v(cols);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (basis[i][j] != 0) v[j] += c[i] * basis[i][j];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// -- naive checks ------------------------------------------------------------------

std::vector<Rational> naive_mul(const Cube& c, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t n = x.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * c[i][j][k];
  return out;
}

std::vector<Rational> naive_apply(const Dense& m, const std::vector<Rational>& x) {
  std::vector<Rational> out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += m[r][c] * x[c];
  return out;
}

namespace {

std::vector<Rational> e(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i] = 1;
  return v;
}

std::vector<Rational> sub(std::vector<Rational> a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

std::vector<Rational> add(std::vector<Rational> a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool nonzero(const std::vector<Rational>& v) {
  return std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
}

}  // namespace

Failures naive_hom_assoc(const NaiveAlgebra& a) {
  Failures f;
  const std::size_t n = a.dim;
  auto M = [&](const auto& x, const auto& y) { return naive_mul(a.mul, x, y); };
  auto A = [&](const auto& x) { return naive_apply(a.alpha, x); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto x = e(n, i), y = e(n, j), z = e(n, k);
        if (nonzero(sub(M(A(x), M(y, z)), M(M(x, y), A(z))))) f.insert({"hom-assoc", i, j, k});
      }
  return f;
}

Failures naive_hom_lie(const NaiveAlgebra& a) {
  Failures f;
  const std::size_t n = a.dim;
  auto M = [&](const auto& x, const auto& y) { return naive_mul(a.mul, x, y); };
  auto A = [&](const auto& x) { return naive_apply(a.alpha, x); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (nonzero(add(M(e(n, i), e(n, j)), M(e(n, j), e(n, i))))) f.insert({"skew", i, j, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto x = e(n, i), y = e(n, j), z = e(n, k);
        auto s = add(add(M(A(x), M(y, z)), M(A(z), M(x, y))), M(A(y), M(z, x)));
        if (nonzero(s)) f.insert({"hom-jacobi", i, j, k});
      }
  return f;
}

Failures naive_hom_leibniz(const NaiveAlgebra& a) {
  Failures f;
  const std::size_t n = a.dim;
  auto M = [&](const auto& x, const auto& y) { return naive_mul(a.mul, x, y); };
  auto A = [&](const auto& x) { return naive_apply(a.alpha, x); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto x = e(n, i), y = e(n, j), z = e(n, k);
        auto d = sub(sub(M(M(x, y), A(z)), M(M(x, z), A(y))), M(A(x), M(y, z)));
        if (nonzero(d)) f.insert({"hom-leibniz", i, j, k});
      }
  return f;
}

Failures naive_hom_dialgebra(const Dense& alpha, const Cube& l, const Cube& r) {
  Failures f;
  const std::size_t n = alpha.size();
  auto L = [&](const auto& x, const auto& y) { return naive_mul(l, x, y); };
  auto R = [&](const auto& x, const auto& y) { return naive_mul(r, x, y); };
  auto A = [&](const auto& x) { return naive_apply(alpha, x); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto x = e(n, i), y = e(n, j), z = e(n, k);
        if (nonzero(sub(L(A(x), L(y, z)), L(L(x, y), A(z))))) f.insert({"1", i, j, k});
        if (nonzero(sub(L(L(x, y), A(z)), L(A(x), R(y, z))))) f.insert({"2", i, j, k});
        if (nonzero(sub(L(R(x, y), A(z)), R(A(x), L(y, z))))) f.insert({"3", i, j, k});
        if (nonzero(sub(R(L(x, y), A(z)), R(A(x), R(y, z))))) f.insert({"4", i, j, k});
        if (nonzero(sub(R(A(x), R(y, z)), R(R(x, y), A(z))))) f.insert({"5", i, j, k});
      }
  return f;
}

std::vector<Rational> twelve_term_leibniz(const Dense& alpha, const Cube& l, const Cube& r, std::size_t i,
                                          std::size_t j, std::size_t k) {
  const std::size_t n = alpha.size();
  auto L = [&](const auto& x, const auto& y) { return naive_mul(l, x, y); };
  auto R = [&](const auto& x, const auto& y) { return naive_mul(r, x, y); };
  auto A = [&](const auto& x) { return naive_apply(alpha, x); };
  auto x = e(n, i), y = e(n, j), z = e(n, k);
  auto ax = A(x), ay = A(y), az = A(z);
  std::vector<Rational> s(n);
  auto plus = [&](const std::vector<Rational>& v) { s = add(s, v); };
  auto minus = [&](const std::vector<Rational>& v) { s = sub(s, v); };
  // [[x,y],αz]
  plus(L(L(x, y), az));
  minus(L(R(y, x), az));
  minus(R(az, L(x, y)));
  plus(R(az, R(y, x)));
  // −[[x,z],αy]
  minus(L(L(x, z), ay));
  plus(L(R(z, x), ay));
  plus(R(ay, L(x, z)));
  minus(R(ay, R(z, x)));
  // −[αx,[y,z]]
  minus(L(ax, L(y, z)));
  plus(L(ax, R(z, y)));
  plus(R(L(y, z), ax));
  minus(R(R(z, y), ax));
  return s;
}

// -- brute-force envelope ---------------------------------------------------------------------
//
// Monomials are identified by their string spelling. After the window is
// listed, products and α are tabulated by looking the spelled result up, and
// the ideal is grown by plain elimination until a full pass adds nothing.

namespace {

using Sparse = std::map<std::size_t, Rational>;

struct Space {
  std::vector<std::string> names;
  std::vector<unsigned> arity, weight;
  std::map<std::string, std::size_t> index;
};

struct Builder {
  std::size_t dim;
  std::vector<char> ops;  // '.' or '<' '>'
  std::map<std::pair<unsigned, unsigned>, std::vector<std::string>> memo;

  // All monomials of arity n and total weight exactly w.
  const std::vector<std::string>& exact(unsigned n, unsigned w) {
    auto key = std::make_pair(n, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::string> out;
    if (n == 1) {
      if (w == 0)
        for (std::size_t i = 0; i < dim; ++i) out.push_back("x" + std::to_string(i));
    } else {
      for (unsigned k = 1; k < n; ++k)
        for (unsigned r = 0; r <= w; ++r)
          for (unsigned w1 = 0; w1 + r <= w; ++w1) {
            auto left = exact(k, w1);
            auto right = exact(n - k, w - r - w1);
            for (const auto& a : left)
              for (const auto& b : right)
                for (char op : ops) out.push_back("[" + a + op + b + "]" + std::to_string(r));
          }
    }
    return memo[key] = out;
  }

  Space window(unsigned N, unsigned W) {
    Space s;
    for (unsigned n = 1; n <= N; ++n)
      for (unsigned w = 0; w <= W; ++w)
        for (const auto& m : exact(n, w)) {
          s.index[m] = s.names.size();
          s.names.push_back(m);
          s.arity.push_back(n);
          s.weight.push_back(w);
        }
    return s;
  }
};

void clean(Sparse& v) {
  for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
}

// Product and α tables over window indices; -1 when the result leaves.
struct Tables {
  const Space* sp;
  std::vector<char> ops;
  std::vector<std::vector<std::vector<std::ptrdiff_t>>> mul;  // [op][a][b]
  std::vector<std::ptrdiff_t> shifted;                       // α on products
  std::size_t dim;
  Dense alpha;

  Tables(const Space& s, std::vector<char> o, std::size_t d, Dense a)
      : sp(&s), ops(std::move(o)), dim(d), alpha(std::move(a)) {
    const std::size_t n = s.names.size();
    mul.assign(ops.size(), std::vector<std::vector<std::ptrdiff_t>>(n, std::vector<std::ptrdiff_t>(n, -1)));
    for (std::size_t k = 0; k < ops.size(); ++k)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          auto it = s.index.find("[" + s.names[a] + ops[k] + s.names[b] + "]0");
          if (it != s.index.end()) mul[k][a][b] = static_cast<std::ptrdiff_t>(it->second);
        }
    shifted.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
      const std::string& m = s.names[a];
      if (m[0] == 'x') continue;
      std::size_t close = m.rfind(']');
      unsigned w = static_cast<unsigned>(std::stoul(m.substr(close + 1)));
      auto it = s.index.find(m.substr(0, close + 1) + std::to_string(w + 1));
      if (it != s.index.end()) shifted[a] = static_cast<std::ptrdiff_t>(it->second);
    }
  }

  // Throws when the product leaves the window: callers only ask for fitting ones.
  Sparse product(const Sparse& x, const Sparse& y, std::size_t op) const {
    Sparse out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) {
        std::ptrdiff_t m = mul[op][a][b];
        if (m < 0) throw std::logic_error("oracle product left the window");
        out[static_cast<std::size_t>(m)] += ca * cb;
      }
    clean(out);
    return out;
  }

  Sparse alpha_of(const Sparse& x) const {
    Sparse out;
    for (const auto& [a, c] : x) {
      const std::string& m = sp->names[a];
      if (m[0] == 'x') {
        std::size_t i = std::stoul(m.substr(1));
        for (std::size_t j = 0; j < dim; ++j)
          if (alpha[j][i] != 0) out[sp->index.at("x" + std::to_string(j))] += c * alpha[j][i];
      } else {
        if (shifted[a] < 0) throw std::logic_error("oracle alpha left the window");
        out[static_cast<std::size_t>(shifted[a])] += c;
      }
    }
    clean(out);
    return out;
  }
};

Sparse unit(std::size_t i) { return {{i, Rational(1)}}; }

Sparse diff(Sparse a, const Sparse& b) {
  for (const auto& [m, c] : b) a[m] -= c;
  clean(a);
  return a;
}

std::vector<Sparse> generators(const EnvelopeOracle& o, const Space& sp, const Tables& t, unsigned N, unsigned W) {
  std::vector<Sparse> out;
  const bool di = o.kind == EnvelopeOracle::Kind::hleib;
  const std::size_t n = sp.names.size();
  // A triple fits when both (ab)α(c) and α(a)(bc) stay inside (N, W).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (sp.arity[a] + sp.arity[b] >= N) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (sp.arity[a] + sp.arity[b] + sp.arity[c] > N) continue;
        unsigned w = sp.weight[a] + sp.weight[b] + sp.weight[c];
        if (w + (sp.arity[c] >= 2) > W || w + (sp.arity[a] >= 2) > W) continue;
        Sparse x = unit(a), y = unit(b), z = unit(c);
        Sparse ax = t.alpha_of(x), az = t.alpha_of(z);
        auto m = [&](const Sparse& p, const Sparse& q, std::size_t op) { return t.product(p, q, op); };
        if (!di) {
          out.push_back(diff(m(m(x, y, 0), az, 0), m(ax, m(y, z, 0), 0)));
        } else {
          const std::size_t L = 0, R = 1;
          out.push_back(diff(m(m(x, y, L), az, L), m(ax, m(y, z, L), L)));
          out.push_back(diff(m(m(x, y, L), az, L), m(ax, m(y, z, R), L)));
          out.push_back(diff(m(m(x, y, R), az, L), m(ax, m(y, z, L), R)));
          out.push_back(diff(m(ax, m(y, z, R), R), m(m(x, y, L), az, R)));
          out.push_back(diff(m(ax, m(y, z, R), R), m(m(x, y, R), az, R)));
        }
      }
    }
  if (o.kind != EnvelopeOracle::Kind::fhas && N >= 2)
    for (std::size_t i = 0; i < o.dim; ++i)
      for (std::size_t j = 0; j < o.dim; ++j) {
        Sparse rel;
        for (std::size_t k = 0; k < o.dim; ++k) rel[sp.index.at("x" + std::to_string(k))] += o.bracket[i][j][k];
        clean(rel);
        Sparse xi = unit(sp.index.at("x" + std::to_string(i))), xj = unit(sp.index.at("x" + std::to_string(j)));
        Sparse comm = di ? diff(t.product(xi, xj, 0), t.product(xj, xi, 1))
                         : diff(t.product(xi, xj, 0), t.product(xj, xi, 0));
        out.push_back(diff(rel, comm));
      }
  return out;
}

// Row echelon span; the pivot of a row is its smallest column.
struct Span {
  std::map<std::size_t, Sparse> rows;

  // Returns true when v was new.
  bool insert(Sparse v) {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = rows.find(it->first);
      if (p == rows.end()) {
        ++it;
        continue;
      }
      std::size_t c = it->first;
      Rational f = it->second;
      for (const auto& [col, val] : p->second) v[col] -= f * val;
      clean(v);
      it = v.upper_bound(c);
    }
    if (v.empty()) return false;
    Rational lead = v.begin()->second;
    for (auto& [col, val] : v) val /= lead;
    rows[v.begin()->first] = std::move(v);
    return true;
  }
};

// Span ∩ {v : v_c = 0 for excluded c}, by eliminating on excluded columns only.
std::vector<Sparse> restrict_span(const Span& s, const std::vector<bool>& excluded) {
  std::map<std::size_t, Sparse> zpivots;
  std::vector<Sparse> out;
  for (const auto& [pc, row] : s.rows) {
    Sparse v = row;
    while (true) {
      auto it = std::find_if(v.begin(), v.end(), [&](const auto& e) { return excluded[e.first] && zpivots.count(e.first); });
      if (it == v.end()) break;
      std::size_t c = it->first;
      Rational f = it->second;
      const Sparse& p = zpivots.at(c);
      Rational pf = p.at(c);
      for (const auto& [col, val] : p) v[col] -= f / pf * val;
      clean(v);
    }
    auto z = std::find_if(v.begin(), v.end(), [&](const auto& e) { return excluded[e.first]; });
    if (z == v.end()) out.push_back(std::move(v));
    else {
      std::size_t c = z->first;
      zpivots[c] = std::move(v);
    }
  }
  return out;
}

}  // namespace

std::size_t EnvelopeOracle::window_count(unsigned N, unsigned W) const {
  Builder b{dim, kind == Kind::hleib ? std::vector<char>{'<', '>'} : std::vector<char>{'.'}, {}};
  return b.window(N, W).names.size();
}

std::size_t EnvelopeOracle::generator_count(unsigned N, unsigned W) const {
  std::vector<char> ops = kind == Kind::hleib ? std::vector<char>{'<', '>'} : std::vector<char>{'.'};
  Builder b{dim, ops, {}};
  Space sp = b.window(N, W);
  Tables t(sp, ops, dim, alpha);
  return generators(*this, sp, t, N, W).size();
}

std::size_t EnvelopeOracle::quotient_dim(unsigned N, unsigned W, unsigned pad) const {
  const unsigned Np = N + pad, Wp = W + pad;
  std::vector<char> ops = kind == Kind::hleib ? std::vector<char>{'<', '>'} : std::vector<char>{'.'};
  Builder b{dim, ops, {}};
  Space sp = b.window(Np, Wp);
  const std::size_t n = sp.names.size();
  Tables t(sp, ops, dim, alpha);

  Span span;
  for (auto& g : generators(*this, sp, t, Np, Wp)) span.insert(std::move(g));

  // Multiplying by m is allowed on vectors supported in arity ≤ Np − |m|,
  // weight ≤ Wp − w(m). α is allowed unless a product of weight Wp appears.
  struct Group {
    std::vector<bool> excluded;
    std::vector<std::size_t> multipliers;
  };
  std::map<std::pair<unsigned, unsigned>, Group> groups;
  for (std::size_t m = 0; m < n; ++m) {
    if (sp.arity[m] >= Np) continue;
    unsigned ma = Np - sp.arity[m], mw = Wp - sp.weight[m];
    auto& g = groups[{ma, mw}];
    if (g.excluded.empty()) {
      g.excluded.resize(n);
      for (std::size_t c = 0; c < n; ++c) g.excluded[c] = sp.arity[c] > ma || sp.weight[c] > mw;
    }
    g.multipliers.push_back(m);
  }
  std::vector<bool> alpha_excluded(n);
  for (std::size_t c = 0; c < n; ++c) alpha_excluded[c] = sp.arity[c] >= 2 && sp.weight[c] + 1 > Wp;

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Sparse> fresh;
    for (const auto& [key, g] : groups)
      for (const auto& v : restrict_span(span, g.excluded))
        for (std::size_t m : g.multipliers)
          for (std::size_t op = 0; op < ops.size(); ++op) {
            fresh.push_back(t.product(unit(m), v, op));
            fresh.push_back(t.product(v, unit(m), op));
          }
    for (const auto& v : restrict_span(span, alpha_excluded)) fresh.push_back(t.alpha_of(v));
    for (auto& v : fresh) grew = span.insert(std::move(v)) || grew;
  }

  std::vector<bool> outside(n);
  std::size_t inside = 0;
  for (std::size_t c = 0; c < n; ++c) {
    outside[c] = sp.arity[c] > N || sp.weight[c] > W;
    if (!outside[c]) ++inside;
  }
  return inside - restrict_span(span, outside).size();
}

}  // namespace oracle
