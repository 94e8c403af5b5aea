#include "homalg/algebra_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

[[noreturn]] void schema(const std::string& msg) { throw ParseError(0, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    schema(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

const Json& array_of(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  if (j.size() != n)
    throw DimensionMismatch(std::string(what) + " has length " + std::to_string(j.size()) + ", expected " +
                            std::to_string(n));
  return j;
}

}  // namespace

Json scalar_to_json(const Rational& x) {
  const mpz_class& num = x.get_num();
  if (x.get_den() == 1 && num.fits_slong_p()) return num.get_si();
  return to_string(x);
}

Rational scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError&) {
      schema("bad scalar \"" + j.get<std::string>() + "\"");
    }
  }
  schema("scalars must be integers or \"p/q\" strings, got " + j.dump());
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Bilinear& b) {
  Json out = Json::array();
  for (std::size_t i = 0; i < b.left_dim(); ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < b.right_dim(); ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < b.out_dim(); ++k) row.push_back(scalar_to_json(b(i, j, k)));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

Json to_json(const HomNonAsAlgebra& a) {
  Json j;
  j["kind"] = "hom-nonassociative";
  j["dim"] = a.dim();
  j["alpha"] = to_json(a.module.alpha);
  j["mul"] = to_json(a.mul);
  return j;
}

Json to_json(const HomDialgebra& d) {
  Json j;
  j["kind"] = "hom-dialgebra";
  j["dim"] = d.dim();
  j["alpha"] = to_json(d.module.alpha);
  j["lmul"] = to_json(d.lmul);
  j["rmul"] = to_json(d.rmul);
  return j;
}

Json to_json(const BimoduleData& b) {
  Json j = to_json(b.algebra);
  j["kind"] = "hom-bimodule";
  j["module"] = {{"dim", b.module.dim}, {"alpha", to_json(b.module.alpha)}};
  j["leftAct"] = to_json(b.left_action);
  j["rightAct"] = to_json(b.right_action);
  j["f"] = to_json(b.f);
  return j;
}

Json map_to_json(const Matrix& m) {
  Json j;
  j["kind"] = "linear-map";
  j["source_dim"] = m.cols();
  j["target_dim"] = m.rows();
  j["matrix"] = to_json(m);
  return j;
}

Json to_json(const Violation& v) {
  Json j;
  j["axiom"] = v.axiom;
  j["basis"] = v.basis;
  Json d = Json::array();
  for (const auto& x : v.discrepancy) d.push_back(scalar_to_json(x));
  j["discrepancy"] = std::move(d);
  return j;
}

Json to_json(const Violations& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  array_of(j, rows, "matrix");
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = array_of(j[r], cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(row[c]);
  }
  return m;
}

Bilinear bilinear_from_json(const Json& j, std::size_t l, std::size_t r, std::size_t o) {
  Bilinear b(l, r, o);
  array_of(j, l, "structure constants");
  for (std::size_t i = 0; i < l; ++i) {
    const Json& plane = array_of(j[i], r, "structure constants");
    for (std::size_t k = 0; k < r; ++k) {
      const Json& row = array_of(plane[k], o, "structure constants");
      for (std::size_t t = 0; t < o; ++t) b(i, k, t) = scalar_from_json(row[t]);
    }
  }
  return b;
}

std::string kind_of(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) schema("\"kind\" must be a string");
  return k.get<std::string>();
}

namespace {

HomModule module_from_json(const Json& j) {
  std::size_t d = size_field(j, "dim");
  return {d, matrix_from_json(field(j, "alpha"), d, d)};
}

}  // namespace

HomNonAsAlgebra algebra_from_json(const Json& j) {
  std::string kind = kind_of(j);
  if (kind != "hom-nonassociative" && kind != "hom-bimodule")
    schema("expected kind \"hom-nonassociative\", got \"" + kind + "\"");
  HomModule m = module_from_json(j);
  std::size_t d = m.dim;
  return {std::move(m), bilinear_from_json(field(j, "mul"), d, d, d)};
}

HomDialgebra dialgebra_from_json(const Json& j) {
  std::string kind = kind_of(j);
  if (kind != "hom-dialgebra") schema("expected kind \"hom-dialgebra\", got \"" + kind + "\"");
  HomModule m = module_from_json(j);
  std::size_t d = m.dim;
  return {std::move(m), bilinear_from_json(field(j, "lmul"), d, d, d), bilinear_from_json(field(j, "rmul"), d, d, d)};
}

BimoduleData bimodule_from_json(const Json& j) {
  std::string kind = kind_of(j);
  if (kind != "hom-bimodule") schema("expected kind \"hom-bimodule\", got \"" + kind + "\"");
  HomNonAsAlgebra a = algebra_from_json(j);
  HomModule m = module_from_json(field(j, "module"));
  std::size_t da = a.dim(), dm = m.dim;
  Bilinear left = bilinear_from_json(field(j, "leftAct"), da, dm, dm);
  Bilinear right = bilinear_from_json(field(j, "rightAct"), dm, da, dm);
  Matrix f = matrix_from_json(field(j, "f"), da, dm);
  return {std::move(a), std::move(m), std::move(left), std::move(right), std::move(f)};
}

Matrix map_from_json(const Json& j) {
  std::string kind = kind_of(j);
  if (kind != "linear-map") schema("expected kind \"linear-map\", got \"" + kind + "\"");
  return matrix_from_json(field(j, "matrix"), size_field(j, "target_dim"), size_field(j, "source_dim"));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace homalg
