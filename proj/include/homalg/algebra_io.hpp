#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "homalg/algebra.hpp"

namespace homalg {

using Json = nlohmann::ordered_json;

// File formats (all scalars are integers or "p/q" strings):
//
//   {"kind": "hom-nonassociative", "dim": d, "alpha": [[..]..], "mul": [[[..]..]..]}
//   {"kind": "hom-dialgebra", "dim": d, "alpha": .., "lmul": .., "rmul": ..}
//   {"kind": "hom-bimodule", "dim": .., "alpha": .., "mul": ..,
//    "module": {"dim": m, "alpha": ..}, "leftAct": A×M→M, "rightAct": M×A→M,
//    "f": dim A rows × m columns}
//   {"kind": "linear-map", "source_dim": s, "target_dim": t, "matrix": t rows × s columns}
//
// mul[i][j][k] is the e_k coefficient of e_i e_j; alpha[r][c] is the e_r
// coefficient of α(e_c).
//
// Readers throw ParseError on malformed JSON or schema violations and
// DimensionMismatch on inconsistent sizes.

Json scalar_to_json(const Rational& x);
Rational scalar_from_json(const Json& j);

Json to_json(const Matrix& m);
Json to_json(const Bilinear& b);
Json to_json(const HomNonAsAlgebra& a);
Json to_json(const HomDialgebra& d);
Json to_json(const BimoduleData& b);
Json map_to_json(const Matrix& m);
Json to_json(const Violation& v);
Json to_json(const Violations& v);

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
Bilinear bilinear_from_json(const Json& j, std::size_t l, std::size_t r, std::size_t o);
HomNonAsAlgebra algebra_from_json(const Json& j);
HomDialgebra dialgebra_from_json(const Json& j);
BimoduleData bimodule_from_json(const Json& j);
Matrix map_from_json(const Json& j);

/// Value of "kind", or throws ParseError.
std::string kind_of(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace homalg
