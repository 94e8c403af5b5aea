#include "homalg/rational.hpp"

#include <algorithm>
#include <cctype>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

bool parse_integer(std::string_view digits, Integer& out) {
  std::size_t start = 0;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) start = 1;
  if (start == digits.size()) return false;
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) return false;
  }
  std::string text(digits.substr(digits[0] == '+' ? 1 : 0));
  return out.set_str(text, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError(0, "empty rational");
  std::string_view body = text.substr(first, last - first + 1);

  auto slash = body.find('/');
  Integer num;
  Integer den = 1;
  if (!parse_integer(body.substr(0, slash), num)) {
    throw ParseError(first, "malformed rational '" + std::string(body) + "'");
  }
  if (slash != std::string_view::npos) {
    std::string_view d = body.substr(slash + 1);
    if (d.empty() || d[0] == '-' || d[0] == '+' || !parse_integer(d, den)) {
      throw ParseError(first + slash + 1, "malformed denominator in '" + std::string(body) + "'");
    }
    if (den == 0) throw ParseError(first + slash + 1, "zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

}  // namespace homalg
