#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "lietk/errors.hpp"

// Boost 1.74 predates C++20 rewritten comparisons: rational<long> == int
// picks the reversed mixed-type template and recurses forever. Exact
// non-template overloads for int operands take precedence.
namespace boost {
#define LIETK_RATIONAL_CMP(op, T)                                                                  \
  inline bool operator op(const rational<std::int64_t>& a, T b) { return a op rational<std::int64_t>(b); } \
  inline bool operator op(T a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) op b; }
#define LIETK_RATIONAL_INT_CMP(op) \
  LIETK_RATIONAL_CMP(op, int)      \
  LIETK_RATIONAL_CMP(op, long)     \
  LIETK_RATIONAL_CMP(op, long long)
LIETK_RATIONAL_INT_CMP(==)
LIETK_RATIONAL_INT_CMP(!=)
LIETK_RATIONAL_INT_CMP(<)
LIETK_RATIONAL_INT_CMP(>)
LIETK_RATIONAL_INT_CMP(<=)
LIETK_RATIONAL_INT_CMP(>=)
#undef LIETK_RATIONAL_INT_CMP
#undef LIETK_RATIONAL_CMP
}  // namespace boost

namespace lietk {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<int>;

inline std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) -> std::int64_t {
    if (part.empty()) throw ParseError("empty rational component in '" + std::string(text) + "'");
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(std::string(part), &pos);
    } catch (const std::exception&) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (pos != part.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& x) {
  auto num = x.numerator() % x.denominator();
  if (num < 0) num += x.denominator();
  return Rational(num, x.denominator());
}

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

inline RationalVector to_rational(const IntVector& v) {
  return RationalVector(v.begin(), v.end());
}

}  // namespace lietk
