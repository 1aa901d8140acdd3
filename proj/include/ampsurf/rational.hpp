#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ampsurf {

// Every quantity in the library is exact. Never store a gmpxx expression in
// `auto`; always materialise into one of these types.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `p` or `p/q` (optional sign, decimal digits only). Throws ParseError.
Rational parse_rational(std::string_view text);

/// `p` when the denominator is one, `p/q` otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& z);
/// Throws InternalError when q is not an integer.
std::int64_t to_int64(const Rational& q);

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

}  // namespace ampsurf
