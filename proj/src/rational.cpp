#include "ampsurf/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "ampsurf/errors.hpp"

namespace ampsurf {
namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_integer_token(num)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view d = text.substr(slash + 1);
    if (!valid_integer_token(d) || d.front() == '-' || d.front() == '+') {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    den = parse_integer(d);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(parse_integer(num), den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw InternalError("expected an integer, got " + to_string(q));
  return to_int64(Integer(q.get_num()));
}

}  // namespace ampsurf
