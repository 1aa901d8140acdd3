#include "ampsurf/chern.hpp"

#include <charconv>
#include <vector>

#include "ampsurf/errors.hpp"

namespace ampsurf {
namespace {

std::vector<std::string_view> split_colon(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_rank(std::string_view token, std::string_view whole) {
  std::int64_t r = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), r);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("malformed rank '" + std::string(token) + "' in '" + std::string(whole) + "'");
  }
  return r;
}

}  // namespace

ChernCharacter ChernCharacter::make(std::int64_t rank, DivisorClass c1, Rational ch2) {
  if (rank < 1) throw PreconditionError("rank must be positive, got " + std::to_string(rank));
  if (!c1.is_integral()) throw PreconditionError("integrality: c1 must be integral, got " + to_string(c1));
  const Rational c2 = intersect(c1, c1) / 2 - ch2;
  if (!is_integer(c2)) {
    throw PreconditionError("integrality: c1^2/2 - ch2 = " + to_string(c2) + " is not an integer");
  }
  return ChernCharacter(rank, std::move(c1), std::move(ch2));
}

ChernCharacter ChernCharacter::from_log_invariants(std::int64_t rank, const DivisorClass& nu,
                                                   const Rational& delta) {
  if (rank < 1) throw PreconditionError("rank must be positive, got " + std::to_string(rank));
  const Rational r = rank;
  const Rational ch2 = r * (intersect(nu, nu) / 2 - delta);
  return make(rank, nu * r, ch2);
}

Integer ChernCharacter::c2() const {
  const Rational c2 = intersect(c1_, c1_) / 2 - ch2_;
  return c2.get_num();
}

LogInvariants log_invariants(const ChernCharacter& v) {
  const Rational r = v.rank();
  const DivisorClass h = polarization(v.surface());
  DivisorClass nu = v.c1() * Rational(1 / r);
  Rational mu = intersect(v.c1(), h) / (r * intersect(h, h));
  Rational delta = intersect(nu, nu) / 2 - v.ch2() / r;
  return {std::move(mu), std::move(nu), std::move(delta)};
}

std::int64_t euler_characteristic(const ChernCharacter& v) {
  const LogInvariants inv = log_invariants(v);
  const Rational chi = v.rank() * (hilbert_poly_P(inv.nu) - inv.delta);
  if (!is_integer(chi)) throw InternalError("non-integral Euler characteristic " + to_string(chi));
  return to_int64(chi);
}

ChernCharacter twist(const ChernCharacter& v, const DivisorClass& d) {
  if (!d.is_integral()) throw PreconditionError("twist requires an integral class, got " + to_string(d));
  const Rational r = v.rank();
  DivisorClass c1 = v.c1() + d * r;
  Rational ch2 = v.ch2() + intersect(v.c1(), d) + r * intersect(d, d) / 2;
  return ChernCharacter::make(v.rank(), std::move(c1), std::move(ch2));
}

ChernCharacter dual(const ChernCharacter& v) { return ChernCharacter::make(v.rank(), -v.c1(), v.ch2()); }

ChernCharacter scale(const ChernCharacter& v, std::int64_t n) {
  if (n < 1) throw PreconditionError("scale factor must be positive, got " + std::to_string(n));
  const Rational k = n;
  return ChernCharacter::make(v.rank() * n, v.c1() * k, Rational(v.ch2() * k));
}

ChernCharacter direct_sum(const ChernCharacter& v, const ChernCharacter& w) {
  return ChernCharacter::make(v.rank() + w.rank(), v.c1() + w.c1(), Rational(v.ch2() + w.ch2()));
}

ChernCharacter line_bundle_character(const DivisorClass& d) {
  if (!d.is_integral()) throw PreconditionError("line bundles need an integral class, got " + to_string(d));
  return ChernCharacter::make(1, d, Rational(intersect(d, d) / 2));
}

std::string to_text(const ChernCharacter& v) {
  return std::to_string(v.rank()) + ":" + coords_text(v.c1()) + ":" + to_string(v.ch2());
}

std::string to_string(const ChernCharacter& v) {
  return "(" + std::to_string(v.rank()) + ", " + to_string(v.c1()) + ", " + to_string(v.ch2()) + ")";
}

ChernCharacter parse_character(const Surface& s, std::string_view text) {
  const auto parts = split_colon(text);
  if (parts.size() != 3) throw ParseError("character must look like r:c1:ch2, got '" + std::string(text) + "'");
  const std::int64_t r = parse_rank(parts[0], text);
  DivisorClass c1 = parse_divisor(s, parts[1]);
  Rational ch2 = parse_rational(parts[2]);
  return ChernCharacter::make(r, std::move(c1), std::move(ch2));
}

ChernCharacter parse_log_character(const Surface& s, std::string_view text) {
  const auto parts = split_colon(text);
  if (parts.size() != 3) throw ParseError("expected r:nu:delta, got '" + std::string(text) + "'");
  const std::int64_t r = parse_rank(parts[0], text);
  return ChernCharacter::from_log_invariants(r, parse_divisor(s, parts[1]), parse_rational(parts[2]));
}

}  // namespace ampsurf
