#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ampsurf/rational.hpp"
#include "ampsurf/surface.hpp"

namespace ampsurf {

/// Chern character (r, c1, ch2) of a sheaf of positive rank on P2 or F_e.
///
/// Invariants enforced at construction: r >= 1, c1 integral, and
/// c2 = c1^2/2 - ch2 an integer.
class ChernCharacter {
 public:
  /// Throws PreconditionError naming the violated invariant.
  static ChernCharacter make(std::int64_t rank, DivisorClass c1, Rational ch2);

  /// Builds the character with rank r, total slope nu and discriminant delta,
  /// i.e. c1 = r nu and ch2 = r (nu^2/2 - delta), then validates it.
  static ChernCharacter from_log_invariants(std::int64_t rank, const DivisorClass& nu, const Rational& delta);

  std::int64_t rank() const { return rank_; }
  const DivisorClass& c1() const { return c1_; }
  const Rational& ch2() const { return ch2_; }
  const Surface& surface() const { return c1_.surface(); }
  /// Second Chern class c1^2/2 - ch2.
  Integer c2() const;

  bool operator==(const ChernCharacter&) const = default;

 private:
  ChernCharacter(std::int64_t rank, DivisorClass c1, Rational ch2)
      : rank_(rank), c1_(std::move(c1)), ch2_(std::move(ch2)) {}

  std::int64_t rank_;
  DivisorClass c1_;
  Rational ch2_;
};

/// Slope, total slope and discriminant. Unchanged by scaling the character.
struct LogInvariants {
  Rational mu;
  DivisorClass nu;
  Rational delta;

  bool operator==(const LogInvariants&) const = default;
};

LogInvariants log_invariants(const ChernCharacter& v);

/// chi = r (P(nu) - delta). Throws InternalError if the value is not integral.
std::int64_t euler_characteristic(const ChernCharacter& v);

/// v(D): tensor with O(D). Throws PreconditionError for non-integral D.
ChernCharacter twist(const ChernCharacter& v, const DivisorClass& d);
ChernCharacter dual(const ChernCharacter& v);
/// n v for n >= 1.
ChernCharacter scale(const ChernCharacter& v, std::int64_t n);
/// Character of a direct sum.
ChernCharacter direct_sum(const ChernCharacter& v, const ChernCharacter& w);
/// ch O(D) = (1, D, D^2/2).
ChernCharacter line_bundle_character(const DivisorClass& d);

/// Canonical text `r:c1:ch2`, e.g. `2:3:3/2` on P2 or `2:3,5:5/2` on F_e.
std::string to_text(const ChernCharacter& v);
/// Human form, e.g. `(2, 3E+5F, 5/2)`.
std::string to_string(const ChernCharacter& v);
/// Parses the canonical text. Malformed tokens raise ParseError; invariant
/// violations raise PreconditionError from make().
ChernCharacter parse_character(const Surface& s, std::string_view text);
/// Parses `r:nu:delta` with rational coordinates for nu.
ChernCharacter parse_log_character(const Surface& s, std::string_view text);

}  // namespace ampsurf
