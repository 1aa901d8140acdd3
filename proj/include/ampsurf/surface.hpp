#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ampsurf/rational.hpp"

namespace ampsurf {

/// The projective plane or a Hirzebruch surface F_e.
///
/// On P2 the Picard lattice is ZH. On F_e it is ZE + ZF with F the fiber of
/// the ruling and E the section of self-intersection -e.
class Surface {
 public:
  enum class Kind { ProjectivePlane, Hirzebruch };

  static Surface projective_plane() { return Surface(Kind::ProjectivePlane, 0); }
  static Surface hirzebruch(int e);

  /// Accepts `P2` or `F<e>` (e.g. `F0`, `F3`). Throws ParseError.
  static Surface parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_plane() const { return kind_ == Kind::ProjectivePlane; }
  /// Twisting parameter of F_e; zero on P2.
  int e() const { return e_; }
  int picard_rank() const { return is_plane() ? 1 : 2; }
  std::string name() const;

  bool operator==(const Surface&) const = default;

 private:
  Surface(Kind kind, int e) : kind_(kind), e_(e) {}

  Kind kind_;
  int e_;
};

/// An element of Pic(X) (x) Q. Also used for total slopes.
///
/// Coordinates are (x) in the basis {H} on P2 and (x, y) meaning xE + yF on
/// F_e. `y()` is identically zero on P2.
class DivisorClass {
 public:
  explicit DivisorClass(Surface surface) : surface_(surface) {}
  DivisorClass(Surface surface, Rational x, Rational y = 0);

  static DivisorClass zero(Surface surface) { return DivisorClass(surface); }

  const Surface& surface() const { return surface_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  bool is_integral() const;

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  DivisorClass operator*(const Rational& k) const;
  DivisorClass& operator+=(const DivisorClass& other);

  bool operator==(const DivisorClass& other) const = default;

 private:
  Surface surface_;
  Rational x_ = 0;
  Rational y_ = 0;
};

inline DivisorClass operator*(const Rational& k, const DivisorClass& d) { return d * k; }

// Distinguished classes.
DivisorClass polarization(const Surface& s);    // H; E+(e+1)F on F_e
DivisorClass restriction_curve(const Surface& s);  // L: H on P2, F on F_e
DivisorClass canonical_class(const Surface& s);
DivisorClass section_class(const Surface& s);  // E; throws on P2
DivisorClass fiber_class(const Surface& s);    // F; throws on P2

/// Symmetric bilinear intersection pairing. Throws SurfaceMismatch.
Rational intersect(const DivisorClass& a, const DivisorClass& b);

bool is_nef(const DivisorClass& d);
bool is_effective(const DivisorClass& d);
/// Nef with positive self-intersection.
bool is_big_and_nef(const DivisorClass& d);

/// Classes whose general member is an irreducible curve: dH with d >= 1 on
/// P2; on F_e the classes E, F and aE+bF with a >= 1, b >= ae (except the
/// pencils aE, a >= 2, on F_0). Throws PreconditionError on non-integral input.
bool is_irreducible_curve_class(const DivisorClass& d);

/// Hilbert polynomial of the structure sheaf evaluated at a rational class:
/// (x^2+3x+2)/2 on P2 and (x+1)(y+1-ex/2) on F_e.
Rational hilbert_poly_P(const DivisorClass& nu);

/// Number of sections of O(D). Throws PreconditionError on non-integral D.
std::int64_t h0_line_bundle(const DivisorClass& d);

/// Human form: `3H`, `3E+5F`, `-1/2E`, `0`.
std::string to_string(const DivisorClass& d);
/// Canonical coordinates: `a` on P2, `a,b` on F_e.
std::string coords_text(const DivisorClass& d);
/// Parses coordinates in the canonical form for the given surface.
DivisorClass parse_divisor(const Surface& s, std::string_view text);

}  // namespace ampsurf
