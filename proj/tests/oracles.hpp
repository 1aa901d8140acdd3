#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's intersection, Riemann-Roch or cohomology code; inputs are read
// off the public accessors only.

#include <cstdint>
#include <random>
#include <vector>

#include "ampsurf/chern.hpp"

namespace oracle {

using ampsurf::ChernCharacter;
using ampsurf::DivisorClass;
using ampsurf::Rational;
using ampsurf::Surface;

struct Coords {
  Rational x;
  Rational y;
};

Coords coords(const DivisorClass& d);
/// Hard-coded intersection pairing: H^2 = 1; E^2 = -e, E.F = 1, F^2 = 0.
Rational pairing(const Surface& s, const Coords& a, const Coords& b);
Coords canonical(const Surface& s);
Coords hyperplane(const Surface& s);

/// Hirzebruch-Riemann-Roch: chi = r chi(O) - c1.K/2 + ch2 with chi(O) = 1.
Rational chi_hrr(const ChernCharacter& v);
/// c1^2 / (2 r^2) - ch2 / r.
Rational discriminant(const ChernCharacter& v);

/// h0 of a line bundle by counting monomials of its degree in the Cox ring:
/// x, y, z on P2; t0, t1 (class F), x (class E), y (class E + eF) on F_e.
std::int64_t h0_monomials(const Surface& s, std::int64_t a, std::int64_t b = 0);

/// Irreducible curve classes via Bertini: the negative section and the fiber
/// on F_e, otherwise nef classes of positive self-intersection (any positive
/// multiple of H on P2).
bool irreducible_curve(const Surface& s, std::int64_t a, std::int64_t b = 0);

/// Least n >= 1 with delta((nr+s) ch O(H) - n v) >= 0, by walking n upward.
std::int64_t min_multiplier(const ChernCharacter& v, std::int64_t s, std::int64_t cap = 100000000);

/// chi(v(K+D)) with D = aE+bF (aH on P2), twisting by the explicit formulas
/// c1' = c1 + rG, ch2' = ch2 + c1.G + rG^2/2 for G = K+D, then HRR.
Rational chi_adjoint(const ChernCharacter& v, std::int64_t a, std::int64_t b = 0);

struct ClassCoords {
  std::int64_t a;
  std::int64_t b;
  bool operator==(const ClassCoords&) const = default;
  auto operator<=>(const ClassCoords&) const = default;
};

/// All irreducible D with 0 <= a <= amax, 0 <= b <= bmax and chi(v(K+D)) < 0.
std::vector<ClassCoords> bad_curves_in_box(const ChernCharacter& v, std::int64_t amax, std::int64_t bmax);

/// Membership in the finite list of possible bad classes: H, 2H on P2;
/// E+bF, bE+F on F0; F, E+bF, 2E+2F on F1; F, E, E+bF (b >= e) on F_e, e >= 2.
bool in_shape_list(const Surface& s, std::int64_t a, std::int64_t b);

/// Random valid character on s: c1 with coordinates in [lo, hi], random
/// integral c2 in [c2_lo, c2_hi].
ChernCharacter random_character(std::mt19937_64& rng, const Surface& s, std::int64_t rank, std::int64_t lo,
                                std::int64_t hi, std::int64_t c2_lo, std::int64_t c2_hi);

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Surfaces exercised by the randomized suites.
std::vector<Surface> test_surfaces();

}  // namespace oracle
