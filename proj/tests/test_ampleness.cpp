#include "doctest.h"

#include <algorithm>
#include <random>

#include "ampsurf/ampleness.hpp"
#include "ampsurf/errors.hpp"
#include "oracles.hpp"

using namespace ampsurf;

namespace {
const Surface P2 = Surface::projective_plane();
Surface F(int e) { return Surface::hirzebruch(e); }
ChernCharacter ch(const Surface& s, std::int64_t r, Rational a, Rational b, Rational ch2) {
  return ChernCharacter::make(r, DivisorClass(s, std::move(a), std::move(b)), std::move(ch2));
}
ChernCharacter ch(std::int64_t r, Rational a, Rational ch2) { return ch(P2, r, std::move(a), 0, std::move(ch2)); }
}  // namespace

TEST_CASE("dimension count") {
  const DimensionCount h = dimension_count(ch(2, 4, 0), DivisorClass(P2, 1));
  CHECK(h.d == 2);
  CHECK(h.c == 3);
  CHECK(h.pass);
  const DimensionCount f = dimension_count(ch(F(1), 2, 3, 5, rat(5, 2)), fiber_class(F(1)));
  CHECK(f.d == 1);
  CHECK(f.c == 2);
  CHECK(f.pass);
  // c = r nu.D - r + 1 in general.
  const DimensionCount big = dimension_count(ch(3, 5, rat(1, 2)), DivisorClass(P2, 2));
  CHECK(big.d == oracle::h0_monomials(P2, 2) - 1);
  CHECK(big.c == 3 * rat(5, 3) * 2 - 3 + 1);
}

TEST_CASE("splitting codimension") {
  CHECK(splitting_codim(1, 2, 4) == 3);
  CHECK(splitting_codim(2, 2, 4) == 8);
  CHECK_THROWS_AS(splitting_codim(0, 2, 4), PreconditionError);
  CHECK_THROWS_AS(splitting_codim(3, 2, 4), PreconditionError);
  CHECK_THROWS_AS(splitting_codim(1, 3, 2), PreconditionError);
}

TEST_CASE("bad curve shapes") {
  CHECK(bad_curve_shape(DivisorClass(P2, 1)) == "H");
  CHECK(bad_curve_shape(DivisorClass(P2, 2)) == "2H");
  CHECK_FALSE(bad_curve_shape(DivisorClass(P2, 3)));
  CHECK(bad_curve_shape(DivisorClass(F(0), 1, 4)) == "E+bF");
  CHECK(bad_curve_shape(DivisorClass(F(0), 4, 1)) == "bE+F");
  CHECK_FALSE(bad_curve_shape(DivisorClass(F(0), 2, 2)));
  CHECK(bad_curve_shape(DivisorClass(F(1), 2, 2)) == "2E+2F");
  CHECK(bad_curve_shape(DivisorClass(F(1), 0, 1)) == "F");
  CHECK(bad_curve_shape(DivisorClass(F(3), 1, 0)) == "E");
  CHECK(bad_curve_shape(DivisorClass(F(3), 1, 4)) == "E+bF");
  CHECK_FALSE(bad_curve_shape(DivisorClass(F(3), 2, 6)));
}

TEST_CASE("bad curves, worked examples") {
  const auto p2 = enumerate_bad_curves(ch(2, 4, 0));
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].curve == DivisorClass(P2, 1));
  CHECK(p2[0].chi_twist == -2);
  CHECK(oracle::chi_adjoint(ch(2, 4, 0), 1) == -2);
  CHECK(oracle::chi_adjoint(ch(2, 4, 0), 2) == 2);

  CHECK(enumerate_bad_curves(ch(2, 4, 2)).empty());
  CHECK(oracle::chi_adjoint(ch(2, 4, 2), 1) == 0);

  const auto f1 = enumerate_bad_curves(ch(F(1), 2, 3, 5, rat(5, 2)));
  CHECK(std::any_of(f1.begin(), f1.end(), [](const BadCurve& b) { return b.curve == fiber_class(F(1)); }));
  CHECK(oracle::chi_adjoint(ch(F(1), 2, 3, 5, rat(5, 2)), 0, 1) == -1);

  CHECK_THROWS_AS(enumerate_bad_curves(ch(2, 3, rat(3, 2))), PreconditionError);
}

TEST_CASE("bad curves agree with a brute-force box scan") {
  std::mt19937_64 rng(29);
  int sampled = 0;
  for (const Surface& s : oracle::test_surfaces()) {
    for (int i = 0; i < 600; ++i) {
      const ChernCharacter v = oracle::random_character(rng, s, oracle::uniform(rng, 2, 4), 0, 12, -5, 30);
      if (ample_gg_verdict(v).verdict != AmpleGGVerdict::AmpleGeneral) continue;
      ++sampled;
      std::int64_t amax = 0;
      std::int64_t bmax = 0;
      std::vector<oracle::ClassCoords> got;
      for (const BadCurve& b : enumerate_bad_curves(v)) {
        const std::int64_t a = to_int64(b.curve.x());
        const std::int64_t bb = to_int64(b.curve.y());
        amax = std::max(amax, a);
        bmax = std::max(bmax, bb);
        got.push_back({a, bb});
        CHECK(oracle::in_shape_list(s, a, bb));
        CHECK(b.count.pass);
      }
      std::sort(got.begin(), got.end());
      CAPTURE(to_string(v));
      CHECK(got == oracle::bad_curves_in_box(v, amax + 5, bmax + 5));
    }
  }
  CHECK(sampled > 50);
}

TEST_CASE("ample and globally generated verdict") {
  const AmpleGGCertificate p2 = ample_gg_verdict(ch(2, 4, 0));
  CHECK(p2.verdict == AmpleGGVerdict::AmpleGeneral);
  REQUIRE(p2.gg);
  CHECK(p2.gg->globally_generated);
  REQUIRE(p2.bad_curves.size() == 1);
  CHECK(p2.bad_curves[0].count.d == 2);
  CHECK(p2.bad_curves[0].count.c == 3);

  const AmpleGGCertificate intro =
      ample_gg_verdict(ChernCharacter::from_log_invariants(2, DivisorClass(P2, rat(3, 2)), rat(7, 8)));
  CHECK(intro.verdict == AmpleGGVerdict::HypothesesFail);
  CHECK(intro.reason.rfind("slope", 0) == 0);

  const AmpleGGCertificate tangent = ample_gg_verdict(ch(2, 3, rat(3, 2)));
  CHECK(tangent.verdict == AmpleGGVerdict::HypothesesFail);
  CHECK(std::any_of(tangent.notes.begin(), tangent.notes.end(),
                    [](const std::string& n) { return n.find("tangent bundle") != std::string::npos; }));

  // Negative discriminant never reaches the scan.
  CHECK(ample_gg_verdict(ch(2, 4, 8)).verdict == AmpleGGVerdict::HypothesesFail);
  CHECK(ample_gg_verdict(ch(1, 2, 2)).verdict == AmpleGGVerdict::HypothesesFail);
}

TEST_CASE("normalization") {
  const Normalization n10 = normalize_character(ch(2, 20, -142));
  CHECK(n10.multiple == 8);
  CHECK(log_invariants(n10.normalized).nu == DivisorClass(P2, 2));
  CHECK(n10.twist == DivisorClass(P2, 8));

  const ChernCharacter small = ch(2, 3, rat(1, 2));
  CHECK(normalize_character(small).multiple == 0);
  CHECK(normalize_character(small).normalized == small);

  const ChernCharacter f2 = ch(F(2), 1, 2, 7, 0);
  const Normalization nf = normalize_character(f2);
  CHECK(nf.multiple == 0);
  const DivisorClass e = section_class(F(2));
  CHECK(intersect(log_invariants(nf.normalized).nu, e) == intersect(log_invariants(f2).nu, e));

  const ChernCharacter f3 = ch(F(3), 2, 10, 40, 0);
  const Normalization n3 = normalize_character(f3);
  CHECK(n3.multiple == 3);
  CHECK(n3.twist == DivisorClass(F(3), 3, 9));
  const Rational nu_l = intersect(log_invariants(n3.normalized).nu, fiber_class(F(3)));
  CHECK(nu_l > 1);
  CHECK(nu_l <= 2);
  CHECK(intersect(log_invariants(n3.normalized).nu, section_class(F(3))) ==
        intersect(log_invariants(f3).nu, section_class(F(3))));
  CHECK_THROWS_AS(normalize_character(ch(2, 2, 0)), PreconditionError);
}

TEST_CASE("kernel character") {
  const ChernCharacter v = ch(2, 20, -142);
  const ChernCharacter u2 = kernel_character(v, 2, 2);
  CHECK(u2 == ch(2, -34, 287));
  CHECK(log_invariants(u2).delta == 1);
  const ChernCharacter u1 = kernel_character(v, 1, 2);
  CHECK(u1 == ch(2, -16, 144));
  CHECK(log_invariants(u1).delta == -40);
  CHECK_THROWS_AS(kernel_character(v, 0, 2), PreconditionError);
  CHECK_THROWS_AS(kernel_character(v, 1, 1), PreconditionError);
}

TEST_CASE("multiplier bound") {
  const MultiplierBound g = effective_n_bound(ch(2, 20, -142));
  CHECK(g.closed_form == rat(161, 81));
  CHECK(g.n_min == 2);
  // delta = 0 gives a nonpositive bound.
  const ChernCharacter flat = line_bundle_character(DivisorClass(P2, 3));
  CHECK(effective_n_bound(flat).n_min == 1);
  CHECK(minimal_multiplier_by_search(flat) == 1);
  CHECK_THROWS_AS(effective_n_bound(ch(2, 2, 0)), PreconditionError);
}

TEST_CASE("closed-form multiplier matches brute force") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (const Surface& s : oracle::test_surfaces()) {
    for (int i = 0; i < 300; ++i) {
      const ChernCharacter v = oracle::random_character(rng, s, oracle::uniform(rng, 1, 5), 0, 20, -20, 60);
      if (log_invariants(v).delta < 0 || !asymptotic_slope_hypotheses(v).holds) continue;
      for (std::int64_t sk : {2, 3, 5}) {
        CAPTURE(to_string(v));
        CAPTURE(sk);
        CHECK(effective_n_bound(v, sk).n_min == oracle::min_multiplier(v, sk));
        ++checked;
      }
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("asymptotic certificate") {
  const AsymptoticCertificate g =
      asymptotic_ample_certificate(gieseker_character(12), 2, AsymptoticMode::Direct);
  CHECK(g.verified);
  CHECK(g.n_min == 2);
  CHECK(g.n_search == 2);
  CHECK(g.kernel == ch(2, -34, 287));
  CHECK(g.kernel_delta == 1);
  REQUIRE(g.kernel_delta_previous);
  CHECK(*g.kernel_delta_previous == -40);
  CHECK(g.dual_twist_chi == 10 - 3 * 12 - 12 * 12);
  CHECK(g.kernel_dual_twist_chi == -g.n_min * g.dual_twist_chi);

  const AsymptoticCertificate intro = asymptotic_ample_certificate(
      ChernCharacter::from_log_invariants(2, DivisorClass(P2, rat(3, 2)), rat(7, 8)));
  CHECK(intro.verified);
  CHECK(intro.n_min == 6);
  CHECK(intro.n_min == oracle::min_multiplier(intro.normalized, 2));

  CHECK_THROWS_AS(asymptotic_ample_certificate(ch(2, 2, 0)), PreconditionError);
  CHECK_THROWS_AS(asymptotic_ample_certificate(ch(2, 4, 8)), PreconditionError);
}

TEST_CASE("asymptotic certificates verify on random inputs") {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (const Surface& s : oracle::test_surfaces()) {
    for (int i = 0; i < 200; ++i) {
      const ChernCharacter v = oracle::random_character(rng, s, oracle::uniform(rng, 1, 4), 0, 16, -20, 40);
      if (log_invariants(v).delta < 0 || !asymptotic_slope_hypotheses(v).holds) continue;
      for (AsymptoticMode mode : {AsymptoticMode::Normalized, AsymptoticMode::Direct}) {
        const AsymptoticCertificate c = asymptotic_ample_certificate(v, 2, mode);
        CAPTURE(to_string(v));
        CHECK(c.kernel_delta >= 0);
        if (c.kernel_delta_previous) CHECK(*c.kernel_delta_previous < 0);
        CHECK(is_big_and_nef(c.b));
        CHECK(c.kernel_dual_twist_chi == -c.n_min * c.dual_twist_chi);
        if (mode == AsymptoticMode::Normalized) {
          CHECK(c.verified);
          CHECK(c.dual_twist_chi <= 0);
        } else if (c.dual_twist_chi > 0) {
          // Without normalizing, v* (H - L) can have sections.
          CHECK_FALSE(c.verified);
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("Gieseker family") {
  CHECK(gieseker_character(12) == ch(2, 20, -142));
  CHECK(gieseker_character(4) == ch(2, 4, -14));
  CHECK_THROWS_AS(gieseker_character(3), PreconditionError);
  for (std::int64_t d = 4; d <= 30; ++d) {
    const ChernCharacter v = gieseker_character(d);
    CHECK(log_invariants(v).delta == (d - 1) * (d - 1));
    CHECK(effective_n_bound(v).closed_form ==
          rat(2 * (d - 1) * (d - 1), (d - 3) * (d - 3)) - 1);
  }
}
