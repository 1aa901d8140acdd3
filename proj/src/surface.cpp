#include "ampsurf/surface.hpp"

#include <charconv>

#include "ampsurf/errors.hpp"

namespace ampsurf {
namespace {

void require_same(const DivisorClass& a, const DivisorClass& b) {
  if (a.surface() != b.surface()) {
    throw SurfaceMismatch("divisor classes on " + a.surface().name() + " and " + b.surface().name());
  }
}

void require_integral(const DivisorClass& d, const char* what) {
  if (!d.is_integral()) {
    throw PreconditionError(std::string(what) + " requires an integral class, got " + to_string(d));
  }
}

void require_hirzebruch(const Surface& s, const char* what) {
  if (s.is_plane()) throw PreconditionError(std::string(what) + " is only defined on Hirzebruch surfaces");
}

std::string term(const Rational& c, const char* symbol) {
  if (c == 1) return symbol;
  if (c == -1) return std::string("-") + symbol;
  return to_string(c) + symbol;
}

}  // namespace

Surface Surface::hirzebruch(int e) {
  if (e < 0) throw PreconditionError("Hirzebruch surface needs e >= 0, got " + std::to_string(e));
  return Surface(Kind::Hirzebruch, e);
}

Surface Surface::parse(std::string_view text) {
  if (text == "P2") return projective_plane();
  if (text.size() >= 2 && text.front() == 'F') {
    int e = -1;
    const char* first = text.data() + 1;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, e);
    if (ec == std::errc() && ptr == last && e >= 0) return hirzebruch(e);
  }
  throw ParseError("unknown surface '" + std::string(text) + "' (expected P2 or F<e>)");
}

std::string Surface::name() const { return is_plane() ? "P2" : "F" + std::to_string(e_); }

DivisorClass::DivisorClass(Surface surface, Rational x, Rational y)
    : surface_(surface), x_(std::move(x)), y_(std::move(y)) {
  if (surface_.is_plane() && y_ != 0) throw PreconditionError("P2 divisor classes have a single coordinate");
}

bool DivisorClass::is_integral() const { return is_integer(x_) && is_integer(y_); }

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same(*this, other);
  return DivisorClass(surface_, x_ + other.x_, y_ + other.y_);
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  require_same(*this, other);
  return DivisorClass(surface_, x_ - other.x_, y_ - other.y_);
}

DivisorClass DivisorClass::operator-() const { return DivisorClass(surface_, -x_, -y_); }

DivisorClass DivisorClass::operator*(const Rational& k) const {
  return DivisorClass(surface_, x_ * k, y_ * k);
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  *this = *this + other;
  return *this;
}

DivisorClass polarization(const Surface& s) {
  if (s.is_plane()) return DivisorClass(s, 1);
  return DivisorClass(s, 1, s.e() + 1);
}

DivisorClass restriction_curve(const Surface& s) {
  return s.is_plane() ? DivisorClass(s, 1) : DivisorClass(s, 0, 1);
}

DivisorClass canonical_class(const Surface& s) {
  if (s.is_plane()) return DivisorClass(s, -3);
  return DivisorClass(s, -2, -(s.e() + 2));
}

DivisorClass section_class(const Surface& s) {
  require_hirzebruch(s, "E");
  return DivisorClass(s, 1, 0);
}

DivisorClass fiber_class(const Surface& s) {
  require_hirzebruch(s, "F");
  return DivisorClass(s, 0, 1);
}

Rational intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same(a, b);
  if (a.surface().is_plane()) return Rational(a.x() * b.x());
  // F^2 = 0, E^2 = -e, E.F = 1
  const Rational e = a.surface().e();
  return Rational(-e * a.x() * b.x() + a.x() * b.y() + a.y() * b.x());
}

bool is_nef(const DivisorClass& d) {
  if (d.surface().is_plane()) return d.x() >= 0;
  const Surface& s = d.surface();
  return intersect(d, fiber_class(s)) >= 0 && intersect(d, section_class(s)) >= 0;
}

bool is_effective(const DivisorClass& d) { return d.x() >= 0 && d.y() >= 0; }

bool is_big_and_nef(const DivisorClass& d) { return is_nef(d) && intersect(d, d) > 0; }

bool is_irreducible_curve_class(const DivisorClass& d) {
  require_integral(d, "is_irreducible_curve_class");
  const Surface& s = d.surface();
  if (s.is_plane()) return d.x() >= 1;
  if (d == section_class(s) || d == fiber_class(s)) return true;
  const Rational& a = d.x();
  const Rational& b = d.y();
  if (a < 1 || b < a * s.e()) return false;
  // On F_0 the classes aE with a >= 2 only contain unions of rulings.
  if (s.e() == 0 && b == 0) return false;
  return true;
}

Rational hilbert_poly_P(const DivisorClass& nu) {
  const Rational& x = nu.x();
  if (nu.surface().is_plane()) return Rational((x * x + 3 * x + 2) / 2);
  const Rational e = nu.surface().e();
  return Rational((x + 1) * (nu.y() + 1 - e * x / 2));
}

std::int64_t h0_line_bundle(const DivisorClass& d) {
  require_integral(d, "h0_line_bundle");
  const std::int64_t a = to_int64(d.x());
  if (d.surface().is_plane()) return a < 0 ? 0 : (a + 1) * (a + 2) / 2;
  if (a < 0) return 0;
  // pi_* O(aE+bF) = sum_{i=0..a} O(b - ie) on P1
  const std::int64_t b = to_int64(d.y());
  const std::int64_t e = d.surface().e();
  std::int64_t total = 0;
  for (std::int64_t i = 0; i <= a; ++i) {
    const std::int64_t deg = b - i * e;
    if (deg >= 0) total += deg + 1;
  }
  return total;
}

std::string to_string(const DivisorClass& d) {
  if (d.surface().is_plane()) return d.x() == 0 ? "0" : term(d.x(), "H");
  if (d.x() == 0 && d.y() == 0) return "0";
  std::string out;
  if (d.x() != 0) out = term(d.x(), "E");
  if (d.y() != 0) {
    std::string f = term(d.y(), "F");
    if (!out.empty() && f.front() != '-') out += '+';
    out += f;
  }
  return out;
}

std::string coords_text(const DivisorClass& d) {
  if (d.surface().is_plane()) return to_string(d.x());
  return to_string(d.x()) + "," + to_string(d.y());
}

DivisorClass parse_divisor(const Surface& s, std::string_view text) {
  const auto comma = text.find(',');
  if (s.is_plane()) {
    if (comma != std::string_view::npos) {
      throw ParseError("P2 classes take one coordinate, got '" + std::string(text) + "'");
    }
    return DivisorClass(s, parse_rational(text));
  }
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("F_e classes take two coordinates a,b, got '" + std::string(text) + "'");
  }
  return DivisorClass(s, parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

}  // namespace ampsurf
