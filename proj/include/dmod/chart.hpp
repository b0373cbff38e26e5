#pragma once

// Exact arithmetic in the three affine chart rings of a smooth Weierstrass
// curve y^2 z = x^3 + a x z^2 + b z^3 over the rationals:
//
//   U1 = D+(y):      A1 = k[x,z]       / (z - x^3 - a x z^2 - b z^3)
//   U2 = D+(z):      A2 = k[x,y]       / (y^2 - x^3 - a x - b)
//   U3 = U1 ∩ U2:    A3 = k[x,y,y^-1]  / (y^2 - x^3 - a x - b)
//
// Normal forms: U1 keeps the x-exponent <= 2 via x^3 -> z - a x z^2 - b z^3,
// U2 keeps the y-exponent <= 1 via y^2 -> x^3 + a x + b, and U3 keeps the
// x-exponent <= 2 via x^3 -> y^2 - a x - b with Laurent exponents in y.
// Each ring is a free rank-3 (resp. rank-2) module over k[z], k[x],
// k[y,y^-1], so these normal forms are unique.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmod/errors.hpp"
#include "dmod/rational.hpp"

namespace dmod {

enum class ChartId { U1, U2, U3 };

const char* chart_name(ChartId chart);
char chart_second_var(ChartId chart);  // 'z' on U1, 'y' on U2/U3
bool chart_is_laurent(ChartId chart);  // second variable inverted on U3

// An opposite inclusion U ⊇ V of the cover. The nontrivial ones are
// U1 ⊇ U3 and U2 ⊇ U3; together with the identities they form the whole
// inclusion order of the cover.
struct Inclusion {
  ChartId outer;
  ChartId inner;

  bool is_identity() const { return outer == inner; }
  friend bool operator==(const Inclusion&, const Inclusion&) = default;
};

bool inclusion_valid(const Inclusion& incl);
std::string inclusion_name(const Inclusion& incl);  // e.g. "U1>=U3"

inline constexpr Inclusion kIncl11{ChartId::U1, ChartId::U1};
inline constexpr Inclusion kIncl22{ChartId::U2, ChartId::U2};
inline constexpr Inclusion kIncl33{ChartId::U3, ChartId::U3};
inline constexpr Inclusion kIncl13{ChartId::U1, ChartId::U3};
inline constexpr Inclusion kIncl23{ChartId::U2, ChartId::U3};

struct CurveParams {
  Rational a;
  Rational b;
  Rational delta;  // 4 a^3 + 27 b^2, nonzero on smooth curves

  // Throws SingularCurveError when 4 a^3 + 27 b^2 = 0.
  static CurveParams make(const Rational& a, const Rational& b);

  bool a_is_zero() const { return a == 0; }
  const char* regime() const { return a_is_zero() ? "a_zero" : "a_nonzero"; }
};

// Exponents of a normal-form monomial x^i * s^j, s the chart's second
// variable. j < 0 is allowed only on U3.
struct Mono {
  int i = 0;
  int j = 0;

  int degree() const { return i + (j < 0 ? -j : j); }
  friend auto operator<=>(const Mono&, const Mono&) = default;
};

// Canonical monomial order: by degree, then by descending x-exponent, then
// by descending second exponent. monomial_box(d) is a prefix of
// monomial_box(d+1) under this order.
struct MonoLess {
  bool operator()(const Mono& lhs, const Mono& rhs) const {
    const int dl = lhs.degree(), dr = rhs.degree();
    if (dl != dr) return dl < dr;
    if (lhs.i != rhs.i) return lhs.i > rhs.i;
    return lhs.j > rhs.j;
  }
};

using CoeffMap = std::map<Mono, Rational, MonoLess>;

// Unreduced terms; exponents need not satisfy the chart bounds.
using RawPoly = std::vector<std::pair<Mono, Rational>>;

struct ChartElement {
  ChartId chart = ChartId::U1;
  CoeffMap coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const;  // max degree of a monomial, -1 when zero

  friend bool operator==(const ChartElement&, const ChartElement&) = default;
};

ChartElement chart_zero(ChartId chart);
ChartElement chart_const(ChartId chart, const Rational& c);
// The monomial must already satisfy the chart's normal-form bounds.
ChartElement chart_monomial(ChartId chart, const Rational& c, Mono m);

// Rewrites an arbitrary exponent/coefficient list into normal form.
// Throws ChartMismatchError on a negative exponent in a non-Laurent variable.
ChartElement chart_reduce(const RawPoly& raw, ChartId chart, const CurveParams& params);

ChartElement chart_add(const ChartElement& u, const ChartElement& v);
ChartElement chart_sub(const ChartElement& u, const ChartElement& v);
ChartElement chart_neg(const ChartElement& u);
ChartElement chart_scale(const Rational& c, const ChartElement& u);
ChartElement chart_mul(const ChartElement& u, const ChartElement& v, const CurveParams& params);
ChartElement chart_pow(const ChartElement& u, int n, const CurveParams& params);

// Restriction homomorphism along an inclusion: x -> x y^-1, z -> y^-1 for
// U1 ⊇ U3, the localization map for U2 ⊇ U3, identity otherwise.
ChartElement restrict_element(const ChartElement& u, const Inclusion& incl,
                              const CurveParams& params);

// The distinguished derivation of the chart:
//   d1 = (1 - 2 a x z - 3 b z^2) d/dx + (3 x^2 + a z^2) d/dz
//   d2 = -2 y d/dx - (3 x^2 + a) d/dy,   d3 = d2 extended to Laurent monomials
ChartElement apply_derivation(ChartId chart, const ChartElement& u, const CurveParams& params);

// Value of the derivation on a coordinate generator ('x', 'z' or 'y').
ChartElement derivation_of_var(ChartId chart, char var, const CurveParams& params);

// Term-by-term Leibniz derivative of an unreduced polynomial, unreduced.
RawPoly raw_derivative(ChartId chart, const RawPoly& raw, const CurveParams& params);

// The chart relation f_i as an unreduced polynomial (its normal form is 0).
RawPoly chart_relation(ChartId chart, const CurveParams& params);

// All normal-form monomials of degree <= d, canonically ordered.
std::vector<Mono> monomial_box(ChartId chart, int d);

// Textual syntax, e.g. "-4*x^2*y^-1 + 3/2*y". Parsing accepts arbitrary
// exponents and reduces; printing emits normal forms in canonical order.
std::string mono_to_string(ChartId chart, const Mono& m);
std::string element_to_string(const ChartElement& u);
ChartElement parse_element(std::string_view text, ChartId chart, const CurveParams& params);

}  // namespace dmod
