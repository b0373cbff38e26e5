#include "dmod/chart.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace dmod {

const char* chart_name(ChartId chart) {
  switch (chart) {
    case ChartId::U1: return "U1";
    case ChartId::U2: return "U2";
    case ChartId::U3: return "U3";
  }
  return "?";
}

char chart_second_var(ChartId chart) { return chart == ChartId::U1 ? 'z' : 'y'; }

bool chart_is_laurent(ChartId chart) { return chart == ChartId::U3; }

bool inclusion_valid(const Inclusion& incl) {
  if (incl.outer == incl.inner) return true;
  return incl.inner == ChartId::U3 && incl.outer != ChartId::U3;
}

std::string inclusion_name(const Inclusion& incl) {
  return std::string(chart_name(incl.outer)) + ">=" + chart_name(incl.inner);
}

CurveParams CurveParams::make(const Rational& a, const Rational& b) {
  CurveParams p{a, b, 4 * a * a * a + 27 * b * b};
  if (p.delta == 0)
    throw SingularCurveError("singular curve: 4a^3 + 27b^2 = 0 for a=" + rational_to_string(a) +
                             ", b=" + rational_to_string(b));
  return p;
}

int ChartElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : coeffs) d = std::max(d, m.degree());
  return d;
}

ChartElement chart_zero(ChartId chart) { return ChartElement{chart, {}}; }

ChartElement chart_const(ChartId chart, const Rational& c) {
  ChartElement e{chart, {}};
  if (c != 0) e.coeffs[Mono{0, 0}] = c;
  return e;
}

ChartElement chart_monomial(ChartId chart, const Rational& c, Mono m) {
  if (m.i < 0 || (m.j < 0 && !chart_is_laurent(chart)))
    throw ChartMismatchError("negative exponent in non-Laurent variable");
  if (chart != ChartId::U2 && m.i > 2)
    throw ChartMismatchError("monomial not in normal form: x-exponent > 2");
  if (chart == ChartId::U2 && m.j > 1)
    throw ChartMismatchError("monomial not in normal form: y-exponent > 1");
  ChartElement e{chart, {}};
  if (c != 0) e.coeffs[m] = c;
  return e;
}

ChartElement chart_reduce(const RawPoly& raw, ChartId chart, const CurveParams& params) {
  ChartElement out{chart, {}};
  std::deque<std::pair<Mono, Rational>> work(raw.begin(), raw.end());
  const Rational& a = params.a;
  const Rational& b = params.b;

  while (!work.empty()) {
    auto [m, c] = work.front();
    work.pop_front();
    if (c == 0) continue;
    if (m.i < 0 || (m.j < 0 && !chart_is_laurent(chart)))
      throw ChartMismatchError("negative exponent in non-Laurent variable");

    switch (chart) {
      case ChartId::U1:
        // x^3 = z - a x z^2 - b z^3
        if (m.i >= 3) {
          work.push_back({Mono{m.i - 3, m.j + 1}, c});
          if (a != 0) work.push_back({Mono{m.i - 2, m.j + 2}, -a * c});
          if (b != 0) work.push_back({Mono{m.i - 3, m.j + 3}, -b * c});
          continue;
        }
        break;
      case ChartId::U2:
        // y^2 = x^3 + a x + b
        if (m.j >= 2) {
          work.push_back({Mono{m.i + 3, m.j - 2}, c});
          if (a != 0) work.push_back({Mono{m.i + 1, m.j - 2}, a * c});
          if (b != 0) work.push_back({Mono{m.i, m.j - 2}, b * c});
          continue;
        }
        break;
      case ChartId::U3:
        // x^3 = y^2 - a x - b
        if (m.i >= 3) {
          work.push_back({Mono{m.i - 3, m.j + 2}, c});
          if (a != 0) work.push_back({Mono{m.i - 2, m.j}, -a * c});
          if (b != 0) work.push_back({Mono{m.i - 3, m.j}, -b * c});
          continue;
        }
        break;
    }

    auto [it, inserted] = out.coeffs.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.coeffs.erase(it);
    }
  }
  return out;
}

namespace {

void require_same_chart(const ChartElement& u, const ChartElement& v) {
  if (u.chart != v.chart) throw ChartMismatchError("chart mismatch");
}

ChartElement merge_add(const ChartElement& u, const ChartElement& v, int sign) {
  ChartElement out = u;
  for (const auto& [m, c] : v.coeffs) {
    auto [it, inserted] = out.coeffs.try_emplace(m, sign * c);
    if (!inserted) {
      it->second += sign * c;
      if (it->second == 0) out.coeffs.erase(it);
    }
  }
  return out;
}

}  // namespace

ChartElement chart_add(const ChartElement& u, const ChartElement& v) {
  require_same_chart(u, v);
  return merge_add(u, v, 1);
}

ChartElement chart_sub(const ChartElement& u, const ChartElement& v) {
  require_same_chart(u, v);
  return merge_add(u, v, -1);
}

ChartElement chart_neg(const ChartElement& u) { return chart_scale(Rational(-1), u); }

ChartElement chart_scale(const Rational& c, const ChartElement& u) {
  ChartElement out{u.chart, {}};
  if (c == 0) return out;
  for (const auto& [m, uc] : u.coeffs) out.coeffs[m] = c * uc;
  return out;
}

ChartElement chart_mul(const ChartElement& u, const ChartElement& v, const CurveParams& params) {
  require_same_chart(u, v);
  RawPoly raw;
  raw.reserve(u.coeffs.size() * v.coeffs.size());
  for (const auto& [mu, cu] : u.coeffs)
    for (const auto& [mv, cv] : v.coeffs) raw.push_back({Mono{mu.i + mv.i, mu.j + mv.j}, cu * cv});
  return chart_reduce(raw, u.chart, params);
}

ChartElement chart_pow(const ChartElement& u, int n, const CurveParams& params) {
  ChartElement out = chart_const(u.chart, 1);
  for (int k = 0; k < n; ++k) out = chart_mul(out, u, params);
  return out;
}

ChartElement restrict_element(const ChartElement& u, const Inclusion& incl,
                              const CurveParams& params) {
  if (!inclusion_valid(incl)) throw ChartMismatchError("invalid inclusion");
  if (u.chart != incl.outer) throw ChartMismatchError("element not in the outer chart");
  if (incl.is_identity()) return u;

  RawPoly raw;
  raw.reserve(u.coeffs.size());
  for (const auto& [m, c] : u.coeffs) {
    if (incl.outer == ChartId::U1) {
      // x -> x y^-1, z -> y^-1
      raw.push_back({Mono{m.i, -m.i - m.j}, c});
    } else {
      raw.push_back({m, c});  // localization
    }
  }
  return chart_reduce(raw, ChartId::U3, params);
}

ChartElement derivation_of_var(ChartId chart, char var, const CurveParams& params) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  if (chart == ChartId::U1) {
    if (var == 'x')
      return chart_reduce({{Mono{0, 0}, 1}, {Mono{1, 1}, -2 * a}, {Mono{0, 2}, -3 * b}}, chart,
                          params);
    if (var == 'z') return chart_reduce({{Mono{2, 0}, 3}, {Mono{0, 2}, a}}, chart, params);
  } else {
    if (var == 'x') return chart_reduce({{Mono{0, 1}, -2}}, chart, params);
    if (var == 'y') return chart_reduce({{Mono{2, 0}, -3}, {Mono{0, 0}, -a}}, chart, params);
  }
  throw ChartMismatchError(std::string("unknown coordinate '") + var + "' on " + chart_name(chart));
}

RawPoly raw_derivative(ChartId chart, const RawPoly& raw, const CurveParams& params) {
  // d(x^i s^j) = i x^(i-1) s^j d(x) + j x^i s^(j-1) d(s); the power rule is
  // valid for negative j as well. No reduction so tests can differentiate
  // the chart relation itself.
  const ChartElement dx = derivation_of_var(chart, 'x', params);
  const ChartElement ds = derivation_of_var(chart, chart_second_var(chart), params);
  RawPoly out;
  for (const auto& [m, c] : raw) {
    if (m.i != 0)
      for (const auto& [dm, dc] : dx.coeffs)
        out.push_back({Mono{m.i - 1 + dm.i, m.j + dm.j}, c * m.i * dc});
    if (m.j != 0)
      for (const auto& [dm, dc] : ds.coeffs)
        out.push_back({Mono{m.i + dm.i, m.j - 1 + dm.j}, c * m.j * dc});
  }
  return out;
}

ChartElement apply_derivation(ChartId chart, const ChartElement& u, const CurveParams& params) {
  RawPoly raw(u.coeffs.begin(), u.coeffs.end());
  return chart_reduce(raw_derivative(chart, raw, params), chart, params);
}

RawPoly chart_relation(ChartId chart, const CurveParams& params) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  if (chart == ChartId::U1)
    return {{Mono{0, 1}, 1}, {Mono{3, 0}, -1}, {Mono{1, 2}, -a}, {Mono{0, 3}, -b}};
  return {{Mono{0, 2}, 1}, {Mono{3, 0}, -1}, {Mono{1, 0}, -a}, {Mono{0, 0}, -b}};
}

std::vector<Mono> monomial_box(ChartId chart, int d) {
  std::vector<Mono> box;
  switch (chart) {
    case ChartId::U1:
      for (int i = 0; i <= std::min(2, d); ++i)
        for (int j = 0; i + j <= d; ++j) box.push_back(Mono{i, j});
      break;
    case ChartId::U2:
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= 1 && i + j <= d; ++j) box.push_back(Mono{i, j});
      break;
    case ChartId::U3:
      for (int i = 0; i <= std::min(2, d); ++i)
        for (int j = -(d - i); j <= d - i; ++j) box.push_back(Mono{i, j});
      break;
  }
  std::sort(box.begin(), box.end(), MonoLess{});
  return box;
}

std::string mono_to_string(ChartId chart, const Mono& m) {
  if (m.i == 0 && m.j == 0) return "1";
  std::string s;
  if (m.i != 0) {
    s += "x";
    if (m.i != 1) s += "^" + std::to_string(m.i);
  }
  if (m.j != 0) {
    if (!s.empty()) s += "*";
    s += chart_second_var(chart);
    if (m.j != 1) s += "^" + std::to_string(m.j);
  }
  return s;
}

std::string element_to_string(const ChartElement& u) {
  if (u.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : u.coeffs) {
    const bool first = s.empty();
    Rational abs = c < 0 ? Rational(-c) : c;
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const std::string ms = mono_to_string(u.chart, m);
    if (ms == "1") {
      s += rational_to_string(abs);
    } else {
      if (abs != 1) s += rational_to_string(abs) + "*";
      s += ms;
    }
  }
  return s;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char take() {
    skip_ws();
    return text[pos++];
  }

  Integer parse_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = take() == '-';
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected integer at position " + std::to_string(pos));
    Integer v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return neg ? -v : v;
  }

  // number := int [ '/' int ]
  Rational parse_number() {
    Integer num = parse_int();
    if (peek() == '/') {
      take();
      Integer den = parse_int();
      if (den == 0) throw ParseError("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  // factor := var [ '^' int ]
  void parse_var_factor(ChartId chart, Mono& m) {
    const char v = take();
    if (v != 'x' && v != chart_second_var(chart))
      throw ParseError(std::string("unexpected variable '") + v + "' on " + chart_name(chart));
    int exp = 1;
    if (peek() == '^') {
      take();
      exp = static_cast<int>(parse_int());
    }
    if (v == 'x') m.i += exp;
    else m.j += exp;
  }

  // term := [number] { '*' factor } | factor { '*' factor }
  std::pair<Mono, Rational> parse_term(ChartId chart) {
    Rational coeff(1);
    Mono m{0, 0};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_number();
      any = true;
    } else if (peek() == 'x' || peek() == chart_second_var(chart)) {
      parse_var_factor(chart, m);
      any = true;
    }
    if (!any) throw ParseError("expected term at position " + std::to_string(pos));
    while (peek() == '*') {
      take();
      parse_var_factor(chart, m);
    }
    return {m, coeff};
  }
};

}  // namespace

ChartElement parse_element(std::string_view text, ChartId chart, const CurveParams& params) {
  Parser p{text};
  RawPoly raw;
  int sign = 1;
  if (p.peek() == '+' || p.peek() == '-') sign = p.take() == '-' ? -1 : 1;
  if (p.done()) throw ParseError("empty element");
  while (true) {
    auto [m, c] = p.parse_term(chart);
    raw.push_back({m, sign * c});
    if (p.done()) break;
    const char op = p.take();
    if (op == '+') sign = 1;
    else if (op == '-') sign = -1;
    else throw ParseError(std::string("unexpected character '") + op + "'");
    if (p.done()) throw ParseError("dangling operator");
  }
  return chart_reduce(raw, chart, params);
}

}  // namespace dmod
