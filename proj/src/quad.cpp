#include "ellcy/quad.hpp"

#include <ostream>
#include <sstream>

#include "ellcy/intfactor.hpp"

namespace ellcy {

std::pair<Rat, Int> rat_sqrt_decompose(const Rat& r) {
  if (is_zero(r)) return {Rat(0), Int(1)};
  // r = n/m = (n*m)/m^2, so decompose the integer n*m.
  Int nm = num(r) * den(r);
  FactoredInteger f = integer_factor(nm);
  Int s{1}, d0{f.sign};
  for (const auto& [p, e] : f.factors) {
    s *= ipow(p, unsigned(e / 2));
    if (e % 2) d0 *= p;
  }
  return {Rat(s, den(r)), d0};
}

std::optional<Rat> rat_sqrt(const Rat& r) {
  auto [s, d0] = rat_sqrt_decompose(r);
  if (d0 == 1) return s;
  return std::nullopt;
}

QuadElem::QuadElem(const Rat& a_, const Rat& b_, const Int& d_) : a(a_), b(b_), d(d_) {
  if (b.is_zero() || d == 1) {
    if (!b.is_zero()) a += b;  // sqrt(1) == 1
    b = 0;
    d = 1;
    return;
  }
  if (d == 0) {
    b = 0;
    d = 1;
    return;
  }
  // Normalize d to its squarefree core, folding the square part into b.
  FactoredInteger f = integer_factor(d);
  Int s{1}, core{f.sign};
  for (const auto& [p, e] : f.factors) {
    s *= ipow(p, unsigned(e / 2));
    if (e % 2) core *= p;
  }
  if (core == 1) {
    a += b * s;
    b = 0;
    d = 1;
  } else {
    b *= s;
    d = core;
  }
}

namespace {

// Unifies the fields of two operands; throws if they genuinely differ.
Int common_d(const QuadElem& x, const QuadElem& y) {
  if (x.d == y.d) return x.d;
  if (x.d == 1) return y.d;
  if (y.d == 1) return x.d;
  throw std::domain_error("QuadElem: mixing sqrt(" + x.d.str() + ") with sqrt(" +
                          y.d.str() + ")");
}

}  // namespace

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  return QuadElem(x.a + y.a, x.b + y.b, common_d(x, y));
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  return QuadElem(x.a - y.a, x.b - y.b, common_d(x, y));
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  Int d = common_d(x, y);
  return QuadElem(x.a * y.a + Rat(d) * x.b * y.b, x.a * y.b + x.b * y.a, d);
}

QuadElem conj(const QuadElem& x) { return QuadElem(x.a, -x.b, x.d); }

Rat field_norm(const QuadElem& x) { return x.a * x.a - Rat(x.d) * x.b * x.b; }

QuadElem inverse(const QuadElem& x) {
  if (x.is_zero()) throw std::domain_error("QuadElem: inverse of zero");
  Rat n = field_norm(x);
  return QuadElem(x.a / n, -x.b / n, x.d);
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
  if (y.is_zero()) throw std::domain_error("QuadElem: division by zero");
  return x * inverse(QuadElem(y.a, y.b, common_d(x, y)));
}

std::optional<QuadElem> quad_sqrt(const QuadElem& x) {
  if (x.is_zero()) return QuadElem(0);
  if (x.b.is_zero()) {
    // sqrt of a rational: either rational, or b*sqrt(d) with d the ambient
    // core (x = d * square).
    auto [s, core] = rat_sqrt_decompose(x.a);
    if (core == 1) return QuadElem(s);
    if (core == x.d) return QuadElem(Rat(0), s, x.d);
    return std::nullopt;
  }
  // (u + v sqrt(d))^2 = x requires u^2 = (a +- sqrt(N))/2 with N = norm(x).
  std::optional<Rat> sn = rat_sqrt(field_norm(x));
  if (!sn) return std::nullopt;
  for (int sgn : {+1, -1}) {
    Rat u2 = (x.a + Rat(sgn) * *sn) / 2;
    std::optional<Rat> u = rat_sqrt(u2);
    if (!u || u->is_zero()) continue;
    Rat v = x.b / (2 * *u);
    QuadElem cand(*u, v, x.d);
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

std::optional<Rat> as_rational(const QuadElem& x) {
  if (x.d == 1) return x.a;
  return std::nullopt;
}

std::string to_string(const QuadElem& x) {
  if (x.d == 1) return to_string(x.a);
  Int c = lcm(den(x.a), den(x.b));
  Int A = num(x.a) * (c / den(x.a));
  Int B = num(x.b) * (c / den(x.b));
  std::ostringstream os;
  os << "(" << A.str() << (B < 0 ? "-" : "+") << Int(abs(B)).str() << "*sqrt("
     << x.d.str() << "))";
  if (c != 1) os << "/" << c.str();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
  return os << to_string(x);
}

}  // namespace ellcy
