#include "ellcy/weier.hpp"

#include <stdexcept>

namespace ellcy {

CInvariants c_invariants(const WeierstrassModel& m) {
  CInvariants r;
  const PolyK &a1 = m.a1, &a2 = m.a2, &a3 = m.a3, &a4 = m.a4, &a6 = m.a6;
  r.b2 = a1 * a1 + QuadElem(4) * a2;
  r.b4 = QuadElem(2) * a4 + a1 * a3;
  r.b6 = a3 * a3 + QuadElem(4) * a6;
  r.b8 = a1 * a1 * a6 + QuadElem(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 -
         a4 * a4;
  r.c4 = r.b2 * r.b2 - QuadElem(24) * r.b4;
  r.c6 = -(r.b2 * r.b2 * r.b2) + QuadElem(36) * r.b2 * r.b4 - QuadElem(216) * r.b6;
  r.disc = -(r.b2 * r.b2 * r.b8) - QuadElem(8) * (r.b4 * r.b4 * r.b4) -
           QuadElem(27) * (r.b6 * r.b6) + QuadElem(9) * r.b2 * r.b4 * r.b6;
  return r;
}

WeierstrassModel quadratic_twist(const WeierstrassModel& m, const PolyK& g_num,
                                 const PolyK& g_den) {
  if (g_num.zero() || g_den.zero())
    throw std::domain_error("quadratic_twist: twisting function must be nonzero");
  CInvariants ci = c_invariants(m);
  // g = n/e acts like n*e modulo squares.
  PolyK g = g_num * g_den;
  WeierstrassModel out;
  out.field_d = m.field_d;
  out.parameter = m.parameter;
  // Short form y^2 = x^3 - 27 c4 x - 54 c6 (an admissible rescaling of m),
  // then (A, B) -> (g^2 A, g^3 B).
  out.a1 = PolyK();
  out.a2 = PolyK();
  out.a3 = PolyK();
  out.a4 = QuadElem(-27) * ci.c4 * g * g;
  out.a6 = QuadElem(-54) * ci.c6 * g * g * g;
  return out;
}

namespace {

/// Common quadratic-field marker of two values; mixing two genuinely
/// different fields is an error.
Int join_field(const Int& d1, const Int& d2) {
  if (d1 == 1 || d1 == d2) return d2;
  if (d2 == 1) return d1;
  throw std::domain_error("mobius_transport: mixing different quadratic fields");
}

}  // namespace

WeierstrassModel mobius_transport(const WeierstrassModel& m, const MobiusMap& mu) {
  const int k = infinity_weight(m);
  PolyK numer({mu.b, mu.a});  // a*t + b
  PolyK denom({mu.d, mu.c});  // c*t + d
  auto substitute = [&](const PolyK& p, int weight) {
    // (c t + d)^{weight} * p((a t + b)/(c t + d)); weight >= deg p.
    PolyK acc;
    PolyK dp(QuadElem(1));
    for (int i = 0; i <= p.degree(); ++i) {
      // numer^i * denom^{weight - i}
      PolyK term(p[i]);
      term *= dp;
      PolyK dd(QuadElem(1));
      for (int j = 0; j < weight - i; ++j) dd *= denom;
      acc += term * dd;
      dp *= numer;
    }
    return acc;
  };
  WeierstrassModel out;
  out.field_d = m.field_d;
  for (const QuadElem* e : {&mu.a, &mu.b, &mu.c, &mu.d})
    out.field_d = join_field(out.field_d, e->d);
  out.parameter = m.parameter;
  out.a1 = substitute(m.a1, k);
  out.a2 = substitute(m.a2, 2 * k);
  out.a3 = substitute(m.a3, 3 * k);
  out.a4 = substitute(m.a4, 4 * k);
  out.a6 = substitute(m.a6, 6 * k);
  return out;
}

int infinity_weight(const WeierstrassModel& m) {
  auto need = [](const PolyK& p, int w) {
    if (p.zero()) return 0;
    return (p.degree() + w - 1) / w;  // ceil(deg / w)
  };
  int k = 1;
  k = std::max(k, need(m.a1, 1));
  k = std::max(k, need(m.a2, 2));
  k = std::max(k, need(m.a3, 3));
  k = std::max(k, need(m.a4, 4));
  k = std::max(k, need(m.a6, 6));
  return k;
}

WeierstrassModel model_at_infinity(const WeierstrassModel& m) {
  const int k = infinity_weight(m);
  WeierstrassModel out;
  out.field_d = m.field_d;
  out.parameter = m.parameter;
  out.a1 = m.a1.reverse(k);
  out.a2 = m.a2.reverse(2 * k);
  out.a3 = m.a3.reverse(3 * k);
  out.a4 = m.a4.reverse(4 * k);
  out.a6 = m.a6.reverse(6 * k);
  return out;
}

}  // namespace ellcy
