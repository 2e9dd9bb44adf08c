#include "ellcy/polyroots.hpp"

#include <sstream>

#include "ellcy/intfactor.hpp"

namespace ellcy {

std::optional<PolyQ> as_rational_poly(const PolyK& p) {
  PolyQ r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (!p[i].is_rational()) return std::nullopt;
    r.set(i, p[i].a);
  }
  return r;
}

namespace {

template <class P>
std::string poly_to_string(const P& p, const std::string& var) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    if (is_zero(p[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(p[i]) << ")";
    if (i == 1) os << "*" << var;
    if (i > 1) os << "*" << var << "^" << i;
  }
  return os.str();
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{1};
  for (const auto& [p, e] : integer_factor(n).factors) {
    size_t base = out.size();
    Int pw{1};
    for (int k = 1; k <= e; ++k) {
      pw *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

/// All rational roots with multiplicity; deflates p in place.
std::vector<Rat> extract_rational_roots(PolyQ& p) {
  std::vector<Rat> roots;
  if (p.degree() < 1) return roots;
  // Pull out x = 0 first.
  while (p.degree() >= 1 && is_zero(p[0])) {
    roots.emplace_back(0);
    PolyQ q;
    for (int i = 1; i <= p.degree(); ++i) q.set(i - 1, p[i]);
    p = q;
  }
  if (p.degree() < 1) return roots;
  // Clear denominators: candidates num/den with num | a0, den | an.
  Int scale{1};
  for (int i = 0; i <= p.degree(); ++i) scale = lcm(scale, den(p[i]));
  PolyQ zp = p * Rat(scale);
  Int a0 = num(zp[0]), an = num(zp[zp.degree()]);
  for (const Int& dn : divisors(abs(a0))) {
    for (const Int& dd : divisors(abs(an))) {
      for (int sgn : {1, -1}) {
        Rat cand(sgn * dn, dd);
        while (p.degree() >= 1 && is_zero(p.eval(cand))) {
          roots.push_back(cand);
          auto [q, r] = poly_divmod(p, PolyQ({-cand, Rat(1)}));
          p = q;
          (void)r;
        }
      }
    }
  }
  return roots;
}

/// Roots of a quadratic over Q as elements of Q(sqrt(core)).
std::vector<QuadElem> quadratic_roots(const PolyQ& g) {
  Rat a = g[2], b = g[1], c = g[0];
  Rat disc = b * b - 4 * a * c;
  auto [s, core] = rat_sqrt_decompose(disc);
  QuadElem sq = core == 1 ? QuadElem(s) : QuadElem(Rat(0), s, core);
  QuadElem r1 = (QuadElem(-b) + sq) / QuadElem(2 * a);
  QuadElem r2 = (QuadElem(-b) - sq) / QuadElem(2 * a);
  return {r1, r2};
}

/// Splits a monic rational quartic with no rational roots into two monic
/// rational quadratics, if such a factorization exists (resolvent cubic).
std::optional<std::pair<PolyQ, PolyQ>> quartic_split(const PolyQ& f) {
  Rat c3 = f[3];
  PolyQ dep = f.shift_arg(-c3 / 4);  // y^4 + p y^2 + q y + r
  Rat p = dep[2], q = dep[1], r = dep[0];
  auto assemble = [&](const PolyQ& u, const PolyQ& v) {
    // Map factors of the depressed quartic back to factors of f.
    return std::make_pair(u.shift_arg(c3 / 4), v.shift_arg(c3 / 4));
  };
  if (is_zero(q)) {
    // Biquadratic: y^4 + p y^2 + r = (y^2 + b)(y^2 + c).
    std::optional<Rat> s = rat_sqrt(p * p - 4 * r);
    if (s) {
      Rat b = (p - *s) / 2, c = (p + *s) / 2;
      return assemble(PolyQ({b, Rat(0), Rat(1)}), PolyQ({c, Rat(0), Rat(1)}));
    }
    // Fall through: a split with nonzero linear terms may still exist.
  }
  // (y^2 + a y + b)(y^2 - a y + c): u = a^2 is a root of the resolvent
  // u^3 + 2p u^2 + (p^2 - 4r) u - q^2.
  PolyQ resolvent({-q * q, p * p - 4 * r, 2 * p, Rat(1)});
  PolyQ work = resolvent;
  for (const Rat& u : extract_rational_roots(work)) {
    if (u <= 0) continue;
    std::optional<Rat> a = rat_sqrt(u);
    if (!a) continue;
    Rat b = (p + u - q / *a) / 2;
    Rat c = (p + u + q / *a) / 2;
    PolyQ f1({b, *a, Rat(1)}), f2({c, -*a, Rat(1)});
    if (f1 * f2 == dep) return assemble(f1, f2);
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(const PolyQ& p, const std::string& var) {
  return poly_to_string(p, var);
}
std::string to_string(const PolyK& p, const std::string& var) {
  return poly_to_string(p, var);
}

std::vector<PolyQ> factor_squarefree_rational(const PolyQ& p_in) {
  std::vector<PolyQ> out;
  PolyQ p = monic(p_in);
  for (const Rat& r : extract_rational_roots(p)) out.push_back(PolyQ({-r, Rat(1)}));
  switch (p.degree()) {
    case -1:
    case 0:
      break;
    case 2: {
      if (rat_sqrt(p[1] * p[1] - 4 * p[2] * p[0])) {
        PolyQ work = p;
        for (const Rat& r : extract_rational_roots(work))
          out.push_back(PolyQ({-r, Rat(1)}));
      } else {
        out.push_back(p);
      }
      break;
    }
    case 4: {
      if (auto split = quartic_split(p)) {
        out.push_back(split->first);
        out.push_back(split->second);
      } else {
        out.push_back(p);
      }
      break;
    }
    default:
      out.push_back(p);  // degree 3 certified irreducible; >= 5 opaque
      break;
  }
  return out;
}

RootsResult poly_roots(const PolyQ& p) {
  if (p.zero()) throw std::domain_error("poly_roots: zero polynomial");
  RootsResult out;
  for (const auto& [layer, mult] : squarefree_decompose(p)) {
    for (const PolyQ& f : factor_squarefree_rational(layer)) {
      std::vector<QuadElem> roots;
      if (f.degree() == 1) {
        roots.push_back(QuadElem(-f[0] / f[1]));
      } else if (f.degree() == 2) {
        roots = quadratic_roots(f);
        if (roots[0].is_rational()) roots.clear();  // already covered
        if (roots.empty()) {
          // Defensive: a reducible quadratic reaches here only through
          // factor_squarefree_rational bugs.
          throw std::logic_error("poly_roots: unexpected reducible quadratic");
        }
      } else {
        for (int i = 0; i < mult; ++i) out.residual.push_back(f);
        continue;
      }
      for (const QuadElem& r : roots)
        for (int i = 0; i < mult; ++i) out.roots.push_back(r);
    }
  }
  return out;
}

RootsResultK poly_roots_in_field(const PolyK& p, const Int& ambient_d) {
  if (p.zero()) throw std::domain_error("poly_roots_in_field: zero polynomial");
  RootsResultK out;
  auto emit_layer = [&](const PolyK& g, int mult) {
    // g monic squarefree over the ambient field.
    PolyK rem = g;
    std::vector<QuadElem> found;
    if (auto gq = as_rational_poly(g)) {
      for (const PolyQ& f : factor_squarefree_rational(*gq)) {
        if (f.degree() == 1) {
          found.push_back(QuadElem(-f[0] / f[1]));
        } else if (f.degree() == 2) {
          std::vector<QuadElem> rs = quadratic_roots(f);
          if (rs[0].d == ambient_d || rs[0].is_rational()) {
            found.insert(found.end(), rs.begin(), rs.end());
          } else {
            out.residual.insert(out.residual.end(), size_t(mult), lift(f));
          }
        } else {
          out.residual.insert(out.residual.end(), size_t(mult), lift(f));
        }
      }
    } else {
      // Genuinely quadratic coefficients: peel linears, solve quadratics,
      // then fall back to norm descent through the rational polynomial g*conj(g).
      while (rem.degree() >= 1) {
        if (rem.degree() == 1) {
          found.push_back(-rem[0] / rem[1]);
          rem = PolyK(QuadElem(1));
          break;
        }
        if (rem.degree() == 2) {
          QuadElem disc = rem[1] * rem[1] - QuadElem(4) * rem[2] * rem[0];
          if (auto sq = quad_sqrt(disc)) {
            found.push_back((-rem[1] + *sq) / (QuadElem(2) * rem[2]));
            found.push_back((-rem[1] - *sq) / (QuadElem(2) * rem[2]));
            rem = PolyK(QuadElem(1));
          }
          break;
        }
        PolyK cj;
        for (int i = 0; i <= rem.degree(); ++i) cj.set(i, conj(rem[i]));
        PolyK normpoly = rem * cj;
        auto nq = as_rational_poly(normpoly);
        if (!nq) throw std::logic_error("poly_roots_in_field: norm not rational");
        bool progressed = false;
        for (const QuadElem& cand : poly_roots(*nq).roots) {
          if (!(cand.is_rational() || cand.d == ambient_d)) continue;
          while (rem.degree() >= 1 && is_zero(rem.eval(cand))) {
            found.push_back(cand);
            auto [q, r] = poly_divmod(rem, PolyK({-cand, QuadElem(1)}));
            rem = q;
            (void)r;
            progressed = true;
          }
        }
        if (!progressed) break;
      }
      if (rem.degree() >= 1) out.residual.insert(out.residual.end(), size_t(mult), monic(rem));
    }
    for (const QuadElem& r : found)
      out.roots.insert(out.roots.end(), size_t(mult), r);
  };
  for (const auto& [layer, mult] : squarefree_decompose(p)) emit_layer(layer, mult);
  return out;
}

}  // namespace ellcy
