#include "ellcy/matching.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "ellcy/fp.hpp"
#include "ellcy/fppoly.hpp"
#include "ellcy/polyroots.hpp"
#include "ellcy/surface.hpp"

namespace ellcy {
namespace {

/// Bivariate over the quadratic field: outer variable u, inner variable m.
using BiK = Poly<PolyK>;

PolyK conj_poly(const PolyK& p) {
  PolyK r;
  for (int i = 0; i <= p.degree(); ++i) r.set(i, conj(p[i]));
  return r;
}

template <class K>
Poly<K> radical(const Poly<K>& p) {
  Poly<K> r(K(1));
  for (const auto& [f, mult] : squarefree_decompose(p)) r *= f;
  return r;
}

/// f(t, m) at t = v: a polynomial in m over the field of v.
PolyK eval_outer(const BiPoly& f, const QuadElem& v) {
  PolyK r;
  QuadElem pw(1);
  for (int i = 0; i <= f.degree(); ++i) {
    r += lift(f[i]) * pw;
    pw = pw * v;
  }
  return r;
}

/// f(t, m) at m = m0: a polynomial in t.
PolyK specialize_inner(const BiPoly& f, const QuadElem& m0) {
  PolyK r;
  for (int i = 0; i <= f.degree(); ++i) r.set(i, lift(f[i]).eval(m0));
  return r;
}

BiK embed(const BiPoly& f) {
  BiK r;
  for (int i = 0; i <= f.degree(); ++i) r.set(i, lift(f[i]));
  return r;
}

/// f(lambda * u, m) as a bivariate polynomial in u over the field.
BiK scale_embed(const BiPoly& f, const QuadElem& lambda) {
  BiK r;
  QuadElem pw(1);
  for (int i = 0; i <= f.degree(); ++i) {
    r.set(i, lift(f[i]) * pw);
    pw = pw * lambda;
  }
  return r;
}

/// Divide r by gcd(r, base^N), N grown until the gcd stabilizes.
PolyK strip_stabilized(PolyK r, const PolyK& base) {
  if (r.zero() || base.degree() < 1) return r;
  PolyK pw = base;
  PolyK g = poly_gcd(r, pw);
  for (;;) {
    pw = pw * base;
    PolyK g2 = poly_gcd(r, pw);
    if (g2.degree() == g.degree()) break;
    g = std::move(g2);
  }
  if (g.degree() >= 1) r = exact_div(r, g);
  return monic(r);
}

/// Does the member at m0 have a root u0 != 0 of B with lambda*u0 a root of A?
/// nullopt when the check cannot be carried out exactly (m0 lives in a
/// quadratic field incompatible with lambda's).
std::optional<bool> ratio_holds(const BiPoly& A, const BiPoly& B,
                                const QuadElem& lambda, const QuadElem& m0) {
  try {
    PolyK am = specialize_inner(A, m0).scale_arg(lambda);  // A(lambda*u, m0)
    PolyK bm = specialize_inner(B, m0);
    PolyK g = poly_gcd(am, bm);
    // Shared roots at u = 0 do not witness a cusp ratio.
    while (g.degree() >= 1 && is_zero(g[0])) g = exact_div(g, PolyK::var());
    return g.degree() >= 1;
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

/// Explicit roots of a small polynomial over the field (used for the
/// leading-collapse locus). Roots beyond the reachable quadratic fields are
/// dropped -- callers only act on explicitly named points.
std::vector<QuadElem> explicit_roots(const PolyK& p, const Int& ambient_d) {
  std::vector<QuadElem> out;
  if (p.degree() < 1) return out;
  if (auto q = as_rational_poly(p)) {
    for (const QuadElem& r : poly_roots(*q).roots) out.push_back(r);
  } else {
    for (const QuadElem& r : poly_roots_in_field(p, ambient_d).roots)
      out.push_back(r);
  }
  std::vector<QuadElem> dedup;
  for (const QuadElem& r : out) {
    bool seen = false;
    for (const QuadElem& s : dedup) seen = seen || s == r;
    if (!seen) dedup.push_back(r);
  }
  return dedup;
}

/// Res_u(A(lambda*u, m), B(u, m)) with the spurious parts of the formal
/// Sylvester determinant removed:
///   - coincidences at u = 0 (both loci through t = 0), via the stabilized
///     gcd with the shared t = 0 locus value;
///   - the simultaneous leading-coefficient collapse, where the determinant
///     vanishes for degree reasons alone; genuine ratio solutions hiding on
///     that locus are checked directly and restored.
PolyK ratio_condition_impl(const BiPoly& A, const BiPoly& B,
                           const QuadElem& lambda) {
  PolyK r = poly_resultant(scale_embed(A, lambda), embed(B));
  if (r.zero())
    throw std::logic_error("ratio_condition: resultant vanished identically");
  r = monic(r);
  r = strip_stabilized(r, poly_gcd(lift(A[0]), lift(B[0])));
  PolyK collapse = poly_gcd(lift(A[A.degree()]), lift(B[B.degree()]));
  if (collapse.degree() >= 1) {
    r = strip_stabilized(r, collapse);
    for (const QuadElem& m0 : explicit_roots(collapse, lambda.d)) {
      auto ok = ratio_holds(A, B, lambda, m0);
      if (ok && *ok && !is_zero(r.eval(m0)))
        r = r * (PolyK::var() - PolyK(m0));
    }
  }
  return monic(r);
}

struct Branch {
  std::string tag;
  PolyK condition;  // polynomial in m over lambda's field
  // Ratio branches re-check explicit solutions against the loci directly.
  const BiPoly* verify_a = nullptr;
  const BiPoly* verify_b = nullptr;
};

std::vector<Branch> build_branches(FamilyId id, const QuadElem& lambda) {
  const FamilyModel& fam = family_model(id);
  std::vector<Branch> out;
  auto natural = [&](const MovingCusp& c) {
    out.push_back({"natural:" + to_string(c.type), eval_outer(c.locus, lambda),
                   nullptr, nullptr});
  };
  auto ratio = [&](const char* tag, const BiPoly& a, const BiPoly& b) {
    out.push_back({tag, ratio_condition_impl(a, b, lambda), &a, &b});
  };
  switch (id) {
    case FamilyId::f1234:
      // Already anchored: cusps at 0, 1, infinity are constant, so the
      // member's own coordinate is the normalized frame.
      natural(fam.moving[1]);  // I2 at -m/8: the linear branch
      natural(fam.moving[0]);  // I1 branch, cubic in m
      break;
    case FamilyId::f1117:
      natural(fam.moving[0]);
      // Scaling frames fix I7 at infinity and II at 0; the free position
      // is the ratio of two moving I1 roots.
      ratio("ratio:I1/I1", fam.moving[0].locus, fam.moving[0].locus);
      break;
    case FamilyId::f1126: {
      natural(fam.moving[0]);  // the I1 pair, quadratic locus
      natural(fam.moving[1]);  // I2
      const BiPoly& i1 = fam.moving[0].locus;
      const BiPoly& i2 = fam.moving[1].locus;
      ratio("ratio:I1/I2", i1, i2);
      ratio("ratio:I2/I1", i2, i1);
      ratio("ratio:I1/I1", i1, i1);
      break;
    }
    case FamilyId::f1135: {
      natural(fam.moving[0]);
      // Frames anchoring the constant cusps I3 at 0, II at 27, I5 at
      // infinity onto {0, 1, infinity}. Sending (I3, I5, II) to
      // (0, 1, inf) is t -> t/(t-27), with inverse s -> 27s/(s-1);
      // swapping the roles of I3 and I5 gives inverse s -> 27(s-1)/s.
      const QuadElem k27(27), one(1);
      QuadElem v1 = k27 * lambda / (lambda - one);
      QuadElem v2 = k27 * (lambda - one) / lambda;
      out.push_back({"anchored(I3=0,I5=1):I1",
                     eval_outer(fam.moving[0].locus, v1), nullptr, nullptr});
      out.push_back({"anchored(I5=0,I3=1):I1",
                     eval_outer(fam.moving[0].locus, v2), nullptr, nullptr});
      break;
    }
  }
  return out;
}

void push_solution(std::vector<MatchSolution>& out, std::set<std::string>& seen,
                   MatchSolution s) {
  std::string key;
  if (s.value)
    key = "v|" + to_string(*s.value);
  else if (s.min_poly)
    key = "m|" + to_string(*s.min_poly, "m");
  else
    key = "r|" + std::to_string(*s.residue);
  if (seen.insert(key).second) out.push_back(std::move(s));
}

void emit_exact(const Branch& br, const QuadElem& lambda,
                std::vector<MatchSolution>& out, std::set<std::string>& seen) {
  const PolyK& p = br.condition;
  if (p.zero())
    throw std::logic_error("match_parameter: branch condition vanished");
  if (p.degree() == 0) return;

  auto push_value = [&](const QuadElem& v) {
    if (br.verify_a) {
      auto ok = ratio_holds(*br.verify_a, *br.verify_b, lambda, v);
      if (ok && !*ok) return;  // spurious resultant root
    }
    push_solution(out, seen, {v, std::nullopt, std::nullopt, 0, br.tag});
  };
  auto push_minpoly = [&](const PolyQ& f) {
    push_solution(out, seen, {std::nullopt, f, std::nullopt, 0, br.tag});
  };

  if (auto q = as_rational_poly(p)) {
    for (const PolyQ& f : factor_squarefree_rational(radical(*q))) {
      if (f.degree() <= 2)
        for (const QuadElem& v : poly_roots(f).roots) push_value(v);
      else
        push_minpoly(f);
    }
    return;
  }

  // Quadratic-field coefficients: pass to Q through the conjugate norm,
  // then sort each rational factor by how it meets the actual condition.
  PolyK pr = radical(p);
  auto norm = as_rational_poly(pr * conj_poly(pr));
  if (!norm)
    throw std::logic_error("match_parameter: conjugate norm not rational");
  for (const PolyQ& f : factor_squarefree_rational(radical(*norm))) {
    PolyK g = poly_gcd(pr, lift(f));
    if (g.degree() == 0) continue;  // root of the conjugate condition only
    if (g.degree() == f.degree()) {
      // The rational factor divides outright; its roots may live in their
      // own quadratic field, which explicit extraction handles directly.
      if (f.degree() <= 2)
        for (const QuadElem& v : poly_roots(f).roots) push_value(v);
      else
        push_minpoly(f);
    } else if (g.degree() <= 2) {
      RootsResultK rk = poly_roots_in_field(g, lambda.d);
      for (const QuadElem& v : rk.roots) push_value(v);
      for (const PolyK& rem : rk.residual) {
        if (auto rq = as_rational_poly(rem))
          push_minpoly(*rq);
        else
          push_minpoly(f);  // rational closure of the surviving roots
      }
    } else {
      push_minpoly(f);
    }
  }
}

void emit_mod_p(const Branch& br, const FpCtx& F,
                const std::optional<std::uint64_t>& sd,
                std::vector<MatchSolution>& out, std::set<std::string>& seen) {
  FpPoly f;
  try {
    for (int i = 0; i <= br.condition.degree(); ++i) {
      const QuadElem& c = br.condition[i];
      std::uint64_t r = F.reduce(c.a);
      if (!(c.b == Rat(0))) {
        if (!sd)
          throw std::logic_error("match_parameter: quadratic coefficient "
                                 "without a square root mod p");
        r = F.add(r, F.mul(*sd, F.reduce(c.b)));
      }
      f.push_back(r);
    }
  } catch (const std::domain_error&) {
    return;  // p meets a coefficient denominator: branch not defined mod p
  }
  f = fp_trim(std::move(f));
  if (fp_is_zero(f) || fp_deg(f) == 0) return;  // branch degenerates mod p
  for (const auto& [fac, mult] : fp_factor(F, f))
    if (fp_deg(fac) == 1)
      push_solution(out, seen,
                    {std::nullopt, std::nullopt, F.neg(fac[0]), F.p, br.tag});
}

}  // namespace

MatchMode MatchMode::mod_p(std::uint64_t p) {
  MatchMode m;
  m.exact = false;
  m.p = p;
  return m;
}

std::vector<MatchSolution> match_parameter(FamilyId id, const QuadElem& lambda,
                                           const MatchMode& mode) {
  if (lambda == QuadElem(0) || lambda == QuadElem(1))
    throw std::domain_error("match_parameter: position must avoid 0 and 1");

  std::vector<MatchSolution> out;
  std::set<std::string> seen;

  if (mode.exact) {
    for (const Branch& br : build_branches(id, lambda))
      emit_exact(br, lambda, out, seen);
    return out;
  }

  if (mode.p <= 3)
    throw std::domain_error("match_parameter: mod-p mode requires p > 3");
  FpCtx F(mode.p);
  std::optional<std::uint64_t> sd;
  if (!lambda.is_rational()) {
    std::uint64_t dr = F.reduce(Int(lambda.d));
    if (dr == 0) {
      sd = 0;  // ramified: the square root collapses to 0
    } else {
      auto s = F.sqrt(dr);
      if (!s)
        throw InertPrimeError("match_parameter: field discriminant " +
                              lambda.d.str() + " is inert at " +
                              std::to_string(mode.p) + " -- skipped");
      sd = std::min(*s, mode.p - *s);
    }
  }
  std::uint64_t l0 = F.reduce(lambda.a);  // throws when p meets the denominator
  if (sd && !(lambda.b == Rat(0))) l0 = F.add(l0, F.mul(*sd, F.reduce(lambda.b)));
  if (l0 == 0 || l0 == 1)
    throw std::domain_error(
        "match_parameter: position degenerates to 0 or 1 mod " +
        std::to_string(mode.p));

  for (const Branch& br : build_branches(id, lambda))
    emit_mod_p(br, F, sd, out, seen);
  return out;
}

PolyK resultant_condition(const QuadElem& lambda) {
  if (lambda == QuadElem(0) || lambda == QuadElem(1))
    throw std::domain_error("resultant_condition: lambda must avoid 0 and 1");
  const BiPoly& locus = family_model(FamilyId::f1117).moving[0].locus;
  return ratio_condition_impl(locus, locus, lambda);
}

}  // namespace ellcy
