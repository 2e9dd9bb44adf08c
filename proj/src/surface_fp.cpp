#include <algorithm>

#include "ellcy/surface.hpp"

namespace ellcy {

namespace {

FpPoly fp_reduce_polyk(const FpCtx& F, const PolyK& f, std::uint64_t sqrt_d) {
  FpPoly out(size_t(std::max(0, f.degree()) + 1), 0);
  for (int i = 0; i <= f.degree(); ++i) {
    const QuadElem& c = f[i];
    std::uint64_t v = F.reduce(c.a);
    if (!is_zero(c.b)) v = F.add(v, F.mul(F.reduce(c.b), sqrt_d));
    out[size_t(i)] = v;
  }
  return fp_trim(out);
}

struct FpInvariants {
  FpPoly c4, c6, disc;
};

FpInvariants fp_invariants(const FpCtx& F, const FpModel& m) {
  auto mul = [&](const FpPoly& a, const FpPoly& b) { return fp_mul(F, a, b); };
  auto add = [&](const FpPoly& a, const FpPoly& b) { return fp_add(F, a, b); };
  auto sub = [&](const FpPoly& a, const FpPoly& b) { return fp_sub(F, a, b); };
  auto sc = [&](const FpPoly& a, std::uint64_t s) { return fp_scale(F, a, F.reduce(Int(s))); };

  FpPoly b2 = add(mul(m.a1, m.a1), sc(m.a2, 4));
  FpPoly b4 = add(mul(m.a1, m.a3), sc(m.a4, 2));
  FpPoly b6 = add(mul(m.a3, m.a3), sc(m.a6, 4));
  FpPoly b8 = add(sub(add(mul(mul(m.a1, m.a1), m.a6), sc(mul(m.a2, m.a6), 4)),
                      mul(mul(m.a1, m.a3), m.a4)),
                  sub(mul(m.a2, mul(m.a3, m.a3)), mul(m.a4, m.a4)));

  FpInvariants out;
  out.c4 = sub(mul(b2, b2), sc(b4, 24));
  // c6 = -b2^3 + 36 b2 b4 - 216 b6
  out.c6 = sub(sub(sc(mul(b2, b4), 36), mul(b2, mul(b2, b2))), sc(b6, 216));
  out.disc = sub(sub(add(fp_scale(F, mul(mul(b2, b2), b8), F.p - 1),
                         sc(mul(b2, mul(b4, b6)), 9)),
                     sc(mul(b4, mul(b4, b4)), 8)),
                 sc(mul(b6, b6), 27));
  return out;
}

}  // namespace

FpModel reduce_mod_p(const WeierstrassModel& m, std::uint64_t p) {
  if (p <= 3)
    throw std::domain_error("reduce_mod_p: residue characteristic " +
                            std::to_string(p) + " unsupported (need p > 3)");
  FpCtx F(p);
  std::uint64_t sd = 0;
  if (m.field_d != 1) {
    std::uint64_t dm = F.reduce(m.field_d);
    if (dm != 0) {
      auto r = F.sqrt(dm);
      if (!r)
        throw InertPrimeError("inert - skipped: " + to_string(m.field_d) +
                              " is a quadratic non-residue mod " + std::to_string(p));
      sd = *r;
    }
  }
  FpModel out;
  out.p = p;
  out.sqrt_d = sd;
  out.a1 = fp_reduce_polyk(F, m.a1, sd);
  out.a2 = fp_reduce_polyk(F, m.a2, sd);
  out.a3 = fp_reduce_polyk(F, m.a3, sd);
  out.a4 = fp_reduce_polyk(F, m.a4, sd);
  out.a6 = fp_reduce_polyk(F, m.a6, sd);
  return out;
}

FpSurfaceAnalysis analyze_surface_fp(const FpModel& m) {
  FpCtx F(m.p);
  FpInvariants ci = fp_invariants(F, m);
  if (fp_is_zero(ci.disc))
    throw std::domain_error("analyze_surface_fp: discriminant is identically 0 mod " +
                            std::to_string(m.p));

  FpSurfaceAnalysis out;
  out.p = m.p;

  auto val_of = [&](const FpPoly& f, const FpPoly& g) -> std::optional<int> {
    if (fp_is_zero(f)) return std::nullopt;
    return fp_valuation(F, f, g);
  };

  for (const auto& [g, mult] : fp_factor(F, ci.disc)) {
    MinimalValuations mv =
        minimalize_valuations(val_of(ci.c4, g), val_of(ci.c6, g), mult);
    if (mv.vdisc == 0) continue;
    FiberType t = classify_fiber(mv.vc4, mv.vc6, mv.vdisc);
    out.fibers.push_back({false, g, fp_deg(g), t, mv.vdisc});
  }

  // Infinity: with homogenization weight k, the reversed invariants have
  // trailing valuations i*k - deg at s = 0.
  {
    int k = 1;
    const FpPoly* as[5] = {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6};
    const int wt[5] = {1, 2, 3, 4, 6};
    for (int i = 0; i < 5; ++i) {
      int d = fp_deg(*as[i]);
      if (d > 0) k = std::max(k, (d + wt[i] - 1) / wt[i]);
    }
    auto vinf = [&](const FpPoly& f, int w) -> std::optional<int> {
      if (fp_is_zero(f)) return std::nullopt;
      return w * k - fp_deg(f);
    };
    MinimalValuations mv = minimalize_valuations(vinf(ci.c4, 4), vinf(ci.c6, 6),
                                                 *vinf(ci.disc, 12));
    if (mv.vdisc > 0) {
      FiberType t = classify_fiber(mv.vc4, mv.vc6, mv.vdisc);
      out.fibers.push_back({true, FpPoly{}, 1, t, mv.vdisc});
    }
  }

  for (const FpFiber& f : out.fibers) {
    out.euler += f.degree * f.v_disc;
    if (is_semistable(f.type)) out.semistable_count += f.degree;
    if (is_starred(f.type)) out.has_starred = true;
  }
  return out;
}

}  // namespace ellcy
