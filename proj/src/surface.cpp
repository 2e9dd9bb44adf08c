#include "ellcy/surface.hpp"

#include <algorithm>
#include <sstream>

#include "ellcy/polyroots.hpp"

namespace ellcy {

namespace {

/// v_h(f) by repeated exact division; f nonzero, h monic of degree >= 1.
int valuation_at(PolyK f, const PolyK& h) {
  int v = 0;
  for (;;) {
    auto [q, r] = poly_divmod(f, h);
    if (!r.zero()) return v;
    f = q;
    ++v;
    if (v > 1 << 12) throw std::logic_error("valuation_at: runaway valuation");
  }
}

/// Splits a monic squarefree h into pieces on which v(f) is constant,
/// reporting that shared valuation (nullopt when f is identically zero).
std::vector<std::pair<PolyK, std::optional<int>>> split_by_valuation(const PolyK& h0,
                                                                     const PolyK& f) {
  std::vector<std::pair<PolyK, std::optional<int>>> out;
  if (f.zero()) {
    out.emplace_back(h0, std::nullopt);
    return out;
  }
  PolyK cur_h = monic(h0), cur_f = f;
  int v = 0;
  while (cur_h.degree() >= 1) {
    PolyK u = poly_gcd(cur_h, cur_f);
    PolyK piece = exact_div(cur_h, u);
    if (piece.degree() >= 1) out.emplace_back(monic(piece), v);
    if (u.degree() < 1) break;
    cur_f = exact_div(cur_f, u);
    cur_h = u;
    ++v;
    if (v > 1 << 12) throw std::logic_error("split_by_valuation: runaway valuation");
  }
  return out;
}

/// Trailing valuation at s = 0; nullopt for the zero polynomial.
std::optional<int> valuation_at_zero(const PolyK& f) {
  if (f.zero()) return std::nullopt;
  for (int i = 0; i <= f.degree(); ++i)
    if (!is_zero(f[i])) return i;
  throw std::logic_error("valuation_at_zero: unnormalized polynomial");
}

struct ClassifiedCluster {
  PolyK h;
  FiberType type;
  int v_disc_min = 0;
};

std::string place_sort_key(const Place& p) {
  return to_string(p);
}

void sort_fibers(std::vector<KodairaFiber>& fibers) {
  std::stable_sort(fibers.begin(), fibers.end(),
                   [](const KodairaFiber& x, const KodairaFiber& y) {
                     if (x.place.at_infinity != y.place.at_infinity)
                       return y.place.at_infinity;
                     auto kx = std::tuple(x.v_disc, x.components, x.place.degree,
                                          place_sort_key(x.place));
                     auto ky = std::tuple(y.v_disc, y.components, y.place.degree,
                                          place_sort_key(y.place));
                     return kx < ky;
                   });
}

}  // namespace

std::string to_string(const Place& p) {
  if (p.at_infinity) return "infinity";
  if (p.value) return to_string(*p.value);
  return "root of " + to_string(p.minpoly, "t");
}

const KodairaFiber* SurfaceAnalysis::fiber_at(const PValue& v) const {
  for (const KodairaFiber& f : fibers) {
    if (v.infinite) {
      if (f.place.at_infinity) return &f;
      continue;
    }
    if (f.place.at_infinity) continue;
    try {
      if (is_zero(f.place.minpoly.eval(v.v))) return &f;
    } catch (const std::domain_error&) {
      // Incompatible quadratic fields: the value cannot lie on this place.
    }
  }
  return nullptr;
}

SurfaceAnalysis analyze_surface(const WeierstrassModel& m) {
  CInvariants ci = c_invariants(m);
  if (ci.disc.zero())
    throw std::domain_error(
        "analyze_surface: discriminant vanishes identically (degenerate model)");

  SurfaceAnalysis out;
  out.field_d = m.field_d;

  // Finite places: squarefree layers of the discriminant, refined until the
  // valuations of c4 and c6 are constant on each piece.
  std::vector<ClassifiedCluster> classified;
  for (const auto& [layer, mult] : squarefree_decompose(ci.disc)) {
    for (const auto& [h4, vc4] : split_by_valuation(layer, ci.c4)) {
      for (const auto& [h6, vc6] : split_by_valuation(h4, ci.c6)) {
        MinimalValuations mv = minimalize_valuations(vc4, vc6, mult);
        if (mv.vdisc == 0) continue;  // good reduction once minimalized
        classified.push_back({h6, classify_fiber(mv.vc4, mv.vc6, mv.vdisc), mv.vdisc});
      }
    }
  }

  for (const ClassifiedCluster& c : classified) {
    RootsResultK rr = poly_roots_in_field(c.h, m.field_d);
    std::vector<Place> places;
    for (const QuadElem& r : rr.roots) places.push_back(Place::finite(r));
    for (const PolyK& f : rr.residual) {
      Place p;
      p.minpoly = f;
      p.degree = f.degree();
      if (f.degree() == 2) {
        if (auto fq = as_rational_poly(f)) {
          // Root in some quadratic field, recorded even when it does not lie
          // in the ambient field of the model.
          Rat a = (*fq)[2], b = (*fq)[1], cc = (*fq)[0];
          auto [s, core] = rat_sqrt_decompose(b * b - 4 * a * cc);
          p.value = (QuadElem(-b) + QuadElem(Rat(0), s, core)) / QuadElem(2 * a);
        }
      }
      places.push_back(p);
    }
    for (const Place& p : places)
      out.fibers.push_back({p, c.type, c.v_disc_min, component_count(c.type)});
  }

  // The place at infinity, through the chart s = 1/t.
  {
    WeierstrassModel inf = model_at_infinity(m);
    CInvariants cinf = c_invariants(inf);
    if (cinf.disc.zero())
      throw std::domain_error("analyze_surface: degenerate at infinity");
    MinimalValuations mv = minimalize_valuations(
        valuation_at_zero(cinf.c4), valuation_at_zero(cinf.c6), *valuation_at_zero(cinf.disc));
    if (mv.vdisc > 0) {
      FiberType t = classify_fiber(mv.vc4, mv.vc6, mv.vdisc);
      out.fibers.push_back({Place::infinity(), t, mv.vdisc, component_count(t)});
    }
  }

  sort_fibers(out.fibers);

  int total = 0, torsion_drop = 0;
  for (const KodairaFiber& f : out.fibers) {
    int deg = f.place.degree;
    total += deg * f.v_disc;
    torsion_drop += deg * (f.components - 1);
    out.singular_count += deg;
    if (is_semistable(f.type)) out.semistable_count += deg;
    if (f.type.cls == KodairaClass::II) out.n2 += deg;
    if (f.type.cls == KodairaClass::III) out.n3 += deg;
    if (f.type.cls == KodairaClass::IV) out.n4 += deg;
    if (is_starred(f.type)) out.has_starred = true;
  }
  out.euler = total;
  if (total != 12) {
    std::ostringstream os;
    os << "analyze_surface: not a rational elliptic surface (minimal "
          "discriminant degree "
       << total << ", expected 12)";
    throw std::domain_error(os.str());
  }
  out.mw_rank = 8 - torsion_drop;
  if (out.mw_rank < 0)
    throw std::domain_error("analyze_surface: impossible fiber configuration");
  if (!out.has_starred) {
    // Euler-number bookkeeping pins the rank a second way for reduced fibers.
    int alt = out.singular_count - 4 + out.n2 + out.n3 + out.n4;
    if (alt != out.mw_rank)
      throw std::logic_error("analyze_surface: rank bookkeeping mismatch");
  }
  return out;
}

FiberType kodaira_type_at(const WeierstrassModel& m, const Place& place) {
  if (place.at_infinity)
    return kodaira_type_at(model_at_infinity(m), Place::finite(QuadElem(0)));
  CInvariants ci = c_invariants(m);
  if (ci.disc.zero()) throw std::domain_error("kodaira_type_at: degenerate model");
  PolyK h = monic(place.minpoly);
  if (h.degree() < 1) throw std::domain_error("kodaira_type_at: bad place");
  auto val = [&](const PolyK& f) -> std::optional<int> {
    if (f.zero()) return std::nullopt;
    return valuation_at(f, h);
  };
  MinimalValuations mv = minimalize_valuations(val(ci.c4), val(ci.c6), *val(ci.disc));
  if (mv.vdisc == 0) return FiberType{KodairaClass::I0, 0};
  return classify_fiber(mv.vc4, mv.vc6, mv.vdisc);
}

FiberType kodaira_type_at(const WeierstrassModel& m, const PValue& at) {
  if (at.infinite) return kodaira_type_at(m, Place::infinity());
  return kodaira_type_at(m, Place::finite(at.v));
}

SurfaceAnalysis mobius_apply(const WeierstrassModel& m, const MobiusMap& mu) {
  return analyze_surface(mobius_transport(m, mu));
}

Place place_from_value(const QuadElem& v, const Int& ambient_d) {
  if (v.d == 1 || v.d == ambient_d) return Place::finite(v);
  Place p;
  p.minpoly = PolyK({QuadElem(v.a * v.a - Rat(v.d) * v.b * v.b),
                     QuadElem(Rat(-2) * v.a), QuadElem(1)});
  p.value = v;
  p.degree = 2;
  return p;
}

SurfaceAnalysis mobius_apply(const SurfaceAnalysis& a, const MobiusMap& mu) {
  if (is_zero(mu.determinant()))
    throw std::domain_error("mobius_apply: degenerate map");
  SurfaceAnalysis out = a;
  for (auto& f : out.fibers) {
    PValue src;
    if (f.place.at_infinity) {
      src = PValue::infinity();
    } else if (f.place.value) {
      src = PValue(*f.place.value);
    } else {
      throw std::domain_error(
          "mobius_apply: place " + to_string(f.place) +
          " carries no explicit root (degree too high for the exact action)");
    }
    const PValue dst = mu.apply(src);
    f.place = dst.infinite ? Place::infinity()
                           : place_from_value(dst.v, a.field_d);
  }
  sort_fibers(out.fibers);
  return out;
}

}  // namespace ellcy
