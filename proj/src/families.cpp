#include "ellcy/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace ellcy {

namespace {

BiPoly c(const Rat& r) { return BiPoly(PolyQ(r)); }
BiPoly c(int r) { return BiPoly(PolyQ(Rat(r))); }

// Inner polynomial in m from ascending coefficients.
PolyQ im(std::vector<Rat> coeffs) { return PolyQ(std::move(coeffs)); }

BiPoly bi(std::vector<PolyQ> outer) { return BiPoly(std::move(outer)); }

FamilyModel make_1117() {
  const BiPoly T = BiPoly::var();
  const BiPoly M = BiPoly(PolyQ::var());
  FamilyModel f;
  f.id = FamilyId::f1117;
  f.label = "1,1,1,7,II";
  // y^2 = x^3 + (t^2 + m t + 3) x^2 + (2 t + 3) x + 1
  f.a2 = T * T + M * T + c(3);
  f.a4 = c(2) * T + c(3);
  f.a6 = c(1);
  f.moving.push_back(
      {bi({im({Rat(108), Rat(-108), Rat(27)}), im({Rat(-76), Rat(30), Rat(-12), Rat(4)}),
          im({Rat(3), Rat(-24), Rat(8)}), im({Rat(-12), Rat(4)})}),
       FiberType{KodairaClass::In, 1}});
  f.fixed = {{PValue::infinity(), FiberType{KodairaClass::In, 7}},
             {PValue(QuadElem(0)), FiberType{KodairaClass::II, 0}}};
  f.degenerations = {{Rat(3), "1,1,8,II"}, {Rat(-6), "1,2,7,II"}, {Rat(2), "1,1,7,III"}};
  return f;
}

FamilyModel make_1126() {
  const BiPoly T = BiPoly::var();
  const BiPoly M = BiPoly(PolyQ::var());
  FamilyModel f;
  f.id = FamilyId::f1126;
  f.label = "1,1,2,6,II";
  // y^2 = x^3 + (t^2 + 3t + 3m) x^2 + ((3m-1) t + 3m^2) x + m^3
  f.a2 = T * T + c(3) * T + c(3) * M;
  f.a4 = (c(3) * M - c(1)) * T + c(3) * M * M;
  f.a6 = M * M * M;
  f.moving.push_back({bi({im({Rat(0), Rat(0), Rat(27)}), im({Rat(-4), Rat(18)}),
                          im({Rat(-1), Rat(4)})}),
                      FiberType{KodairaClass::In, 1}});
  f.moving.push_back(
      {bi({im({Rat(-1)}), im({Rat(-1), Rat(1)})}), FiberType{KodairaClass::In, 2}});
  f.fixed = {{PValue::infinity(), FiberType{KodairaClass::In, 6}},
             {PValue(QuadElem(0)), FiberType{KodairaClass::II, 0}}};
  f.degenerations = {
      {Rat(1), "1,1,8,II"}, {Rat(1, 4), "1,2,7,II"}, {Rat(0), "1,2,6,III"}};
  return f;
}

FamilyModel make_1135() {
  const BiPoly T = BiPoly::var();
  const BiPoly M = BiPoly(PolyQ::var());
  FamilyModel f;
  f.id = FamilyId::f1135;
  f.label = "1,1,3,5,II";
  // y^2 + (m t - 27 m + 18) x y + 16 t y = x^3 + t x^2
  f.a1 = M * T - c(27) * M + c(18);
  f.a3 = c(16) * T;
  f.a2 = T;
  f.moving.push_back(
      {bi({im({Rat(16), Rat(-288), Rat(1080), Rat(-1512), Rat(729)}),
          im({Rat(0), Rat(0), Rat(8), Rat(56), Rat(-54)}),
          im({Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)})}),
       FiberType{KodairaClass::In, 1}});
  f.fixed = {{PValue(QuadElem(0)), FiberType{KodairaClass::In, 3}},
             {PValue::infinity(), FiberType{KodairaClass::In, 5}},
             {PValue(QuadElem(27)), FiberType{KodairaClass::II, 0}}};
  f.degenerations = {
      {Rat(2, 27), "1,4,5,II"}, {Rat(1), "2,3,5,II"}, {Rat(1, 9), "1,3,5,III"}};
  return f;
}

FamilyModel make_1234() {
  const BiPoly T = BiPoly::var();
  const BiPoly M = BiPoly(PolyQ::var());
  FamilyModel f;
  f.id = FamilyId::f1234;
  f.label = "1,2,3,4,II";
  // Presentation anchored at I_3 @ 0, I_4 @ 1, II @ infinity, valid for
  // every parameter value (base change t -> t/(m(t-1)) of the natural
  // presentation, rescaled by u = m to clear parameter denominators):
  // y^2 + (9t + m - 1) xy + (27/4) t (t-1)(8t + m) y
  //   = x^3 + (27/4) t (t-1) x^2
  f.a1 = c(9) * T + M - c(1);
  f.a3 = c(Rat(27, 4)) * T * (T - c(1)) * (c(8) * T + M);
  f.a2 = c(Rat(27, 4)) * T * (T - c(1));
  // I_1 @ -4(m-1)^3 / (81 (m+2)^2)
  f.moving.push_back(
      {bi({im({Rat(-4), Rat(12), Rat(-12), Rat(4)}), im({Rat(324), Rat(324), Rat(81)})}),
       FiberType{KodairaClass::In, 1}});
  // I_2 @ -m/8
  f.moving.push_back(
      {bi({im({Rat(0), Rat(1)}), im({Rat(8)})}), FiberType{KodairaClass::In, 2}});
  f.fixed = {{PValue(QuadElem(0)), FiberType{KodairaClass::In, 3}},
             {PValue(QuadElem(1)), FiberType{KodairaClass::In, 4}},
             {PValue::infinity(), FiberType{KodairaClass::II, 0}}};
  f.degenerations = {{Rat(0), "1,4,5,II"},
                     {Rat(-5, 4), "2,3,5,II"},
                     {Rat(-2), "2,3,4,III"},
                     {Rat(1), "2,4,II,IV"},
                     {Rat(-2, 7), "3,4,II,III"}};
  return f;
}

const std::array<FamilyModel, 4>& registry() {
  static const std::array<FamilyModel, 4> fams = {make_1117(), make_1126(),
                                                  make_1135(), make_1234()};
  return fams;
}

}  // namespace

std::string family_label(FamilyId id) { return family_model(id).label; }

std::optional<FamilyId> parse_family_label(const std::string& s) {
  for (const FamilyModel& f : registry())
    if (f.label == s) return f.id;
  return std::nullopt;
}

std::vector<FamilyId> all_families() {
  return {FamilyId::f1117, FamilyId::f1126, FamilyId::f1135, FamilyId::f1234};
}

const FamilyModel& family_model(FamilyId id) {
  for (const FamilyModel& f : registry())
    if (f.id == id) return f;
  throw std::domain_error("family_model: unknown family");
}

PolyQ bipoly_at_m(const BiPoly& f, const Rat& m0) {
  PolyQ out;
  for (int i = 0; i <= f.degree(); ++i) out.set(i, f[i].eval(m0));
  return out;
}

PolyQ bipoly_at_t(const BiPoly& f, const Rat& t0) {
  PolyQ out;
  Rat pw{1};
  for (int i = 0; i <= f.degree(); ++i) {
    out += f[i] * pw;
    pw *= t0;
  }
  return out;
}

std::string config_label(const SurfaceAnalysis& a) {
  std::vector<std::pair<std::pair<int, int>, std::string>> parts;
  for (const KodairaFiber& f : a.fibers) {
    std::pair<int, int> key;
    std::string label;
    if (is_semistable(f.type)) {
      key = {0, f.type.n};
      label = std::to_string(f.type.n);
    } else {
      key = {1, int(f.type.cls) * 64 + f.type.n};
      label = to_string(f.type);
    }
    for (int i = 0; i < f.place.degree; ++i) parts.emplace_back(key, label);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i].second;
  }
  return out;
}

SpecializeResult specialize(FamilyId id, const Rat& m0) {
  const FamilyModel& fam = family_model(id);
  SpecializeResult out;
  out.model.field_d = 1;
  out.model.a1 = lift(bipoly_at_m(fam.a1, m0));
  out.model.a2 = lift(bipoly_at_m(fam.a2, m0));
  out.model.a3 = lift(bipoly_at_m(fam.a3, m0));
  out.model.a4 = lift(bipoly_at_m(fam.a4, m0));
  out.model.a6 = lift(bipoly_at_m(fam.a6, m0));
  out.model.parameter = m0;
  if (c_invariants(out.model).disc.zero())
    throw std::domain_error("specialize: the member at m = " + to_string(m0) +
                            " of family [" + fam.label + "] is degenerate");
  out.analysis = analyze_surface(out.model);
  if (out.analysis.singular_count < 5)
    out.degeneration = DegenerationRecord{m0, config_label(out.analysis),
                                          out.analysis.mw_rank};
  return out;
}

std::vector<std::pair<PValue, FiberType>> geometric_cusps(const SurfaceAnalysis& a) {
  std::vector<std::pair<PValue, FiberType>> out;
  for (const KodairaFiber& f : a.fibers) {
    if (f.place.at_infinity) {
      out.emplace_back(PValue::infinity(), f.type);
      continue;
    }
    if (!f.place.value)
      throw std::domain_error(
          "geometric_cusps: a singular place lacks explicit coordinates (degree " +
          std::to_string(f.place.degree) + ")");
    out.emplace_back(PValue(*f.place.value), f.type);
    if (f.place.degree == 2) out.emplace_back(PValue(conj(*f.place.value)), f.type);
    if (f.place.degree > 2)
      throw std::domain_error("geometric_cusps: place of degree > 2");
  }
  return out;
}

NormalizedCusps normalize_cusps(const SurfaceAnalysis& a, const AnchorSpec& spec) {
  std::vector<std::pair<PValue, FiberType>> cusps = geometric_cusps(a);
  if (cusps.size() != 4)
    throw std::domain_error("normalize_cusps: need exactly four singular fibers, have " +
                            std::to_string(cusps.size()));
  int additive = 0;
  for (const auto& [at, type] : cusps) {
    if (is_semistable(type)) continue;
    ++additive;
    if (!(type.cls == KodairaClass::II || type.cls == KodairaClass::III))
      throw std::domain_error("normalize_cusps: additive fiber must be II or III, got " +
                              to_string(type));
  }
  if (additive != 1)
    throw std::domain_error("normalize_cusps: need exactly one additive fiber, have " +
                            std::to_string(additive));

  auto find = [&](const PValue& v) -> const std::pair<PValue, FiberType>* {
    for (const auto& c : cusps)
      if (c.first == v) return &c;
    return nullptr;
  };
  const auto* z = find(spec.to_zero);
  const auto* o = find(spec.to_one);
  const auto* inf = find(spec.to_infinity);
  if (!z || !o || !inf)
    throw std::domain_error("normalize_cusps: anchor is not a singular fiber");
  if (is_semistable(inf->second))
    throw std::domain_error("normalize_cusps: the additive fiber must go to infinity");
  const std::pair<PValue, FiberType>* free_cusp = nullptr;
  for (const auto& cc : cusps)
    if (!(cc.first == spec.to_zero) && !(cc.first == spec.to_one) &&
        !(cc.first == spec.to_infinity))
      free_cusp = &cc;
  if (!free_cusp) throw std::domain_error("normalize_cusps: anchors are not distinct");

  auto mu = MobiusMap::three_point({spec.to_zero, spec.to_one, spec.to_infinity},
                                   {PValue(QuadElem(0)), PValue(QuadElem(1)),
                                    PValue::infinity()});
  if (!mu) throw std::domain_error("normalize_cusps: degenerate anchor triple");
  PValue img = mu->apply(free_cusp->first);
  if (img.infinite) throw std::logic_error("normalize_cusps: free cusp at infinity");
  return {*mu, img.v, free_cusp->second};
}

}  // namespace ellcy
