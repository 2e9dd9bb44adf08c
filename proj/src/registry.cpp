#include "ellcy/registry.hpp"

#include <stdexcept>

namespace ellcy {

namespace {

struct Seed {
  FamilyId family;
  Rat m0;
};

const Seed kSeeds[] = {
    // II at infinity after anchoring
    {FamilyId::f1117, Rat(3)},      // [1,1,8]
    {FamilyId::f1117, Rat(-6)},     // [1,2,7]
    {FamilyId::f1135, Rat(2, 27)},  // [1,4,5]
    {FamilyId::f1135, Rat(1)},      // [2,3,5]
    // III at infinity after anchoring
    {FamilyId::f1117, Rat(2)},      // [1,1,7]
    {FamilyId::f1126, Rat(0)},      // [1,2,6]
    {FamilyId::f1135, Rat(1, 9)},   // [1,3,5]
};

void verify_builtin(const BuiltinSurface& b) {
  const SurfaceAnalysis& a = b.analysis;
  if (a.singular_count != 4)
    throw std::logic_error("builtin registry: transported member is not four-fiber");
  auto type_at = [&](const PValue& v) -> FiberType {
    const KodairaFiber* f = a.fiber_at(v);
    if (!f) throw std::logic_error("builtin registry: expected cusp is missing");
    return f->type;
  };
  if (!(type_at(PValue(QuadElem(0))) == b.type_at_zero) ||
      !(type_at(PValue(QuadElem(1))) == b.type_at_one) ||
      !(type_at(PValue(b.lambda)) == b.type_at_lambda))
    throw std::logic_error("builtin registry: cusp types moved under transport");
  FiberType inf = type_at(PValue::infinity());
  if (inf.cls != b.additive || is_semistable(inf))
    throw std::logic_error("builtin registry: additive fiber not at infinity");
  // Independent classification of the free cusp.
  FiberType direct = kodaira_type_at(b.model, PValue(b.lambda));
  if (!(direct == b.type_at_lambda))
    throw std::logic_error("builtin registry: free-cusp type cross-check failed");
}

std::vector<BuiltinSurface> build_all() {
  std::vector<BuiltinSurface> out;
  for (const Seed& s : kSeeds) {
    SpecializeResult sp = specialize(s.family, s.m0);
    auto cusps = geometric_cusps(sp.analysis);
    if (cusps.size() != 4)
      throw std::logic_error("builtin registry: seed member is not four-fiber");
    const std::pair<PValue, FiberType>* additive = nullptr;
    std::vector<const std::pair<PValue, FiberType>*> semis;
    for (const auto& c : cusps) {
      if (is_semistable(c.second))
        semis.push_back(&c);
      else
        additive = &c;
    }
    if (!additive || semis.size() != 3)
      throw std::logic_error("builtin registry: seed member has a bad configuration");
    for (const auto* z : semis) {
      for (const auto* o : semis) {
        if (z == o) continue;
        NormalizedCusps nc =
            normalize_cusps(sp.analysis, AnchorSpec{z->first, o->first, additive->first});
        BuiltinSurface b;
        b.additive = additive->second.cls;
        b.lambda = nc.lambda;
        b.type_at_zero = z->second;
        b.type_at_one = o->second;
        b.type_at_lambda = nc.free_type;
        b.model = mobius_transport(sp.model, nc.mu.inverse());
        b.model.parameter = s.m0;
        b.analysis = analyze_surface(b.model);
        b.config = config_label(b.analysis);
        b.origin_family = s.family;
        b.origin_m = s.m0;
        b.frame = nc.mu;
        verify_builtin(b);
        for (const BuiltinSurface& prev : out)
          if (prev.additive == b.additive && prev.lambda == b.lambda)
            throw std::logic_error("builtin registry: duplicate free-cusp value");
        out.push_back(std::move(b));
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<BuiltinSurface>& builtin_surfaces() {
  static const std::vector<BuiltinSurface> all = build_all();
  return all;
}

const BuiltinSurface* find_builtin(KodairaClass additive, const QuadElem& lambda) {
  for (const BuiltinSurface& b : builtin_surfaces())
    if (b.additive == additive && b.lambda == lambda) return &b;
  return nullptr;
}

}  // namespace ellcy
