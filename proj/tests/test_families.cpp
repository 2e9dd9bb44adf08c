// Parametric families: specialization, the degeneration registry, cusp
// normalization to {0, 1, infinity}, anchored four-fiber presentations, and
// the parameter-matching machinery.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "ellcy/families.hpp"
#include "ellcy/matching.hpp"
#include "ellcy/polyroots.hpp"
#include "ellcy/registry.hpp"

using namespace ellcy;

namespace {

const QuadElem kAlpha(Rat(17, 81), Rat(56, 81), Int(-2));
const QuadElem kOmega(Rat(-87, 256), Rat(91, 256), Int(-7));

bool has_value_solution(const std::vector<MatchSolution>& sols, const QuadElem& v) {
  return std::any_of(sols.begin(), sols.end(), [&](const MatchSolution& s) {
    return s.value && *s.value == v;
  });
}

bool has_residue_solution(const std::vector<MatchSolution>& sols, std::uint64_t r) {
  return std::any_of(sols.begin(), sols.end(), [&](const MatchSolution& s) {
    return s.residue && *s.residue == r;
  });
}

}  // namespace

TEST_CASE("family labels round-trip") {
  for (FamilyId id : all_families()) {
    CHECK(parse_family_label(family_label(id)) == id);
  }
  CHECK(family_label(FamilyId::f1117) == "1,1,1,7,II");
  CHECK(parse_family_label("1,2,3,4,II") == FamilyId::f1234);
  CHECK_FALSE(parse_family_label("2,2,2,2,II").has_value());
}

TEST_CASE("generic members: heading configuration, five cusps, rank two") {
  for (FamilyId id : all_families()) {
    SpecializeResult r = specialize(id, Rat(7));
    CHECK_FALSE(r.degeneration.has_value());
    CHECK(config_label(r.analysis) == family_label(id));
    CHECK(r.analysis.singular_count == 5);
    CHECK(r.analysis.mw_rank == 2);
    CHECK(r.analysis.euler == 12);
  }
}

TEST_CASE("degeneration registry: every record reproduces and re-classifies") {
  int total = 0;
  for (FamilyId id : all_families()) {
    const FamilyModel& fam = family_model(id);
    for (const auto& [m0, config] : fam.degenerations) {
      ++total;
      SpecializeResult r = specialize(id, m0);
      REQUIRE(r.degeneration.has_value());
      CHECK(r.degeneration->m0 == m0);
      CHECK(r.degeneration->config == config);
      CHECK(config_label(r.analysis) == config);
      CHECK(r.degeneration->mw_rank == r.analysis.mw_rank);
      // Independent classification of every singular fiber.
      for (const KodairaFiber& f : r.analysis.fibers) {
        CHECK(kodaira_type_at(r.model, f.place) == f.type);
      }
      // Four singular fibers and reduced types: rank via the closed form.
      CHECK(r.analysis.mw_rank ==
            r.analysis.singular_count - 4 + r.analysis.n2 + r.analysis.n3 + r.analysis.n4);
    }
  }
  CHECK(total == 14);
}

TEST_CASE("degeneration registry: pinned rows") {
  CHECK(specialize(FamilyId::f1117, Rat(3)).degeneration->config == "1,1,8,II");
  CHECK(specialize(FamilyId::f1117, Rat(-6)).degeneration->config == "1,2,7,II");
  CHECK(specialize(FamilyId::f1117, Rat(2)).degeneration->config == "1,1,7,III");
  CHECK(specialize(FamilyId::f1126, Rat(1, 4)).degeneration->config == "1,2,7,II");
  CHECK(specialize(FamilyId::f1135, Rat(1, 9)).degeneration->config == "1,3,5,III");
  CHECK(specialize(FamilyId::f1234, Rat(1)).degeneration->config == "2,4,II,IV");
  CHECK(specialize(FamilyId::f1234, Rat(-2, 7)).degeneration->config == "3,4,II,III");
  CHECK(specialize(FamilyId::f1234, Rat(-5, 4)).degeneration->mw_rank == 1);
}

TEST_CASE("moving cusp loci locate the actual singular fibers") {
  // [1,1,2,6,II]: the I_2 fiber sits at the root of (m-1)t - 1.
  const FamilyModel& fam = family_model(FamilyId::f1126);
  const MovingCusp* i2 = nullptr;
  for (const MovingCusp& c : fam.moving)
    if (c.type == FiberType{KodairaClass::In, 2}) i2 = &c;
  REQUIRE(i2 != nullptr);
  SpecializeResult r = specialize(FamilyId::f1126, Rat(7));
  PolyQ locus = bipoly_at_m(i2->locus, Rat(7));
  REQUIRE(locus.degree() == 1);
  Rat root = -locus[0] / locus[1];
  CHECK(root == Rat(1, 6));
  const KodairaFiber* f = r.analysis.fiber_at(PValue(QuadElem(root)));
  REQUIRE(f != nullptr);
  CHECK(f->type == FiberType{KodairaClass::In, 2});

  // The quadratic I_1 locus evaluates to zero at each I_1 cusp.
  const MovingCusp& i1 = fam.moving[0];
  PolyQ i1_locus = bipoly_at_m(i1.locus, Rat(7));
  for (const auto& [v, type] : geometric_cusps(r.analysis)) {
    if (type != FiberType{KodairaClass::In, 1}) continue;
    CHECK(lift(i1_locus).eval(v.v).is_zero());
  }
}

TEST_CASE("bipoly substitution helpers commute") {
  const BiPoly& a6 = family_model(FamilyId::f1117).a6;
  PolyQ at_m = bipoly_at_m(a6, Rat(5));
  PolyQ at_t = bipoly_at_t(a6, Rat(2));
  CHECK(at_m.eval(Rat(2)) == at_t.eval(Rat(5)));
}

TEST_CASE("geometric_cusps: one entry per conjugate") {
  SurfaceAnalysis a = specialize(FamilyId::f1126, Rat(2)).analysis;
  auto cusps = geometric_cusps(a);
  CHECK(cusps.size() == 5);
  int quadratic = 0;
  for (const auto& [v, type] : cusps)
    if (!v.infinite && !v.v.is_rational()) ++quadratic;
  CHECK(quadratic == 2);
}

TEST_CASE("normalize_cusps: [2,3,5,II] anchorings produce the free-cusp orbit") {
  SurfaceAnalysis a = specialize(FamilyId::f1234, Rat(-5, 4)).analysis;

  // Identity anchoring: the surface already sits in normalized position.
  NormalizedCusps n =
      normalize_cusps(a, {PValue(QuadElem(0)), PValue(QuadElem(1)), PValue::infinity()});
  CHECK(n.lambda == QuadElem(Rat(5, 32)));
  CHECK(n.free_type == FiberType{KodairaClass::In, 2});

  // Swapping the anchors at 0 and 1 sends lambda to 1 - lambda.
  NormalizedCusps swapped =
      normalize_cusps(a, {PValue(QuadElem(1)), PValue(QuadElem(0)), PValue::infinity()});
  CHECK(swapped.lambda == QuadElem(Rat(27, 32)));

  // All six anchorings of the three semistable cusps yield the orbit
  // {x, 1-x, 1/x, 1/(1-x), x/(x-1), (x-1)/x} of 5/32.
  std::vector<PValue> semistable = {PValue(QuadElem(0)), PValue(QuadElem(1)),
                                    PValue(QuadElem(Rat(5, 32)))};
  std::set<Rat> seen;
  for (const PValue& z : semistable)
    for (const PValue& o : semistable) {
      if (z == o) continue;
      NormalizedCusps nc = normalize_cusps(a, {z, o, PValue::infinity()});
      seen.insert(nc.lambda.a);
    }
  std::set<Rat> expect = {Rat(5, 32),  Rat(27, 32), Rat(32, 5),
                          Rat(32, 27), Rat(-5, 27), Rat(-27, 5)};
  CHECK(seen == expect);
}

TEST_CASE("normalize_cusps: III surface [1,2,6,III] lands at lambda = 1/4") {
  SpecializeResult r = specialize(FamilyId::f1126, Rat(0));
  REQUIRE(r.degeneration.has_value());
  CHECK(r.degeneration->config == "1,2,6,III");
  // Cusps: III at 0, I_2 at -1, I_6 at infinity, I_1 at -4.
  NormalizedCusps n = normalize_cusps(
      r.analysis, {PValue::infinity(), PValue(QuadElem(-1)), PValue(QuadElem(0))});
  CHECK(n.lambda == QuadElem(Rat(1, 4)));
  CHECK(n.free_type == FiberType{KodairaClass::In, 1});
}

TEST_CASE("normalize_cusps: preconditions") {
  // Five singular fibers: not a four-fiber surface.
  SurfaceAnalysis five = specialize(FamilyId::f1234, Rat(7)).analysis;
  CHECK_THROWS_AS(normalize_cusps(five, {PValue(QuadElem(0)), PValue(QuadElem(1)),
                                         PValue::infinity()}),
                  std::domain_error);
  // Anchor points must be distinct cusps.
  SurfaceAnalysis four = specialize(FamilyId::f1234, Rat(-5, 4)).analysis;
  CHECK_THROWS_AS(normalize_cusps(four, {PValue(QuadElem(0)), PValue(QuadElem(0)),
                                         PValue::infinity()}),
                  std::domain_error);
}

TEST_CASE("anchored registry: 42 verified presentations, lookups by lambda") {
  const auto& all = builtin_surfaces();
  CHECK(all.size() == 42);
  for (const BuiltinSurface& b : all) {
    CHECK(b.analysis.euler == 12);
    CHECK(b.analysis.singular_count == 4);
  }

  const BuiltinSurface* b = find_builtin(KodairaClass::II, QuadElem(Rat(5, 32)));
  REQUIRE(b != nullptr);
  CHECK(b->config == "2,3,5,II");
  CHECK(b->type_at_lambda == FiberType{KodairaClass::In, 2});

  // The III presentation with lambda 1/4 anchors I_6 at 0 and I_2 at 1.
  const BuiltinSurface* b3 = find_builtin(KodairaClass::III, QuadElem(Rat(1, 4)));
  REQUIRE(b3 != nullptr);
  CHECK(b3->config == "1,2,6,III");
  CHECK(b3->type_at_zero == FiberType{KodairaClass::In, 6});
  CHECK(b3->type_at_one == FiberType{KodairaClass::In, 2});

  // Quadratic free cusps: alpha for [1,1,8,II], omega for [1,1,7,III].
  REQUIRE(find_builtin(KodairaClass::II, kAlpha) != nullptr);
  CHECK(find_builtin(KodairaClass::II, kAlpha)->config == "1,1,8,II");
  REQUIRE(find_builtin(KodairaClass::III, kOmega) != nullptr);
  CHECK(find_builtin(KodairaClass::III, kOmega)->config == "1,1,7,III");

  CHECK(find_builtin(KodairaClass::II, QuadElem(Rat(9, 7))) == nullptr);
}

TEST_CASE("match_parameter: the -m/8 cusp of [1,2,3,4,II]") {
  auto sols = match_parameter(FamilyId::f1234, QuadElem(Rat(5, 32)),
                              MatchMode::exact_mode());
  CHECK(has_value_solution(sols, QuadElem(Rat(-5, 4))));

  // The remaining branch is the cubic I_1 condition
  // 81 (m+2)^2 lambda + 4 (m-1)^3 = 0; its minimal polynomial divides it.
  bool found_cubic = false;
  for (const MatchSolution& s : sols) {
    if (!s.min_poly) continue;
    CHECK(s.min_poly->degree() == 3);
    found_cubic = true;
    PolyQ cond({Rat(5, 32) * 324 - 4, Rat(5, 32) * 324 + 12, Rat(5, 32) * 81 - 12, Rat(4)});
    CHECK(monic(cond) == *s.min_poly);
  }
  CHECK(found_cubic);
}

TEST_CASE("match_parameter: degeneration cusps feed back their own member") {
  // [1,1,2,6,II]: Delta(t, 1) = 3t^2 + 14t + 27 vanishes at its own roots.
  QuadElem cusp(Rat(-7, 3), Rat(4, 3), Int(-2));
  auto sols = match_parameter(FamilyId::f1126, cusp, MatchMode::exact_mode());
  CHECK(has_value_solution(sols, QuadElem(1)));

  // [1,1,3,5,II]: the m = 2/27 member re-anchored has a cusp at 80/81.
  sols = match_parameter(FamilyId::f1135, QuadElem(Rat(80, 81)), MatchMode::exact_mode());
  CHECK(has_value_solution(sols, QuadElem(Rat(2, 27))));

  // [1,1,1,7,II] at m = -6: the I_2 at 8/3 and I_1 at 27/4 have ratio 32/81;
  // the cusp-ratio branch recovers m = -6 from that ratio.
  SurfaceAnalysis a = specialize(FamilyId::f1117, Rat(-6)).analysis;
  const KodairaFiber* i2 = a.fiber_at(PValue(QuadElem(Rat(8, 3))));
  REQUIRE(i2 != nullptr);
  CHECK(i2->type == FiberType{KodairaClass::In, 2});
  sols = match_parameter(FamilyId::f1117, QuadElem(Rat(32, 81)), MatchMode::exact_mode());
  CHECK(has_value_solution(sols, QuadElem(-6)));

  // Quadratic ratio: the [1,1,8,II] free cusp alpha matches the m = 3 member,
  // whose I_1 cusps (-7 +- 4 sqrt(-2))/3 have ratio alpha.
  sols = match_parameter(FamilyId::f1117, kAlpha, MatchMode::exact_mode());
  CHECK(has_value_solution(sols, QuadElem(3)));
}

TEST_CASE("match_parameter: exact solutions satisfy their branch condition") {
  // Every explicit value solution of f1234 satisfies one of the two moving
  // loci at t = lambda.
  const FamilyModel& fam = family_model(FamilyId::f1234);
  for (const Rat& lam : {Rat(5, 32), Rat(1, 81), Rat(-27, 5)}) {
    auto sols = match_parameter(FamilyId::f1234, QuadElem(lam), MatchMode::exact_mode());
    CHECK_FALSE(sols.empty());
    for (const MatchSolution& s : sols) {
      if (!s.value || !s.value->is_rational()) continue;
      Rat m0 = s.value->a;
      bool on_locus = false;
      for (const MovingCusp& c : fam.moving) {
        if (bipoly_at_m(c.locus, m0).eval(lam) == Rat(0)) on_locus = true;
      }
      CHECK(on_locus);
    }
  }
}

TEST_CASE("match_parameter mod p: pinned residues") {
  // -5/4 = 8 mod 37.
  auto sols = match_parameter(FamilyId::f1234, QuadElem(Rat(5, 32)), MatchMode::mod_p(37));
  CHECK(has_residue_solution(sols, 8));
  // -5/4 = 871 mod 1163.
  sols = match_parameter(FamilyId::f1234, QuadElem(Rat(5, 32)), MatchMode::mod_p(1163));
  CHECK(has_residue_solution(sols, 871));
  // -8/81 = 8 mod 41 (81 = -1).
  sols = match_parameter(FamilyId::f1234, QuadElem(Rat(1, 81)), MatchMode::mod_p(41));
  CHECK(has_residue_solution(sols, 8));
  for (const MatchSolution& s : sols) CHECK(s.modulus == 41);
}

TEST_CASE("match_parameter mod p: nonempty at the nodal primes of the 5/32 rows") {
  // Nodal primes of the products rows containing 5/32: 37, 127, 7, 11.
  for (std::uint64_t p : {37u, 127u, 7u, 11u}) {
    auto sols = match_parameter(FamilyId::f1126, QuadElem(Rat(5, 32)), MatchMode::mod_p(p));
    CHECK_FALSE(sols.empty());
  }
}

TEST_CASE("match_parameter: rejected inputs") {
  CHECK_THROWS_AS(match_parameter(FamilyId::f1234, QuadElem(0), MatchMode::exact_mode()),
                  std::domain_error);
  CHECK_THROWS_AS(match_parameter(FamilyId::f1234, QuadElem(1), MatchMode::exact_mode()),
                  std::domain_error);
  // p <= 3 unsupported.
  CHECK_THROWS_AS(match_parameter(FamilyId::f1234, QuadElem(Rat(5, 32)), MatchMode::mod_p(3)),
                  std::domain_error);
  // lambda = 42 = 1 mod 41: degenerate position in the residue field.
  CHECK_THROWS_AS(match_parameter(FamilyId::f1234, QuadElem(42), MatchMode::mod_p(41)),
                  std::domain_error);
  // Quadratic lambda at an inert prime: no residue map.
  CHECK_THROWS_AS(match_parameter(FamilyId::f1117, kAlpha, MatchMode::mod_p(5)),
                  InertPrimeError);
}

TEST_CASE("resultant_condition: cusp-ratio polynomial for [1,1,1,7,II]") {
  CHECK_THROWS_AS(resultant_condition(QuadElem(0)), std::domain_error);
  CHECK_THROWS_AS(resultant_condition(QuadElem(1)), std::domain_error);

  PolyK f2 = resultant_condition(QuadElem(2));
  CHECK(f2.degree() == 10);
  CHECK(f2.lead() == QuadElem(1));
  // m = 3 solves the ratio condition only for the quadratic ratios alpha,
  // conj(alpha) -- not for lambda = 2.
  CHECK_FALSE(f2.eval(QuadElem(3)).is_zero());

  // lambda = 32/81: the explicit degree-<=2 roots include m = -6, and the
  // member's I_1 locus indeed has roots in ratio 32/81 there (8/3 vs 27/4).
  PolyK f = resultant_condition(QuadElem(Rat(32, 81)));
  auto rational = as_rational_poly(f);
  REQUIRE(rational.has_value());
  bool has_m6 = false;
  for (const PolyQ& factor : factor_squarefree_rational(*rational)) {
    if (factor.degree() > 2) continue;
    for (const QuadElem& root : poly_roots(factor).roots) {
      if (!(root == QuadElem(-6))) continue;
      has_m6 = true;
      PolyQ cubic = bipoly_at_m(family_model(FamilyId::f1117).moving[0].locus, Rat(-6));
      PolyQ scaled = cubic.scale_arg(Rat(32, 81));  // roots multiplied by 81/32
      CHECK(poly_gcd(cubic, scaled).degree() >= 1);
    }
  }
  CHECK(has_m6);
}
