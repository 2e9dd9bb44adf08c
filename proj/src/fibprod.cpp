#include "ellcy/fibprod.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "ellcy/fp.hpp"
#include "ellcy/intfactor.hpp"

namespace ellcy {

std::string to_string(SmallResolution r) {
  switch (r) {
    case SmallResolution::exists: return "exists";
    case SmallResolution::exists_nonprojective: return "exists_nonprojective";
    case SmallResolution::none: return "none";
  }
  return "?";
}

std::string to_string(RigidityCase c) {
  switch (c) {
    case RigidityCase::case1: return "case1";
    case RigidityCase::case2: return "case2";
    case RigidityCase::case3: return "case3";
    case RigidityCase::case4: return "case4";
    case RigidityCase::non_rigid: return "non_rigid";
  }
  return "?";
}

std::string to_string(ReductionClass c) {
  switch (c) {
    case ReductionClass::merged_good: return "merged_good";
    case ReductionClass::extra_node: return "extra_node";
    case ReductionClass::factor_degeneration: return "factor_degeneration";
    case ReductionClass::no_small_resolution: return "no_small_resolution";
    case ReductionClass::inert_skipped: return "inert_skipped";
  }
  return "?";
}

std::string to_string(MergingOutcome o) {
  return o == MergingOutcome::good ? "good" : "bad";
}

// ---- Local data ----------------------------------------------------------

LocalProduct local_product(FiberType left, FiberType right) {
  LocalProduct out;
  auto reject = [&out](const std::string& why) {
    out.admissible = false;
    out.small_resolution = SmallResolution::none;
    out.euler = 0;
    out.components = 0;
    out.note = why;
    return out;
  };

  if (is_starred(left) || is_starred(right))
    return reject("non-reduced fiber " +
                  to_string(is_starred(left) ? left : right));

  const bool l0 = left.cls == KodairaClass::I0;
  const bool r0 = right.cls == KodairaClass::I0;
  const bool lss = is_semistable(left);
  const bool rss = is_semistable(right);

  if (l0 && r0) return out;  // smooth x smooth: abelian surface fiber

  // One factor smooth: the product fiber is (fiber) x (elliptic curve).
  if ((lss && r0) || (l0 && rss)) {
    int n = lss ? left.n : right.n;
    out.euler = 0;
    out.components = n <= 1 ? 1 : n;
    out.small_resolution = SmallResolution::exists;
    return out;
  }

  if (lss && rss) {
    // I_n x I_m: n*m ordinary double points; every node admits a small
    // resolution, but a projective small model needs a global criterion.
    out.euler = 2LL * left.n * right.n;
    out.components = 1LL * left.n * right.n;
    out.small_resolution = SmallResolution::exists_nonprojective;
    return out;
  }

  // At least one additive fiber from here on.
  if (left == right) {
    switch (left.cls) {
      case KodairaClass::II:
        out.euler = 6;
        out.components = 1;
        return out;
      case KodairaClass::III:
        out.euler = 12;
        out.components = 4;
        return out;
      case KodairaClass::IV:
        // t * t' rulings plus one exceptional cubic surface component.
        out.euler = 24;
        out.components = 10;
        return out;
      default:
        break;
    }
  }

  if (l0 || r0)
    return reject(to_string(l0 ? right : left) + " paired with I0");
  return reject("mixed pair " + to_string(left) + " x " + to_string(right) +
                " has no small resolution");
}

// ---- Global product ------------------------------------------------------

namespace {

std::string place_sort_key(const Place& p) {
  return p.at_infinity ? std::string() : to_string(p);
}

}  // namespace

RigidityCase classify_rigidity(const FiberProductAnalysis& a) {
  bool s_in_sp = true;   // S contained in S'
  bool sp_in_s = true;   // S' contained in S
  bool unshared_ok = true;  // every unshared fiber is I_1
  for (const auto& p : a.pairs) {
    if (p.shared) continue;
    const bool left_side = p.left.cls != KodairaClass::I0;
    const FiberType t = left_side ? p.left : p.right;
    (left_side ? s_in_sp : sp_in_s) = false;
    if (!(t.cls == KodairaClass::In && t.n == 1)) unshared_ok = false;
  }

  const int s = a.s_count, sp = a.s_prime_count, sh = a.shared_count;
  RigidityCase pattern = RigidityCase::non_rigid;
  if (s == 4 && sp == 4 && s_in_sp && sp_in_s)
    pattern = RigidityCase::case1;
  else if (s == 4 && sp == 4 && sh == 3)
    pattern = RigidityCase::case2;
  else if ((s == 5 && sp == 4 && sp_in_s) || (s == 4 && sp == 5 && s_in_sp))
    pattern = RigidityCase::case3;
  else if (s == 5 && sp == 5 && s_in_sp && sp_in_s)
    pattern = RigidityCase::case4;

  if (!unshared_ok) return RigidityCase::non_rigid;
  return pattern;
}

FiberProductAnalysis build_product(const SurfaceAnalysis& left,
                                   const SurfaceAnalysis& right, DFlag d) {
  if (left.has_starred || right.has_starred)
    throw std::domain_error(
        "build_product: both factors must have reduced fibers only");
  if (left.field_d != right.field_d && left.field_d != 1 && right.field_d != 1)
    throw std::domain_error(
        "build_product: factors live over different quadratic fields (d = " +
        to_string(left.field_d) + " vs d = " + to_string(right.field_d) + ")");

  FiberProductAnalysis out;
  out.field_d = left.field_d != 1 ? left.field_d : right.field_d;

  for (const auto& f : left.fibers) {
    FiberPair pr;
    pr.place = f.place;
    pr.degree = f.place.degree;
    pr.left = f.type;
    pr.left_components = f.components;
    out.pairs.push_back(pr);
  }
  for (const auto& f : right.fibers) {
    auto it = std::find_if(out.pairs.begin(), out.pairs.end(),
                           [&](const FiberPair& q) { return q.place == f.place; });
    if (it == out.pairs.end()) {
      FiberPair pr;
      pr.place = f.place;
      pr.degree = f.place.degree;
      pr.right = f.type;
      pr.right_components = f.components;
      out.pairs.push_back(pr);
    } else {
      it->right = f.type;
      it->right_components = f.components;
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const FiberPair& x, const FiberPair& y) {
              if (x.place.at_infinity != y.place.at_infinity)
                return y.place.at_infinity;  // infinity last
              if (x.degree != y.degree) return x.degree < y.degree;
              return place_sort_key(x.place) < place_sort_key(y.place);
            });

  long long e_local = 0;        // sum of local Euler contributions
  long long shared_tt = 0;      // sum of t(b) t'(b) over shared places
  long long comp_excess = 0;    // sum of (components - 1) of product fibers
  long long left_only_excess = 0, right_only_excess = 0;  // sum of (t - 1)
  int union_count = 0;
  for (auto& pr : out.pairs) {
    pr.shared = pr.left.cls != KodairaClass::I0 &&
                pr.right.cls != KodairaClass::I0;
    pr.local = local_product(pr.left, pr.right);
    if (!pr.local.admissible)
      throw std::domain_error("build_product: assumption violated at " +
                              to_string(pr.place) + ": " + pr.local.note);
    const int deg = pr.degree;
    union_count += deg;
    e_local += deg * pr.local.euler;
    comp_excess += deg * (pr.local.components - 1);
    if (pr.shared) {
      out.shared_count += deg;
      shared_tt += 1LL * deg * pr.left_components * pr.right_components;
      if (pr.left.cls == KodairaClass::II) out.n2 += deg;
      if (pr.left.cls == KodairaClass::III) out.n3 += deg;
      if (pr.left.cls == KodairaClass::IV) out.n4 += deg;
    } else if (pr.left.cls != KodairaClass::I0) {
      left_only_excess += deg * (pr.left_components - 1);
    } else {
      right_only_excess += deg * (pr.right_components - 1);
    }
  }
  out.s_count = left.singular_count;
  out.s_prime_count = right.singular_count;

  const long long e_global =
      2 * (shared_tt + 2 * out.n2 + 2 * out.n3 + 3 * out.n4);
  if (e_local != e_global)
    throw std::logic_error("build_product: local Euler sum " +
                           std::to_string(e_local) +
                           " disagrees with the closed form " +
                           std::to_string(e_global));
  out.euler = e_global;

  const bool same_cusps = out.shared_count == out.s_count &&
                          out.s_count == out.s_prime_count;
  switch (d) {
    case DFlag::automatic:
      out.d_flag = (same_cusps && out.s_count == 4) ? 1 : 0;
      break;
    case DFlag::zero:
      out.d_flag = 0;
      out.d_overridden = true;
      break;
    case DFlag::one:
      out.d_flag = 1;
      out.d_overridden = true;
      break;
  }

  out.rho = out.d_flag + 3 + left.mw_rank + right.mw_rank + comp_excess;
  const long long h_deform =
      out.d_flag + union_count - 5 + left_only_excess + right_only_excess;
  const long long h_hodge = out.rho - out.euler / 2;
  if (h_deform != h_hodge)
    throw std::logic_error("build_product: deformation count " +
                           std::to_string(h_deform) +
                           " disagrees with rho - e/2 = " +
                           std::to_string(h_hodge));
  out.h12 = h_hodge;

  out.rigidity = classify_rigidity(out);
  if (!out.d_overridden) {
    const bool rigid = out.rigidity != RigidityCase::non_rigid;
    if (rigid != (out.h12 == 0))
      throw std::logic_error(
          "build_product: rigidity pattern " + to_string(out.rigidity) +
          " disagrees with h12 = " + std::to_string(out.h12));
  }
  return out;
}

// ---- Primes of bad reduction --------------------------------------------

namespace {

void add_primes(std::set<Int>& dst, const Int& n) {
  if (is_zero(n))
    throw std::domain_error("bad primes: a tracked quantity vanished");
  for (const auto& [p, e] : integer_factor(n).factors) dst.insert(p);
}

void add_primes(std::set<Int>& dst, const Rat& q) {
  add_primes(dst, num(q));
  add_primes(dst, den(q));
}

std::vector<Int> descending(const std::set<Int>& s) {
  std::vector<Int> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), std::greater<Int>());
  return v;
}

void fill_per_prime(BadPrimeReport& report, const ReductionContext& ctx) {
  std::set<Int> all(report.nodal.begin(), report.nodal.end());
  all.insert(report.degenerate.begin(), report.degenerate.end());
  for (const Int& p : all) {
    if (p <= 3) continue;  // wild ramification: never classified
    if (p > Int(std::numeric_limits<std::uint64_t>::max() / 4)) continue;
    report.per_prime[p] =
        classify_reduction_at(ctx, p.convert_to<std::uint64_t>());
  }
}

}  // namespace

BadPrimeReport bad_primes(const QuadElem& lambda, const QuadElem& lambda_prime) {
  const QuadElem zero(0), one(1);
  if (lambda == zero || lambda == one || lambda_prime == zero ||
      lambda_prime == one)
    throw std::domain_error("bad_primes: free cusps must avoid 0 and 1");
  if (lambda == lambda_prime)
    throw std::domain_error(
        "bad_primes: equal free cusps (the nodal quantity N(lambda - "
        "lambda') vanishes identically)");

  std::set<Int> deg_set;
  for (const QuadElem* v : {&lambda, &lambda_prime}) {
    add_primes(deg_set, field_norm(*v));
    add_primes(deg_set, field_norm(*v - one));
  }
  std::set<Int> nod_set;
  add_primes(nod_set, num(field_norm(lambda - lambda_prime)));
  for (const Int& p : deg_set) nod_set.erase(p);

  BadPrimeReport report;
  report.nodal = descending(nod_set);
  report.degenerate = descending(deg_set);
  fill_per_prime(report, ReductionContext::four_fiber_pair(lambda, lambda_prime));
  return report;
}

FiveFiberQuantities five_fiber_quantities(const Rat& lambda) {
  if (is_zero(lambda) || lambda == 1)
    throw std::domain_error(
        "five_fiber_quantities: the free cusp must avoid 0 and 1");
  FiveFiberQuantities q;
  q.m = Rat(-8) * lambda;
  if (q.m == -2)
    throw std::domain_error(
        "five_fiber_quantities: the member at m = -2 is degenerate");
  q.lambda = lambda;
  q.lambda_minus_1 = lambda - 1;
  const Rat m1 = q.m - 1, p2 = q.m + 2;
  q.j = Rat(-4) * m1 * m1 * m1 / (Rat(81) * p2 * p2);
  q.j_minus_1 = q.j - 1;
  q.j_minus_lambda = q.j - lambda;
  return q;
}

BadPrimeReport bad_primes_five_fiber(const Rat& lambda) {
  const FiveFiberQuantities q = five_fiber_quantities(lambda);
  if (is_zero(q.j) || is_zero(q.j_minus_1) || is_zero(q.j_minus_lambda))
    throw std::domain_error(
        "bad_primes_five_fiber: the member at m = " + to_string(q.m) +
        " has merged cusps (degenerate five-fiber factor)");

  std::set<Int> deg_set;
  add_primes(deg_set, q.lambda);
  add_primes(deg_set, num(q.lambda_minus_1));
  add_primes(deg_set, den(q.j));
  std::set<Int> nod_set;
  add_primes(nod_set, num(q.j_minus_1));
  for (const Int& p : deg_set) nod_set.erase(p);

  BadPrimeReport report;
  report.nodal = descending(nod_set);
  report.degenerate = descending(deg_set);
  fill_per_prime(report, ReductionContext::five_fiber_pair(lambda));
  return report;
}

ReductionContext ReductionContext::four_fiber_pair(const QuadElem& l,
                                                   const QuadElem& lp) {
  ReductionContext ctx;
  ctx.lambda = l;
  ctx.lambda_prime = lp;
  return ctx;
}

ReductionContext ReductionContext::five_fiber_pair(const Rat& lambda) {
  ReductionContext ctx;
  ctx.lambda = QuadElem(lambda);
  ctx.five_fiber_m = Rat(-8) * lambda;
  return ctx;
}

ReductionClass classify_reduction_at(const ReductionContext& ctx,
                                     std::uint64_t p) {
  if (p <= 3)
    throw std::domain_error(
        "classify_reduction_at: p must exceed 3 (wild ramification)");
  const Int ip(p);
  auto in_num = [&ip](const Rat& r) { return num(r) % ip == 0; };
  auto in_den = [&ip](const Rat& r) { return den(r) % ip == 0; };

  if (ctx.five_fiber_m) {
    const FiveFiberQuantities q = five_fiber_quantities(*as_rational(ctx.lambda));
    if (in_num(q.lambda) || in_den(q.lambda) || in_num(q.lambda_minus_1))
      return ReductionClass::factor_degeneration;
    if (in_den(q.j)) return ReductionClass::no_small_resolution;
    if (in_num(q.j_minus_1)) return ReductionClass::extra_node;
    // Covers j = 0 and j = lambda mod p: the moving I_1 merges into a
    // neighboring I_n, still compatible with a small resolution.
    return ReductionClass::merged_good;
  }

  for (const QuadElem* v : {&ctx.lambda, &ctx.lambda_prime}) {
    if (v->d == 1) continue;
    FpCtx F(p);
    const std::uint64_t dr = F.reduce(v->d);
    if (dr != 0 && !F.sqrt(dr)) return ReductionClass::inert_skipped;
  }

  const QuadElem one(1);
  const Rat nl = field_norm(ctx.lambda);
  const Rat nl1 = field_norm(ctx.lambda - one);
  const Rat np = field_norm(ctx.lambda_prime);
  const Rat np1 = field_norm(ctx.lambda_prime - one);
  if (in_den(nl) || in_den(nl1) || in_den(np) || in_den(np1))
    return ReductionClass::no_small_resolution;
  if (in_num(nl) || in_num(nl1) || in_num(np) || in_num(np1))
    return ReductionClass::factor_degeneration;
  if (in_num(field_norm(ctx.lambda - ctx.lambda_prime)))
    return ReductionClass::extra_node;
  return ReductionClass::merged_good;
}

// ---- Merging rule --------------------------------------------------------

namespace {

/// Tries one orientation: `m1`, `m2` as the merging factor's types above the
/// two places, `p1`, `p2` as the passive factor's. Returns nothing when this
/// orientation does not fit a recognized pattern.
std::optional<MergingOutcome> try_merge_orientation(FiberType m1, FiberType p1,
                                                    FiberType m2, FiberType p2) {
  if (!is_semistable(m1) || !is_semistable(m2)) return std::nullopt;
  const int a = m1.n, b = m2.n;
  const int total = a + b;
  if (a < 1 || b < 1 || a == b || (total != 3 && total != 4))
    return std::nullopt;  // only I_1+I_2 -> III and I_1+I_3 -> IV merges
  for (FiberType pt : {p1, p2})
    if (pt.cls != KodairaClass::I0 && !is_semistable(pt)) return std::nullopt;

  bool good = true;
  if (p1.cls != KodairaClass::I0 && a < b) good = false;
  if (p2.cls != KodairaClass::I0 && b < a) good = false;
  return good ? MergingOutcome::good : MergingOutcome::bad;
}

std::string describe(const MergingPattern& pat) {
  return "(" + to_string(pat.first_left) + " x " + to_string(pat.first_right) +
         ", " + to_string(pat.second_left) + " x " +
         to_string(pat.second_right) + ")";
}

}  // namespace

MergingOutcome merging_rule(const MergingPattern& pattern) {
  const auto as_left =
      try_merge_orientation(pattern.first_left, pattern.first_right,
                            pattern.second_left, pattern.second_right);
  const auto as_right =
      try_merge_orientation(pattern.first_right, pattern.first_left,
                            pattern.second_right, pattern.second_left);
  if (as_left && as_right) {
    if (*as_left == *as_right) return *as_left;
    throw std::domain_error("merging_rule: ambiguous pattern " +
                            describe(pattern));
  }
  if (as_left) return *as_left;
  if (as_right) return *as_right;
  throw std::domain_error("merging_rule: unrecognized pattern " +
                          describe(pattern));
}

}  // namespace ellcy
