#include "ellcy/tables.hpp"

#include <stdexcept>

#include "ellcy/registry.hpp"

namespace ellcy {
namespace {

// ---- Embedded expectations ----------------------------------------------

QuadElem q(long long num, long long den = 1) {
  return QuadElem(Rat(Int(num), Int(den)));
}
QuadElem qq(long long an, long long bn, long long den, long long d) {
  return QuadElem(Rat(Int(an), Int(den)), Rat(Int(bn), Int(den)), Int(d));
}
FiberType fIn(int n) { return FiberType{KodairaClass::In, n}; }

// Free cusps of the quadratic presentations.
const QuadElem kAlpha = qq(17, 56, 81, -2);         // [1,1,8] seed value
const QuadElem kAlphaBar = qq(17, -56, 81, -2);
const QuadElem kOneMinusAlpha = qq(64, -56, 81, -2);
const QuadElem kOneMinusAlphaBar = qq(64, 56, 81, -2);
const QuadElem kAlphaEight = qq(8, 7, 16, -2);      // [1,1,8] with I8 free
const QuadElem kAlphaEightBar = qq(8, -7, 16, -2);
const QuadElem kOmega = qq(-87, 91, 256, -7);       // [1,1,7] seed value
const QuadElem kOneMinusOmega = qq(343, -91, 256, -7);

struct SurfaceRowSpec {
  FiberType at_zero, at_one, at_free;
  QuadElem lambda;
};

std::vector<SurfaceRowSpec> surfaces_ii_rows() {
  return {
      // [1,1,8]
      {fIn(8), fIn(1), fIn(1), kAlpha},
      {fIn(1), fIn(8), fIn(1), kOneMinusAlpha},
      {fIn(1), fIn(1), fIn(8), kAlphaEight},
      {fIn(1), fIn(1), fIn(8), kAlphaEightBar},
      {fIn(1), fIn(8), fIn(1), kOneMinusAlphaBar},
      {fIn(8), fIn(1), fIn(1), kAlphaBar},
      // [1,2,7]
      {fIn(7), fIn(2), fIn(1), q(32, 81)},
      {fIn(2), fIn(7), fIn(1), q(49, 81)},
      {fIn(2), fIn(1), fIn(7), q(81, 49)},
      {fIn(1), fIn(2), fIn(7), q(-32, 49)},
      {fIn(1), fIn(7), fIn(2), q(-49, 32)},
      {fIn(7), fIn(1), fIn(2), q(81, 32)},
      // [1,4,5]
      {fIn(5), fIn(4), fIn(1), q(1, 81)},
      {fIn(4), fIn(5), fIn(1), q(80, 81)},
      {fIn(4), fIn(1), fIn(5), q(81, 80)},
      {fIn(1), fIn(4), fIn(5), q(-1, 80)},
      {fIn(1), fIn(5), fIn(4), q(-80)},
      {fIn(5), fIn(1), fIn(4), q(81)},
      // [2,3,5]
      {fIn(5), fIn(3), fIn(2), q(27, 32)},
      {fIn(3), fIn(5), fIn(2), q(5, 32)},
      {fIn(3), fIn(2), fIn(5), q(32, 5)},
      {fIn(2), fIn(3), fIn(5), q(-27, 5)},
      {fIn(2), fIn(5), fIn(3), q(-5, 27)},
      {fIn(5), fIn(2), fIn(3), q(32, 27)},
  };
}

std::vector<SurfaceRowSpec> surfaces_iii_rows() {
  return {
      // [1,1,7]
      {fIn(7), fIn(1), fIn(1), kOmega},
      {fIn(1), fIn(7), fIn(1), kOneMinusOmega},
      // [1,2,6]
      {fIn(6), fIn(2), fIn(1), q(1, 4)},
      {fIn(2), fIn(6), fIn(1), q(3, 4)},
      // [1,3,5]
      {fIn(5), fIn(3), fIn(1), q(3, 128)},
      {fIn(3), fIn(5), fIn(1), q(125, 128)},
  };
}

struct ProductRowSpec {
  QuadElem l, lp;
  std::vector<long long> nodal, degenerate;
  long long h12;
};

std::vector<ProductRowSpec> products_ii_rows() {
  return {
      {q(5, 32), q(32, 5), {37}, {5, 3, 2}, 5},
      {q(5, 32), q(-27, 5), {127, 7}, {5, 3, 2}, 5},
      {q(5, 32), q(-5, 27), {59}, {5, 3, 2}, 3},
      {q(5, 32), q(80, 81), {431}, {5, 3, 2}, 1},
      {q(5, 32), q(81), {199, 13}, {5, 3, 2}, 4},
      {q(5, 32), q(81, 80), {137}, {5, 3, 2}, 5},
      {q(5, 32), q(1, 81), {373}, {5, 3, 2}, 1},
      {q(5, 32), q(49, 81), {1163}, {7, 5, 3, 2}, 1},
      {q(5, 32), q(32, 81), {619}, {7, 5, 3, 2}, 1},
      {q(5, 32), q(-32, 49), {47}, {7, 5, 3, 2}, 7},
      {q(5, 32), q(81, 49), {2347}, {7, 5, 3, 2}, 7},
      {q(1, 81), q(81), {41}, {5, 3, 2}, 3},
      {q(1, 81), q(-1, 80), {23, 7}, {5, 3, 2}, 4},
      {q(1, 81), q(-80), {6481}, {5, 3, 2}, 3},
      {q(1, 81), q(80, 81), {79}, {5, 3, 2}, 0},
      {q(1, 81), q(81, 32), {6529}, {7, 5, 3, 2}, 1},
      {q(1, 81), q(32, 81), {31}, {7, 5, 3, 2}, 0},
      {q(1, 81), q(-32, 49), {139, 19}, {7, 5, 3, 2}, 6},
      {q(1, 81), q(-49, 32), {4001}, {7, 5, 3, 2}, 1},
      {q(32, 81), q(81, 32), {113}, {7, 3, 2}, 1},
      {q(32, 81), q(81, 49), {4993}, {7, 3, 2}, 6},
      {q(32, 81), q(49, 81), {17}, {7, 3, 2}, 0},
      {q(32, 81), q(-32, 49), {13, 5}, {7, 3, 2}, 6},
      {kAlpha, q(32, 5), {1187, 67}, {5, 3, 2}, 4},
      {kAlpha, q(32, 27), {97, 43}, {5, 3, 2}, 2},
      {kAlpha, q(1, 81), {17}, {5, 3, 2}, 0},
      {kAlpha, q(-80), {521201}, {5, 3, 2}, 3},
      {kAlpha, q(80, 81), {19, 11, 7}, {5, 3, 2}, 0},
      {kAlpha, q(32, 81), {89, 73}, {7, 3, 2}, 0},
      {kAlpha, q(-49, 32), {281, 107, 11}, {7, 3, 2}, 1},
      {kAlpha, kOneMinusAlpha, {337}, {3, 2}, 0},
  };
}

std::vector<ProductRowSpec> products_iii_rows() {
  return {
      {q(1, 4), q(3, 128), {29}, {5, 3, 2}, 0},
      {q(3, 4), q(3, 128), {31}, {5, 3, 2}, 0},
      {q(3, 128), q(125, 128), {61}, {5, 3, 2}, 0},
      {kOmega, q(1, 4), {631}, {7, 3, 2}, 0},
      {kOmega, q(3, 4), {1061}, {7, 3, 2}, 0},
      {kOmega, q(3, 128), {757, 11}, {7, 5, 3, 2}, 0},
      {kOmega, q(125, 128), {151, 71}, {7, 5, 3, 2}, 0},
  };
}

struct RigidRowSpec {
  Rat lambda, m;
  std::vector<long long> nodal, degenerate;
};

std::vector<RigidRowSpec> rigid_1234_rows() {
  return {
      {Rat(-27, 5), Rat(216, 5), {127, 7}, {113, 5, 3, 2}},
      {Rat(32, 5), Rat(-256, 5), {37}, {41, 5, 3, 2}},
      {Rat(-5, 27), Rat(40, 27), {59}, {47, 5, 3, 2}},
      {Rat(32, 27), Rat(-256, 27), {127, 7}, {101, 5, 3, 2}},
      {Rat(1, 81), Rat(-8, 81), {373}, {11, 7, 5, 3, 2}},
      {Rat(81), Rat(-648), {199, 13}, {19, 17, 5, 3, 2}},
      {Rat(81, 80), Rat(-81, 10), {137}, {61, 5, 3, 2}},
      {Rat(80, 81), Rat(-640, 81), {431}, {239, 5, 3, 2}},
      {Rat(32, 81), Rat(-256, 81), {619}, {47, 7, 3, 2}},
      {Rat(49, 81), Rat(-392, 81), {1163}, {23, 7, 5, 3, 2}},
      {Rat(81, 32), Rat(-81, 4), {19}, {73, 7, 3, 2}},
      {Rat(81, 49), Rat(-648, 49), {2347}, {11, 7, 5, 3, 2}},
      {Rat(-32, 49), Rat(256, 49), {47}, {59, 7, 3, 2}},
  };
}

// ---- Reproduction --------------------------------------------------------

std::vector<Int> to_ints(const std::vector<long long>& v) {
  std::vector<Int> out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(x);
  return out;
}

std::string placement_string(FiberType z, FiberType o, FiberType f,
                             const QuadElem& lambda) {
  return to_string(z) + "@0 " + to_string(o) + "@1 " + to_string(f) + "@" +
         to_string(lambda);
}

TableReport reproduce_surfaces(TableId id, KodairaClass additive,
                               const std::vector<SurfaceRowSpec>& rows) {
  TableReport rep;
  rep.id = id;
  for (const SurfaceRowSpec& s : rows) {
    TableRow r;
    r.lambda = to_string(s.lambda);
    r.placement = placement_string(s.at_zero, s.at_one, s.at_free, s.lambda);
    const BuiltinSurface* b = find_builtin(additive, s.lambda);
    if (b) {
      r.computed_placement = placement_string(b->type_at_zero, b->type_at_one,
                                              b->type_at_lambda, b->lambda);
      r.match = b->type_at_zero == s.at_zero && b->type_at_one == s.at_one &&
                b->type_at_lambda == s.at_free;
    }
    if (!r.match) ++rep.mismatch_count;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

TableReport reproduce_products(TableId id, KodairaClass additive,
                               const std::vector<ProductRowSpec>& rows) {
  TableReport rep;
  rep.id = id;
  for (const ProductRowSpec& s : rows) {
    TableRow r;
    r.lambda = to_string(s.l);
    r.lambda_prime = to_string(s.lp);
    r.expected_nodal = to_ints(s.nodal);
    r.expected_degenerate = to_ints(s.degenerate);
    r.expected_h12 = s.h12;
    BadPrimeReport bp = bad_primes(s.l, s.lp);
    r.nodal = bp.nodal;
    r.degenerate = bp.degenerate;
    const BuiltinSurface* left = find_builtin(additive, s.l);
    const BuiltinSurface* right = find_builtin(additive, s.lp);
    if (left && right)
      r.h12 = build_product(left->analysis, right->analysis, DFlag::automatic).h12;
    r.match = r.nodal == r.expected_nodal &&
              r.degenerate == r.expected_degenerate && r.h12 &&
              *r.h12 == *r.expected_h12;
    if (!r.match) ++rep.mismatch_count;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

TableReport reproduce_rigid(const std::vector<RigidRowSpec>& rows) {
  TableReport rep;
  rep.id = TableId::rigid_1234;
  for (const RigidRowSpec& s : rows) {
    TableRow r;
    r.lambda = to_string(QuadElem(s.lambda));
    FiveFiberQuantities fq = five_fiber_quantities(s.lambda);
    r.m = to_string(QuadElem(fq.m));
    r.expected_nodal = to_ints(s.nodal);
    r.expected_degenerate = to_ints(s.degenerate);
    BadPrimeReport bp = bad_primes_five_fiber(s.lambda);
    r.nodal = bp.nodal;
    r.degenerate = bp.degenerate;
    r.match = fq.m == s.m && r.nodal == r.expected_nodal &&
              r.degenerate == r.expected_degenerate;
    if (!r.match) ++rep.mismatch_count;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

}  // namespace

std::string table_name(TableId id) {
  switch (id) {
    case TableId::surfaces_ii: return "surfaces-II";
    case TableId::surfaces_iii: return "surfaces-III";
    case TableId::products_ii: return "products-II";
    case TableId::rigid_1234: return "rigid-1234";
    case TableId::products_iii: return "products-III";
  }
  throw std::logic_error("table_name: bad id");
}

std::optional<TableId> parse_table_name(const std::string& s) {
  for (TableId id : all_tables())
    if (table_name(id) == s) return id;
  return std::nullopt;
}

std::vector<TableId> all_tables() {
  return {TableId::surfaces_ii, TableId::surfaces_iii, TableId::products_ii,
          TableId::rigid_1234, TableId::products_iii};
}

TableReport reproduce_table(TableId id) {
  switch (id) {
    case TableId::surfaces_ii:
      return reproduce_surfaces(id, KodairaClass::II, surfaces_ii_rows());
    case TableId::surfaces_iii:
      return reproduce_surfaces(id, KodairaClass::III, surfaces_iii_rows());
    case TableId::products_ii:
      return reproduce_products(id, KodairaClass::II, products_ii_rows());
    case TableId::rigid_1234:
      return reproduce_rigid(rigid_1234_rows());
    case TableId::products_iii:
      return reproduce_products(id, KodairaClass::III, products_iii_rows());
  }
  throw std::logic_error("reproduce_table: bad id");
}

}  // namespace ellcy
