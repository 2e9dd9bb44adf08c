#pragma once
// The reference datasets bundled with the library: anchored four-fiber
// surface presentations (II and III at infinity), the product grids with
// their bad primes and h^{1,2}, and the rigid five-by-four pairings built
// from m = -8*lambda. Every table can be recomputed from first principles
// and diffed against the bundled expectations; mismatches are reported as
// data, never thrown.

#include <optional>
#include <string>
#include <vector>

#include "ellcy/fibprod.hpp"

namespace ellcy {

enum class TableId {
  surfaces_ii,   // presentations with a II fiber at infinity (24 rows)
  surfaces_iii,  // presentations with a III fiber at infinity (6 rows)
  products_ii,   // II x II products: bad primes and h12 per (lambda, lambda')
  rigid_1234,    // rigid pairings of [1,2,3,4,II] members at m = -8*lambda
  products_iii,  // III x III products over Q and Q(sqrt(-7))
};

std::string table_name(TableId id);  // "surfaces-II", ..., "products-III"
std::optional<TableId> parse_table_name(const std::string& s);
std::vector<TableId> all_tables();

/// One reproduced row: the identifying columns, the recomputed values, the
/// bundled expectations, and whether they agree. Fields absent from a table
/// stay disengaged (surfaces rows carry placements; product rows carry
/// primes and h12; rigid rows carry primes and the matched parameter m).
struct TableRow {
  std::string lambda;
  std::optional<std::string> lambda_prime;
  std::optional<std::string> m;  // rigid table: recomputed -8*lambda

  std::optional<std::string> placement;           // expected cusp placement
  std::optional<std::string> computed_placement;  // from the registry

  std::vector<Int> nodal, degenerate;  // recomputed, descending
  std::vector<Int> expected_nodal, expected_degenerate;
  std::optional<long long> h12, expected_h12;

  bool match = false;
};

struct TableReport {
  TableId id{};
  std::vector<TableRow> rows;
  int mismatch_count = 0;
  bool all_match() const { return mismatch_count == 0; }
};

TableReport reproduce_table(TableId id);

}  // namespace ellcy
