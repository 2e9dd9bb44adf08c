// Exact arithmetic layer: integers, rationals, quadratic field elements,
// polynomials (resultants, gcd, squarefree decomposition, roots), prime
// fields, and the string round trips everything else depends on.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "ellcy/fp.hpp"
#include "ellcy/fppoly.hpp"
#include "ellcy/intfactor.hpp"
#include "ellcy/parse.hpp"
#include "ellcy/poly.hpp"
#include "ellcy/polyroots.hpp"
#include "ellcy/quad.hpp"

using namespace ellcy;

namespace {

const QuadElem kAlpha(Rat(17, 81), Rat(56, 81), Int(-2));

PolyQ qpoly(std::vector<Rat> c) { return PolyQ(std::move(c)); }

}  // namespace

TEST_CASE("integer_factor: pinned factorizations") {
  FactoredInteger f = integer_factor(6560);
  CHECK(f.sign == 1);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::pair<Int, int>(2, 5));
  CHECK(f.factors[1] == std::pair<Int, int>(5, 1));
  CHECK(f.factors[2] == std::pair<Int, int>(41, 1));

  f = integer_factor(27297);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<Int, int>(3, 4));
  CHECK(f.factors[1] == std::pair<Int, int>(337, 1));

  f = integer_factor(1);
  CHECK(f.sign == 1);
  CHECK(f.factors.empty());

  f = integer_factor(-12);
  CHECK(f.sign == -1);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<Int, int>(2, 2));
  CHECK(f.factors[1] == std::pair<Int, int>(3, 1));

  CHECK_THROWS_AS(integer_factor(0), std::domain_error);
}

TEST_CASE("integer_factor: reconstruction and primality on random inputs") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 40; ++i) {
    // Sized like the table data (up to ~10^10): past the trial-division
    // bound only through a single prime cofactor or an easy rho split.
    Int n = Int(rng() % 9'999'999'999ull) + 2;
    if (i % 2) n = -n;
    FactoredInteger f = integer_factor(n);
    CHECK(f.value() == n);
    for (size_t k = 0; k < f.factors.size(); ++k) {
      CHECK(is_probable_prime(f.factors[k].first));
      CHECK(f.factors[k].second >= 1);
      if (k > 0) CHECK(f.factors[k - 1].first < f.factors[k].first);
    }
  }
}

TEST_CASE("integer_factor: trial-division bound override via CY_FACTOR_LIMIT") {
  // With the bound squeezed to 10, the factors of 101 * 103 are out of
  // trial-division reach and must come from the rho fallback.
  setenv("CY_FACTOR_LIMIT", "10", 1);
  FactoredInteger f = integer_factor(Int(101) * 103);
  unsetenv("CY_FACTOR_LIMIT");
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<Int, int>(101, 1));
  CHECK(f.factors[1] == std::pair<Int, int>(103, 1));

  // Default bound: a semiprime just past 10^6 exercises the same fallback.
  Int a = 1000003, b = 1000033;
  f = integer_factor(a * b);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == a);
  CHECK(f.factors[1].first == b);
}

TEST_CASE("is_probable_prime: known primes and pseudoprime traps") {
  CHECK(is_probable_prime(2));
  CHECK(is_probable_prime(3));
  CHECK(is_probable_prime(337));
  CHECK(is_probable_prime(521201));  // largest prime in the embedded tables
  CHECK_FALSE(is_probable_prime(1));
  CHECK_FALSE(is_probable_prime(561));    // Carmichael
  CHECK_FALSE(is_probable_prime(25326001));  // strong pseudoprime to 2,3,5
}

TEST_CASE("prime_support of rationals") {
  std::vector<Int> s = prime_support(Rat(6560, 27297));
  CHECK(s == std::vector<Int>{2, 3, 5, 41, 337});
}

TEST_CASE("rational strings") {
  CHECK(to_string(Rat(-27, 5)) == "-27/5");
  CHECK(to_string(Rat(3)) == "3");
  CHECK(parse_rational("8/4") == Rat(2));
  CHECK(parse_rational("-5/32") == Rat(-5, 32));
  CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
}

TEST_CASE("QuadElem: normalization rules") {
  // A vanishing irrational part always normalizes to the rational marker.
  QuadElem z(Rat(1), Rat(0), Int(-2));
  CHECK(z.d == 1);
  CHECK(z.is_rational());

  // Square parts of d fold into b: sqrt(12) = 2 sqrt(3).
  QuadElem s(Rat(0), Rat(1), Int(12));
  CHECK(s.d == 3);
  CHECK(s.b == Rat(2));

  QuadElem t(Rat(1, 2), Rat(3, 4), Int(50));  // sqrt(50) = 5 sqrt(2)
  CHECK(t.d == 2);
  CHECK(t.b == Rat(15, 4));
}

TEST_CASE("QuadElem: arithmetic, conjugation, inverse") {
  CHECK(kAlpha.a == Rat(17, 81));
  CHECK(kAlpha.b == Rat(56, 81));
  CHECK(kAlpha.d == -2);

  QuadElem r2(Rat(0), Rat(1), Int(-2));
  CHECK(r2 * r2 == QuadElem(Rat(-2)));
  CHECK(inverse(kAlpha) * kAlpha == QuadElem(1));
  // Norm-1 element: the inverse is the conjugate.
  CHECK(inverse(kAlpha) == conj(kAlpha));
  CHECK(conj(kAlpha) + kAlpha == QuadElem(Rat(34, 81)));

  // Mixing genuinely different fields is an error, embedding Q is not.
  QuadElem r7(Rat(0), Rat(1), Int(-7));
  CHECK_THROWS_AS(r2 + r7, std::domain_error);
  CHECK_THROWS_AS(r2 * r7, std::domain_error);
  CHECK(r2 + QuadElem(Rat(1, 3)) == QuadElem(Rat(1, 3), Rat(1), Int(-2)));
}

TEST_CASE("field_norm: pinned values and multiplicativity") {
  CHECK(field_norm(kAlpha) == Rat(1));
  CHECK(field_norm(QuadElem(2) * kAlpha - QuadElem(1)) == Rat(337, 81));
  CHECK(field_norm(QuadElem(Rat(-5, 7))) == Rat(25, 49));

  std::mt19937_64 rng(7);
  auto rnd = [&] {
    return QuadElem(Rat(Int(rng() % 2000) - 1000, 1 + rng() % 50),
                    Rat(Int(rng() % 2000) - 1000, 1 + rng() % 50), Int(-7));
  };
  for (int i = 0; i < 25; ++i) {
    QuadElem x = rnd(), y = rnd();
    CHECK(field_norm(x * y) == field_norm(x) * field_norm(y));
    CHECK((field_norm(x) == 0) == x.is_zero());
  }
}

TEST_CASE("square roots") {
  CHECK(rat_sqrt(Rat(49, 4)) == Rat(7, 2));
  CHECK_FALSE(rat_sqrt(Rat(2)).has_value());
  auto [s, d0] = rat_sqrt_decompose(Rat(18));
  CHECK(s == Rat(3));
  CHECK(d0 == 2);

  // quad_sqrt works inside the element's own field: a rational input (d = 1
  // marker) has no square root of -2 there.
  CHECK(quad_sqrt(QuadElem(Rat(9, 4))) == QuadElem(Rat(3, 2)));
  CHECK_FALSE(quad_sqrt(QuadElem(Rat(-2))).has_value());

  // alpha = ((7 + 4 sqrt(-2))/9)^2 is a square inside Q(sqrt(-2)).
  std::optional<QuadElem> q = quad_sqrt(kAlpha);
  REQUIRE(q.has_value());
  CHECK(*q * *q == kAlpha);
  // sqrt(-2) itself is not: its norm 2 is not a rational square.
  CHECK_FALSE(quad_sqrt(QuadElem(Rat(0), Rat(1), Int(-2))).has_value());
}

TEST_CASE("value strings round-trip through the parser") {
  for (const char* s : {"5/32", "-27/5", "3", "0", "(17+56*sqrt(-2))/81",
                        "(64-56*sqrt(-2))/81", "(-87+91*sqrt(-7))/256",
                        "(343-91*sqrt(-7))/256"}) {
    CHECK(to_string(parse_value(s)) == s);
  }
  // Normalizing spellings parse but re-serialize canonically.
  CHECK(to_string(parse_value("2/4")) == "1/2");
  CHECK(to_string(parse_value("sqrt(8)")) == "(0+2*sqrt(2))");
  CHECK(to_string(parse_value("1+sqrt(5)")) == "(1+1*sqrt(5))");
  CHECK_THROWS_AS(parse_value("1//2"), std::domain_error);
  CHECK_THROWS_AS(parse_value("sqrt"), std::domain_error);
  CHECK_THROWS_AS(parse_value("(1+"), std::domain_error);
  CHECK_THROWS_AS(parse_value(""), std::domain_error);
}

TEST_CASE("polynomials: evaluation, division, gcd") {
  PolyQ p = qpoly({Rat(-1), Rat(0), Rat(1)});  // t^2 - 1
  CHECK(p.eval(Rat(3)) == Rat(8));
  CHECK(p.derivative() == qpoly({Rat(0), Rat(2)}));

  PolyQ prod = p * qpoly({Rat(3), Rat(1)});
  CHECK(exact_div(prod, p) == qpoly({Rat(3), Rat(1)}));
  CHECK_THROWS_AS(exact_div(p, qpoly({Rat(3), Rat(1)})), std::domain_error);

  PolyQ g = poly_gcd(p * qpoly({Rat(5), Rat(1)}), p * qpoly({Rat(7), Rat(1)}));
  CHECK(g == p);  // gcd is monic
}

TEST_CASE("poly_resultant: pinned values and symmetry") {
  PolyQ p = qpoly({Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
  PolyQ q = qpoly({Rat(-2), Rat(1)});          // x - 2
  CHECK(poly_resultant(p, q) == Rat(3));

  // Res(p, c) = c^{deg p} for constants.
  CHECK(poly_resultant(p, qpoly({Rat(5)})) == Rat(25));

  // Swap symmetry with the sign (-1)^{deg p * deg q}.
  PolyQ a = qpoly({Rat(1), Rat(2), Rat(1), Rat(3)});
  PolyQ b = qpoly({Rat(-4), Rat(0), Rat(2)});
  Rat sign = (a.degree() * b.degree()) % 2 == 0 ? Rat(1) : Rat(-1);
  CHECK(poly_resultant(a, b) == sign * poly_resultant(b, a));

  CHECK_THROWS_AS(poly_resultant(PolyQ(), PolyQ()), std::domain_error);
}

TEST_CASE("poly_resultant vanishes exactly on common factors") {
  PolyQ f1 = qpoly({Rat(-1), Rat(1)});  // x - 1
  CHECK(poly_resultant(f1 * qpoly({Rat(2), Rat(1)}), f1 * qpoly({Rat(5), Rat(1)})) ==
        Rat(0));

  std::mt19937_64 rng(99);
  auto rnd_poly = [&](int deg) {
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Rat(Int(rng() % 19) - 9));
    c.back() = Rat(1 + rng() % 5);
    return PolyQ(c);
  };
  for (int i = 0; i < 30; ++i) {
    PolyQ a = rnd_poly(2 + i % 3), b = rnd_poly(1 + i % 4);
    bool res_zero = poly_resultant(a, b) == Rat(0);
    bool gcd_nonconst = poly_gcd(a, b).degree() >= 1;
    CHECK(res_zero == gcd_nonconst);
  }
}

TEST_CASE("poly_discriminant: quadratic and cubic conventions") {
  CHECK(poly_discriminant(qpoly({Rat(-1), Rat(0), Rat(1)})) == Rat(4));
  CHECK(poly_discriminant(qpoly({Rat(0), Rat(-1), Rat(0), Rat(1)})) == Rat(4));
  // b^2 - 4ac for 3t^2 + 14t + 27.
  CHECK(poly_discriminant(qpoly({Rat(27), Rat(14), Rat(3)})) == Rat(-128));
  // Repeated roots kill the discriminant.
  PolyQ sq = qpoly({Rat(-1), Rat(1)}) * qpoly({Rat(-1), Rat(1)}) * qpoly({Rat(2), Rat(1)});
  CHECK(poly_discriminant(sq) == Rat(0));
}

TEST_CASE("squarefree_decompose: multiplicities reconstruct the input") {
  PolyQ lin1 = qpoly({Rat(-1), Rat(1)}), lin2 = qpoly({Rat(2), Rat(1)});
  PolyQ p = lin1 * lin1 * lin2;
  auto parts = squarefree_decompose(p);
  PolyQ rebuilt(Rat(1));
  bool saw_double = false;
  for (const auto& [factor, mult] : parts) {
    for (int i = 0; i < mult; ++i) rebuilt *= factor;
    if (mult == 2) {
      saw_double = true;
      CHECK(monic(factor) == lin1);
    }
  }
  CHECK(saw_double);
  CHECK(monic(rebuilt) == monic(p));
}

TEST_CASE("poly_roots: quadratic closing into Q(sqrt(-2))") {
  RootsResult r = poly_roots(qpoly({Rat(27), Rat(14), Rat(3)}));
  REQUIRE(r.roots.size() == 2);
  QuadElem expect1(Rat(-7, 3), Rat(4, 3), Int(-2));
  QuadElem expect2(Rat(-7, 3), Rat(-4, 3), Int(-2));
  CHECK(((r.roots[0] == expect1 && r.roots[1] == expect2) ||
         (r.roots[0] == expect2 && r.roots[1] == expect1)));
  CHECK(r.residual.empty());
}

TEST_CASE("poly_roots: rational roots, multiplicity, residual factors") {
  CHECK(poly_roots(qpoly({Rat(-1), Rat(0), Rat(1)})).roots ==
        std::vector<QuadElem>{QuadElem(1), QuadElem(-1)});

  PolyQ lin = qpoly({Rat(-1), Rat(1)});
  PolyQ quad = qpoly({Rat(-2), Rat(0), Rat(1)});        // t^2 - 2
  PolyQ cubic = qpoly({Rat(1), Rat(1), Rat(0), Rat(1)});  // t^3 + t + 1, irreducible

  // (t-1)^2 (t^2-2): a double rational root plus a conjugate surd pair.
  RootsResult r = poly_roots(lin * lin * quad);
  int ones = 0, sqrt2 = 0;
  for (const QuadElem& root : r.roots) {
    if (root == QuadElem(1)) ++ones;
    if (root.d == 2) ++sqrt2;
  }
  CHECK(ones == 2);  // multiplicity preserved
  CHECK(sqrt2 == 2);
  CHECK(r.residual.empty());

  // Substituting each explicit root gives exactly zero.
  PolyK lifted = lift(lin * lin * quad);
  for (const QuadElem& root : r.roots) CHECK(lifted.eval(root).is_zero());

  // An irreducible cubic tail stays behind as an opaque residual factor.
  r = poly_roots(lin * cubic);
  CHECK(r.roots == std::vector<QuadElem>{QuadElem(1)});
  REQUIRE(r.residual.size() == 1);
  CHECK(r.residual[0] == cubic);

  CHECK_THROWS_AS(poly_roots(PolyQ()), std::domain_error);
}

TEST_CASE("poly_roots_in_field: roots living in the ambient quadratic field") {
  PolyK p = lift(qpoly({Rat(2), Rat(0), Rat(1)}));  // t^2 + 2
  RootsResultK r = poly_roots_in_field(p, Int(-2));
  REQUIRE(r.roots.size() == 2);
  for (const QuadElem& root : r.roots) CHECK(root * root == QuadElem(Rat(-2)));

  // No roots of t^2 - 2 inside Q(sqrt(-2)): stays residual.
  RootsResultK none = poly_roots_in_field(lift(qpoly({Rat(-2), Rat(0), Rat(1)})), Int(-2));
  CHECK(none.roots.empty());
  REQUIRE(none.residual.size() == 1);
  CHECK(none.residual[0].degree() == 2);
}

TEST_CASE("factor_squarefree_rational: certified small factors") {
  PolyQ q1 = qpoly({Rat(1), Rat(0), Rat(1)});   // t^2 + 1
  PolyQ q2 = qpoly({Rat(-2), Rat(0), Rat(1)});  // t^2 - 2
  auto fac = factor_squarefree_rational(q1 * q2);
  REQUIRE(fac.size() == 2);
  PolyQ rebuilt = fac[0] * fac[1];
  CHECK(monic(rebuilt) == monic(q1 * q2));
  for (const PolyQ& f : fac) CHECK(f.degree() == 2);

  // A linear factor splits off an opaque quintic.
  PolyQ quint = qpoly({Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)});  // t^5 - t - 1
  auto fac2 = factor_squarefree_rational(qpoly({Rat(-2), Rat(1)}) * quint);
  REQUIRE(fac2.size() == 2);
  CHECK(((fac2[0].degree() == 1 && fac2[1].degree() == 5) ||
         (fac2[0].degree() == 5 && fac2[1].degree() == 1)));
}

TEST_CASE("prime fields: inversion, square roots, reduction") {
  FpCtx F(7);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.reduce(Rat(1, 3)) == 5);
  CHECK(F.reduce(Int(-1)) == 6);

  std::optional<std::uint64_t> s = F.sqrt(2);
  REQUIRE(s.has_value());
  CHECK(*s == 3);  // the smaller of the two roots {3, 4}
  CHECK(F.mul(*s, *s) == 2);
  CHECK_FALSE(F.sqrt(3).has_value());  // 3 is a non-residue mod 7

  CHECK_THROWS_AS(FpCtx(6), std::domain_error);
  CHECK_THROWS_AS(F.reduce(Rat(1, 7)), std::domain_error);
}

TEST_CASE("prime-field polynomials: factorization reassembles the input") {
  FpCtx F(5);
  FpPoly p = {1, 0, 1};  // t^2 + 1 = (t+2)(t+3) mod 5
  auto factors = fp_factor(F, p);
  REQUIRE(factors.size() == 2);
  FpPoly prod = {1};
  for (const auto& [f, mult] : factors) {
    CHECK(fp_deg(f) == 1);
    CHECK(mult == 1);
    prod = fp_mul(F, prod, f);
  }
  CHECK(prod == fp_monic(F, p));

  std::mt19937_64 rng(5150);
  FpCtx G(101);
  for (int i = 0; i < 20; ++i) {
    FpPoly r;
    for (int k = 0; k < 6; ++k) r.push_back(rng() % 101);
    r.push_back(1 + rng() % 100);
    FpPoly rebuilt = {1};
    for (const auto& [f, mult] : fp_factor(G, r))
      for (int k = 0; k < mult; ++k) rebuilt = fp_mul(G, rebuilt, f);
    CHECK(fp_scale(G, rebuilt, r.back()) == fp_trim(r));
  }
}
