#pragma once
// Dense polynomials over F_p (lowest-degree-first residue vectors) with full
// factorization: squarefree part in characteristic p, then distinct-degree
// and Cantor-Zassenhaus equal-degree splitting.

#include <cstdint>
#include <vector>

#include "ellcy/fp.hpp"

namespace ellcy {

using FpPoly = std::vector<std::uint64_t>;  // normalized: no trailing zeros

FpPoly fp_trim(FpPoly f);
int fp_deg(const FpPoly& f);
bool fp_is_zero(const FpPoly& f);
FpPoly fp_add(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpCtx& F, const FpPoly& a, std::uint64_t s);
std::pair<FpPoly, FpPoly> fp_divmod(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_monic(const FpCtx& F, const FpPoly& a);
FpPoly fp_gcd(const FpCtx& F, FpPoly a, FpPoly b);
FpPoly fp_derivative(const FpCtx& F, const FpPoly& a);
std::uint64_t fp_eval(const FpCtx& F, const FpPoly& a, std::uint64_t x);
FpPoly fp_powmod(const FpCtx& F, FpPoly base, Int e, const FpPoly& mod);

/// Monic irreducible factors with multiplicity, sorted by (degree, coeffs).
std::vector<std::pair<FpPoly, int>> fp_factor(const FpCtx& F, const FpPoly& f);

/// v_g(f): how often the monic polynomial g divides f.
int fp_valuation(const FpCtx& F, const FpPoly& f, const FpPoly& g);

}  // namespace ellcy
