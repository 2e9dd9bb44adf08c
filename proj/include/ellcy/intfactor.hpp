#pragma once
// Integer factorization: trial division up to a configurable bound, with
// Miller-Rabin primality and Pollard-Brent rho for whatever survives.

#include <utility>
#include <vector>

#include "ellcy/ints.hpp"

namespace ellcy {

/// Sign and prime decomposition of a nonzero integer, primes strictly
/// increasing.
struct FactoredInteger {
  int sign = 1;  // +1 or -1
  std::vector<std::pair<Int, int>> factors;

  /// Reassembles sign * prod p^e.
  Int value() const;
};

/// Miller-Rabin with a fixed witness set; deterministic for |n| < 3.3e24,
/// overwhelmingly reliable beyond.
bool is_probable_prime(const Int& n);

/// Factors n != 0 (n == 0 raises std::domain_error). Trial division runs up
/// to 1'000'000 by default; the CY_FACTOR_LIMIT environment variable
/// overrides the bound. Composite cofactors past the bound are split with
/// Pollard-Brent rho.
FactoredInteger integer_factor(const Int& n);

/// Ascending primes dividing n (n != 0).
std::vector<Int> prime_support(const Int& n);

/// Ascending primes dividing numerator or denominator of r (r != 0).
std::vector<Int> prime_support(const Rat& r);

}  // namespace ellcy
