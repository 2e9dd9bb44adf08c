#pragma once
// Prime-field arithmetic for residue computations. A small context object
// carries the modulus; values are plain uint64_t residues in [0, p).

#include <cstdint>
#include <optional>

#include "ellcy/ints.hpp"

namespace ellcy {

struct FpCtx {
  std::uint64_t p;

  explicit FpCtx(std::uint64_t p_);

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return std::uint64_t((__uint128_t(a) * b) % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  /// A square root of a, if a is a QR (Tonelli-Shanks); the smaller of the
  /// two roots is returned for determinism.
  std::optional<std::uint64_t> sqrt(std::uint64_t a) const;

  /// Reduction of exact values; throws std::domain_error when a denominator
  /// vanishes mod p.
  std::uint64_t reduce(const Int& n) const;
  std::uint64_t reduce(const Rat& r) const;
};

}  // namespace ellcy
