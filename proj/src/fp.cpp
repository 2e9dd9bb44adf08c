#include "ellcy/fp.hpp"

#include <stdexcept>

#include "ellcy/intfactor.hpp"

namespace ellcy {

FpCtx::FpCtx(std::uint64_t p_) : p(p_) {
  if (p < 2 || !is_probable_prime(Int(p)))
    throw std::domain_error("FpCtx: modulus must be prime");
}

std::uint64_t FpCtx::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return r;
}

std::uint64_t FpCtx::inv(std::uint64_t a) const {
  a %= p;
  if (a == 0) throw std::domain_error("FpCtx: inverse of zero");
  return pow(a, p - 2);
}

std::optional<std::uint64_t> FpCtx::sqrt(std::uint64_t a) const {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (pow(a, (p - 1) / 2) != 1) return std::nullopt;
  std::uint64_t root;
  if (p % 4 == 3) {
    root = pow(a, (p + 1) / 4);
  } else {
    // Tonelli-Shanks.
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1u) == 0) {
      q >>= 1u;
      ++s;
    }
    std::uint64_t z = 2;
    while (pow(z, (p - 1) / 2) == 1) ++z;
    std::uint64_t m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
      std::uint64_t t2 = t;
      unsigned i = 0;
      while (t2 != 1) {
        t2 = mul(t2, t2);
        ++i;
      }
      std::uint64_t b = pow(c, std::uint64_t(1) << (m - i - 1));
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    root = r;
  }
  return root <= p - root ? root : p - root;
}

std::uint64_t FpCtx::reduce(const Int& n) const {
  Int r = n % Int(p);
  if (r < 0) r += Int(p);
  return r.convert_to<std::uint64_t>();
}

std::uint64_t FpCtx::reduce(const Rat& r) const {
  std::uint64_t d = reduce(den(r));
  if (d == 0)
    throw std::domain_error("FpCtx: denominator of " + to_string(r) +
                            " vanishes mod " + std::to_string(p));
  return mul(reduce(num(r)), inv(d));
}

}  // namespace ellcy
