#include "ellcy/intfactor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>

namespace ellcy {

Int FactoredInteger::value() const {
  Int v{sign};
  for (const auto& [p, e] : factors) v *= ipow(p, unsigned(e));
  return v;
}

namespace {

Int powm(Int base, Int exp, const Int& mod) {
  Int r{1};
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if ((exp & 1) != 0) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int s) {
  Int x = powm(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

long factor_limit() {
  if (const char* env = std::getenv("CY_FACTOR_LIMIT")) {
    long v = std::atol(env);
    if (v >= 2) return v;
  }
  return 1'000'000;
}

Int pollard_brent(const Int& n, std::mt19937_64& rng) {
  // Brent's cycle variant of Pollard rho; n odd composite, not a prime power
  // of interest -- returns a nontrivial factor.
  if (n % 2 == 0) return 2;
  std::uniform_int_distribution<unsigned long long> dist(1, ~0ull);
  while (true) {
    Int y = Int(dist(rng)) % n;
    Int c = Int(dist(rng)) % n;
    if (c == 0) c = 1;
    Int m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int lim = std::min(m, Int(r - k));
        for (Int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(const Int& n, std::map<Int, int>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n, rng);
  factor_rec(d, out, rng);
  factor_rec(n / d, out, rng);
}

}  // namespace

bool is_probable_prime(const Int& n_in) {
  Int n = abs(n_in);
  if (n < 2) return false;
  static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (int p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (int a : small)
    if (miller_rabin_witness(n, a, d, s)) return false;
  return true;
}

FactoredInteger integer_factor(const Int& n_in) {
  if (n_in == 0) throw std::domain_error("integer_factor: zero has no factorization");
  FactoredInteger out;
  out.sign = n_in < 0 ? -1 : 1;
  Int n = abs(n_in);
  std::map<Int, int> acc;
  const long limit = factor_limit();
  for (long p = 2; p <= limit && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (is_probable_prime(n)) {
      ++acc[n];
    } else {
      std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
      factor_rec(n, acc, rng);
    }
  }
  out.factors.assign(acc.begin(), acc.end());
  return out;
}

std::vector<Int> prime_support(const Int& n) {
  std::vector<Int> out;
  for (const auto& [p, e] : integer_factor(n).factors) out.push_back(p);
  return out;
}

std::vector<Int> prime_support(const Rat& r) {
  if (is_zero(r)) throw std::domain_error("prime_support: zero input");
  std::vector<Int> a = prime_support(num(r));
  std::vector<Int> b = prime_support(den(r));
  std::vector<Int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace ellcy
