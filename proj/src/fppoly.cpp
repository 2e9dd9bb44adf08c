#include "ellcy/fppoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ellcy {

FpPoly fp_trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int fp_deg(const FpPoly& f) { return int(f.size()) - 1; }
bool fp_is_zero(const FpPoly& f) { return f.empty(); }

FpPoly fp_add(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return fp_trim(std::move(r));
}

FpPoly fp_sub(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return fp_trim(std::move(r));
}

FpPoly fp_mul(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return fp_trim(std::move(r));
}

FpPoly fp_scale(const FpCtx& F, const FpPoly& a, std::uint64_t s) {
  FpPoly r = a;
  for (auto& c : r) c = F.mul(c, s);
  return fp_trim(std::move(r));
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
  if (b.empty()) throw std::domain_error("fp_divmod: division by zero");
  FpPoly rem = a, quot;
  std::uint64_t invlead = F.inv(b.back());
  while (rem.size() >= b.size()) {
    size_t k = rem.size() - b.size();
    std::uint64_t c = F.mul(rem.back(), invlead);
    if (quot.size() < k + 1) quot.resize(k + 1, 0);
    quot[k] = F.add(quot[k], c);
    for (size_t i = 0; i < b.size(); ++i)
      rem[k + i] = F.sub(rem[k + i], F.mul(c, b[i]));
    rem = fp_trim(std::move(rem));
    if (rem.empty()) break;
  }
  return {fp_trim(std::move(quot)), rem};
}

FpPoly fp_monic(const FpCtx& F, const FpPoly& a) {
  if (a.empty()) return a;
  return fp_scale(F, a, F.inv(a.back()));
}

FpPoly fp_gcd(const FpCtx& F, FpPoly a, FpPoly b) {
  while (!b.empty()) {
    auto [q, r] = fp_divmod(F, a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(F, a);
}

FpPoly fp_derivative(const FpCtx& F, const FpPoly& a) {
  FpPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(a[i], i % F.p));
  return fp_trim(std::move(r));
}

std::uint64_t fp_eval(const FpCtx& F, const FpPoly& a, std::uint64_t x) {
  std::uint64_t r = 0;
  for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

FpPoly fp_powmod(const FpCtx& F, FpPoly base, Int e, const FpPoly& mod) {
  FpPoly r{1 % F.p};
  base = fp_divmod(F, base, mod).second;
  while (e > 0) {
    if ((e & 1) != 0) r = fp_divmod(F, fp_mul(F, r, base), mod).second;
    base = fp_divmod(F, fp_mul(F, base, base), mod).second;
    e >>= 1;
  }
  return r;
}

namespace {

/// Squarefree part of monic f, valid in characteristic p (handles the
/// f = g(x^p) = g~(x)^p degeneration via the Frobenius identity on F_p).
FpPoly fp_squarefree_part(const FpCtx& F, const FpPoly& f) {
  if (fp_deg(f) <= 0) return f;
  FpPoly d = fp_derivative(F, f);
  if (d.empty()) {
    FpPoly g;
    for (size_t i = 0; i < f.size(); i += size_t(F.p)) g.push_back(f[i]);
    return fp_squarefree_part(F, fp_trim(std::move(g)));
  }
  FpPoly g = fp_gcd(F, f, d);
  FpPoly w = fp_divmod(F, f, g).first;  // squarefree, but may miss p-th powers
  // Fold in factors of g not present in w.
  FpPoly rest = g;
  while (fp_deg(rest) > 0) {
    FpPoly h = fp_gcd(F, rest, w);
    if (fp_deg(h) == 0) break;
    rest = fp_divmod(F, rest, h).first;
  }
  if (fp_deg(rest) > 0) {
    FpPoly extra = fp_squarefree_part(F, rest);
    FpPoly merged = fp_mul(F, w, fp_divmod(F, extra, fp_gcd(F, extra, w)).first);
    return merged;
  }
  return w;
}

void equal_degree_split(const FpCtx& F, const FpPoly& f, int d,
                        std::vector<FpPoly>& out, std::mt19937_64& rng) {
  if (fp_deg(f) == d) {
    out.push_back(fp_monic(F, f));
    return;
  }
  // Cantor-Zassenhaus: random r, gcd(r^((p^d-1)/2) - 1, f) splits f.
  std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
  Int e = (ipow(Int(F.p), unsigned(d)) - 1) / 2;
  while (true) {
    FpPoly r(size_t(fp_deg(f)), 0);
    for (auto& c : r) c = dist(rng);
    r = fp_trim(std::move(r));
    if (fp_deg(r) < 1) continue;
    FpPoly pw = fp_powmod(F, r, e, f);
    if (pw.empty()) continue;
    pw[0] = F.sub(pw[0], 1);
    FpPoly g = fp_gcd(F, fp_trim(std::move(pw)), f);
    if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
      equal_degree_split(F, g, d, out, rng);
      equal_degree_split(F, fp_divmod(F, f, g).first, d, out, rng);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FpPoly, int>> fp_factor(const FpCtx& F, const FpPoly& f_in) {
  if (f_in.empty()) throw std::domain_error("fp_factor: zero polynomial");
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly f = fp_monic(F, f_in);
  if (fp_deg(f) == 0) return out;
  FpPoly sf = fp_squarefree_part(F, f);
  // Distinct-degree decomposition of the squarefree part.
  std::mt19937_64 rng(0x5851f42d4c957f2dull);
  std::vector<FpPoly> irreducibles;
  FpPoly rem = sf;
  FpPoly x{0, 1};
  FpPoly h = x;  // h = x^(p^d) mod rem
  for (int d = 1; 2 * d <= fp_deg(rem); ++d) {
    h = fp_powmod(F, h, Int(F.p), rem);
    FpPoly hx = fp_sub(F, h, x);
    // h == x mod rem means every remaining factor has degree exactly d
    // (smaller degrees were already stripped).
    FpPoly g = hx.empty() ? rem : fp_gcd(F, hx, rem);
    if (fp_deg(g) > 0) {
      equal_degree_split(F, g, d, irreducibles, rng);
      rem = fp_divmod(F, rem, g).first;
      h = fp_divmod(F, h, rem).second;
    }
  }
  if (fp_deg(rem) > 0) irreducibles.push_back(fp_monic(F, rem));
  for (const FpPoly& p : irreducibles)
    out.emplace_back(p, fp_valuation(F, f, p));
  std::sort(out.begin(), out.end());
  return out;
}

int fp_valuation(const FpCtx& F, const FpPoly& f, const FpPoly& g) {
  if (fp_deg(g) < 1) throw std::domain_error("fp_valuation: trivial divisor");
  int v = 0;
  FpPoly cur = f;
  while (true) {
    auto [q, r] = fp_divmod(F, cur, g);
    if (!r.empty()) return v;
    ++v;
    cur = std::move(q);
    if (cur.empty()) throw std::domain_error("fp_valuation: zero polynomial");
  }
}

}  // namespace ellcy
