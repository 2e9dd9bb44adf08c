#pragma once
// Dense univariate polynomials over an exact scalar type K, stored
// lowest-degree-first. K can be a field (Rat, QuadElem, ...) or a ring with
// exact division (e.g. Poly<Rat> itself, giving bivariate polynomials).
//
// The scalar contract: default-construction and construction from int,
// +,-,*, ==, and free functions is_zero(K) and exact_div(K, K) found by ADL.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellcy/ints.hpp"
#include "ellcy/quad.hpp"

namespace ellcy {

template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(const K& c) {  // NOLINT: implicit constant embed by design
    if (!is_zero(c)) c_.push_back(c);
  }
  Poly(int c) : Poly(K(c)) {}  // NOLINT
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static Poly var() { return Poly(std::vector<K>{K(0), K(1)}); }

  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero poly
  bool zero() const { return c_.empty(); }

  const K& operator[](int i) const {
    static const K kZero{0};
    return (i >= 0 && i < int(c_.size())) ? c_[size_t(i)] : kZero;
  }
  void set(int i, const K& v) {
    if (i >= int(c_.size())) c_.resize(size_t(i) + 1, K(0));
    c_[size_t(i)] = v;
    trim();
  }
  const std::vector<K>& coeffs() const { return c_; }

  const K& lead() const {
    if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
    return c_.back();
  }

  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  Poly operator-() const {
    Poly r = *this;
    for (K& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    Poly r;
    r.c_.resize(std::max(p.c_.size(), q.c_.size()), K(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = p[int(i)] + q[int(i)];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.zero() || q.zero()) return Poly();
    Poly r;
    r.c_.assign(p.c_.size() + q.c_.size() - 1, K(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < q.c_.size(); ++j) r.c_[i + j] += p.c_[i] * q.c_[j];
    r.trim();
    return r;
  }
  friend Poly operator*(const K& s, const Poly& p) { return Poly(s) * p; }
  friend Poly operator*(const Poly& p, const K& s) { return Poly(s) * p; }
  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  template <class V>
  V eval(const V& x) const {
    V r{0};
    for (size_t i = c_.size(); i-- > 0;) r = r * x + V(c_[i]);
    return r;
  }

  Poly derivative() const {
    Poly r;
    for (int i = 1; i <= degree(); ++i) r.c_.push_back(K(i) * c_[size_t(i)]);
    r.trim();
    return r;
  }

  /// p(x) -> x^w * p(1/x); requires w >= degree.
  Poly reverse(int w) const {
    if (w < degree()) throw std::domain_error("Poly::reverse: weight below degree");
    Poly r;
    r.c_.assign(size_t(w) + 1, K(0));
    for (int i = 0; i <= degree(); ++i) r.c_[size_t(w - i)] = c_[size_t(i)];
    r.trim();
    return r;
  }

  /// Substitute x -> s*x (coefficient i picks up s^i).
  Poly scale_arg(const K& s) const {
    Poly r = *this;
    K pw{1};
    for (size_t i = 0; i < r.c_.size(); ++i) {
      r.c_[i] = r.c_[i] * pw;
      pw = pw * s;
    }
    r.trim();
    return r;
  }

  /// Substitute x -> x + s.
  Poly shift_arg(const K& s) const {
    // Horner: p(x+s) built from the top coefficient down.
    Poly r;
    Poly xs = var() + Poly(s);
    for (size_t i = c_.size(); i-- > 0;) r = r * xs + Poly(c_[i]);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.zero();
}

/// Quotient and remainder; requires the divisor's leading coefficient to be
/// invertible (field scalars, or any monic divisor).
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& p, const Poly<K>& q) {
  if (q.zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  Poly<K> rem = p, quot;
  const K invlead = exact_div(K(1), q.lead());
  while (!rem.zero() && rem.degree() >= q.degree()) {
    int k = rem.degree() - q.degree();
    K c = rem.lead() * invlead;
    Poly<K> t;
    t.set(k, c);
    quot += t;
    rem -= t * q;
  }
  return {quot, rem};
}

/// Exact polynomial division over a ring; throws if the division leaves a
/// remainder at any step.
template <class K>
Poly<K> exact_div(const Poly<K>& p, const Poly<K>& q) {
  if (q.zero()) throw std::domain_error("Poly exact_div: division by zero");
  Poly<K> rem = p, quot;
  while (!rem.zero() && rem.degree() >= q.degree()) {
    int k = rem.degree() - q.degree();
    K c = exact_div(rem.lead(), q.lead());
    Poly<K> t;
    t.set(k, c);
    quot += t;
    rem -= t * q;
  }
  if (!rem.zero()) throw std::domain_error("Poly exact_div: inexact division");
  return quot;
}

template <class K>
Poly<K> monic(const Poly<K>& p) {
  if (p.zero()) return p;
  Poly<K> r;
  const K inv = exact_div(K(1), p.lead());
  for (int i = 0; i <= p.degree(); ++i) r.set(i, p[i] * inv);
  return r;
}

/// Monic gcd over a field.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.zero()) {
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.zero()) return a;
  return monic(a);
}

/// Yun squarefree decomposition over a field of characteristic 0:
/// p = lead * prod_i out[i].first ^ out[i].second with the factors monic,
/// squarefree and pairwise coprime, multiplicities strictly increasing.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decompose(const Poly<K>& p) {
  if (p.zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
  std::vector<std::pair<Poly<K>, int>> out;
  Poly<K> f = monic(p);
  if (f.degree() == 0) return out;
  Poly<K> fp = f.derivative();
  Poly<K> c = poly_gcd(f, fp);
  Poly<K> w = exact_div(f, c);
  Poly<K> y = exact_div(fp, c);
  Poly<K> z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Poly<K> g = poly_gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

/// Determinant by Bareiss fraction-free elimination; works over any integral
/// domain with exact_div.
template <class K>
K det_bareiss(std::vector<std::vector<K>> m) {
  const size_t n = m.size();
  if (n == 0) return K(1);
  K prev{1};
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return K(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = K(0);
    }
    prev = m[k][k];
  }
  K det = m[n - 1][n - 1];
  return sign < 0 ? K(0) - det : det;
}

/// Sylvester resultant. Res(p, c) = c^deg(p) for constants; a single zero
/// input gives 0; both zero is a domain error.
template <class K>
K poly_resultant(const Poly<K>& p, const Poly<K>& q) {
  if (p.zero() && q.zero())
    throw std::domain_error("poly_resultant: both polynomials are zero");
  if (p.zero() || q.zero()) return K(0);
  const int n = p.degree(), m = q.degree();
  if (n == 0 && m == 0) return K(1);
  std::vector<std::vector<K>> s(size_t(n + m), std::vector<K>(size_t(n + m), K(0)));
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i) s[size_t(row)][size_t(row + n - i)] = p[i];
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i) s[size_t(m + row)][size_t(row + m - i)] = q[i];
  return det_bareiss(std::move(s));
}

template <class K>
K poly_discriminant(const Poly<K>& p) {
  if (p.degree() < 1) throw std::domain_error("poly_discriminant: degree < 1");
  K res = poly_resultant(p, p.derivative());
  K lead = p.lead();
  // disc = (-1)^{n(n-1)/2} Res(p, p') / lead
  K d = exact_div(res, lead);
  int n = p.degree();
  return ((n * (n - 1) / 2) % 2) ? K(0) - d : d;
}

/// Composition p(q(x)); sizes stay tiny in this library.
template <class K>
Poly<K> poly_compose(const Poly<K>& p, const Poly<K>& q) {
  Poly<K> r;
  for (int i = p.degree(); i >= 0; --i) r = r * q + Poly<K>(p[i]);
  return r;
}

using PolyQ = Poly<Rat>;
using PolyK = Poly<QuadElem>;
/// Bivariate: outer variable t (or s), inner variable m.
using BiPoly = Poly<Poly<Rat>>;

/// Lift a rational polynomial into Q(sqrt(d)) coefficients.
inline PolyK lift(const PolyQ& p) {
  PolyK r;
  for (int i = 0; i <= p.degree(); ++i) r.set(i, QuadElem(p[i]));
  return r;
}

/// The rational image if every coefficient is rational.
std::optional<PolyQ> as_rational_poly(const PolyK& p);

std::string to_string(const PolyQ& p, const std::string& var = "t");
std::string to_string(const PolyK& p, const std::string& var = "t");

}  // namespace ellcy
