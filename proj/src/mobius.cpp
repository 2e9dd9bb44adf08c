#include "ellcy/mobius.hpp"

#include <stdexcept>

namespace ellcy {

std::string to_string(const PValue& p) {
  return p.infinite ? "infinity" : to_string(p.v);
}

MobiusMap::MobiusMap(QuadElem a_, QuadElem b_, QuadElem c_, QuadElem d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (determinant().is_zero())
    throw std::domain_error("MobiusMap: degenerate coefficients (ad - bc = 0)");
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d, -b, -c, a); }

MobiusMap MobiusMap::compose(const MobiusMap& i) const {
  return MobiusMap(a * i.a + b * i.c, a * i.b + b * i.d, c * i.a + d * i.c,
                   c * i.b + d * i.d);
}

PValue MobiusMap::apply(const PValue& x) const {
  if (x.infinite) {
    if (c.is_zero()) return PValue::infinity();
    return PValue(a / c);
  }
  QuadElem denom = c * x.v + d;
  if (denom.is_zero()) return PValue::infinity();
  return PValue((a * x.v + b) / denom);
}

namespace {

/// Maps (x1, x2, x3) -> (0, 1, infinity).
MobiusMap to_standard(const PValue& x1, const PValue& x2, const PValue& x3) {
  // Generic: t -> ((t - x1)(x2 - x3)) / ((t - x3)(x2 - x1)).
  if (x1.infinite) return MobiusMap(QuadElem(0), x2.v - x3.v, QuadElem(1), -x3.v);
  if (x2.infinite) return MobiusMap(QuadElem(1), -x1.v, QuadElem(1), -x3.v);
  if (x3.infinite)
    return MobiusMap(QuadElem(1), -x1.v, QuadElem(0), x2.v - x1.v);
  return MobiusMap(x2.v - x3.v, -x1.v * (x2.v - x3.v), x2.v - x1.v,
                   -x3.v * (x2.v - x1.v));
}

}  // namespace

std::optional<MobiusMap> MobiusMap::three_point(const std::vector<PValue>& src,
                                                const std::vector<PValue>& dst) {
  if (src.size() != 3 || dst.size() != 3)
    throw std::domain_error("three_point: need exactly three source/target pairs");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (src[size_t(i)] == src[size_t(j)] || dst[size_t(i)] == dst[size_t(j)])
        return std::nullopt;
  try {
    MobiusMap ms = to_standard(src[0], src[1], src[2]);
    MobiusMap md = to_standard(dst[0], dst[1], dst[2]);
    return md.inverse().compose(ms);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

}  // namespace ellcy
