#include "ellcy/kodaira.hpp"

#include <stdexcept>

namespace ellcy {

int component_count(FiberType f) {
  switch (f.cls) {
    case KodairaClass::I0:
      return 1;
    case KodairaClass::In:
      return f.n >= 1 ? f.n : 1;
    case KodairaClass::II:
      return 1;
    case KodairaClass::III:
      return 2;
    case KodairaClass::IV:
      return 3;
    case KodairaClass::I0star:
      return 5;
    case KodairaClass::Instar:
      return 5 + f.n;
    case KodairaClass::IVstar:
      return 7;
    case KodairaClass::IIIstar:
      return 8;
    case KodairaClass::IIstar:
      return 9;
  }
  throw std::logic_error("component_count: bad fiber type");
}

int euler_local(FiberType f) {
  switch (f.cls) {
    case KodairaClass::I0:
      return 0;
    case KodairaClass::In:
      return f.n;
    case KodairaClass::II:
      return 2;
    case KodairaClass::III:
      return 3;
    case KodairaClass::IV:
      return 4;
    case KodairaClass::I0star:
      return 6;
    case KodairaClass::Instar:
      return 6 + f.n;
    case KodairaClass::IVstar:
      return 8;
    case KodairaClass::IIIstar:
      return 9;
    case KodairaClass::IIstar:
      return 10;
  }
  throw std::logic_error("euler_local: bad fiber type");
}

bool is_semistable(FiberType f) { return f.cls == KodairaClass::In; }

bool is_starred(FiberType f) {
  switch (f.cls) {
    case KodairaClass::I0star:
    case KodairaClass::Instar:
    case KodairaClass::IVstar:
    case KodairaClass::IIIstar:
    case KodairaClass::IIstar:
      return true;
    default:
      return false;
  }
}

std::string to_string(FiberType f) {
  switch (f.cls) {
    case KodairaClass::I0:
      return "I0";
    case KodairaClass::In:
      return "I" + std::to_string(f.n);
    case KodairaClass::II:
      return "II";
    case KodairaClass::III:
      return "III";
    case KodairaClass::IV:
      return "IV";
    case KodairaClass::I0star:
      return "I0*";
    case KodairaClass::Instar:
      return "I" + std::to_string(f.n) + "*";
    case KodairaClass::IVstar:
      return "IV*";
    case KodairaClass::IIIstar:
      return "III*";
    case KodairaClass::IIstar:
      return "II*";
  }
  throw std::logic_error("to_string: bad fiber type");
}

FiberType parse_fiber_type(const std::string& s) {
  if (s == "II") return {KodairaClass::II, 0};
  if (s == "III") return {KodairaClass::III, 0};
  if (s == "IV") return {KodairaClass::IV, 0};
  if (s == "II*") return {KodairaClass::IIstar, 0};
  if (s == "III*") return {KodairaClass::IIIstar, 0};
  if (s == "IV*") return {KodairaClass::IVstar, 0};
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!digits.empty()) {
      int n = std::stoi(digits);
      if (star) return n == 0 ? FiberType{KodairaClass::I0star, 0}
                              : FiberType{KodairaClass::Instar, n};
      return n == 0 ? FiberType{KodairaClass::I0, 0} : FiberType{KodairaClass::In, n};
    }
  }
  throw std::domain_error("parse_fiber_type: unrecognized type '" + s + "'");
}

MinimalValuations minimalize_valuations(std::optional<int> vc4, std::optional<int> vc6,
                                        int vdisc) {
  int k = vdisc / 12;
  if (vc4) k = std::min(k, *vc4 / 4);
  if (vc6) k = std::min(k, *vc6 / 6);
  MinimalValuations out;
  out.scaling = k;
  out.vc4 = vc4 ? std::optional<int>(*vc4 - 4 * k) : std::nullopt;
  out.vc6 = vc6 ? std::optional<int>(*vc6 - 6 * k) : std::nullopt;
  out.vdisc = vdisc - 12 * k;
  return out;
}

FiberType classify_fiber(std::optional<int> vc4, std::optional<int> vc6, int vdisc) {
  auto ge = [](const std::optional<int>& v, int bound) { return !v || *v >= bound; };
  auto eq = [](const std::optional<int>& v, int val) { return v && *v == val; };
  auto bad = [&]() -> FiberType {
    throw std::domain_error(
        "classify_fiber: no tame Kodaira type for valuations (c4, c6, disc) = (" +
        (vc4 ? std::to_string(*vc4) : std::string("inf")) + ", " +
        (vc6 ? std::to_string(*vc6) : std::string("inf")) + ", " +
        std::to_string(vdisc) + ")");
  };
  if (vdisc < 0 || (vc4 && *vc4 < 0) || (vc6 && *vc6 < 0)) return bad();
  if (vdisc == 0) return {KodairaClass::I0, 0};
  if (eq(vc4, 0)) return {KodairaClass::In, vdisc};
  if (vdisc == 2) return {KodairaClass::II, 0};
  if (vdisc == 3 && eq(vc4, 1)) return {KodairaClass::III, 0};
  if (vdisc == 4 && ge(vc4, 2)) return {KodairaClass::IV, 0};
  if (vdisc == 6 && ge(vc4, 2) && ge(vc6, 3)) return {KodairaClass::I0star, 0};
  if (vdisc > 6 && eq(vc4, 2)) return {KodairaClass::Instar, vdisc - 6};
  if (vdisc == 8 && ge(vc4, 3)) return {KodairaClass::IVstar, 0};
  if (vdisc == 9 && eq(vc4, 3)) return {KodairaClass::IIIstar, 0};
  if (vdisc == 10 && ge(vc4, 4)) return {KodairaClass::IIstar, 0};
  return bad();
}

}  // namespace ellcy
