#include "aetilde/strings.hpp"

namespace aet {

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::Preprojective: return "Preprojective";
    case ComponentClass::Preinjective: return "Preinjective";
    case ComponentClass::RegularLeftTube: return "RegularLeftTube";
    case ComponentClass::RegularRightTube: return "RegularRightTube";
    case ComponentClass::HomogeneousRegular: return "HomogeneousRegular";
  }
  return "?";
}

StringModule string_at(const QuiverSpec& q, long long lo, long long hi) {
  StringModule m;
  const long long lo0 = mod_h(lo, q.h);
  m.quiver = q;
  m.hi = hi - (lo - lo0);
  m.lo = lo0;
  return m;
}

StringModule make_string(const QuiverSpec& q, const std::string& left_label, int dim) {
  if (dim <= 0) {
    throw NonpositiveDim("module dimension must be positive, got " + std::to_string(dim));
  }
  const int v = vertex_index(q, left_label);
  if (hook_system(q).reflected) {
    // Normalized left endpoint = geometric right endpoint.
    return string_at(q, v - dim + 1, v);
  }
  return string_at(q, v, v + dim - 1);
}

std::pair<std::string, std::string> string_type(const StringModule& m) {
  const std::string& at_lo = cover_label(m.quiver, m.lo);
  const std::string& at_hi = cover_label(m.quiver, m.hi);
  if (hook_system(m.quiver).reflected) return {at_hi, at_lo};
  return {at_lo, at_hi};
}

std::string module_name(const StringModule& m) {
  auto [left, right] = string_type(m);
  return left + right + "_" + std::to_string(m.dim());
}

ComponentClass classify(const StringModule& m) {
  const bool into_left = cover_arrow(m.quiver, m.lo - 1) == Dir::Forward;
  const bool into_right = cover_arrow(m.quiver, m.hi) == Dir::Backward;
  if (into_left && into_right) return ComponentClass::Preprojective;
  if (!into_left && !into_right) return ComponentClass::Preinjective;
  const bool reflected = hook_system(m.quiver).reflected;
  if (!into_left && into_right) {
    // Both boundary arrows point geometrically leftwards.
    return reflected ? ComponentClass::RegularLeftTube : ComponentClass::RegularRightTube;
  }
  return reflected ? ComponentClass::RegularRightTube : ComponentClass::RegularLeftTube;
}

StringModule dual_string(const StringModule& m) {
  StringModule out = m;
  out.quiver = opposite_quiver(m.quiver);
  return out;
}

bool can_add_hook(const StringModule& m, Side side) {
  if (side == Side::Left) return cover_arrow(m.quiver, m.lo - 1) == Dir::Forward;
  return cover_arrow(m.quiver, m.hi) == Dir::Backward;
}

StringModule add_hook(const StringModule& m, Side side) {
  if (!can_add_hook(m, side)) {
    throw NoIncomingArrow("no incoming arrow at the " +
                          std::string(side == Side::Left ? "left" : "right") +
                          " end of " + module_name(m));
  }
  if (side == Side::Left) {
    long long p = m.lo - 1;
    while (cover_arrow(m.quiver, p - 1) == Dir::Backward) --p;
    return string_at(m.quiver, p, m.hi);
  }
  long long p = m.hi + 1;
  while (cover_arrow(m.quiver, p) == Dir::Forward) ++p;
  return string_at(m.quiver, m.lo, p);
}

bool can_delete_cohook(const StringModule& m, Side side) {
  if (side == Side::Left) {
    if (cover_arrow(m.quiver, m.lo - 1) != Dir::Backward) return false;
    long long p = m.lo;
    while (p < m.hi && cover_arrow(m.quiver, p) == Dir::Forward) ++p;
    return p < m.hi;  // the cohook must not consume the whole interval
  }
  if (cover_arrow(m.quiver, m.hi) != Dir::Forward) return false;
  long long p = m.hi;
  while (p > m.lo && cover_arrow(m.quiver, p - 1) == Dir::Backward) --p;
  return p > m.lo;
}

StringModule delete_cohook(const StringModule& m, Side side) {
  if (!can_delete_cohook(m, side)) {
    throw NoOutgoingArrow("no removable cohook at the " +
                          std::string(side == Side::Left ? "left" : "right") +
                          " end of " + module_name(m));
  }
  if (side == Side::Left) {
    long long p = m.lo;
    while (cover_arrow(m.quiver, p) == Dir::Forward) ++p;
    return string_at(m.quiver, p + 1, m.hi);
  }
  long long p = m.hi;
  while (cover_arrow(m.quiver, p - 1) == Dir::Backward) --p;
  return string_at(m.quiver, m.lo, p - 1);
}

std::vector<StringModule> submodule_subintervals(const StringModule& m) {
  std::vector<StringModule> out;
  for (long long a = m.lo; a <= m.hi; ++a) {
    if (a != m.lo && cover_arrow(m.quiver, a - 1) != Dir::Forward) continue;
    for (long long b = a; b <= m.hi; ++b) {
      if (b != m.hi && cover_arrow(m.quiver, b) != Dir::Backward) continue;
      out.push_back(string_at(m.quiver, a, b));
    }
  }
  return out;
}

}  // namespace aet
