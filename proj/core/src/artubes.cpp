#include "aetilde/artubes.hpp"

#include <algorithm>
#include <cassert>

namespace aet {

std::string to_string(TubeKind k) {
  switch (k) {
    case TubeKind::LeftTube: return "left";
    case TubeKind::RightTube: return "right";
    case TubeKind::Homogeneous: return "homogeneous";
  }
  return "?";
}

Family family_of(const StringModule& m) {
  Family f;
  f.quiver = m.quiver;
  f.homogeneous = false;
  auto [left, right] = string_type(m);
  f.left = left;
  f.right = right;
  f.cls = classify(m);
  f.base_dim = (m.dim() - 1) % m.quiver.h + 1;
  f.lo0 = m.lo;
  f.hi0 = m.lo + f.base_dim - 1;
  return f;
}

Family homogeneous_family(const QuiverSpec& q) {
  Family f;
  f.quiver = q;
  f.homogeneous = true;
  f.base_dim = q.h;
  return f;
}

StringModule family_member(const Family& f, int index) {
  assert(!f.homogeneous);
  return string_at(f.quiver, f.lo0, f.hi0 + static_cast<long long>(index) * f.quiver.h);
}

int family_index_at_least(const Family& f, int dim) {
  if (dim <= f.base_dim) return 0;
  return (dim - f.base_dim + f.quiver.h - 1) / f.quiver.h;
}

std::vector<Family> all_families(const QuiverSpec& q) {
  std::vector<Family> out;
  for (int lo = 0; lo < q.h; ++lo) {
    for (int len = 1; len <= q.h; ++len) {
      StringModule m = string_at(q, lo, lo + len - 1);
      Family f = family_of(m);
      // (lo, len mod h) enumerates each family exactly once since members of
      // a family share lo mod h and dim mod h.
      out.push_back(std::move(f));
    }
  }
  out.push_back(homogeneous_family(q));
  return out;
}

namespace {

std::optional<Side> unique_hook_side(const StringModule& m) {
  const bool left = can_add_hook(m, Side::Left);
  const bool right = can_add_hook(m, Side::Right);
  if (left == right) return std::nullopt;
  return left ? Side::Left : Side::Right;
}

std::optional<Side> unique_outgoing_side(const StringModule& m) {
  const bool left = cover_arrow(m.quiver, m.lo - 1) == Dir::Backward;
  const bool right = cover_arrow(m.quiver, m.hi) == Dir::Forward;
  if (left == right) return std::nullopt;
  return left ? Side::Left : Side::Right;
}

}  // namespace

StringModule ray_successor(const StringModule& m, Side side) {
  if (!can_add_hook(m, side)) {
    throw NoMonoStep("no irreducible mono extends " + module_name(m) + " on that side");
  }
  return add_hook(m, side);
}

StringModule ray_successor(const StringModule& m) {
  const ComponentClass cls = classify(m);
  if (cls == ComponentClass::Preinjective) {
    throw NoMonoStep(module_name(m) + " is preinjective; no irreducible mono exists");
  }
  auto side = unique_hook_side(m);
  if (!side) {
    // Preprojective strings can grow on both sides; the caller must choose.
    throw NoMonoStep(module_name(m) + " admits hooks on both sides; specify one");
  }
  return add_hook(m, *side);
}

StringModule coray_predecessor(const StringModule& m, Side side) {
  if (!can_delete_cohook(m, side)) {
    throw NoEpiStep("no irreducible epi shrinks " + module_name(m) + " on that side");
  }
  return delete_cohook(m, side);
}

StringModule coray_predecessor(const StringModule& m) {
  const ComponentClass cls = classify(m);
  if (cls == ComponentClass::Preprojective) {
    throw NoEpiStep(module_name(m) + " is preprojective; no irreducible epi exists");
  }
  auto side = unique_outgoing_side(m);
  if (!side) {
    // Preinjective strings shrink on both sides; the caller must choose.
    throw NoEpiStep(module_name(m) + " has outgoing arrows on both sides; specify one");
  }
  if (!can_delete_cohook(m, *side)) {
    throw NoEpiStep(module_name(m) + " sits on the mouth of its tube");
  }
  return delete_cohook(m, *side);
}

bool is_quasi_simple(const StringModule& m) {
  if (!is_regular(classify(m))) return false;
  auto side = unique_outgoing_side(m);
  return side && !can_delete_cohook(m, *side);
}

Tube build_tube(const QuiverSpec& q, TubeKind kind, int depth) {
  Tube t;
  t.quiver = q;
  t.kind = kind;
  if (kind == TubeKind::Homogeneous) {
    t.rank = 1;
    return t;
  }
  const ComponentClass want = kind == TubeKind::RightTube
                                  ? ComponentClass::RegularRightTube
                                  : ComponentClass::RegularLeftTube;
  std::vector<StringModule> mouth;
  for (int lo = 0; lo < q.h; ++lo) {
    for (int len = 1; len <= q.h; ++len) {
      StringModule m = string_at(q, lo, lo + len - 1);
      if (classify(m) == want && is_quasi_simple(m)) mouth.push_back(m);
    }
  }
  t.rank = static_cast<int>(mouth.size());
  t.grid.push_back(std::move(mouth));
  for (int j = 1; j < depth; ++j) {
    std::vector<StringModule> row;
    row.reserve(t.rank);
    for (const StringModule& m : t.grid[j - 1]) row.push_back(ray_successor(m));
    t.grid.push_back(std::move(row));
  }
  return t;
}

std::vector<ARSequence> ar_sequences(const Tube& t, int depth) {
  std::vector<ARSequence> out;
  if (t.kind == TubeKind::Homogeneous) {
    for (int q = 1; q < depth; ++q) {
      ARSequence seq;
      seq.homogeneous = true;
      seq.quiver = t.quiver;
      seq.qlen = q;
      out.push_back(std::move(seq));
    }
    return out;
  }
  const int rows = std::min<int>(depth, static_cast<int>(t.grid.size()));
  for (int j = 0; j + 1 < rows; ++j) {
    for (int i = 0; i < t.rank; ++i) {
      ARSequence seq;
      seq.A = t.grid[j][i];
      seq.B1 = t.grid[j + 1][i];
      seq.C = coray_predecessor(seq.B1);
      if (j > 0) seq.B2 = coray_predecessor(seq.A);
      // Dimension balance of the almost split sequence.
      assert(seq.A.dim() + seq.C.dim() ==
             seq.B1.dim() + (seq.B2 ? seq.B2->dim() : 0));
      out.push_back(std::move(seq));
    }
  }
  return out;
}

std::vector<Family> tube_families(const Tube& t) {
  std::vector<Family> out;
  std::vector<std::string> seen;
  for (const auto& row : t.grid) {
    for (const StringModule& m : row) {
      Family f = family_of(m);
      if (std::find(seen.begin(), seen.end(), f.key()) == seen.end()) {
        seen.push_back(f.key());
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

}  // namespace aet
