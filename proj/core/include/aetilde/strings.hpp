// String modules: intervals in the universal cover of a cyclic quiver.
//
// An interval [lo, hi] of cover positions carries the thin representation
// with one copy of the base field on each position and identity maps along
// the internal arrows.  Intervals are kept canonical with lo in [0, h);
// shifting by h gives isomorphic modules.
//
// Naming follows the normalized (hook-system) orientation of the quiver: a
// module is called XY_d where d is the dimension and X, Y are the labels of
// its left and right endpoints in the normalized cover.  When the hook
// system reflects the cover (hook_system(q).reflected), the normalized left
// endpoint is the geometric right endpoint hi, so the name is
// (label(hi), label(lo))_d; otherwise it is (label(lo), label(hi))_d.
//
// classify sorts a string module into the component of its Auslander-Reiten
// quiver: Preprojective (both boundary arrows point into the interval),
// Preinjective (both point out), or one of two exceptional regular tubes
// (boundary arrows parallel).  In the normalized orientation, modules whose
// boundary arrows point leftwards sit in the "right" tube (the one whose
// periodic block is R) and dually.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aetilde/quiver.hpp"

namespace aet {

enum class Side { Left, Right };

enum class ComponentClass {
  Preprojective,
  Preinjective,
  RegularLeftTube,
  RegularRightTube,
  HomogeneousRegular,
};

std::string to_string(ComponentClass c);
inline bool is_regular(ComponentClass c) {
  return c == ComponentClass::RegularLeftTube || c == ComponentClass::RegularRightTube;
}

struct StringModule {
  QuiverSpec quiver;
  long long lo = 0;  // canonical: lo in [0, h)
  long long hi = 0;

  int dim() const { return static_cast<int>(hi - lo + 1); }
  bool operator==(const StringModule&) const = default;
};

// The interval [lo, hi] shifted so lo lands in [0, h).
StringModule string_at(const QuiverSpec& q, long long lo, long long hi);

// The module named (left_label, ...)_dim in the normalized orientation; see
// the header comment.  Throws UnknownLabel / NonpositiveDim.
StringModule make_string(const QuiverSpec& q, const std::string& left_label, int dim);

// Normalized endpoint labels (left, right) and the display name "XY_d".
std::pair<std::string, std::string> string_type(const StringModule& m);
std::string module_name(const StringModule& m);

ComponentClass classify(const StringModule& m);

// The same interval over the opposite quiver; sends measures to comeasures.
StringModule dual_string(const StringModule& m);

// Extend the interval by the hook on the given geometric side.  The boundary
// arrow on that side must point into the interval (NoIncomingArrow
// otherwise); the hook is the maximal extension by one incoming step and the
// following run of arrows oriented away from the interval.
StringModule add_hook(const StringModule& m, Side side);
bool can_add_hook(const StringModule& m, Side side);

// Remove the minimal closed boundary segment (cohook) on the given geometric
// side.  The boundary arrow on that side must point out of the interval and
// the removal must leave the interval nonempty (NoOutgoingArrow otherwise).
StringModule delete_cohook(const StringModule& m, Side side);
bool can_delete_cohook(const StringModule& m, Side side);

// All subintervals [a, b] of [lo, hi] that are closed under the internal
// arrows (submodules spanned by basis vectors): a is lo or receives its left
// arrow, b is hi or receives its right arrow.  Returned as string modules.
std::vector<StringModule> submodule_subintervals(const StringModule& m);

}  // namespace aet
