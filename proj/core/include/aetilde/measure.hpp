// Measures: finite and eventually periodic sequences of positive integers,
// ordered as filtration profiles.
//
// A measure (m1, ..., mr) records the dimension jumps of a chain of
// indecomposable submodules; measures are compared in the refinement order:
//
//   * a proper initial segment is SMALLER than any extension of it, and
//   * at the first index where two measures differ, the one with the LARGER
//     entry is the SMALLER measure (a bigger early jump means a coarser,
//     hence smaller, filtration profile).
//
// The empty measure is the minimum.  The order embeds into the rationals via
// the exponential-sum map e(m) = sum_l 2^(-(m1+...+ml)), computed here with
// exact rational arithmetic.  Eventually periodic measures prefix.(period)^oo
// represent limits of measure sequences; they are kept in a canonical form
// (primitive period, minimal rotation, shortest prefix) so that equal limits
// compare equal structurally.

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aetilde/errors.hpp"

namespace aet {

using Measure = std::vector<int>;
using Rational = boost::multiprecision::cpp_rational;

enum class Ord { Less, Equal, Greater };

// Refinement-order comparison of finite measures.
Ord cmp_measure(const Measure& a, const Measure& b);

inline bool measure_lt(const Measure& a, const Measure& b) {
  return cmp_measure(a, b) == Ord::Less;
}
inline bool measure_eq(const Measure& a, const Measure& b) {
  return cmp_measure(a, b) == Ord::Equal;
}

// Exact value of e(m) = sum_l 2^(-sigma_l), sigma_l the partial sums.
// e of the empty measure is 0; e is strictly increasing for the order above.
Rational e_value(const Measure& m);

// a . b^k (concatenation of a with k copies of b); k must be >= 0.
Measure concat_power(const Measure& a, const Measure& b, int k);

// An eventually periodic measure prefix.(period)^oo.  Only canonical values
// (as produced by canonical_periodic) should be compared with ==.
struct PeriodicMeasure {
  Measure prefix;
  Measure period;
  bool operator==(const PeriodicMeasure&) const = default;
};

// Result of rotating a finite sequence to its minimal representative.
struct Rotation {
  Measure rotated;   // the minimal rotation under the measure order
  int shift;         // rotated[i] == seq[(i + shift) mod n]
  bool primitive;    // seq is not a proper power of a shorter word
};

// Minimal rotation of a nonempty sequence under the refinement order
// restricted to equal lengths (i.e. pick the rotation whose first difference
// entry is largest).  Ties between identical rotations resolve to the
// smallest shift.  Throws EmptySequence on empty input.
Rotation minimal_rotation(const Measure& seq);

// Canonical form of prefix.(period)^oo: the period is replaced by the minimal
// rotation of its primitive root, the phase absorbed into the prefix, and any
// trailing full copies of the period stripped from the prefix.  Two inputs
// denote the same infinite sequence iff their canonical forms are equal.
// Throws EmptyPeriod if the period is empty.
PeriodicMeasure canonical_periodic(const Measure& prefix, const Measure& period);

// Exact e-value of an eventually periodic measure:
//   e(prefix) + 2^(-sum prefix) * e(period) * 2^(sum period)/(2^(sum period)-1).
Rational e_value(const PeriodicMeasure& m);

// Comparison of (eventually periodic) measures as infinite sequences, with
// finite measures embedded as themselves.  A finite measure that is an
// initial segment of an infinite one is smaller.  The comparison unrolls
// far enough that the verdict is exact.
Ord cmp_periodic(const PeriodicMeasure& a, const PeriodicMeasure& b);
Ord cmp_periodic(const Measure& a, const PeriodicMeasure& b);
Ord cmp_periodic(const PeriodicMeasure& a, const Measure& b);

// Display helpers.  Entries <= 9 are concatenated digit-style ("11221");
// larger entries fall back to comma separation.  A periodic measure renders
// as prefix(period), e.g. "11(221)".
std::string format_measure(const Measure& m);
std::string format_periodic(const PeriodicMeasure& m);

// Fixed-point decimal rendering of a rational with exactly six fractional
// digits, rounding half away from zero.  Used by exporters so that emitted
// coordinates are platform-independent.
std::string fixed6(const Rational& r);

}  // namespace aet
