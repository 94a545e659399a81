// The rhombic picture: placing modules and families by measure/comeasure.
//
// Every module M maps to the point (e(mu(M)), e(mu*(M))) in the unit square,
// drawn with the two e-axes at +-45 degrees.  As the dimension of a family's
// members grows, those points converge: the limit measure of a family is the
// eventually periodic measure init.(per)^oo read off from the
// init/periodic/final decomposition of a large member, and dually for the
// colimit (the limit comeasure, computed over the opposite quiver).
//
// Families are compared in two ways:
//   * staircase_cmp: family A is below family B if, for all large n, the
//     n-th member of B is sandwiched between consecutive members of A in the
//     measure order while the matching A-member's comeasure stays below the
//     B-member's; families with different limits are separated by their
//     colimits instead;
//   * wf_cmp: regular families in one tube are compared by the finite word
//     wf* = init*.fin* of their comeasure decomposition.
// The two orders agree where both apply (ray families of a tube).
//
// parallelogram_check verifies that the four corner families of an almost
// split sequence span a parallelogram of limits: A and B1 share their limit
// measure, B2 and C share theirs, and dually for colimits.  Homogeneous
// meshes collapse to a single family (degenerate).  tiling_report checks
// that every ray (walked upward) and every coray (walked downward) visits
// the families of an exceptional tube as a cyclic repetition of their
// ascending-wf order; its gate is the widest-sink analysis of the quiver.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aetilde/artubes.hpp"
#include "aetilde/grcompute.hpp"
#include "aetilde/measure.hpp"

namespace aet {

struct RhombicPoint {
  Measure mu, mustar;
  Rational x, y;  // x = e(mu), y = e(mu*)
};

RhombicPoint rhombic_point(const StringModule& m);
RhombicPoint rhombic_point(const HomogeneousModule& m);

// Direction from which a family's points approach their limit; equivalent to
// the component class, but computed from the fin-vs-per comparisons of the
// decompositions (measure side and comeasure side).
enum class Approach { FromLeft, FromRight, FromBelow };

std::string to_string(Approach a);

// init/per/fin of a large family member (the decomposition stabilizes once
// members are big enough; small members are skipped automatically).
IPFDecomposition family_ipf(const Family& f);

// Limit measure of the family: canonical init.(per)^oo.
PeriodicMeasure gr_limit(const Family& f);
// Limit comeasure: the limit of the dual family over the opposite quiver.
PeriodicMeasure gr_colimit(const Family& f);

// The family over the opposite quiver containing the duals of f's members.
Family dual_family(const Family& f);

struct RhombicLimit {
  PeriodicMeasure mu_limit;
  PeriodicMeasure mustar_limit;
  Approach approach = Approach::FromBelow;
};

RhombicLimit rhombic_limit(const Family& f);

// The distinguished limits of the picture: the takeoff limit shared by all
// preprojective families, the homogeneous limit mu_H.(h)^oo, and the landing
// limit (the maximum of the preinjective family limits), with their duals,
// plus the per-family preinjective limits for inspection.
struct DistinguishedLimits {
  PeriodicMeasure takeoff, homogeneous, landing;
  PeriodicMeasure takeoff_star, homogeneous_star, landing_star;
  std::vector<std::pair<std::string, PeriodicMeasure>> preinjective_limits;
};

DistinguishedLimits distinguished_limits(const QuiverSpec& q);

enum class StairOrd { Less, Equal, Greater, Incomparable };

std::string to_string(StairOrd o);

// Staircase comparison to the given depth (members n = 1..depth of each
// family).  When the families' limit measures differ, their colimits decide
// the order (throws LimitMismatch if those agree).  With equal limits,
// A <= B iff for all but an initial run of n, some consecutive pair of
// A-members sandwiches the n-th B-member:
// mu(A_l) <= mu(B_n) < mu(A_{l+1}) and mu*(A_l) <= mu*(B_n).
StairOrd staircase_cmp(const Family& a, const Family& b, int depth = 8);

// Finite-word comparison of two regular families of one tube by
// wf* = init*.fin* under the measure order.
// Throws NotRegular unless both families are regular and share a tube.
StairOrd wf_cmp(const Family& a, const Family& b);

// The finite words wf = init.fin and wf* = init*.fin* of a family.
Measure family_wf(const Family& f);
Measure family_wf_star(const Family& f);

struct ParallelogramReport {
  // Limits of the families through A, B1, B2, C (B2 missing at the mouth).
  RhombicLimit A, B1, C;
  std::optional<RhombicLimit> B2;
  bool parallel_sides = false;   // lim A = lim B1, lim B2 = lim C, colim A = colim B2, colim B1 = colim C
  bool degenerate = false;       // some distinct corners share both limit and colimit
  bool nondegenerate_wf = false; // the four (wf, wf*) corner words are pairwise distinct
};

ParallelogramReport parallelogram_check(const ARSequence& seq);

enum class TriState { False, True, NotApplicable };

std::string to_string(TriState t);

struct TilingReport {
  std::vector<std::string> wf_order;  // family keys, ascending wf
  std::vector<std::vector<std::string>> ray_walks;    // per mouth module, upward
  std::vector<std::vector<std::string>> coray_walks;  // per top-row module, downward
  TriState tiled = TriState::NotApplicable;
  bool gate_passed = false;  // widest-extrema analysis of the quiver
};

// Checks that every ray visits the tube's families as a cyclic repetition of
// the ascending-wf order and every coray (walked downward) likewise; the
// check only applies when the quiver passes the widest-extrema gate.
TilingReport tiling_report(const Tube& t, int depth);

struct ChainWitness {
  std::vector<Measure> chain;
  bool ascending = false;  // true: strictly ascending; false: strictly descending
  std::vector<std::string> names;
};

// k measures (or comeasures, if starred) forming a strictly monotone chain
// inside the given component class: measures of consecutive family members
// (ascending for preprojective and regular, descending for preinjective),
// comeasures of consecutive family members for preprojective (descending)
// and preinjective (ascending) classes, and comeasures along a coray walked
// downward for the regular class (descending).
ChainWitness chain_witness(const QuiverSpec& q, ComponentClass cls, bool starred, int k);

}  // namespace aet
