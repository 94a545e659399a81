// Gabriel-Roiter measures of modules over cyclic quivers.
//
// For a string module, the measure is computed sink by sink: each sink of
// the interval yields a pair of hook-length streams (lambda to the left, rho
// to the right).  The greedy walk starts from the simple measure (1) and
// repeatedly appends the head of whichever remaining stream is LARGER in the
// measure order, preferring the right stream on ties; the module's measure
// is the maximum of the per-sink candidates.
//
// Homogeneous band modules H[q] (quasi-length q over the full cycle) have
// measure mu_H . (h)^(q-1), where mu_H is the measure of the quasi-simple
// band, computed from the closed arcs of the cycle.
//
// Preinjective string modules may additionally contain band submodules, so
// their measure is the maximum of the greedy value and a band-route value
// mu_H . (h)^(q-1) . (r) for dim = qh + r.
//
// ipf_decompose splits a measure into init . (per)^mult . fin where per is
// one of the quiver's periodic blocks {L, R, (h)}: the earliest block
// occurrence wins (ties to the longer block) and mult is its maximal run.
//
// oracle_measure is an independent reference: a direct dynamic program over
// chains of closed subintervals, maximizing mu(J') . (|J| - |J'|) over the
// closed proper subintervals J' of J.  It is deliberately slower and makes
// no use of hooks, sinks, or greediness.

#pragma once

#include <optional>
#include <vector>

#include "aetilde/measure.hpp"
#include "aetilde/quiver.hpp"
#include "aetilde/strings.hpp"

namespace aet {

// A homogeneous band module of quasi-length qlen >= 1 (dimension qlen * h).
struct HomogeneousModule {
  QuiverSpec quiver;
  int qlen = 1;

  int dim() const { return qlen * quiver.h; }
  bool operator==(const HomogeneousModule&) const = default;
};

// Positions p in [lo, hi] receiving every internal arrow adjacent to them
// (interval sinks; boundary positions qualify via their single neighbour).
std::vector<long long> interval_sinks(const StringModule& m);

struct HookStreams {
  long long sink = 0;
  Measure lambda;  // hook lengths marching left from the sink (bounded by lo)
  Measure rho;     // hook lengths marching right (bounded by hi)
};

// Streams for one interval sink; throws NotASink if the position is not an
// interval sink of m.
HookStreams hook_streams(const StringModule& m, long long sink);

// One appended entry of the greedy walk, for tracing.
struct GreedyStep {
  bool from_rho = false;
  int value = 0;
};

// The greedy candidate measure grown from one sink.
Measure greedy_candidate(const StringModule& m, long long sink,
                         std::vector<GreedyStep>* trace = nullptr);

struct GreedyResult {
  Measure measure;
  std::vector<long long> winning_sinks;  // sinks attaining the maximum
};

// Maximum of the candidates over all interval sinks.
Measure greedy_measure(const StringModule& m);
GreedyResult greedy_measure_detailed(const StringModule& m);

// Measure of the quasi-simple homogeneous band: max over closed arcs A of
// the cycle (|A| < h) of mu(A) . (h - |A|), where mu(A) uses the chain
// recursion of oracle_measure.
Measure mu_quasi_simple_homogeneous(const QuiverSpec& q);

// Gabriel-Roiter measure / comeasure.
Measure gr_measure(const StringModule& m);
Measure gr_measure(const HomogeneousModule& m);
Measure gr_comeasure(const StringModule& m);
Measure gr_comeasure(const HomogeneousModule& m);

struct IPFDecomposition {
  Measure init;
  Measure per;
  int mult = 1;
  Measure fin;
  // Whether |init| <= s+t-1 and |fin| <= s+t-2 hold; recorded, not enforced
  // (both example quivers violate the stricter bound on some modules).
  bool bounds_ok = true;

  Measure wf() const { return concat_power(init, fin, 1); }
};

// Split m as init . per^mult . fin against the quiver's blocks {L, R, (h)}.
// Throws NoPeriodicPart if no block occurs in m.
IPFDecomposition ipf_decompose(const Measure& m, const HookSystem& hooks);

inline constexpr int kOracleBound = 60;

// Reference dynamic program shared across the modules of one quiver:
// table(lo, len) is the chain-maximal measure of the interval [lo, lo+len-1].
class OracleTable {
 public:
  OracleTable(QuiverSpec q, int bound);

  const Measure& at(long long lo, int len) const;
  int bound() const { return bound_; }
  const QuiverSpec& quiver() const { return q_; }

 private:
  QuiverSpec q_;
  int bound_;
  std::vector<std::vector<Measure>> table_;  // [lo mod h][len-1]
};

// Chain-supremum measure by brute force; BoundExceeded if dim(m) > bound.
// Preinjective strings include the band route on top of the interval chains.
Measure oracle_measure(const StringModule& m, int bound = kOracleBound);
Measure oracle_measure(const HomogeneousModule& m, int bound = kOracleBound);
Measure oracle_measure(const StringModule& m, const OracleTable& table);

}  // namespace aet
