// Cyclic quivers of type A-tilde and their universal covers.
//
// A quiver is given by an orientation word over {'>', '<'} of length h >= 2
// (read cyclically: character i orients the edge between vertices i and
// i+1 mod h; '>' points i -> i+1, '<' points i+1 -> i), optionally followed
// by h comma-separated vertex labels.  At least one arrow in each direction
// is required (acyclic orientation of the cycle).
//
// The universal cover is the doubly infinite line quiver with vertex set Z,
// label(p) = labels[p mod h], and the arrow between p and p+1 oriented by
// edges[p mod h].  String modules are intervals in this cover (strings.hpp).
//
// The hook system of a quiver packages the cyclic sequences of "hook"
// lengths read off leftwards (L) and rightwards (R) from a sink of the
// cover, each rotated to its minimal representative; if R is strictly
// smaller than L the cover is mirrored first so the larger sequence always
// sits on the left.  These two blocks drive the periodic parts of all
// Gabriel-Roiter measures over the quiver.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "aetilde/errors.hpp"
#include "aetilde/measure.hpp"

namespace aet {

enum class Dir { Forward, Backward };

inline Dir flip(Dir d) { return d == Dir::Forward ? Dir::Backward : Dir::Forward; }

struct QuiverSpec {
  int h = 0;                        // number of vertices (= edges) on the cycle
  std::vector<Dir> edges;           // edges[i]: orientation between i and i+1 mod h
  std::vector<std::string> labels;  // h distinct vertex labels

  bool operator==(const QuiverSpec&) const = default;
};

// p mod h folded into [0, h).
inline int mod_h(long long p, int h) {
  long long m = p % h;
  return static_cast<int>(m < 0 ? m + h : m);
}

// Parse "word" or "word,label0,...,label_{h-1}".
// Throws MalformedWord, OrientedCycle, LabelCountMismatch, DuplicateLabel.
QuiverSpec parse_quiver(const std::string& text);

// The orientation word of q, e.g. ">><<<>>".
std::string quiver_word(const QuiverSpec& q);

// Orientation of the cover arrow between positions p and p+1.
inline Dir cover_arrow(const QuiverSpec& q, long long p) {
  return q.edges[mod_h(p, q.h)];
}

// Label of cover position p.
inline const std::string& cover_label(const QuiverSpec& q, long long p) {
  return q.labels[mod_h(p, q.h)];
}

// Vertex index of a label; throws UnknownLabel.
int vertex_index(const QuiverSpec& q, const std::string& label);

// Cover position p receives both adjacent arrows / emits both.
inline bool is_cover_sink(const QuiverSpec& q, long long p) {
  return cover_arrow(q, p - 1) == Dir::Forward && cover_arrow(q, p) == Dir::Backward;
}
inline bool is_cover_source(const QuiverSpec& q, long long p) {
  return cover_arrow(q, p - 1) == Dir::Backward && cover_arrow(q, p) == Dir::Forward;
}

// Same underlying graph with every arrow reversed (labels kept).
QuiverSpec opposite_quiver(const QuiverSpec& q);

// The cover reflected through 0 (position p of the mirror corresponds to
// position -p of the original); left and right swap roles.
QuiverSpec mirror_quiver(const QuiverSpec& q);

enum class Takeoff { Right, Symmetric };

struct HookSystem {
  Measure L;        // left hook block, minimal rotation; |L| = s
  Measure R;        // right hook block, minimal rotation; |R| = t
  int s = 0;
  int t = 0;
  Takeoff takeoff = Takeoff::Right;  // Symmetric iff L == R
  bool reflected = false;  // true if the cover was mirrored to enforce R <= L... see below
};

// Hook system of q.  Both raw blocks are rotated to their minimal
// representatives; if the right block would be strictly smaller than the
// left one, the cover is mirrored (reflected = true) so that, in the
// normalized orientation, L >= R always holds.  sum L = sum R = h.
HookSystem hook_system(const QuiverSpec& q);

// A uniformly random acyclic orientation word of length h in [h_min, h_max]
// with default labels; used by randomized sweeps.
QuiverSpec random_quiver(std::mt19937& rng, int h_min, int h_max);

// ---------------------------------------------------------------------------
// Widest-sink analysis
// ---------------------------------------------------------------------------

struct WidthEntry {
  int vertex = 0;       // sink vertex index in [0, h)
  std::string label;
  int width = 0;        // total length of the two maximal directed paths ending here
};

struct WidestExtremaReport {
  bool unique_valley = false;  // some sink wins the greedy race for every tested module
  bool unique_hill = false;    // dually, over the opposite quiver
  std::vector<int> valley_sinks;  // vertices (mod h) winning for all tested modules
  std::vector<int> hill_sinks;
  std::vector<WidthEntry> width_table;  // syntactic widths of all sinks
  bool width_heuristic = false;  // a sink is wider than every other by >= 2
  int dim_bound = 0;
};

// Semantic check: runs the greedy algorithm on every exceptional-tube module
// of dimension between 2h and dim_bound and intersects the sets of winning
// sinks (mod h); unique_valley holds iff the intersection is nonempty.  The
// dual check over the opposite quiver gives unique_hill.  Also reports the
// syntactic width table and whether the widest sink leads by at least two
// units (a sufficient but not necessary criterion).  Requires
// dim_bound >= 3h (BoundTooSmall otherwise).
WidestExtremaReport widest_extrema_report(const QuiverSpec& q, int dim_bound);

}  // namespace aet
