#include <algorithm>
#include <set>

#include "aetilde/errors.hpp"
#include "aetilde/grcompute.hpp"
#include "aetilde/quiver.hpp"
#include "aetilde/strings.hpp"

namespace aet {

namespace {

// Sinks (mod h) that win the greedy race for every exceptional-tube module
// of dimension in [2h, dim_bound].
std::set<int> stable_winning_sinks(const QuiverSpec& q, int dim_bound) {
  std::set<int> inter;
  bool first = true;
  for (long long lo = 0; lo < q.h; ++lo) {
    for (int dim = 2 * q.h; dim <= dim_bound; ++dim) {
      const StringModule m = string_at(q, lo, lo + dim - 1);
      if (!is_regular(classify(m))) continue;
      const GreedyResult r = greedy_measure_detailed(m);
      std::set<int> winners;
      for (long long p : r.winning_sinks) winners.insert(mod_h(p, q.h));
      if (first) {
        inter = std::move(winners);
        first = false;
      } else {
        std::set<int> next;
        std::set_intersection(inter.begin(), inter.end(), winners.begin(),
                              winners.end(), std::inserter(next, next.begin()));
        inter = std::move(next);
      }
      if (inter.empty()) return inter;
    }
  }
  return inter;
}

}  // namespace

WidestExtremaReport widest_extrema_report(const QuiverSpec& q, int dim_bound) {
  if (dim_bound < 3 * q.h) {
    throw BoundTooSmall("widest_extrema_report needs dim_bound >= 3h, got " +
                        std::to_string(dim_bound));
  }
  WidestExtremaReport rep;
  rep.dim_bound = dim_bound;

  const std::set<int> valley = stable_winning_sinks(q, dim_bound);
  rep.unique_valley = !valley.empty();
  rep.valley_sinks.assign(valley.begin(), valley.end());

  const QuiverSpec op = opposite_quiver(q);
  const std::set<int> hill = stable_winning_sinks(op, dim_bound);
  rep.unique_hill = !hill.empty();
  rep.hill_sinks.assign(hill.begin(), hill.end());

  // Syntactic widths: length of the maximal forward run entering each sink
  // from the left plus the maximal backward run entering it from the right.
  for (int v = 0; v < q.h; ++v) {
    if (!(cover_arrow(q, v - 1) == Dir::Forward &&
          cover_arrow(q, v) == Dir::Backward)) {
      continue;
    }
    WidthEntry e;
    e.vertex = v;
    e.label = q.labels[v];
    int left = 0;
    while (left < q.h && cover_arrow(q, v - 1 - left) == Dir::Forward) ++left;
    int right = 0;
    while (right < q.h && cover_arrow(q, v + right) == Dir::Backward) ++right;
    e.width = left + right;
    rep.width_table.push_back(e);
  }
  std::vector<int> widths;
  for (const WidthEntry& e : rep.width_table) widths.push_back(e.width);
  std::sort(widths.begin(), widths.end(), std::greater<int>());
  rep.width_heuristic =
      widths.size() == 1 || (widths.size() > 1 && widths[0] >= widths[1] + 2);
  return rep;
}

}  // namespace aet
