#include "aetilde/grcompute.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace aet {

std::vector<long long> interval_sinks(const StringModule& m) {
  std::vector<long long> out;
  for (long long p = m.lo; p <= m.hi; ++p) {
    const bool left_ok = (p == m.lo) || cover_arrow(m.quiver, p - 1) == Dir::Forward;
    const bool right_ok = (p == m.hi) || cover_arrow(m.quiver, p) == Dir::Backward;
    if (left_ok && right_ok) out.push_back(p);
  }
  return out;
}

HookStreams hook_streams(const StringModule& m, long long sink) {
  {
    const bool in_range = sink >= m.lo && sink <= m.hi;
    const bool left_ok = in_range && ((sink == m.lo) ||
                                      cover_arrow(m.quiver, sink - 1) == Dir::Forward);
    const bool right_ok = in_range && ((sink == m.hi) ||
                                       cover_arrow(m.quiver, sink) == Dir::Backward);
    if (!left_ok || !right_ok) {
      throw NotASink("position " + std::to_string(sink) + " is not an interval sink of " +
                     module_name(m));
    }
  }
  HookStreams hs;
  hs.sink = sink;
  // Leftwards: each hook steps once across the incoming arrow and then rides
  // the run of backward arrows; the interval boundary may truncate a hook.
  long long cur = sink;
  while (cur > m.lo) {
    int len = 1;
    long long p = cur - 1;
    while (p > m.lo && cover_arrow(m.quiver, p - 1) == Dir::Backward) {
      --p;
      ++len;
    }
    hs.lambda.push_back(len);
    cur = p;
  }
  cur = sink;
  while (cur < m.hi) {
    int len = 1;
    long long p = cur + 1;
    while (p < m.hi && cover_arrow(m.quiver, p) == Dir::Forward) {
      ++p;
      ++len;
    }
    hs.rho.push_back(len);
    cur = p;
  }
  return hs;
}

namespace {

// Measure-order comparison of the remaining tails lambda[il:] vs rho[ir:].
Ord cmp_tails(const Measure& lambda, std::size_t il, const Measure& rho, std::size_t ir) {
  while (il < lambda.size() && ir < rho.size()) {
    if (lambda[il] != rho[ir]) {
      return lambda[il] > rho[ir] ? Ord::Less : Ord::Greater;
    }
    ++il;
    ++ir;
  }
  if (il == lambda.size() && ir == rho.size()) return Ord::Equal;
  return il == lambda.size() ? Ord::Less : Ord::Greater;
}

}  // namespace

Measure greedy_candidate(const StringModule& m, long long sink,
                         std::vector<GreedyStep>* trace) {
  HookStreams hs = hook_streams(m, sink);
  Measure out{1};
  std::size_t il = 0;
  std::size_t ir = 0;
  while (il < hs.lambda.size() || ir < hs.rho.size()) {
    // Append from the larger remaining stream; ties and exhausted-left both
    // fall to the right stream.
    const bool from_rho = cmp_tails(hs.lambda, il, hs.rho, ir) != Ord::Greater;
    const int value = from_rho ? hs.rho[ir++] : hs.lambda[il++];
    out.push_back(value);
    if (trace) trace->push_back({from_rho, value});
  }
  assert(std::accumulate(out.begin(), out.end(), 0) == m.dim());
  return out;
}

GreedyResult greedy_measure_detailed(const StringModule& m) {
  GreedyResult best;
  for (long long sink : interval_sinks(m)) {
    Measure cand = greedy_candidate(m, sink);
    if (best.measure.empty()) {
      best.measure = std::move(cand);
      best.winning_sinks = {sink};
      continue;
    }
    switch (cmp_measure(cand, best.measure)) {
      case Ord::Greater:
        best.measure = std::move(cand);
        best.winning_sinks = {sink};
        break;
      case Ord::Equal:
        best.winning_sinks.push_back(sink);
        break;
      case Ord::Less:
        break;
    }
  }
  return best;
}

Measure greedy_measure(const StringModule& m) {
  return greedy_measure_detailed(m).measure;
}

// ---------------------------------------------------------------------------
// Oracle dynamic program
// ---------------------------------------------------------------------------

OracleTable::OracleTable(QuiverSpec q, int bound) : q_(std::move(q)), bound_(bound) {
  const int h = q_.h;
  table_.assign(h, std::vector<Measure>(bound_));
  for (int len = 1; len <= bound_; ++len) {
    for (int a = 0; a < h; ++a) {
      const long long b = a + len - 1;
      Measure best;
      for (int a2 = a; a2 <= b; ++a2) {
        if (a2 != a && cover_arrow(q_, a2 - 1) != Dir::Forward) continue;
        for (long long b2 = a2; b2 <= b; ++b2) {
          if (b2 != b && cover_arrow(q_, b2) != Dir::Backward) continue;
          const int len2 = static_cast<int>(b2 - a2 + 1);
          if (len2 == len) continue;  // proper subintervals only
          Measure cand = table_[mod_h(a2, h)][len2 - 1];
          cand.push_back(len - len2);
          if (best.empty() || cmp_measure(cand, best) == Ord::Greater) {
            best = std::move(cand);
          }
        }
      }
      if (best.empty()) best = Measure{len};  // no proper closed subinterval
      table_[a][len - 1] = std::move(best);
    }
  }
}

const Measure& OracleTable::at(long long lo, int len) const {
  if (len < 1 || len > bound_) {
    throw BoundExceeded("oracle table bound " + std::to_string(bound_) +
                        " exceeded by interval length " + std::to_string(len));
  }
  return table_[mod_h(lo, q_.h)][len - 1];
}

namespace {

// Band-route measure for a preinjective string of dimension q*h + r.
std::optional<Measure> band_route(const StringModule& m) {
  const int h = m.quiver.h;
  const int d = m.dim();
  if (d <= h) return std::nullopt;
  const int q = d / h;
  const int r = d % h;
  if (r == 0) return std::nullopt;  // string dimensions are never multiples of h... guarded anyway
  Measure out = concat_power(mu_quasi_simple_homogeneous(m.quiver), Measure{h}, q - 1);
  out.push_back(r);
  return out;
}

}  // namespace

Measure oracle_measure(const StringModule& m, const OracleTable& table) {
  assert(m.quiver == table.quiver());
  Measure best = table.at(m.lo, m.dim());
  if (classify(m) == ComponentClass::Preinjective) {
    if (auto band = band_route(m); band && cmp_measure(*band, best) == Ord::Greater) {
      best = std::move(*band);
    }
  }
  return best;
}

Measure oracle_measure(const StringModule& m, int bound) {
  if (m.dim() > bound) {
    throw BoundExceeded("dimension " + std::to_string(m.dim()) +
                        " exceeds oracle bound " + std::to_string(bound));
  }
  OracleTable table(m.quiver, m.dim());
  return oracle_measure(m, table);
}

Measure oracle_measure(const HomogeneousModule& m, int bound) {
  if (m.dim() > bound) {
    throw BoundExceeded("dimension " + std::to_string(m.dim()) +
                        " exceeds oracle bound " + std::to_string(bound));
  }
  return concat_power(mu_quasi_simple_homogeneous(m.quiver), Measure{m.quiver.h},
                      m.qlen - 1);
}

// ---------------------------------------------------------------------------
// Homogeneous bands
// ---------------------------------------------------------------------------

Measure mu_quasi_simple_homogeneous(const QuiverSpec& q) {
  const int h = q.h;
  OracleTable table(q, h - 1);
  Measure best;
  for (int a = 0; a < h; ++a) {
    if (cover_arrow(q, a - 1) != Dir::Forward) continue;  // arc must be closed at its left end
    for (int len = 1; len <= h - 1; ++len) {
      const long long b = a + len - 1;
      if (cover_arrow(q, b) != Dir::Backward) continue;  // and at its right end
      Measure cand = table.at(a, len);
      cand.push_back(h - len);
      if (best.empty() || cmp_measure(cand, best) == Ord::Greater) best = std::move(cand);
    }
  }
  return best;
}

Measure gr_measure(const HomogeneousModule& m) {
  return concat_power(mu_quasi_simple_homogeneous(m.quiver), Measure{m.quiver.h},
                      m.qlen - 1);
}

Measure gr_comeasure(const HomogeneousModule& m) {
  return gr_measure(HomogeneousModule{opposite_quiver(m.quiver), m.qlen});
}

Measure gr_measure(const StringModule& m) {
  Measure best = greedy_measure(m);
  if (classify(m) == ComponentClass::Preinjective) {
    if (auto band = band_route(m); band && cmp_measure(*band, best) == Ord::Greater) {
      best = std::move(*band);
    }
  }
  return best;
}

Measure gr_comeasure(const StringModule& m) {
  return gr_measure(dual_string(m));
}

// ---------------------------------------------------------------------------
// IPF decomposition
// ---------------------------------------------------------------------------

IPFDecomposition ipf_decompose(const Measure& m, const HookSystem& hooks) {
  const int h = std::accumulate(hooks.L.begin(), hooks.L.end(), 0);
  std::vector<Measure> blocks{hooks.L, hooks.R, Measure{h}};
  // Dedupe (for symmetric quivers L == R, and (h) equals L when s == 1).
  std::vector<Measure> unique_blocks;
  for (auto& b : blocks) {
    if (std::find(unique_blocks.begin(), unique_blocks.end(), b) == unique_blocks.end()) {
      unique_blocks.push_back(b);
    }
  }

  std::optional<std::size_t> best_pos;
  Measure best_block;
  for (const Measure& block : unique_blocks) {
    if (block.empty() || block.size() > m.size()) continue;
    for (std::size_t i = 0; i + block.size() <= m.size(); ++i) {
      if (!std::equal(block.begin(), block.end(), m.begin() + i)) continue;
      if (!best_pos || i < *best_pos ||
          (i == *best_pos && block.size() > best_block.size())) {
        best_pos = i;
        best_block = block;
      }
      break;  // only the earliest occurrence of this block matters
    }
  }
  if (!best_pos) {
    throw NoPeriodicPart("no periodic block occurs in measure " + format_measure(m));
  }

  IPFDecomposition out;
  out.per = best_block;
  const std::size_t start = *best_pos;
  std::size_t end = start + best_block.size();
  out.mult = 1;
  while (end + best_block.size() <= m.size() &&
         std::equal(best_block.begin(), best_block.end(), m.begin() + end)) {
    end += best_block.size();
    ++out.mult;
  }
  out.init.assign(m.begin(), m.begin() + start);
  out.fin.assign(m.begin() + end, m.end());
  const std::size_t bound_init = hooks.s + hooks.t - 1;
  const std::size_t bound_fin = hooks.s + hooks.t >= 2
                                    ? static_cast<std::size_t>(hooks.s + hooks.t - 2)
                                    : 0;
  out.bounds_ok = out.init.size() <= bound_init && out.fin.size() <= bound_fin;
  return out;
}

}  // namespace aet
