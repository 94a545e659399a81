#include "aetilde/rhombic.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

#include "aetilde/errors.hpp"
#include "aetilde/quiver.hpp"
#include "aetilde/strings.hpp"

namespace aet {

RhombicPoint rhombic_point(const StringModule& m) {
  RhombicPoint p;
  p.mu = gr_measure(m);
  p.mustar = gr_comeasure(m);
  p.x = e_value(p.mu);
  p.y = e_value(p.mustar);
  return p;
}

RhombicPoint rhombic_point(const HomogeneousModule& m) {
  RhombicPoint p;
  p.mu = gr_measure(m);
  p.mustar = gr_comeasure(m);
  p.x = e_value(p.mu);
  p.y = e_value(p.mustar);
  return p;
}

std::string to_string(Approach a) {
  switch (a) {
    case Approach::FromLeft: return "from-left";
    case Approach::FromRight: return "from-right";
    case Approach::FromBelow: return "from-below";
  }
  return "?";
}

std::string to_string(StairOrd o) {
  switch (o) {
    case StairOrd::Less: return "less";
    case StairOrd::Equal: return "equal";
    case StairOrd::Greater: return "greater";
    case StairOrd::Incomparable: return "incomparable";
  }
  return "?";
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::False: return "false";
    case TriState::True: return "true";
    case TriState::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

Measure member_measure(const Family& f, int index, bool starred) {
  if (f.homogeneous) {
    HomogeneousModule m{f.quiver, index + 1};
    return starred ? gr_comeasure(m) : gr_measure(m);
  }
  StringModule m = family_member(f, index);
  return starred ? gr_comeasure(m) : gr_measure(m);
}

std::string member_name(const Family& f, int index) {
  if (f.homogeneous) {
    return "H_" + std::to_string((index + 1) * f.quiver.h);
  }
  return module_name(family_member(f, index));
}

// fin against the infinite repetition of per.  mult-maximality guarantees
// fin never begins with a full copy of per, so running off the end of fin
// means fin is a proper initial segment (hence smaller).
Ord cmp_fin_per(const Measure& fin, const Measure& per) {
  for (std::size_t i = 0; i < fin.size(); ++i) {
    const int a = fin[i];
    const int b = per[i % per.size()];
    if (a != b) return a > b ? Ord::Less : Ord::Greater;
  }
  return Ord::Less;
}

}  // namespace

IPFDecomposition family_ipf(const Family& f) {
  const int h = f.quiver.h;
  const HookSystem hooks = hook_system(f.quiver);
  const int base = f.homogeneous ? h : f.base_dim;
  int index = 0;
  while (base + index * h < 3 * h) ++index;
  IPFDecomposition prev;
  bool have_prev = false;
  for (int attempt = 0; attempt < 9; ++attempt, ++index) {
    IPFDecomposition cur;
    try {
      cur = ipf_decompose(member_measure(f, index, false), hooks);
    } catch (const NoPeriodicPart&) {
      have_prev = false;
      continue;
    }
    if (have_prev && prev.init == cur.init && prev.per == cur.per &&
        prev.fin == cur.fin && cur.mult == prev.mult + 1) {
      return prev;
    }
    prev = cur;
    have_prev = true;
  }
  throw NoPeriodicPart("family " + f.key() +
                       ": decomposition did not stabilize over nine members");
}

PeriodicMeasure gr_limit(const Family& f) {
  const IPFDecomposition d = family_ipf(f);
  return canonical_periodic(d.init, d.per);
}

Family dual_family(const Family& f) {
  if (f.homogeneous) return homogeneous_family(opposite_quiver(f.quiver));
  return family_of(dual_string(family_member(f, 0)));
}

PeriodicMeasure gr_colimit(const Family& f) { return gr_limit(dual_family(f)); }

RhombicLimit rhombic_limit(const Family& f) {
  const IPFDecomposition d = family_ipf(f);
  const IPFDecomposition ds = family_ipf(dual_family(f));
  RhombicLimit out;
  out.mu_limit = canonical_periodic(d.init, d.per);
  out.mustar_limit = canonical_periodic(ds.init, ds.per);
  const Ord u = cmp_fin_per(d.fin, d.per);
  const Ord s = cmp_fin_per(ds.fin, ds.per);
  if (u == Ord::Less && s == Ord::Greater) {
    out.approach = Approach::FromLeft;
  } else if (u == Ord::Greater && s == Ord::Less) {
    out.approach = Approach::FromRight;
  } else if (u == Ord::Less && s == Ord::Less) {
    out.approach = Approach::FromBelow;
  } else {
    throw Error("rhombic.LimitMismatch",
                "family " + f.key() + ": fin/per signs match no component");
  }
  return out;
}

DistinguishedLimits distinguished_limits(const QuiverSpec& q) {
  struct SideScan {
    PeriodicMeasure takeoff, landing;
    std::vector<std::pair<std::string, PeriodicMeasure>> preinjective;
  };
  const auto scan = [](const QuiverSpec& qq) {
    SideScan s;
    bool have_takeoff = false, have_landing = false;
    for (const Family& f : all_families(qq)) {
      if (f.cls == ComponentClass::Preprojective) {
        PeriodicMeasure lim = gr_limit(f);
        if (!have_takeoff) {
          s.takeoff = lim;
          have_takeoff = true;
        } else if (!(s.takeoff == lim)) {
          throw LimitMismatch("preprojective families " + f.key() +
                              " disagree about the take-off limit");
        }
      } else if (f.cls == ComponentClass::Preinjective) {
        PeriodicMeasure lim = gr_limit(f);
        if (!have_landing || cmp_periodic(s.landing, lim) == Ord::Less) {
          s.landing = lim;
          have_landing = true;
        }
        s.preinjective.emplace_back(f.key(), std::move(lim));
      }
    }
    if (!have_takeoff || !have_landing) {
      throw LimitMismatch("quiver lacks a preprojective or preinjective family");
    }
    std::sort(s.preinjective.begin(), s.preinjective.end(),
              [](const auto& a, const auto& b) {
                const Ord o = cmp_periodic(a.second, b.second);
                if (o != Ord::Equal) return o == Ord::Less;
                return a.first < b.first;
              });
    return s;
  };

  const QuiverSpec op = opposite_quiver(q);
  SideScan plain = scan(q);
  SideScan starred = scan(op);

  DistinguishedLimits out;
  out.takeoff = std::move(plain.takeoff);
  out.homogeneous =
      canonical_periodic(mu_quasi_simple_homogeneous(q), Measure{q.h});
  out.landing = std::move(plain.landing);
  out.takeoff_star = std::move(starred.takeoff);
  out.homogeneous_star =
      canonical_periodic(mu_quasi_simple_homogeneous(op), Measure{op.h});
  out.landing_star = std::move(starred.landing);
  out.preinjective_limits = std::move(plain.preinjective);
  return out;
}

namespace {

// Does some consecutive A-pair sandwich the measure x while the matching
// A-comeasure stays below xs?
bool sandwiched(const std::vector<Measure>& mu_a,
                const std::vector<Measure>& st_a, const Measure& x,
                const Measure& xs) {
  for (std::size_t l = 0; l + 1 < mu_a.size(); ++l) {
    if (cmp_measure(mu_a[l], x) != Ord::Greater &&
        cmp_measure(x, mu_a[l + 1]) == Ord::Less &&
        cmp_measure(st_a[l], xs) != Ord::Greater) {
      return true;
    }
  }
  return false;
}

// "For almost all n": the condition may fail on an initial run of members
// (small modules), but must hold from some point on covering at least half
// of the inspected window.
bool stair_le(const Family& a, const Family& b, int depth) {
  const int window = depth + 8;
  std::vector<Measure> mu_a, st_a;
  mu_a.reserve(window);
  st_a.reserve(window);
  for (int l = 0; l < window; ++l) {
    mu_a.push_back(member_measure(a, l, false));
    st_a.push_back(member_measure(a, l, true));
  }
  int first_ok = depth;
  for (int n = depth - 1; n >= 0; --n) {
    if (sandwiched(mu_a, st_a, member_measure(b, n, false),
                   member_measure(b, n, true))) {
      first_ok = n;
    } else {
      break;
    }
  }
  return depth - first_ok >= (depth + 1) / 2;
}

}  // namespace

StairOrd staircase_cmp(const Family& a, const Family& b, int depth) {
  const PeriodicMeasure la = gr_limit(a);
  const PeriodicMeasure lb = gr_limit(b);
  if (!(la == lb)) {
    const Ord o = cmp_periodic(gr_colimit(a), gr_colimit(b));
    if (o == Ord::Equal) {
      throw LimitMismatch("families " + a.key() + ", " + b.key() +
                          " have distinct limits but equal colimits");
    }
    return o == Ord::Less ? StairOrd::Less : StairOrd::Greater;
  }
  const bool le = stair_le(a, b, depth);
  const bool ge = stair_le(b, a, depth);
  if (le && ge) return StairOrd::Equal;
  if (le) return StairOrd::Less;
  if (ge) return StairOrd::Greater;
  return StairOrd::Incomparable;
}

Measure family_wf(const Family& f) { return family_ipf(f).wf(); }

Measure family_wf_star(const Family& f) { return family_ipf(dual_family(f)).wf(); }

StairOrd wf_cmp(const Family& a, const Family& b) {
  if (!is_regular(a.cls) || !is_regular(b.cls) || a.cls != b.cls ||
      !(a.quiver == b.quiver)) {
    throw NotRegular("wf_cmp needs two regular families of one tube, got " +
                     to_string(a.cls) + " and " + to_string(b.cls));
  }
  switch (cmp_measure(family_wf_star(a), family_wf_star(b))) {
    case Ord::Less: return StairOrd::Less;
    case Ord::Greater: return StairOrd::Greater;
    case Ord::Equal: return StairOrd::Equal;
  }
  return StairOrd::Incomparable;
}

ParallelogramReport parallelogram_check(const ARSequence& seq) {
  ParallelogramReport rep;
  std::vector<Family> corners;
  if (seq.homogeneous) {
    const Family f = homogeneous_family(seq.quiver);
    corners = {f, f, f};
    if (seq.qlen > 1) corners.push_back(f);
  } else {
    corners = {family_of(seq.A), family_of(seq.B1), family_of(seq.C)};
    if (seq.B2) corners.push_back(family_of(*seq.B2));
  }

  std::vector<RhombicLimit> lim;
  lim.reserve(corners.size());
  for (const Family& f : corners) lim.push_back(rhombic_limit(f));
  rep.A = lim[0];
  rep.B1 = lim[1];
  rep.C = lim[2];
  if (lim.size() == 4) rep.B2 = lim[3];

  rep.parallel_sides = rep.A.mu_limit == rep.B1.mu_limit &&
                       rep.B1.mustar_limit == rep.C.mustar_limit;
  if (rep.B2) {
    rep.parallel_sides = rep.parallel_sides &&
                         rep.B2->mu_limit == rep.C.mu_limit &&
                         rep.A.mustar_limit == rep.B2->mustar_limit;
  }

  rep.degenerate = false;
  for (std::size_t i = 0; i < lim.size(); ++i) {
    for (std::size_t j = i + 1; j < lim.size(); ++j) {
      if (lim[i].mu_limit == lim[j].mu_limit &&
          lim[i].mustar_limit == lim[j].mustar_limit) {
        rep.degenerate = true;
      }
    }
  }

  std::vector<std::pair<Measure, Measure>> words;
  words.reserve(corners.size());
  for (const Family& f : corners) {
    words.emplace_back(family_wf(f), family_wf_star(f));
  }
  rep.nondegenerate_wf = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (words[i] == words[j]) rep.nondegenerate_wf = false;
    }
  }
  return rep;
}

namespace {

// Every consecutive pair of the walk must step to the cyclic successor in
// the ascending-wf order restricted to the walk's own families.
bool cyclic_in_order(const std::vector<std::string>& walk,
                     const std::vector<std::string>& order) {
  std::vector<std::string> sub;
  for (const std::string& key : order) {
    if (std::find(walk.begin(), walk.end(), key) != walk.end()) {
      sub.push_back(key);
    }
  }
  if (sub.empty()) return walk.empty();
  const auto index_of = [&sub](const std::string& key) {
    return std::find(sub.begin(), sub.end(), key) - sub.begin();
  };
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const auto cur = index_of(walk[i]);
    const auto nxt = index_of(walk[i + 1]);
    if (cur == static_cast<long>(sub.size()) ||
        nxt == static_cast<long>(sub.size())) {
      return false;
    }
    if (nxt != (cur + 1) % static_cast<long>(sub.size())) return false;
  }
  return true;
}

}  // namespace

TilingReport tiling_report(const Tube& t, int depth) {
  TilingReport rep;
  const WidestExtremaReport gate =
      widest_extrema_report(t.quiver, 4 * t.quiver.h);
  rep.gate_passed = gate.unique_valley && gate.unique_hill;
  if (t.kind == TubeKind::Homogeneous) {
    rep.tiled = TriState::NotApplicable;
    return rep;
  }

  // Ascending wf order of the tube's families, ties refined by staircase.
  std::vector<Family> fams = tube_families(t);
  std::vector<Measure> wfs;
  wfs.reserve(fams.size());
  for (const Family& f : fams) wfs.push_back(family_wf(f));
  std::vector<std::size_t> idx(fams.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Ord o = cmp_measure(wfs[a], wfs[b]);
    if (o != Ord::Equal) return o == Ord::Less;
    return fams[a].key() < fams[b].key();
  });
  for (std::size_t pass = 1; pass < idx.size(); ++pass) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
      if (wfs[idx[i]] != wfs[idx[i + 1]]) continue;
      try {
        if (staircase_cmp(fams[idx[i + 1]], fams[idx[i]]) == StairOrd::Less) {
          std::swap(idx[i], idx[i + 1]);
          swapped = true;
        }
      } catch (const LimitMismatch&) {
      }
    }
    if (!swapped) break;
  }
  for (std::size_t i : idx) rep.wf_order.push_back(fams[i].key());

  const Tube& tube = t;
  const int rows = static_cast<int>(tube.grid.size());
  const int want_rows = std::max(depth, 2 * tube.rank + 1);
  Tube rebuilt;
  const Tube* walk_tube = &tube;
  if (rows < want_rows) {
    rebuilt = build_tube(t.quiver, t.kind, want_rows);
    walk_tube = &rebuilt;
  }
  const auto& grid = walk_tube->grid;

  for (std::size_t i = 0; i < grid.front().size(); ++i) {
    std::vector<std::string> walk;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      walk.push_back(family_of(grid[j][i]).key());
    }
    rep.ray_walks.push_back(std::move(walk));
  }
  for (std::size_t i = 0; i < grid.front().size(); ++i) {
    std::vector<std::string> walk;
    StringModule cur = grid.back()[i];
    walk.push_back(family_of(cur).key());
    for (;;) {
      try {
        cur = coray_predecessor(cur);
      } catch (const NoEpiStep&) {
        break;
      }
      walk.push_back(family_of(cur).key());
    }
    rep.coray_walks.push_back(std::move(walk));
  }

  if (!rep.gate_passed) {
    rep.tiled = TriState::NotApplicable;
    return rep;
  }
  bool ok = true;
  for (const auto& walk : rep.ray_walks) ok = ok && cyclic_in_order(walk, rep.wf_order);
  for (const auto& walk : rep.coray_walks) ok = ok && cyclic_in_order(walk, rep.wf_order);
  rep.tiled = ok ? TriState::True : TriState::False;
  return rep;
}

ChainWitness chain_witness(const QuiverSpec& q, ComponentClass cls,
                           bool starred, int k) {
  ChainWitness w;
  switch (cls) {
    case ComponentClass::Preprojective: w.ascending = !starred; break;
    case ComponentClass::Preinjective: w.ascending = starred; break;
    default: w.ascending = !starred; break;  // regular classes
  }

  if ((is_regular(cls) || cls == ComponentClass::HomogeneousRegular) && starred) {
    // Strictly descending comeasures along a coray, walked downward.
    std::vector<Measure> chain;
    std::vector<std::string> names;
    if (cls == ComponentClass::HomogeneousRegular) {
      for (int qlen = k + 2; qlen >= 1; --qlen) {
        HomogeneousModule m{q, qlen};
        chain.push_back(gr_comeasure(m));
        names.push_back("H_" + std::to_string(m.dim()));
      }
    } else {
      const TubeKind kind = cls == ComponentClass::RegularLeftTube
                                ? TubeKind::LeftTube
                                : TubeKind::RightTube;
      const Tube tube = build_tube(q, kind, k + 4);
      StringModule cur = tube.grid.back().front();
      chain.push_back(gr_comeasure(cur));
      names.push_back(module_name(cur));
      for (;;) {
        try {
          cur = coray_predecessor(cur);
        } catch (const NoEpiStep&) {
          break;
        }
        chain.push_back(gr_comeasure(cur));
        names.push_back(module_name(cur));
      }
    }
    for (std::size_t start = 0; start + k <= chain.size(); ++start) {
      bool mono = true;
      for (int i = 1; i < k && mono; ++i) {
        mono = cmp_measure(chain[start + i - 1], chain[start + i]) == Ord::Greater;
      }
      if (mono) {
        w.chain.assign(chain.begin() + start, chain.begin() + start + k);
        w.names.assign(names.begin() + start, names.begin() + start + k);
        return w;
      }
    }
    throw std::logic_error("chain_witness: no descending coray window");
  }

  Family fam;
  if (cls == ComponentClass::HomogeneousRegular) {
    fam = homogeneous_family(q);
  } else {
    bool found = false;
    for (const Family& f : all_families(q)) {
      if (f.cls == cls && !f.homogeneous) {
        fam = f;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("chain_witness: no family of that class");
  }
  const int count = k + 24;
  std::vector<Measure> chain;
  chain.reserve(count);
  for (int i = 0; i < count; ++i) chain.push_back(member_measure(fam, i, starred));
  const Ord want = w.ascending ? Ord::Less : Ord::Greater;
  for (int start = 0; start + k <= count; ++start) {
    bool mono = true;
    for (int i = 1; i < k && mono; ++i) {
      mono = cmp_measure(chain[start + i - 1], chain[start + i]) == want;
    }
    if (mono) {
      w.chain.assign(chain.begin() + start, chain.begin() + start + k);
      for (int i = start; i < start + k; ++i) w.names.push_back(member_name(fam, i));
      return w;
    }
  }
  throw std::logic_error("chain_witness: no strictly monotone window");
}

}  // namespace aet
