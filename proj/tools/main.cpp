// aetilde: Gabriel-Roiter measures, comeasures, tubes and rhombic pictures
// for string modules over path algebras of acyclic orientations of a cycle.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aetilde/artubes.hpp"
#include "aetilde/errors.hpp"
#include "aetilde/grcompute.hpp"
#include "aetilde/measure.hpp"
#include "aetilde/quiver.hpp"
#include "aetilde/rhombic.hpp"
#include "aetilde/strings.hpp"
#include "export.hpp"

using namespace aet;
using aet::cli::Json;

namespace {

struct Ctx {
  std::string quiver_text;
  std::string module_text;
  int homogeneous = 0;
  std::string family_key;
  std::string kind_text;
  int depth = 0;
  int max_dim = 0;
  std::string format = "json";
  std::string out_path;
  unsigned seed = 0;
};

QuiverSpec need_quiver(const Ctx& c) {
  if (c.quiver_text.empty()) throw UsageError("--quiver is required");
  return parse_quiver(c.quiver_text);
}

void check_format(const Ctx& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  std::string msg = "--format " + c.format + " is not supported here; expected one of:";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw UsageError(msg);
}

// Either a string module (--module LABEL:DIM) or a homogeneous band module
// (--homogeneous QUASILENGTH).
struct AnyModule {
  std::optional<StringModule> str;
  std::optional<HomogeneousModule> hom;

  std::string name() const {
    return str ? module_name(*str) : "H_" + std::to_string(hom->dim());
  }
  int dim() const { return str ? str->dim() : hom->dim(); }
  ComponentClass cls() const {
    return str ? classify(*str) : ComponentClass::HomogeneousRegular;
  }
  Measure measure() const { return str ? gr_measure(*str) : gr_measure(*hom); }
  Measure comeasure() const { return str ? gr_comeasure(*str) : gr_comeasure(*hom); }
};

AnyModule need_module(const Ctx& c, const QuiverSpec& q) {
  if (!c.module_text.empty() && c.homogeneous > 0)
    throw UsageError("--module and --homogeneous are mutually exclusive");
  if (!c.module_text.empty()) {
    auto pos = c.module_text.find(':');
    if (pos == std::string::npos || pos == 0 || pos + 1 == c.module_text.size())
      throw UsageError("--module expects LABEL:DIM, e.g. c:18");
    int dim = 0;
    try {
      size_t used = 0;
      dim = std::stoi(c.module_text.substr(pos + 1), &used);
      if (used != c.module_text.size() - pos - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--module dimension must be a positive integer");
    }
    return {make_string(q, c.module_text.substr(0, pos), dim), std::nullopt};
  }
  if (c.homogeneous > 0) return {std::nullopt, HomogeneousModule{q, c.homogeneous}};
  throw UsageError("one of --module or --homogeneous is required");
}

TubeKind need_kind(const Ctx& c, bool allow_homogeneous) {
  if (c.kind_text == "left") return TubeKind::LeftTube;
  if (c.kind_text == "right") return TubeKind::RightTube;
  if (c.kind_text == "homogeneous" && allow_homogeneous) return TubeKind::Homogeneous;
  throw UsageError(std::string("--kind expects left or right") +
                   (allow_homogeneous ? " or homogeneous" : ""));
}

void emit(const Ctx& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open --out path " + c.out_path);
    f << text;
  }
}

void emit_json(const Ctx& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

// --- report verbs ------------------------------------------------------------

void run_measure(const Ctx& c, bool starred) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  AnyModule m = need_module(c, q);
  Measure mu = starred ? m.comeasure() : m.measure();
  const char* key = starred ? "comeasure" : "measure";
  if (c.format == "json") {
    Json j = Json::object();
    j["module"] = m.name();
    j["class"] = to_string(m.cls());
    j["dim"] = m.dim();
    j[key] = cli::json_measure(mu);
    j["e"] = cli::json_rational(e_value(mu));
    emit_json(c, j);
  } else {
    std::string out = cli::csv_row({"module", "class", "dim", key, "e"});
    out += cli::csv_row({m.name(), to_string(m.cls()), std::to_string(m.dim()),
                         format_measure(mu), fixed6(e_value(mu))});
    emit(c, out);
  }
}

void run_ipf(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  AnyModule m = need_module(c, q);
  IPFDecomposition d = ipf_decompose(m.measure(), hook_system(q));
  if (c.format == "json") {
    emit_json(c, cli::json_ipf(d));
  } else {
    std::string out = cli::csv_row({"init", "period", "mult", "fin"});
    out += cli::csv_row({format_measure(d.init), format_measure(d.per),
                         std::to_string(d.mult), format_measure(d.fin)});
    emit(c, out);
  }
}

void run_oracle(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  AnyModule m = need_module(c, q);
  int bound = c.max_dim > 0 ? c.max_dim : std::max(m.dim(), kOracleBound);
  Measure mu = m.str ? oracle_measure(*m.str, bound) : oracle_measure(*m.hom, bound);
  if (c.format == "json") {
    Json j = Json::object();
    j["module"] = m.name();
    j["dim"] = m.dim();
    j["measure"] = cli::json_measure(mu);
    j["e"] = cli::json_rational(e_value(mu));
    emit_json(c, j);
  } else {
    std::string out = cli::csv_row({"module", "dim", "measure", "e"});
    out += cli::csv_row({m.name(), std::to_string(m.dim()), format_measure(mu),
                         fixed6(e_value(mu))});
    emit(c, out);
  }
}

void run_classify(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  AnyModule m = need_module(c, q);
  Family f = m.str ? family_of(*m.str) : homogeneous_family(q);
  if (c.format == "json") {
    Json j = Json::object();
    j["module"] = m.name();
    j["dim"] = m.dim();
    j["class"] = to_string(m.cls());
    j["family"] = f.key();
    j["base_dim"] = f.homogeneous ? q.h : f.base_dim;
    emit_json(c, j);
  } else {
    std::string out = cli::csv_row({"module", "dim", "class", "family", "base_dim"});
    out += cli::csv_row({m.name(), std::to_string(m.dim()), to_string(m.cls()), f.key(),
                         std::to_string(f.homogeneous ? q.h : f.base_dim)});
    emit(c, out);
  }
}

Family resolve_family(const Ctx& c, const QuiverSpec& q) {
  if (!c.family_key.empty()) {
    if (c.family_key == "H") return homogeneous_family(q);
    for (const Family& f : all_families(q))
      if (f.key() == c.family_key) return f;
    throw UsageError("unknown family key " + c.family_key);
  }
  AnyModule m = need_module(c, q);
  return m.str ? family_of(*m.str) : homogeneous_family(q);
}

void run_family(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  Family f = resolve_family(c, q);
  IPFDecomposition d = family_ipf(f);
  RhombicLimit rl = rhombic_limit(f);
  std::vector<std::string> members;
  for (int i = 0; i < 6; ++i)
    members.push_back(f.homogeneous ? "H_" + std::to_string((i + 1) * q.h)
                                    : module_name(family_member(f, i)));
  if (c.format == "json") {
    Json j = Json::object();
    j["key"] = f.key();
    j["class"] = to_string(f.cls);
    j["homogeneous"] = f.homogeneous;
    j["base_dim"] = f.homogeneous ? q.h : f.base_dim;
    j["members"] = members;
    j["ipf"] = cli::json_ipf(d);
    j["wf"] = cli::json_measure(family_wf(f));
    j["wf_star"] = cli::json_measure(family_wf_star(f));
    j["limit"] = cli::json_periodic(rl.mu_limit);
    j["colimit"] = cli::json_periodic(rl.mustar_limit);
    j["approach"] = to_string(rl.approach);
    j["e_limit"] = cli::json_rational(e_value(rl.mu_limit));
    j["e_colimit"] = cli::json_rational(e_value(rl.mustar_limit));
    emit_json(c, j);
  } else {
    std::string out = cli::csv_row(
        {"key", "class", "base_dim", "wf", "wf_star", "limit", "colimit", "approach"});
    out += cli::csv_row({f.key(), to_string(f.cls),
                         std::to_string(f.homogeneous ? q.h : f.base_dim),
                         format_measure(family_wf(f)), format_measure(family_wf_star(f)),
                         format_periodic(rl.mu_limit), format_periodic(rl.mustar_limit),
                         to_string(rl.approach)});
    emit(c, out);
  }
}

void run_tube(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  TubeKind kind = need_kind(c, /*allow_homogeneous=*/true);
  if (kind == TubeKind::Homogeneous) {
    int depth = c.depth > 0 ? c.depth : 3;
    if (c.format == "json") {
      Json j = Json::object();
      j["kind"] = to_string(kind);
      j["rank"] = 1;
      j["depth"] = depth;
      j["mu_quasi_simple"] = cli::json_measure(mu_quasi_simple_homogeneous(q));
      Json members = Json::array();
      for (int k = 1; k <= depth; ++k) members.push_back("H_" + std::to_string(k * q.h));
      j["members"] = std::move(members);
      emit_json(c, j);
    } else {
      std::string out = cli::csv_row({"quasi_length", "member", "measure"});
      for (int k = 1; k <= depth; ++k)
        out += cli::csv_row({std::to_string(k), "H_" + std::to_string(k * q.h),
                             format_measure(gr_measure(HomogeneousModule{q, k}))});
      emit(c, out);
    }
    return;
  }
  int rank = build_tube(q, kind, 1).rank;
  int depth = c.depth > 0 ? c.depth : 3 * rank;
  Tube t = build_tube(q, kind, depth);
  if (c.format == "json") {
    Json j = Json::object();
    j["kind"] = to_string(kind);
    j["rank"] = t.rank;
    j["depth"] = depth;
    Json mouth = Json::array();
    for (const auto& m : t.mouth()) mouth.push_back(module_name(m));
    j["mouth"] = std::move(mouth);
    Json fams = Json::array();
    for (const auto& f : tube_families(t)) fams.push_back(f.key());
    j["families"] = std::move(fams);
    Json grid = Json::array();
    for (const auto& row : t.grid) {
      Json r = Json::array();
      for (const auto& m : row) r.push_back(module_name(m));
      grid.push_back(std::move(r));
    }
    j["grid"] = std::move(grid);
    emit_json(c, j);
  } else {
    std::string out;
    std::vector<std::string> head = {"quasi_length"};
    for (int i = 0; i < t.rank; ++i) head.push_back("ray_" + std::to_string(i));
    out += cli::csv_row(head);
    for (size_t jrow = 0; jrow < t.grid.size(); ++jrow) {
      std::vector<std::string> row = {std::to_string(jrow + 1)};
      for (const auto& m : t.grid[jrow]) row.push_back(module_name(m));
      out += cli::csv_row(row);
    }
    emit(c, out);
  }
}

void run_limits(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  DistinguishedLimits dl = distinguished_limits(q);
  if (c.format == "json") {
    Json j = Json::object();
    j["takeoff"] = cli::json_periodic(dl.takeoff);
    j["homogeneous"] = cli::json_periodic(dl.homogeneous);
    j["landing"] = cli::json_periodic(dl.landing);
    j["takeoff_star"] = cli::json_periodic(dl.takeoff_star);
    j["homogeneous_star"] = cli::json_periodic(dl.homogeneous_star);
    j["landing_star"] = cli::json_periodic(dl.landing_star);
    Json pre = Json::array();
    for (const auto& [key, pm] : dl.preinjective_limits) {
      Json e = Json::object();
      e["family"] = key;
      e["limit"] = cli::json_periodic(pm);
      pre.push_back(std::move(e));
    }
    j["preinjective"] = std::move(pre);
    emit_json(c, j);
  } else {
    std::string out = cli::csv_row({"name", "limit", "e"});
    auto row = [&](const std::string& name, const PeriodicMeasure& pm) {
      out += cli::csv_row({name, format_periodic(pm), fixed6(e_value(pm))});
    };
    row("takeoff", dl.takeoff);
    row("homogeneous", dl.homogeneous);
    row("landing", dl.landing);
    row("takeoff_star", dl.takeoff_star);
    row("homogeneous_star", dl.homogeneous_star);
    row("landing_star", dl.landing_star);
    for (const auto& [key, pm] : dl.preinjective_limits) row("preinjective:" + key, pm);
    emit(c, out);
  }
}

void run_rhombic(const Ctx& c) {
  check_format(c, {"json", "csv", "svg", "tikz"});
  QuiverSpec q = need_quiver(c);
  cli::RhombicPicture pic = cli::build_rhombic_picture(q, c.max_dim);
  cli::RenderSpec spec;
  spec.format = c.format;
  if (c.format == "json")
    emit_json(c, cli::json_rhombic(pic));
  else if (c.format == "csv")
    emit(c, cli::csv_rhombic(pic));
  else if (c.format == "svg")
    emit(c, cli::export_rhombic_svg(pic, spec));
  else
    emit(c, cli::export_rhombic_tikz(pic, spec));
}

void run_tiling(const Ctx& c) {
  check_format(c, {"json", "csv", "svg", "tikz"});
  QuiverSpec q = need_quiver(c);
  TubeKind kind = need_kind(c, /*allow_homogeneous=*/false);
  int rank = build_tube(q, kind, 1).rank;
  int depth = c.depth > 0 ? c.depth : 3 * rank;
  Tube t = build_tube(q, kind, depth);
  TilingReport rep = tiling_report(t, depth);
  if (c.format == "json") {
    Json j = Json::object();
    j["kind"] = to_string(kind);
    j["rank"] = t.rank;
    j["depth"] = depth;
    j["tiled"] = to_string(rep.tiled);
    j["gate_passed"] = rep.gate_passed;
    j["wf_order"] = rep.wf_order;
    j["ray_walks"] = rep.ray_walks;
    j["coray_walks"] = rep.coray_walks;
    emit_json(c, j);
  } else if (c.format == "csv") {
    std::string out = cli::csv_row({"record", "sequence"});
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) {
        if (!s.empty()) s += ' ';
        s += x;
      }
      return s;
    };
    out += cli::csv_row({"tiled", to_string(rep.tiled)});
    out += cli::csv_row({"gate_passed", rep.gate_passed ? "true" : "false"});
    out += cli::csv_row({"wf_order", join(rep.wf_order)});
    for (const auto& w : rep.ray_walks) out += cli::csv_row({"ray", join(w)});
    for (const auto& w : rep.coray_walks) out += cli::csv_row({"coray", join(w)});
    emit(c, out);
  } else if (c.format == "svg") {
    emit(c, cli::export_tiling_svg(t, rep, cli::RenderSpec{}));
  } else {
    emit(c, cli::export_tiling_tikz(t, rep, cli::RenderSpec{}));
  }
}

// --- verify suites -------------------------------------------------------------

struct SuiteResult {
  std::string suite;
  int checks = 0;
  int skipped = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

int finish_suite(const Ctx& c, const SuiteResult& r) {
  if (c.format == "csv") {
    std::string out = cli::csv_row({"suite", "checks", "skipped", "failures", "passed"});
    out += cli::csv_row({r.suite, std::to_string(r.checks), std::to_string(r.skipped),
                         std::to_string(r.failures.size()),
                         r.failures.empty() ? "true" : "false"});
    for (const auto& f : r.failures) out += cli::csv_row({"failure", f});
    for (const auto& n : r.notes) out += cli::csv_row({"note", n});
    emit(c, out);
  } else {
    Json j = Json::object();
    j["suite"] = r.suite;
    j["checks"] = r.checks;
    j["skipped"] = r.skipped;
    j["failures"] = r.failures;
    j["notes"] = r.notes;
    j["passed"] = r.failures.empty();
    emit_json(c, j);
  }
  return r.failures.empty() ? 0 : 1;
}

int verify_oracle(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  SuiteResult r{"oracle"};
  int md = c.max_dim > 0 ? c.max_dim : 40;
  OracleTable table(q, md);
  for (int lo = 0; lo < q.h; ++lo)
    for (int d = 1; d <= md; ++d) {
      StringModule m = string_at(q, lo, lo + d - 1);
      ++r.checks;
      Measure g = gr_measure(m), o = oracle_measure(m, table);
      if (g != o)
        r.failures.push_back("oracle mismatch " + module_name(m) + ": gr=" +
                             format_measure(g) + " oracle=" + format_measure(o));
    }
  for (int k = 1; k * q.h <= md; ++k) {
    HomogeneousModule hm{q, k};
    ++r.checks;
    Measure g = gr_measure(hm), o = oracle_measure(hm, md);
    if (g != o)
      r.failures.push_back("oracle mismatch H_" + std::to_string(hm.dim()) + ": gr=" +
                           format_measure(g) + " oracle=" + format_measure(o));
  }
  if (c.seed != 0) {
    std::mt19937 rng(c.seed);
    for (int t = 0; t < 20; ++t) {
      QuiverSpec rq = random_quiver(rng, 2, 7);
      for (int lo = 0; lo < rq.h; ++lo)
        for (int d = 1; d <= md; ++d) {
          StringModule m = string_at(rq, lo, lo + d - 1);
          ComponentClass cls = classify(m);
          if (cls != ComponentClass::Preprojective && !is_regular(cls)) continue;
          ++r.checks;
          if (greedy_measure(m) != oracle_measure(m, md))
            r.failures.push_back("oracle mismatch on " + quiver_word(rq) + " " +
                                 module_name(m));
        }
    }
    r.notes.push_back("random orientations: 20 (seed " + std::to_string(c.seed) + ")");
  }
  return finish_suite(c, r);
}

int verify_components(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  SuiteResult r{"components"};
  int md = c.max_dim > 0 ? c.max_dim : 40;
  HookSystem hooks = hook_system(q);
  HookSystem hooks_op = hook_system(opposite_quiver(q));
  Measure hblock = {q.h};
  auto sign = [](const Measure& fin, const Measure& per) {
    return cmp_periodic(fin, PeriodicMeasure{{}, per});
  };
  auto check_module = [&](const std::string& name, ComponentClass cls, const Measure& mu,
                          const Measure& mustar) {
    IPFDecomposition d, ds;
    try {
      d = ipf_decompose(mu, hooks);
      ds = ipf_decompose(mustar, hooks_op);
    } catch (const NoPeriodicPart&) {
      ++r.skipped;
      return;
    }
    ++r.checks;
    Ord s = sign(d.fin, d.per), ss = sign(ds.fin, ds.per);
    ComponentClass want;
    if (s == Ord::Less && ss == Ord::Greater) {
      want = ComponentClass::Preprojective;
    } else if (s == Ord::Greater && ss == Ord::Less) {
      want = ComponentClass::Preinjective;
    } else if (s == Ord::Less && ss == Ord::Less) {
      want = cls;  // regular: any of the three tube classes
      if (!is_regular(cls) && cls != ComponentClass::HomogeneousRegular) {
        r.failures.push_back("sign pattern says regular but " + name + " is " +
                             to_string(cls));
        return;
      }
    } else {
      r.failures.push_back("impossible sign pattern on " + name);
      return;
    }
    if (want != cls) {
      r.failures.push_back("sign pattern says " + to_string(want) + " but " + name +
                           " is " + to_string(cls));
      return;
    }
    if (d.per != hooks.L && d.per != hooks.R && d.per != hblock) {
      r.failures.push_back("period of " + name + " is not a hook block: " +
                           format_measure(d.per));
      return;
    }
    Measure want_per;
    if (cls == ComponentClass::RegularRightTube)
      want_per = hooks.R;
    else if (cls == ComponentClass::RegularLeftTube)
      want_per = hooks.L;
    else if (cls == ComponentClass::HomogeneousRegular)
      want_per = hblock;
    else
      return;
    if (d.per != want_per)
      r.failures.push_back("period of regular " + name + " is " + format_measure(d.per) +
                           ", expected " + format_measure(want_per));
  };
  for (int lo = 0; lo < q.h; ++lo)
    for (int d = 1; d <= md; ++d) {
      StringModule m = string_at(q, lo, lo + d - 1);
      check_module(module_name(m), classify(m), gr_measure(m), gr_comeasure(m));
    }
  for (int k = 1; k * q.h <= md; ++k) {
    HomogeneousModule hm{q, k};
    check_module("H_" + std::to_string(hm.dim()), ComponentClass::HomogeneousRegular,
                 gr_measure(hm), gr_comeasure(hm));
  }
  return finish_suite(c, r);
}

int verify_parallelogram(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  SuiteResult r{"parallelogram"};
  int depth = c.depth > 0 ? c.depth : 8;
  for (TubeKind kind : {TubeKind::LeftTube, TubeKind::RightTube}) {
    Tube t = build_tube(q, kind, depth + 1);
    for (const ARSequence& s : ar_sequences(t, depth)) {
      ParallelogramReport pr = parallelogram_check(s);
      ++r.checks;
      std::string where = to_string(kind) + " tube, A=" + module_name(s.A);
      if (!pr.parallel_sides)
        r.failures.push_back("sides not parallel at " + where);
      if (s.B2) {
        if (t.rank >= 2 && !pr.nondegenerate_wf)
          r.failures.push_back("degenerate wf rectangle at " + where);
        if (t.rank == 1 && !pr.degenerate)
          r.failures.push_back("rank-1 mesh not degenerate at " + where);
      }
    }
    if (t.rank == 1)
      r.notes.push_back(to_string(kind) +
                        " tube has rank 1; its meshes are degenerate like homogeneous ones");
  }
  Tube h = build_tube(q, TubeKind::Homogeneous, depth);
  for (const ARSequence& s : ar_sequences(h, depth)) {
    ++r.checks;
    if (!parallelogram_check(s).degenerate)
      r.failures.push_back("homogeneous mesh at quasi-length " + std::to_string(s.qlen) +
                           " is not degenerate");
  }
  return finish_suite(c, r);
}

int verify_tiling(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  SuiteResult r{"tiling"};
  for (TubeKind kind : {TubeKind::LeftTube, TubeKind::RightTube}) {
    int rank = build_tube(q, kind, 1).rank;
    int depth = c.depth > 0 ? c.depth : 3 * rank;
    Tube t = build_tube(q, kind, depth);
    TilingReport rep = tiling_report(t, depth);
    ++r.checks;
    if (rep.tiled == TriState::False)
      r.failures.push_back(to_string(kind) + " tube is not tiled by the wf order");
    else if (rep.tiled == TriState::NotApplicable)
      r.notes.push_back(to_string(kind) +
                        " tube: widest-extrema gate not passed, tiling not applicable");
  }
  return finish_suite(c, r);
}

int verify_orderings(const Ctx& c) {
  check_format(c, {"json", "csv"});
  QuiverSpec q = need_quiver(c);
  SuiteResult r{"orderings"};
  int depth = c.depth > 0 ? c.depth : 8;
  for (TubeKind kind : {TubeKind::LeftTube, TubeKind::RightTube}) {
    Tube t = build_tube(q, kind, depth + 1);
    for (int i = 0; i < t.rank; ++i) {
      std::map<std::string, Family> fams;
      for (int j = 0; j < depth && j < static_cast<int>(t.grid.size()); ++j) {
        Family f = family_of(t.grid[j][i]);
        fams.emplace(f.key(), f);
      }
      for (auto it = fams.begin(); it != fams.end(); ++it)
        for (auto jt = std::next(it); jt != fams.end(); ++jt) {
          StairOrd w = wf_cmp(it->second, jt->second);
          StairOrd s;
          try {
            s = staircase_cmp(it->second, jt->second, depth);
          } catch (const LimitMismatch&) {
            ++r.skipped;
            continue;
          }
          ++r.checks;
          bool strict = (w == StairOrd::Less && s == StairOrd::Greater) ||
                        (w == StairOrd::Greater && s == StairOrd::Less);
          if (strict)
            r.failures.push_back("wf_cmp and staircase_cmp strictly disagree on " +
                                 it->first + " vs " + jt->first + ": " + to_string(w) +
                                 " vs " + to_string(s));
        }
    }
  }
  return finish_suite(c, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabriel-Roiter measures and comeasures over acyclic orientations of a cycle"};
  app.require_subcommand(1);

  Ctx ctx;
  int exit_code = 0;

  auto add_common = [&ctx](CLI::App* sub, bool with_module = false, bool with_family = false,
                           bool with_kind = false) {
    sub->add_option("-q,--quiver", ctx.quiver_text,
                    "quiver word with optional labels, e.g. \"><<><,a,b,c,d,e\"");
    if (with_module) {
      sub->add_option("-m,--module", ctx.module_text, "string module as LABEL:DIM, e.g. c:18");
      sub->add_option("--homogeneous", ctx.homogeneous,
                      "homogeneous band module of this quasi-length");
    }
    if (with_family)
      sub->add_option("--family", ctx.family_key, "family key, e.g. ce (H = homogeneous)");
    if (with_kind) sub->add_option("--kind", ctx.kind_text, "tube kind: left, right, homogeneous");
    sub->add_option("--depth", ctx.depth, "rows / members to compute");
    sub->add_option("--max-dim", ctx.max_dim, "dimension bound for sweeps");
    sub->add_option("-f,--format", ctx.format, "output format: json, csv, svg, tikz");
    sub->add_option("-o,--out", ctx.out_path, "write output to this file");
    sub->add_option("--seed", ctx.seed, "seed for randomized sweeps");
  };

  add_common(app.add_subcommand("measure", "Gabriel-Roiter measure of one module"),
             /*module=*/true);
  add_common(app.add_subcommand("comeasure", "Gabriel-Roiter comeasure of one module"),
             /*module=*/true);
  add_common(app.add_subcommand("ipf", "initial/periodic/final decomposition of a measure"),
             /*module=*/true);
  add_common(app.add_subcommand("oracle", "brute-force measure by chain enumeration"),
             /*module=*/true);
  add_common(app.add_subcommand("classify", "component class of a module"), /*module=*/true);
  add_common(app.add_subcommand("family", "dimension family of a module"), /*module=*/true,
             /*family=*/true);
  add_common(app.add_subcommand("tube", "tube layout: mouth, rays, families"),
             /*module=*/false, /*family=*/false, /*kind=*/true);
  add_common(app.add_subcommand("limits", "distinguished limit measures of the picture"));
  add_common(app.add_subcommand("rhombic", "rhombic picture: points, limits, axis ticks"));
  add_common(app.add_subcommand("tiling", "tiling of a tube by family words"),
             /*module=*/false, /*family=*/false, /*kind=*/true);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite (exit 1 on failure)");
  verify->require_subcommand(1);
  add_common(verify->add_subcommand("oracle", "greedy vs brute-force measures"));
  add_common(verify->add_subcommand("components", "sign patterns vs component classes"));
  add_common(verify->add_subcommand("parallelogram", "mesh limit parallelograms in tubes"));
  add_common(verify->add_subcommand("tiling", "tube tilings by the wf order"));
  add_common(verify->add_subcommand("orderings", "staircase vs finite-word comparisons"));

  app.get_subcommand("measure")->callback([&] { run_measure(ctx, false); });
  app.get_subcommand("comeasure")->callback([&] { run_measure(ctx, true); });
  app.get_subcommand("ipf")->callback([&] { run_ipf(ctx); });
  app.get_subcommand("oracle")->callback([&] { run_oracle(ctx); });
  app.get_subcommand("classify")->callback([&] { run_classify(ctx); });
  app.get_subcommand("family")->callback([&] { run_family(ctx); });
  app.get_subcommand("tube")->callback([&] { run_tube(ctx); });
  app.get_subcommand("limits")->callback([&] { run_limits(ctx); });
  app.get_subcommand("rhombic")->callback([&] { run_rhombic(ctx); });
  app.get_subcommand("tiling")->callback([&] { run_tiling(ctx); });
  verify->get_subcommand("oracle")->callback([&] { exit_code = verify_oracle(ctx); });
  verify->get_subcommand("components")->callback([&] { exit_code = verify_components(ctx); });
  verify->get_subcommand("parallelogram")
      ->callback([&] { exit_code = verify_parallelogram(ctx); });
  verify->get_subcommand("tiling")->callback([&] { exit_code = verify_tiling(ctx); });
  verify->get_subcommand("orderings")->callback([&] { exit_code = verify_orderings(ctx); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
