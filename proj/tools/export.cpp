#include "export.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace aet::cli {

// --- JSON builders ---------------------------------------------------------

Json json_measure(const Measure& m) { return Json(m); }

Json json_rational(const Rational& r) {
  Json j = Json::object();
  j["num"] = boost::multiprecision::numerator(r).str();
  j["den"] = boost::multiprecision::denominator(r).str();
  return j;
}

Json json_periodic(const PeriodicMeasure& p) {
  Json j = Json::object();
  j["prefix"] = json_measure(p.prefix);
  j["period"] = json_measure(p.period);
  return j;
}

Json json_ipf(const IPFDecomposition& d) {
  Json j = Json::object();
  j["init"] = json_measure(d.init);
  j["period"] = json_measure(d.per);
  j["mult"] = d.mult;
  j["fin"] = json_measure(d.fin);
  return j;
}

Json json_hooks(const HookSystem& h) {
  Json j = Json::object();
  j["L"] = json_measure(h.L);
  j["R"] = json_measure(h.R);
  j["s"] = h.s;
  j["t"] = h.t;
  j["takeoff"] = h.takeoff == Takeoff::Symmetric ? "symmetric" : "right";
  j["reflected"] = h.reflected;
  return j;
}

Json json_limit(const RhombicLimit& l) {
  Json j = Json::object();
  j["limit"] = json_periodic(l.mu_limit);
  j["colimit"] = json_periodic(l.mustar_limit);
  j["approach"] = to_string(l.approach);
  return j;
}

// --- CSV --------------------------------------------------------------------

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  out += '\n';
  return out;
}

// --- picture data ------------------------------------------------------------

namespace {

std::string kind_of(ComponentClass c) {
  switch (c) {
    case ComponentClass::Preprojective: return "preprojective";
    case ComponentClass::Preinjective: return "preinjective";
    case ComponentClass::RegularLeftTube: return "left-tube";
    case ComponentClass::RegularRightTube: return "right-tube";
    case ComponentClass::HomogeneousRegular: return "homogeneous";
  }
  return "mixed";
}

const char* kind_color(const std::string& kind) {
  if (kind == "preprojective") return "#2b6cb0";
  if (kind == "preinjective") return "#c53030";
  if (kind == "left-tube") return "#6b46c1";
  if (kind == "right-tube") return "#2f855a";
  if (kind == "homogeneous") return "#b7791f";
  return "#4a5568";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

RhombicPicture build_rhombic_picture(const QuiverSpec& q, int max_dim) {
  RhombicPicture pic;
  pic.quiver = q;

  DistinguishedLimits dl = distinguished_limits(q);
  DistinguishedLimits dlo = distinguished_limits(opposite_quiver(q));

  auto add_ticks = [&pic](const std::vector<std::pair<PeriodicMeasure, std::string>>& vals,
                          bool starred) {
    std::map<Rational, std::string> dedup;
    for (const auto& [pm, label] : vals) dedup.emplace(e_value(pm), label);
    for (const auto& [v, label] : dedup) pic.ticks.push_back({v, starred, label});
  };
  std::vector<std::pair<PeriodicMeasure, std::string>> mu_vals = {
      {dl.takeoff, format_periodic(dl.takeoff)},
      {dl.homogeneous, format_periodic(dl.homogeneous)}};
  for (const auto& [key, pm] : dl.preinjective_limits)
    mu_vals.push_back({pm, format_periodic(pm)});
  add_ticks(mu_vals, false);
  std::vector<std::pair<PeriodicMeasure, std::string>> ms_vals = {
      {dl.takeoff_star, format_periodic(dl.takeoff_star)},
      {dl.homogeneous_star, format_periodic(dl.homogeneous_star)}};
  for (const auto& [key, pm] : dlo.preinjective_limits)
    ms_vals.push_back({pm, format_periodic(pm)});
  add_ticks(ms_vals, true);

  std::vector<Family> fams = all_families(q);
  fams.push_back(homogeneous_family(q));
  std::sort(fams.begin(), fams.end(),
            [](const Family& a, const Family& b) { return a.key() < b.key(); });

  struct Group {
    std::vector<std::string> keys;
    RhombicLimit limit;
  };
  // One marker per distinct limit point of each component kind; families of
  // different kinds may share a point, in which case their markers coincide.
  std::map<std::tuple<std::string, Rational, Rational>, Group> groups;
  for (const Family& f : fams) {
    RhombicLimit rl = rhombic_limit(f);
    Rational x = e_value(rl.mu_limit), y = e_value(rl.mustar_limit);
    Group& g = groups[{kind_of(f.cls), x, y}];
    g.keys.push_back(f.key());
    g.limit = rl;

    Rational px, py;
    if (f.homogeneous) {
      HomogeneousModule hm{q, 3};
      px = e_value(gr_measure(hm));
      py = e_value(gr_comeasure(hm));
    } else {
      StringModule rep = family_member(f, family_index_at_least(f, 2 * q.h + 1));
      px = e_value(gr_measure(rep));
      py = e_value(gr_comeasure(rep));
    }
    pic.arrows.push_back({px, py, x, y, f.key(), f.cls});
  }
  for (const auto& [key, g] : groups) {
    LimitMarker m;
    m.kind = std::get<0>(key);
    m.x = std::get<1>(key);
    m.y = std::get<2>(key);
    std::string joined;
    for (const auto& k : g.keys) {
      if (!joined.empty()) joined += '+';
      joined += k;
    }
    m.families = joined;
    m.label = format_periodic(g.limit.mu_limit);
    m.mu = g.limit.mu_limit;
    m.mustar = g.limit.mustar_limit;
    pic.markers.push_back(std::move(m));
  }

  if (max_dim > 0) {
    for (int lo = 0; lo < q.h; ++lo)
      for (int d = 1; d <= max_dim; ++d) {
        StringModule m = string_at(q, lo, lo + d - 1);
        pic.points.push_back({e_value(gr_measure(m)), e_value(gr_comeasure(m)),
                              module_name(m), classify(m)});
      }
    for (int k = 1; k * q.h <= max_dim; ++k) {
      HomogeneousModule hm{q, k};
      pic.points.push_back({e_value(gr_measure(hm)), e_value(gr_comeasure(hm)),
                            "H_" + std::to_string(hm.dim()),
                            ComponentClass::HomogeneousRegular});
    }
    std::sort(pic.points.begin(), pic.points.end(),
              [](const PlanePoint& a, const PlanePoint& b) { return a.name < b.name; });
  }
  return pic;
}

Json json_rhombic(const RhombicPicture& pic) {
  Json j = Json::object();
  j["quiver"] = quiver_word(pic.quiver);
  Json pts = Json::array();
  for (const auto& p : pic.points) {
    Json e = Json::object();
    e["name"] = p.name;
    e["class"] = to_string(p.cls);
    e["x"] = json_rational(p.x);
    e["y"] = json_rational(p.y);
    pts.push_back(std::move(e));
  }
  j["points"] = std::move(pts);
  Json ticks = Json::array();
  for (const auto& t : pic.ticks) {
    Json e = Json::object();
    e["axis"] = t.starred ? "mustar" : "mu";
    e["value"] = json_rational(t.value);
    e["label"] = t.label;
    ticks.push_back(std::move(e));
  }
  j["ticks"] = std::move(ticks);
  Json lims = Json::array();
  for (const auto& m : pic.markers) {
    Json e = Json::object();
    e["families"] = m.families;
    e["kind"] = m.kind;
    e["mu"] = json_periodic(m.mu);
    e["mustar"] = json_periodic(m.mustar);
    e["x"] = json_rational(m.x);
    e["y"] = json_rational(m.y);
    lims.push_back(std::move(e));
  }
  j["limits"] = std::move(lims);
  Json arrows = Json::array();
  for (const auto& a : pic.arrows) {
    Json e = Json::object();
    e["family"] = a.family;
    e["class"] = to_string(a.cls);
    e["from"] = Json::array({json_rational(a.x0), json_rational(a.y0)});
    e["to"] = Json::array({json_rational(a.x1), json_rational(a.y1)});
    arrows.push_back(std::move(e));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

std::string csv_rhombic(const RhombicPicture& pic) {
  std::string out = csv_row({"type", "name", "class", "x", "y", "label"});
  for (const auto& t : pic.ticks)
    out += csv_row({t.starred ? "mustar-tick" : "mu-tick", "", "",
                    t.starred ? "0.000000" : fixed6(t.value),
                    t.starred ? fixed6(t.value) : "0.000000", t.label});
  for (const auto& m : pic.markers)
    out += csv_row({"family-limit", m.families, m.kind, fixed6(m.x), fixed6(m.y), m.label});
  for (const auto& p : pic.points)
    out += csv_row({"module", p.name, to_string(p.cls), fixed6(p.x), fixed6(p.y), ""});
  return out;
}

// --- SVG ----------------------------------------------------------------------

namespace {

struct Placer {
  Rational scale;
  bool rotate;
  Rational margin = 40;

  // math coordinates after the optional diagonal rotation
  std::pair<Rational, Rational> math(const Rational& x, const Rational& y) const {
    if (rotate) return {(x + y) / 2, (x - y) / 2};
    return {x, y};
  }
  // svg pixels (y axis flipped)
  std::pair<std::string, std::string> px(const Rational& x, const Rational& y) const {
    auto [X, Y] = math(x, y);
    Rational cx = margin + X * scale;
    Rational top = rotate ? Rational(scale) / 2 : Rational(scale);
    Rational cy = margin + top - Y * scale;
    return {fixed6(cx), fixed6(cy)};
  }
  std::string width() const { return fixed6(margin * 2 + scale); }
  std::string height() const { return fixed6(margin * 2 + scale); }
};

void svg_line(std::ostringstream& os, const Placer& pl, const Rational& x0, const Rational& y0,
              const Rational& x1, const Rational& y1, const std::string& attrs) {
  auto [a, b] = pl.px(x0, y0);
  auto [c, d] = pl.px(x1, y1);
  os << "<line x1=\"" << a << "\" y1=\"" << b << "\" x2=\"" << c << "\" y2=\"" << d << "\" "
     << attrs << "/>\n";
}

void svg_text(std::ostringstream& os, const std::string& x, const std::string& y,
              const std::string& cls, const std::string& text) {
  os << "<text x=\"" << x << "\" y=\"" << y << "\" class=\"" << cls
     << "\" font-family=\"monospace\" font-size=\"10\">" << xml_escape(text) << "</text>\n";
}

}  // namespace

std::string export_rhombic_svg(const RhombicPicture& pic, const RenderSpec& spec) {
  Placer pl{spec.scale, spec.rotate};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pl.width() << "\" height=\""
     << pl.height() << "\" viewBox=\"0 0 " << pl.width() << " " << pl.height() << "\">\n";
  os << "<defs><marker id=\"arrowhead\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
        "refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";
  os << "<!-- quiver " << xml_escape(quiver_word(pic.quiver)) << " -->\n";

  os << "<g class=\"axes\" stroke=\"#000000\" stroke-width=\"1\">\n";
  svg_line(os, pl, 0, 0, 1, 0, "class=\"axis\" data-axis=\"mu\"");
  svg_line(os, pl, 0, 0, 0, 1, "class=\"axis\" data-axis=\"mustar\"");
  os << "</g>\n";
  {
    auto [x, y] = pl.px(1, 0);
    svg_text(os, x, y, "axis-label", "mu");
    auto [u, v] = pl.px(0, 1);
    svg_text(os, u, v, "axis-label", "mu*");
  }

  os << "<g class=\"modules\">\n";
  for (const auto& p : pic.points) {
    auto [x, y] = pl.px(p.x, p.y);
    os << "<circle class=\"module\" data-name=\"" << xml_escape(p.name) << "\" data-class=\""
       << to_string(p.cls) << "\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"2\" fill=\""
       << kind_color(kind_of(p.cls)) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g class=\"arrows\">\n";
  for (const auto& a : pic.arrows) {
    std::string attrs = "class=\"approach-arrow\" data-family=\"" + xml_escape(a.family) +
                        "\" stroke=\"" + kind_color(kind_of(a.cls)) +
                        "\" stroke-width=\"1\" marker-end=\"url(#arrowhead)\"";
    svg_line(os, pl, a.x0, a.y0, a.x1, a.y1, attrs);
  }
  os << "</g>\n";

  os << "<g class=\"axis-ticks\">\n";
  for (const auto& t : pic.ticks) {
    Rational tx = t.starred ? Rational(0) : t.value;
    Rational ty = t.starred ? t.value : Rational(0);
    auto [x, y] = pl.px(tx, ty);
    os << "<circle class=\"" << (t.starred ? "mustar-tick" : "mu-tick") << "\" cx=\"" << x
       << "\" cy=\"" << y << "\" r=\"3\" fill=\"#000000\"/>\n";
    svg_text(os, x, y, t.starred ? "mustar-tick-label" : "mu-tick-label", t.label);
  }
  os << "</g>\n";

  os << "<g class=\"family-limits\">\n";
  for (const auto& m : pic.markers) {
    auto [x, y] = pl.px(m.x, m.y);
    os << "<circle class=\"family-limit\" data-families=\"" << xml_escape(m.families)
       << "\" data-kind=\"" << m.kind << "\" cx=\"" << x << "\" cy=\"" << y
       << "\" r=\"4\" fill=\"" << kind_color(m.kind) << "\"/>\n";
    svg_text(os, x, y, "family-limit-label", m.label);
  }
  os << "</g>\n";

  os << "</svg>\n";
  return os.str();
}

// --- TikZ ---------------------------------------------------------------------

std::string tikz_periodic(const PeriodicMeasure& p) {
  std::string out;
  if (!p.prefix.empty()) out += format_measure(p.prefix);
  out += "\\overline{" + format_measure(p.period) + "}";
  return out;
}

std::string export_rhombic_tikz(const RhombicPicture& pic, const RenderSpec& spec) {
  Placer pl{spec.scale, spec.rotate};
  auto pt = [&pl](const Rational& x, const Rational& y) {
    auto [X, Y] = pl.math(x, y);
    return "(" + fixed6(X * pl.scale) + "pt," + fixed6(Y * pl.scale) + "pt)";
  };
  std::ostringstream os;
  os << "% quiver " << quiver_word(pic.quiver) << "\n";
  os << "\\definecolor{cpp}{HTML}{2B6CB0}\n\\definecolor{cpi}{HTML}{C53030}\n"
        "\\definecolor{clt}{HTML}{6B46C1}\n\\definecolor{crt}{HTML}{2F855A}\n"
        "\\definecolor{chom}{HTML}{B7791F}\n\\definecolor{cmix}{HTML}{4A5568}\n";
  os << "\\begin{tikzpicture}\n";
  auto color_name = [](const std::string& kind) {
    if (kind == "preprojective") return "cpp";
    if (kind == "preinjective") return "cpi";
    if (kind == "left-tube") return "clt";
    if (kind == "right-tube") return "crt";
    if (kind == "homogeneous") return "chom";
    return "cmix";
  };
  os << "\\draw[->] " << pt(0, 0) << " -- " << pt(1, 0) << " node[right] {$\\mu$};\n";
  os << "\\draw[->] " << pt(0, 0) << " -- " << pt(0, 1) << " node[right] {$\\mu^*$};\n";
  for (const auto& p : pic.points)
    os << "\\fill[" << color_name(kind_of(p.cls)) << "] " << pt(p.x, p.y)
       << " circle[radius=1pt]; % " << p.name << "\n";
  for (const auto& a : pic.arrows)
    os << "\\draw[->," << color_name(kind_of(a.cls)) << "] " << pt(a.x0, a.y0) << " -- "
       << pt(a.x1, a.y1) << "; % " << a.family << "\n";
  for (const auto& t : pic.ticks) {
    Rational tx = t.starred ? Rational(0) : t.value;
    Rational ty = t.starred ? t.value : Rational(0);
    os << "\\filldraw " << pt(tx, ty) << " circle[radius=1.5pt] node["
       << (t.starred ? "below left" : "above right") << "] {$" << t.label << "$};\n";
  }
  for (const auto& m : pic.markers)
    os << "\\filldraw[fill=" << color_name(m.kind) << ",draw=black] " << pt(m.x, m.y)
       << " circle[radius=2pt] node[above] {$" << tikz_periodic(m.mu) << "$}; % " << m.families
       << "\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

// --- tube tilings ----------------------------------------------------------------

namespace {

const char* kPalette[10] = {"#2b6cb0", "#c53030", "#2f855a", "#6b46c1", "#b7791f",
                            "#0987a0", "#b83280", "#718096", "#975a16", "#276749"};

int family_color_index(const TilingReport& rep, const std::string& key) {
  for (size_t i = 0; i < rep.wf_order.size(); ++i)
    if (rep.wf_order[i] == key) return static_cast<int>(i % 10);
  return 9;
}

}  // namespace

std::string export_tiling_svg(const Tube& t, const TilingReport& rep, const RenderSpec&) {
  const int rows = static_cast<int>(t.grid.size());
  const int ux = 100, uy = 60, margin = 40;
  const int width = 2 * margin + (t.rank - 1) * ux + (rows - 1) * ux / 2 + ux;
  const int height = 2 * margin + (rows - 1) * uy;
  auto px = [&](int i, int j) { return margin + i * ux + j * ux / 2; };
  auto py = [&](int j) { return margin + (rows - 1 - j) * uy; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<!-- " << to_string(t.kind) << " tube, rank " << t.rank << ", tiled "
     << to_string(rep.tiled) << " -->\n";
  os << "<g class=\"ray-edges\" stroke=\"#718096\" stroke-width=\"1\">\n";
  for (int j = 0; j + 1 < rows; ++j)
    for (int i = 0; i < t.rank; ++i)
      os << "<line x1=\"" << px(i, j) << "\" y1=\"" << py(j) << "\" x2=\"" << px(i, j + 1)
         << "\" y2=\"" << py(j + 1) << "\"/>\n";
  os << "</g>\n<g class=\"nodes\">\n";
  for (int j = 0; j < rows; ++j)
    for (int i = 0; i < t.rank; ++i) {
      const StringModule& m = t.grid[j][i];
      std::string key = family_of(m).key();
      os << "<circle class=\"tube-node\" data-name=\"" << xml_escape(module_name(m))
         << "\" data-family=\"" << xml_escape(key) << "\" cx=\"" << px(i, j) << "\" cy=\""
         << py(j) << "\" r=\"12\" fill=\"" << kPalette[family_color_index(rep, key)]
         << "\"/>\n";
      svg_text(os, std::to_string(px(i, j) + 14), std::to_string(py(j) + 4), "node-label",
               module_name(m));
    }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string export_tiling_tikz(const Tube& t, const TilingReport& rep, const RenderSpec&) {
  const int rows = static_cast<int>(t.grid.size());
  std::ostringstream os;
  os << "% " << to_string(t.kind) << " tube, rank " << t.rank << ", tiled "
     << to_string(rep.tiled) << "\n";
  os << "\\begin{tikzpicture}[x=1cm,y=0.8cm]\n";
  for (int j = 0; j + 1 < rows; ++j)
    for (int i = 0; i < t.rank; ++i)
      os << "\\draw[gray] (" << i * 2 + j << "," << j << ") -- (" << i * 2 + j + 1 << ","
         << j + 1 << ");\n";
  for (int j = 0; j < rows; ++j)
    for (int i = 0; i < t.rank; ++i) {
      const StringModule& m = t.grid[j][i];
      os << "\\node[draw,circle,inner sep=1pt] at (" << i * 2 + j << "," << j << ") {"
         << module_name(m) << "};\n";
    }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace aet::cli
