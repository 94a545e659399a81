// Serialization of library reports: JSON (stable key order), CSV, and
// deterministic SVG/TikZ pictures.
//
// JSON conventions: measures are arrays of integers; eventually periodic
// measures are {"prefix": [...], "period": [...]}; exact rationals are
// {"num": "...", "den": "..."} with decimal-string values (denominators
// grow past 64 bits); decompositions are {"init", "period", "mult", "fin"}.
//
// Pictures place a module at (x, y) = (e(mu), e(mu*)) and, by default,
// rotate the axes onto the diagonals: X = (x+y)/2, Y = -(y-x)/2.  All
// coordinates stay exact rationals until the final fixed6 rounding at
// emission, which makes the artifacts byte-deterministic.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aetilde/artubes.hpp"
#include "aetilde/grcompute.hpp"
#include "aetilde/measure.hpp"
#include "aetilde/quiver.hpp"
#include "aetilde/rhombic.hpp"
#include "aetilde/strings.hpp"

namespace aet::cli {

using Json = nlohmann::ordered_json;

// --- JSON builders ---------------------------------------------------------

Json json_measure(const Measure& m);
Json json_rational(const Rational& r);
Json json_periodic(const PeriodicMeasure& p);
Json json_ipf(const IPFDecomposition& d);  // exactly init/period/mult/fin
Json json_hooks(const HookSystem& h);
Json json_limit(const RhombicLimit& l);

std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

// --- picture data ----------------------------------------------------------

struct RenderSpec {
  std::string format = "svg";  // "svg" or "tikz"
  Rational scale = 400;        // pixels (or pt) per unit
  bool rotate = true;          // diagonal axes
};

// A module dot at exact coordinates.
struct PlanePoint {
  Rational x, y;
  std::string name;
  ComponentClass cls = ComponentClass::HomogeneousRegular;
};

// A tick on the mu or mu* axis (distinguished limit value).
struct AxisTick {
  Rational value;     // e-value of the limit
  bool starred;       // false: mu axis, true: mu* axis
  std::string label;  // formatted periodic measure
};

// A filled marker at the limit point of one or more families.
struct LimitMarker {
  Rational x, y;
  std::string families;  // "+"-joined sorted family keys
  std::string kind;      // shared component kind, or "mixed"
  std::string label;     // formatted mu limit
  PeriodicMeasure mu, mustar;  // for TikZ overline labels
};

// An arrow from a large family member towards the family's limit point.
struct ApproachArrow {
  Rational x0, y0, x1, y1;
  std::string family;
  ComponentClass cls = ComponentClass::HomogeneousRegular;
};

struct RhombicPicture {
  QuiverSpec quiver;
  std::vector<PlanePoint> points;       // module dots (may be empty)
  std::vector<AxisTick> ticks;          // distinguished limits on both axes
  std::vector<LimitMarker> markers;     // family limit points, deduplicated
  std::vector<ApproachArrow> arrows;    // one per family
};

// Gathers the full picture: distinguished-limit ticks on both axes, one
// deduplicated limit marker per distinct family limit point, one approach
// arrow per family, and module dots for every string module and homogeneous
// band module of dimension <= max_dim (none when max_dim == 0).
RhombicPicture build_rhombic_picture(const QuiverSpec& q, int max_dim);

Json json_rhombic(const RhombicPicture& pic);
std::string csv_rhombic(const RhombicPicture& pic);
std::string export_rhombic_svg(const RhombicPicture& pic, const RenderSpec& spec);
std::string export_rhombic_tikz(const RhombicPicture& pic, const RenderSpec& spec);

// Periodic measure as TikZ math text: prefix digits then \overline{period}.
std::string tikz_periodic(const PeriodicMeasure& p);

// --- tube tiling pictures ---------------------------------------------------

std::string export_tiling_svg(const Tube& t, const TilingReport& rep, const RenderSpec& spec);
std::string export_tiling_tikz(const Tube& t, const TilingReport& rep, const RenderSpec& spec);

}  // namespace aet::cli
