#include <doctest.h>

#include "aetilde/grcompute.hpp"
#include "aetilde/quiver.hpp"
#include "aetilde/strings.hpp"

using namespace aet;

namespace {
const QuiverSpec kQ1 = parse_quiver("><<><,a,b,c,d,e");
const QuiverSpec kQ2 = parse_quiver(">>><,a,d,c,b");
}  // namespace

TEST_CASE("make_string and naming, unreflected quiver") {
  StringModule ce18 = make_string(kQ1, "c", 18);
  CHECK(ce18.lo == 2);
  CHECK(ce18.hi == 19);
  CHECK(ce18.dim() == 18);
  CHECK(module_name(ce18) == "ce_18");
  CHECK(string_type(ce18) == std::pair<std::string, std::string>{"c", "e"});

  // string_at canonicalizes the interval modulo shifts by h
  CHECK(string_at(kQ1, 7, 24) == ce18);
  CHECK(string_at(kQ1, -3, 14) == ce18);

  CHECK(module_name(make_string(kQ1, "b", 1)) == "bb_1");
  CHECK(module_name(make_string(kQ1, "b", 5)) == "ba_5");
  CHECK_THROWS_AS(make_string(kQ1, "zz", 3), UnknownLabel);
  CHECK_THROWS_AS(make_string(kQ1, "c", 0), NonpositiveDim);
}

TEST_CASE("make_string and naming, reflected quiver") {
  // example 2 is reflected: the named left endpoint sits at the high end
  StringModule cc1 = make_string(kQ2, "c", 1);
  CHECK(cc1.dim() == 1);
  CHECK(module_name(cc1) == "cc_1");

  StringModule cb4 = make_string(kQ2, "c", 4);
  CHECK(cb4.dim() == 4);
  CHECK(module_name(cb4) == "cb_4");

  StringModule dd1 = make_string(kQ2, "d", 1);
  CHECK(module_name(dd1) == "dd_1");
}

TEST_CASE("classification of known modules") {
  CHECK(classify(make_string(kQ1, "b", 1)) == ComponentClass::Preprojective);
  CHECK(classify(make_string(kQ1, "b", 16)) == ComponentClass::Preprojective);
  CHECK(classify(make_string(kQ1, "a", 6)) == ComponentClass::Preinjective);
  CHECK(classify(make_string(kQ1, "c", 18)) == ComponentClass::RegularRightTube);
  CHECK(classify(make_string(kQ1, "a", 2)) == ComponentClass::RegularRightTube);
  CHECK(classify(make_string(kQ1, "b", 5)) == ComponentClass::RegularLeftTube);
  CHECK(classify(make_string(kQ1, "e", 2)) == ComponentClass::RegularLeftTube);
  CHECK(classify(make_string(kQ2, "c", 1)) == ComponentClass::RegularRightTube);
  CHECK(classify(make_string(kQ2, "b", 4)) == ComponentClass::RegularLeftTube);
  CHECK(is_regular(ComponentClass::RegularLeftTube));
  CHECK_FALSE(is_regular(ComponentClass::HomogeneousRegular));
  CHECK_FALSE(is_regular(ComponentClass::Preprojective));
}

TEST_CASE("dual_string swaps measure and comeasure") {
  for (auto [label, dim] : {std::pair<const char*, int>{"c", 18}, {"b", 11}, {"a", 6}}) {
    StringModule m = make_string(kQ1, label, dim);
    StringModule d = dual_string(m);
    CHECK(d.quiver == opposite_quiver(kQ1));
    CHECK(d.dim() == m.dim());
    CHECK(gr_measure(d) == gr_comeasure(m));
    CHECK(gr_comeasure(d) == gr_measure(m));
    CHECK(dual_string(d) == m);
  }
  // duality exchanges preprojective and preinjective
  CHECK(classify(dual_string(make_string(kQ1, "b", 1))) == ComponentClass::Preinjective);
  CHECK(classify(dual_string(make_string(kQ1, "a", 6))) == ComponentClass::Preprojective);
  CHECK(is_regular(classify(dual_string(make_string(kQ1, "c", 18)))));
}

TEST_CASE("hooks and cohooks change the dimension by the hook length") {
  StringModule cc1 = make_string(kQ2, "c", 1);
  bool any = false;
  for (Side s : {Side::Left, Side::Right}) {
    if (!can_add_hook(cc1, s)) continue;
    any = true;
    StringModule bigger = add_hook(cc1, s);
    CHECK(bigger.dim() > cc1.dim());
  }
  CHECK(any);

  StringModule bb1 = make_string(kQ1, "b", 1);
  for (Side s : {Side::Left, Side::Right}) {
    if (can_delete_cohook(bb1, s)) continue;
    CHECK_THROWS_AS(delete_cohook(bb1, s), Error);
  }
}

TEST_CASE("submodule subintervals") {
  StringModule m = make_string(kQ1, "c", 4);
  auto subs = submodule_subintervals(m);
  CHECK(subs.size() == 5);
  for (const StringModule& s : subs) {
    CHECK(s.lo >= m.lo);
    CHECK(s.hi <= m.hi);
    CHECK(s.dim() >= 1);
  }
  // the whole interval is always a submodule of itself
  bool has_self = false;
  for (const StringModule& s : subs) has_self |= (s == m);
  CHECK(has_self);
}
