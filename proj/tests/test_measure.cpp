#include <doctest.h>

#include <random>

#include "aetilde/measure.hpp"

using namespace aet;

namespace {

Measure random_measure(std::mt19937& rng, int max_len = 10, int max_entry = 6) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> entry(1, max_entry);
  Measure m(len(rng));
  for (int& v : m) v = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("refinement order basics") {
  CHECK(cmp_measure({}, {}) == Ord::Equal);
  CHECK(cmp_measure({}, {1}) == Ord::Less);         // empty is the minimum
  CHECK(cmp_measure({1}, {1, 1}) == Ord::Less);     // proper initial segment
  CHECK(cmp_measure({2}, {1, 5}) == Ord::Less);     // larger first entry is smaller
  CHECK(cmp_measure({1, 3}, {1, 2, 9}) == Ord::Less);
  CHECK(cmp_measure({1, 2, 9}, {1, 3}) == Ord::Greater);
  CHECK(cmp_measure({1, 1, 2}, {1, 1, 2}) == Ord::Equal);
  CHECK(measure_lt({2}, {1}));  // same rule at length one
  CHECK(measure_eq({1, 2}, {1, 2}));
}

TEST_CASE("e_value embeds the order into the rationals") {
  CHECK(e_value(Measure{}) == Rational(0));
  CHECK(e_value(Measure{1, 1}) == Rational(3, 4));
  CHECK(e_value(Measure{2}) == Rational(1, 4));
  CHECK(e_value(Measure{1, 1, 2, 1}) == Rational(27, 32));
}

TEST_CASE("e_value of periodic limits") {
  CHECK(e_value(PeriodicMeasure{{1, 1}, {2, 2, 1}}) == Rational(26, 31));
  // prefix absorption does not change the value
  CHECK(e_value(PeriodicMeasure{{1, 1, 2, 2, 1}, {2, 2, 1}}) == Rational(26, 31));
  CHECK(e_value(PeriodicMeasure{{}, {1}}) == Rational(1));
}

TEST_CASE("cmp_periodic handles unrolled representations") {
  PeriodicMeasure a{{1, 1}, {2, 2, 1}};
  PeriodicMeasure b{{1, 1, 2, 2, 1}, {2, 2, 1}};
  CHECK(cmp_periodic(a, b) == Ord::Equal);
  PeriodicMeasure homog{{1, 1, 2, 1}, {5}};
  PeriodicMeasure landing{{1, 1, 1}, {2, 2, 1}};
  CHECK(cmp_periodic(a, homog) == Ord::Less);
  CHECK(cmp_periodic(homog, landing) == Ord::Less);
  CHECK(cmp_periodic(landing, a) == Ord::Greater);
  // finite vs periodic: a finite word that is a proper prefix is smaller
  CHECK(cmp_periodic(Measure{1, 1, 2}, a) == Ord::Less);
  CHECK(cmp_periodic(a, Measure{1, 1, 2}) == Ord::Greater);
}

TEST_CASE("minimal_rotation") {
  Rotation r = minimal_rotation({2, 1, 2});
  CHECK(r.rotated == Measure{2, 2, 1});
  CHECK(r.shift == 2);
  CHECK(r.primitive);

  Rotation s = minimal_rotation({1, 2, 2});
  CHECK(s.rotated == Measure{2, 2, 1});
  CHECK(s.shift == 1);

  Rotation t = minimal_rotation({2, 1, 2, 1});
  CHECK(t.rotated == Measure{2, 1, 2, 1});
  CHECK(t.shift == 0);
  CHECK_FALSE(t.primitive);

  CHECK_THROWS_AS(minimal_rotation({}), EmptySequence);
}

TEST_CASE("canonical_periodic normalizes phase, power and prefix") {
  PeriodicMeasure c = canonical_periodic({1, 1}, {2, 1, 2});
  CHECK(c.prefix == Measure{1, 1, 2, 1});
  CHECK(c.period == Measure{2, 2, 1});

  PeriodicMeasure d = canonical_periodic({1, 1, 2, 2, 1}, {2, 2, 1});
  CHECK(d.prefix == Measure{1, 1});
  CHECK(d.period == Measure{2, 2, 1});

  PeriodicMeasure e = canonical_periodic({}, {3, 3});
  CHECK(e.period == Measure{3});

  CHECK_THROWS_AS(canonical_periodic({1}, {}), EmptyPeriod);
}

TEST_CASE("canonicalization preserves value and order") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(1, 4), plen(1, 4), xlen(0, 3);
  for (int i = 0; i < 2000; ++i) {
    Measure pre(xlen(rng)), per(plen(rng));
    for (int& v : pre) v = entry(rng);
    for (int& v : per) v = entry(rng);
    PeriodicMeasure raw{pre, per};
    PeriodicMeasure can = canonical_periodic(pre, per);
    CHECK(e_value(raw) == e_value(can));
    CHECK(cmp_periodic(raw, can) == Ord::Equal);
  }
}

TEST_CASE("concat_power") {
  CHECK(concat_power({1, 1, 2, 1}, {5}, 3) == Measure{1, 1, 2, 1, 5, 5, 5});
  CHECK(concat_power({1}, {2, 2}, 0) == Measure{1});
}

TEST_CASE("formatting") {
  CHECK(format_measure({1, 1, 2, 2, 1}) == "11221");
  CHECK(format_measure({}) == "()");
  CHECK(format_measure({10, 2}) == "10,2");
  CHECK(format_periodic({{1, 1}, {2, 2, 1}}) == "11(221)");
  CHECK(format_periodic({{}, {5}}) == "(5)");
  CHECK(fixed6(Rational(26, 31)) == "0.838710");
  CHECK(fixed6(Rational(1, 2)) == "0.500000");
  CHECK(fixed6(Rational(-1, 3)) == "-0.333333");
  CHECK(fixed6(Rational(2)) == "2.000000");
}

TEST_CASE("order is total, antisymmetric, transitive, and e-compatible") {
  std::mt19937 rng(20260814);
  int cases = 0;
  for (int i = 0; i < 12000; ++i) {
    Measure a = random_measure(rng), b = random_measure(rng);
    Ord ab = cmp_measure(a, b), ba = cmp_measure(b, a);
    // totality + antisymmetry
    CHECK((ab == Ord::Equal) == (a == b));
    CHECK((ab == Ord::Less) == (ba == Ord::Greater));
    // agreement with the rational embedding
    Rational ea = e_value(a), eb = e_value(b);
    if (ab == Ord::Less) CHECK(ea < eb);
    if (ab == Ord::Greater) CHECK(ea > eb);
    if (ab == Ord::Equal) CHECK(ea == eb);
    ++cases;
  }
  for (int i = 0; i < 4000; ++i) {
    Measure a = random_measure(rng, 6, 4), b = random_measure(rng, 6, 4),
            c = random_measure(rng, 6, 4);
    if (cmp_measure(a, b) != Ord::Greater && cmp_measure(b, c) != Ord::Greater)
      CHECK(cmp_measure(a, c) != Ord::Greater);
    ++cases;
  }
  CHECK(cases >= 10000);
}
