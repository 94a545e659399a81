#include <doctest.h>

#include <random>

#include "aetilde/quiver.hpp"

using namespace aet;

namespace {
const QuiverSpec kQ1 = parse_quiver("><<><,a,b,c,d,e");
const QuiverSpec kQ2 = parse_quiver(">>><,a,d,c,b");
}  // namespace

TEST_CASE("parse_quiver") {
  CHECK(kQ1.h == 5);
  CHECK(kQ1.edges == std::vector<Dir>{Dir::Forward, Dir::Backward, Dir::Backward,
                                      Dir::Forward, Dir::Backward});
  CHECK(kQ1.labels == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(quiver_word(kQ1) == "><<><");
  CHECK(quiver_word(kQ2) == ">>><");

  QuiverSpec plain = parse_quiver("><");
  CHECK(plain.labels == std::vector<std::string>{"v0", "v1"});

  CHECK_THROWS_AS(parse_quiver(">>>>"), OrientedCycle);
  CHECK_THROWS_AS(parse_quiver("<<<"), OrientedCycle);
  CHECK_THROWS_AS(parse_quiver("><x"), MalformedWord);
  CHECK_THROWS_AS(parse_quiver(""), MalformedWord);
  CHECK_THROWS_AS(parse_quiver("><,a,a"), DuplicateLabel);
  CHECK_THROWS_AS(parse_quiver("><,a"), LabelCountMismatch);
}

TEST_CASE("cover helpers") {
  CHECK(mod_h(-3, 5) == 2);
  CHECK(mod_h(7, 5) == 2);
  // arrows repeat with period h along the cover
  CHECK(cover_arrow(kQ1, 0) == Dir::Forward);
  CHECK(cover_arrow(kQ1, 5) == Dir::Forward);
  CHECK(cover_arrow(kQ1, -4) == Dir::Backward);
  CHECK(cover_label(kQ1, 7) == "c");
  // sinks of example 1 sit over vertices 1 and 4
  for (long long p = -10; p <= 10; ++p) {
    bool sink = is_cover_sink(kQ1, p);
    CHECK(sink == (mod_h(p, 5) == 1 || mod_h(p, 5) == 4));
    CHECK((is_cover_sink(kQ1, p) || is_cover_source(kQ1, p) ||
           (cover_arrow(kQ1, p - 1) == cover_arrow(kQ1, p))));
  }
  CHECK(vertex_index(kQ1, "c") == 2);
  CHECK_THROWS_AS(vertex_index(kQ1, "zz"), UnknownLabel);
}

TEST_CASE("opposite and mirror are involutions") {
  QuiverSpec op = opposite_quiver(kQ1);
  CHECK(op.h == 5);
  for (int i = 0; i < 5; ++i) CHECK(op.edges[i] == flip(kQ1.edges[i]));
  CHECK(opposite_quiver(op) == kQ1);
  CHECK(mirror_quiver(mirror_quiver(kQ1)) == kQ1);
  CHECK(mirror_quiver(mirror_quiver(kQ2)) == kQ2);
}

TEST_CASE("hook systems of the example quivers") {
  HookSystem h1 = hook_system(kQ1);
  CHECK(h1.L == Measure{3, 2});
  CHECK(h1.R == Measure{2, 2, 1});
  CHECK(h1.s == 2);
  CHECK(h1.t == 3);
  CHECK(h1.takeoff == Takeoff::Right);
  CHECK_FALSE(h1.reflected);

  HookSystem h2 = hook_system(kQ2);
  CHECK(h2.L == Measure{4});
  CHECK(h2.R == Measure{2, 1, 1});
  CHECK(h2.s == 1);
  CHECK(h2.t == 3);
  CHECK(h2.reflected);

  HookSystem hop = hook_system(opposite_quiver(kQ1));
  CHECK(hop.L == Measure{3, 2});
  CHECK(hop.R == Measure{2, 2, 1});
  CHECK(hop.reflected);

  HookSystem sym = hook_system(parse_quiver("><><"));
  CHECK(sym.L == sym.R);
  CHECK(sym.takeoff == Takeoff::Symmetric);
}

TEST_CASE("hook blocks always sum to h and are minimal rotations") {
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    QuiverSpec q = random_quiver(rng, 2, 9);
    HookSystem h = hook_system(q);
    long long sl = 0, sr = 0;
    for (int v : h.L) sl += v;
    for (int v : h.R) sr += v;
    CHECK(sl == q.h);
    CHECK(sr == q.h);
    CHECK(minimal_rotation(h.L).rotated == h.L);
    CHECK(minimal_rotation(h.R).rotated == h.R);
    CHECK(static_cast<int>(h.L.size()) == h.s);
    CHECK(static_cast<int>(h.R.size()) == h.t);
    // normalization: the left block never exceeds the right one in the
    // refinement order (equivalently, L dominates R entrywise-lexicographically)
    CHECK(cmp_measure(h.L, h.R) != Ord::Greater);
  }
}

TEST_CASE("random_quiver is valid and deterministic") {
  std::mt19937 a(5), b(5);
  for (int i = 0; i < 20; ++i) {
    QuiverSpec qa = random_quiver(a, 2, 7);
    QuiverSpec qb = random_quiver(b, 2, 7);
    CHECK(qa == qb);
    CHECK(qa.h >= 2);
    CHECK(qa.h <= 7);
    bool fwd = false, bwd = false;
    for (Dir d : qa.edges) (d == Dir::Forward ? fwd : bwd) = true;
    CHECK(fwd);
    CHECK(bwd);
  }
}

TEST_CASE("widest extrema of the example quivers") {
  WidestExtremaReport w1 = widest_extrema_report(kQ1, 20);
  CHECK(w1.unique_valley);
  CHECK(w1.unique_hill);
  CHECK(w1.valley_sinks == std::vector<int>{1});  // vertex b
  CHECK(w1.hill_sinks == std::vector<int>{3});    // vertex d
  REQUIRE(w1.width_table.size() == 2);
  CHECK(w1.width_table[0].label == "b");
  CHECK(w1.width_table[0].width == 3);
  CHECK(w1.width_table[1].label == "e");
  CHECK(w1.width_table[1].width == 2);
  CHECK_FALSE(w1.width_heuristic);  // widths 3 vs 2: no margin of 2

  WidestExtremaReport w2 = widest_extrema_report(kQ2, 16);
  CHECK(w2.unique_valley);
  CHECK(w2.unique_hill);
  CHECK(w2.valley_sinks == std::vector<int>{3});  // vertex b
  CHECK(w2.hill_sinks == std::vector<int>{0});    // vertex a
  CHECK(w2.width_heuristic);  // single sink

  CHECK_THROWS_AS(widest_extrema_report(kQ1, 14), BoundTooSmall);
}
