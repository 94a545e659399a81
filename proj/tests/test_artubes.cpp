#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "aetilde/artubes.hpp"
#include "aetilde/quiver.hpp"
#include "aetilde/strings.hpp"

using namespace aet;

namespace {
const QuiverSpec kQ1 = parse_quiver("><<><,a,b,c,d,e");
const QuiverSpec kQ2 = parse_quiver(">>><,a,d,c,b");

std::vector<std::string> names(const std::vector<StringModule>& mods) {
  std::vector<std::string> out;
  for (const StringModule& m : mods) out.push_back(module_name(m));
  return out;
}

std::vector<std::string> keys(const std::vector<Family>& fams) {
  std::vector<std::string> out;
  for (const Family& f : fams) out.push_back(f.key());
  return out;
}
}  // namespace

TEST_CASE("families group modules with the same endpoint type") {
  StringModule ce18 = make_string(kQ1, "c", 18);
  Family f = family_of(ce18);
  CHECK(f.key() == "ce");
  CHECK(f.base_dim == 3);
  CHECK_FALSE(f.homogeneous);
  CHECK(f.cls == ComponentClass::RegularRightTube);
  CHECK(family_member(f, 0).dim() == 3);
  CHECK(family_member(f, 3) == ce18);
  CHECK(family_index_at_least(f, 16) == 3);
  CHECK(family_index_at_least(f, 18) == 3);
  CHECK(family_index_at_least(f, 19) == 4);

  Family h = homogeneous_family(kQ1);
  CHECK(h.key() == "H");
  CHECK(h.homogeneous);
}

TEST_CASE("all_families enumerates every endpoint type once") {
  std::vector<Family> fams = all_families(kQ1);
  CHECK(fams.size() == 26);  // 5*5 string types + homogeneous
  std::set<std::string> seen;
  for (const Family& f : fams) seen.insert(f.key());
  CHECK(seen.size() == fams.size());
  CHECK(seen.count("H") == 1);
  CHECK(seen.count("ce") == 1);

  CHECK(all_families(kQ2).size() == 17);  // 4*4 + homogeneous
}

TEST_CASE("ray and coray walks") {
  StringModule m = make_string(kQ2, "c", 1);
  std::vector<std::string> ray{module_name(m)};
  for (int i = 0; i < 4; ++i) {
    m = ray_successor(m);
    ray.push_back(module_name(m));
  }
  CHECK(ray == std::vector<std::string>{"cc_1", "cd_2", "cb_4", "cc_5", "cd_6"});

  StringModule c = make_string(kQ2, "c", 5);
  std::vector<std::string> coray{module_name(c)};
  for (int i = 0; i < 3; ++i) {
    c = coray_predecessor(c);
    coray.push_back(module_name(c));
  }
  CHECK(coray == std::vector<std::string>{"cc_5", "dc_4", "ac_3", "cc_1"});

  CHECK_THROWS_AS(ray_successor(make_string(kQ1, "a", 6)), NoMonoStep);
  CHECK_THROWS_AS(coray_predecessor(make_string(kQ2, "c", 1)), NoEpiStep);
  CHECK_THROWS_AS(coray_predecessor(make_string(kQ1, "b", 1)), NoEpiStep);

  CHECK(is_quasi_simple(make_string(kQ2, "c", 1)));
  CHECK_FALSE(is_quasi_simple(make_string(kQ1, "c", 18)));
}

TEST_CASE("exceptional tube layouts") {
  Tube r1 = build_tube(kQ1, TubeKind::RightTube, 3);
  CHECK(r1.rank == 3);
  CHECK(names(r1.mouth()) == std::vector<std::string>{"ab_2", "cc_1", "de_2"});
  CHECK(names(r1.grid[1]) == std::vector<std::string>{"ac_3", "ce_3", "db_4"});
  CHECK(names(r1.grid[2]) == std::vector<std::string>{"ae_5", "cb_5", "dc_5"});
  CHECK(keys(tube_families(r1)) ==
        std::vector<std::string>{"ab", "cc", "de", "ac", "ce", "db", "ae", "cb", "dc"});

  Tube l1 = build_tube(kQ1, TubeKind::LeftTube, 2);
  CHECK(l1.rank == 2);
  CHECK(names(l1.mouth()) == std::vector<std::string>{"bd_3", "ea_2"});
  CHECK(keys(tube_families(l1)) == std::vector<std::string>{"bd", "ea", "ed", "ba"});

  Tube r2 = build_tube(kQ2, TubeKind::RightTube, 3);
  CHECK(r2.rank == 3);
  CHECK(names(r2.mouth()) == std::vector<std::string>{"dd_1", "cc_1", "ab_2"});
  CHECK(keys(tube_families(r2)) ==
        std::vector<std::string>{"dd", "cc", "ab", "db", "cd", "ac", "dc", "cb", "ad"});

  Tube l2 = build_tube(kQ2, TubeKind::LeftTube, 1);
  CHECK(l2.rank == 1);
  CHECK(names(l2.mouth()) == std::vector<std::string>{"ba_4"});

  // every grid entry is regular and rows advance the rays by one step
  for (std::size_t j = 0; j + 1 < r1.grid.size(); ++j) {
    for (std::size_t i = 0; i < r1.grid[j].size(); ++i) {
      CHECK(ray_successor(r1.grid[j][i]) == r1.grid[j + 1][i]);
    }
  }
}

TEST_CASE("almost split sequences in exceptional tubes") {
  Tube r1 = build_tube(kQ1, TubeKind::RightTube, 8);
  std::vector<ARSequence> m1 = ar_sequences(r1, 8);
  CHECK(m1.size() == 21);
  int two_middle = 0;
  for (const ARSequence& s : m1) {
    CHECK_FALSE(s.homogeneous);
    CHECK(ray_successor(s.A) == s.B1);
    CHECK(coray_predecessor(s.B1) == s.C);
    if (s.B2) {
      ++two_middle;
      CHECK(coray_predecessor(s.A) == *s.B2);
      CHECK(s.A.dim() + s.C.dim() == s.B1.dim() + s.B2->dim());
    } else {
      CHECK(is_quasi_simple(s.A));
      CHECK(s.A.dim() + s.C.dim() == s.B1.dim());
    }
  }
  CHECK(two_middle == 18);

  Tube l1 = build_tube(kQ1, TubeKind::LeftTube, 8);
  std::vector<ARSequence> m2 = ar_sequences(l1, 8);
  CHECK(m2.size() == 14);

  Tube l2 = build_tube(kQ2, TubeKind::LeftTube, 8);
  std::vector<ARSequence> m3 = ar_sequences(l2, 8);
  CHECK(m3.size() == 7);
  int one_middle = 0;
  for (const ARSequence& s : m3)
    if (!s.B2) ++one_middle;
  CHECK(one_middle == 1);
}

TEST_CASE("homogeneous tube meshes") {
  Tube h = build_tube(kQ1, TubeKind::Homogeneous, 5);
  CHECK(h.kind == TubeKind::Homogeneous);
  CHECK(h.rank == 1);
  CHECK(h.grid.empty());
  std::vector<ARSequence> meshes = ar_sequences(h, 5);
  CHECK(meshes.size() == 4);
  for (const ARSequence& s : meshes) {
    CHECK(s.homogeneous);
    CHECK(s.quiver == kQ1);
    CHECK(s.qlen >= 1);
  }
}
