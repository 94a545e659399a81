// End-to-end tests of the aetilde executable: every verb, the three exit
// codes, and byte-determinism of the rendered outputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

namespace {

using Json = nlohmann::json;

constexpr const char* kQ1 = "\"><<><,a,b,c,d,e\"";
constexpr const char* kQ2 = "\">>><,a,d,c,b\"";

struct RunResult {
  int code = -1;
  std::string out;
};

std::string temp_file(const char* tag) {
  static int counter = 0;
  return (std::filesystem::temp_directory_path() /
          ("aetilde_cli_" + std::to_string(::getpid()) + "_" + tag + "_" +
           std::to_string(counter++)))
      .string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const std::string path = temp_file("out");
  const std::string cmd =
      std::string("\"") + AETILDE_CLI_PATH + "\" " + args + " >" + path + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(path);
  std::remove(path.c_str());
  return r;
}

Json run_json(const std::string& args, int expect_code = 0) {
  RunResult r = run_cli(args);
  CHECK(r.code == expect_code);
  return Json::parse(r.out);
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("measure, comeasure, ipf and oracle of the running example") {
  Json m = run_json(std::string("measure -q ") + kQ1 + " -m c:18");
  CHECK(m["module"] == "ce_18");
  CHECK(m["class"] == "RegularRightTube");
  CHECK(m["dim"] == 18);
  CHECK(m["measure"] == Json::array({1, 1, 2, 2, 1, 2, 2, 1, 2, 2, 2}));
  CHECK(m["e"]["num"] == "219861");
  CHECK(m["e"]["den"] == "262144");

  Json c = run_json(std::string("comeasure -q ") + kQ1 + " -m c:18");
  CHECK(c["comeasure"] == Json::array({1, 1, 1, 2, 2, 1, 2, 2, 1, 2, 2, 1}));

  Json d = run_json(std::string("ipf -q ") + kQ1 + " -m c:18");
  CHECK(d.size() == 4);
  CHECK(d["init"] == Json::array({1, 1}));
  CHECK(d["period"] == Json::array({2, 2, 1}));
  CHECK(d["mult"] == 2);
  CHECK(d["fin"] == Json::array({2, 2, 2}));

  Json o = run_json(std::string("oracle -q ") + kQ1 + " -m c:18 --max-dim 18");
  CHECK(o["measure"] == m["measure"]);
}

TEST_CASE("homogeneous modules on the command line") {
  Json m = run_json(std::string("measure -q ") + kQ1 + " --homogeneous 2");
  CHECK(m["module"] == "H_10");
  CHECK(m["class"] == "HomogeneousRegular");
  CHECK(m["measure"] == Json::array({1, 1, 2, 1, 5}));

  Json t = run_json(std::string("tube -q ") + kQ1 + " --kind homogeneous --depth 4");
  CHECK(t["mu_quasi_simple"] == Json::array({1, 1, 2, 1}));
  CHECK(t["members"] == Json::array({"H_5", "H_10", "H_15", "H_20"}));
}

TEST_CASE("classify and family") {
  Json cl = run_json(std::string("classify -q ") + kQ1 + " -m d:4");
  CHECK(cl["class"] == "RegularRightTube");
  CHECK(cl["family"] == "db");
  CHECK(cl["base_dim"] == 4);

  Json f = run_json(std::string("family -q ") + kQ1 + " --family ce");
  CHECK(f["key"] == "ce");
  CHECK(f["wf"] == Json::array({1, 1, 2, 2, 2}));
  CHECK(f["wf_star"] == Json::array({1, 1, 1}));
  CHECK(f["limit"]["prefix"] == Json::array({1, 1}));
  CHECK(f["limit"]["period"] == Json::array({2, 2, 1}));
  CHECK(f["colimit"]["prefix"] == Json::array({1, 1, 1}));
  CHECK(f["approach"] == "from-below");
  CHECK(f["members"][3] == "ce_18");
}

TEST_CASE("limits, tube and tiling reports") {
  Json l = run_json(std::string("limits -q ") + kQ1);
  CHECK(l["takeoff"]["prefix"] == Json::array({1, 1}));
  CHECK(l["takeoff"]["period"] == Json::array({2, 2, 1}));
  CHECK(l["homogeneous"]["prefix"] == Json::array({1, 1, 2, 1}));
  CHECK(l["landing"]["prefix"] == Json::array({1, 1, 1}));
  CHECK(l["preinjective"].size() == 6);
  CHECK(l["preinjective"][0]["family"] == "ca");

  Json t = run_json(std::string("tube -q ") + kQ1 + " --kind right");
  CHECK(t["rank"] == 3);
  CHECK(t["mouth"] == Json::array({"ab_2", "cc_1", "de_2"}));
  CHECK(t["families"] ==
        Json::array({"ab", "cc", "de", "ac", "ce", "db", "ae", "cb", "dc"}));
  CHECK(t["grid"].size() == 9);  // default depth = 3 * rank

  Json tl = run_json(std::string("tiling -q ") + kQ2 + " --kind right");
  CHECK(tl["tiled"] == "true");
  CHECK(tl["gate_passed"] == true);
  CHECK(tl["wf_order"] ==
        Json::array({"cd", "dd", "cb", "db", "cc", "dc", "ad", "ab", "ac"}));
}

TEST_CASE("verification suites pass on both examples") {
  Json vo = run_json(std::string("verify oracle -q ") + kQ1);
  CHECK(vo["suite"] == "oracle");
  CHECK(vo["passed"] == true);
  CHECK(vo["checks"] == 208);
  CHECK(vo["failures"].empty());

  Json vc = run_json(std::string("verify components -q ") + kQ1);
  CHECK(vc["passed"] == true);
  CHECK(vc["checks"] == 160);
  CHECK(vc["skipped"] == 48);

  Json vp = run_json(std::string("verify parallelogram -q ") + kQ2);
  CHECK(vp["passed"] == true);
  CHECK(vp["checks"] == 35);
  CHECK(vp["notes"].size() == 1);  // the rank-1 left tube

  Json vt = run_json(std::string("verify tiling -q ") + kQ1);
  CHECK(vt["passed"] == true);
  CHECK(vt["checks"] == 2);

  Json vr = run_json(std::string("verify orderings -q ") + kQ1);
  CHECK(vr["passed"] == true);
  CHECK(vr["checks"] == 11);
}

TEST_CASE("usage and domain errors exit with code 2") {
  CHECK(run_cli("measure -q \">>>>\" -m a:3").code == 2);     // oriented cycle
  CHECK(run_cli(std::string("measure -q ") + kQ1).code == 2); // module missing
  CHECK(run_cli("measure --badflag").code == 2);              // unknown flag
  CHECK(run_cli(std::string("measure -q ") + kQ1 + " -m c:18 -f yaml").code == 2);
  CHECK(run_cli(std::string("tube -q ") + kQ1 + " --kind upside").code == 2);
  CHECK(run_cli(std::string("measure -q ") + kQ1 + " -m c:0").code == 2);
  CHECK(run_cli(std::string("measure -q ") + kQ1 + " -m zz:3").code == 2);
  CHECK(run_cli(std::string("ipf -q ") + kQ1 + " -m b:1").code == 2);  // no periodic part
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("svg output is deterministic and structured") {
  const std::string args = std::string("rhombic -q ") + kQ1 + " -f svg";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("<svg") == 0);
  CHECK(count_occurrences(a.out, "class=\"mu-tick\"") == 6);
  CHECK(count_occurrences(a.out, "class=\"mustar-tick\"") == 6);
  CHECK(a.out.find("class=\"family-limit\"") != std::string::npos);
  CHECK(a.out.find("class=\"approach-arrow\"") != std::string::npos);

  RunResult r2 = run_cli(std::string("rhombic -q ") + kQ2 + " -f svg");
  CHECK(r2.code == 0);
  CHECK(count_occurrences(r2.out, "data-kind=\"right-tube\"") == 4);

  RunResult tiling = run_cli(std::string("tiling -q ") + kQ1 + " --kind right -f svg");
  CHECK(tiling.code == 0);
  CHECK(tiling.out.find("tube-node") != std::string::npos);
}

TEST_CASE("tikz output marks the periodic part") {
  RunResult r = run_cli(std::string("rhombic -q ") + kQ1 + " -f tikz");
  CHECK(r.code == 0);
  CHECK(r.out.find("\\overline{221}") != std::string::npos);
  CHECK(r.out.find("\\begin{tikzpicture}") != std::string::npos);
}

TEST_CASE("csv output") {
  RunResult r = run_cli(std::string("rhombic -q ") + kQ1 + " -f csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("type,name,class,x,y,label\n", 0) == 0);

  RunResult m = run_cli(std::string("measure -q ") + kQ1 + " -m c:18 -f csv");
  CHECK(m.out.rfind("module,class,dim,measure,e\n", 0) == 0);
  CHECK(m.out.find("ce_18") != std::string::npos);
}

TEST_CASE("--out writes exactly what stdout would carry") {
  const std::string path = temp_file("svg");
  RunResult direct = run_cli(std::string("rhombic -q ") + kQ1 + " -f svg");
  RunResult filed = run_cli(std::string("rhombic -q ") + kQ1 + " -f svg -o " + path);
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("json outputs round-trip through a parser") {
  for (const std::string args :
       {std::string("limits -q ") + kQ1, std::string("family -q ") + kQ2 + " --family cc",
        std::string("tube -q ") + kQ2 + " --kind left"}) {
    RunResult r = run_cli(args);
    CHECK(r.code == 0);
    Json parsed = Json::parse(r.out);
    CHECK(Json::parse(parsed.dump(2)) == parsed);
  }
}
