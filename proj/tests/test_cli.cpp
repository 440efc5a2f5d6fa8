#include "conetoric/cli.hpp"

#include "conetoric/catalog.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace conetoric;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "conetoric-tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("check-good golden lines") {
  RunResult good = run({"check-good", "orthant3"});
  CHECK(good.code == 0);
  CHECK(good.out == "GOOD (6 faces checked)\n");

  RunResult square = run({"check-good", "cone-over-square"});
  CHECK(square.code == 1);
  CHECK(square.out == "NOT GOOD: 4 edge obstructions Z/2\n");

  RunResult pair = run({"check-good", "nongood-rank3"});
  CHECK(pair.code == 1);
  CHECK(pair.out == "NOT GOOD: 1 edge obstruction Z/2\n");
}

TEST_CASE("classify golden lines") {
  RunResult rp3 = run({"classify", "wedge-rp3"});
  CHECK(rp3.code == 0);
  CHECK(rp3.out == "Lens3D q=2 p=1 H2=Z/2\n");

  RunResult degenerate = run({"classify", "s2xs1-degenerate"});
  CHECK(degenerate.code == 1);
  CHECK(degenerate.out == "DEGENERATE WEDGE (not classifiable)\n");

  RunResult bundle = run({"classify", "fullspace3"});
  CHECK(bundle.code == 0);
  CHECK(bundle.out == "FreeBundle base=S^2 classgroup=Z^3\n");
}

TEST_CASE("homology golden line for the degenerate pair") {
  RunResult r = run({"homology", "s2xs1-degenerate"});
  CHECK(r.code == 0);
  CHECK(r.out == "H1=Z H2=Z\n");
}

TEST_CASE("homology accepts wedges described by normals") {
  RunResult r = run({"homology", "orthant2"});
  CHECK(r.code == 0);
  CHECK(r.out == "H1=0 H2=0\n");
  RunResult rp3 = run({"homology", "wedge-rp3"});
  CHECK(rp3.out == "H1=0 H2=Z/2\n");
}

TEST_CASE("construct reports the lens reduction") {
  RunResult r = run({"construct", "wedge-rp3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "N=2\n"
        "W=[[1,1],[0,2]]\n"
        "kernel_basis=[]\n"
        "component_group=Z/2\n"
        "face {0} isotropy=0\n"
        "face {1} isotropy=0\n"
        "free=yes\n");

  RunResult notfree = run({"construct", "nongood-rank3"});
  CHECK(notfree.code == 1);
  CHECK(notfree.out.find("free=no") != std::string::npos);
}

TEST_CASE("equiv subcommand") {
  RunResult self = run({"equiv", "orthant2", "orthant2"});
  CHECK(self.code == 0);
  CHECK(self.out == "EQUIVALENT A=[[1,0],[0,1]]\n");

  RunResult distinct = run({"equiv", "orthant2", "wedge-rp3"});
  CHECK(distinct.code == 1);
  CHECK(distinct.out == "NOT EQUIVALENT\n");
}

TEST_CASE("catalog round-trips through serialize and parse") {
  RunResult list = run({"catalog"});
  CHECK(list.code == 0);
  for (const auto& name : catalog_names()) {
    CHECK(list.out.find(name) != std::string::npos);
    auto doc = catalog_lookup(name);
    REQUIRE(doc.has_value());
    auto parsed = parse_cone_documents(serialize_cone_document(*doc), name);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == *doc);
  }
  RunResult entry = run({"catalog", "wedge-rp3"});
  CHECK(entry.code == 0);
  CHECK(entry.out.find("\"rays\"") != std::string::npos);
  RunResult missing = run({"catalog", "no-such-entry"});
  CHECK(missing.code == 2);
}

TEST_CASE("json format mirrors the records") {
  RunResult r = run({"classify", "wedge-rp3", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["case"] == "Lens3D");
  CHECK(j["q"] == 2);
  CHECK(j["p"] == 1);
  CHECK(j["h2"]["invariant_factors"][0] == 2);
  CHECK(j["h2"]["display"] == "Z/2");

  RunResult g = run({"check-good", "cone-over-square", "--format", "json"});
  CHECK(g.code == 1);
  auto jg = nlohmann::json::parse(g.out);
  CHECK(jg["report"]["is_good"] == false);
  CHECK(jg["report"]["failures"].size() == 4);
}

TEST_CASE("documents load from files, batches keep order, errors anchor lines") {
  auto single = write_temp("wedge.json",
                           "{\"rank\": 2, \"rays\": [[0,1],[2,-1]]}\n");
  RunResult r = run({"classify", single.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "Lens3D q=2 p=1 H2=Z/2\n");

  auto batch = write_temp(
      "batch.json",
      "[{\"name\":\"a\",\"rank\":2,\"normals\":[[1,0],[0,1]]},\n"
      " {\"name\":\"b\",\"rank\":2,\"rays\":[[0,1],[2,-1]]}]\n");
  RunResult rb = run({"classify", batch.string()});
  CHECK(rb.code == 0);
  CHECK(rb.out ==
        "a: Lens3D q=1 p=0 H2=0\n"
        "b: Lens3D q=2 p=1 H2=Z/2\n");

  auto broken = write_temp("broken.json", "{\"rank\": 2,\n  \"normals\": [[1,0]\n}\n");
  RunResult rx = run({"classify", broken.string()});
  CHECK(rx.code == 2);
  CHECK(rx.err.find(":3") != std::string::npos);  // line-anchored

  auto badfield = write_temp(
      "badfield.json", "{\"rank\": 2, \"normals\": [], \"rayz\": []}\n");
  CHECK(run({"classify", badfield.string()}).code == 2);

  auto both = write_temp(
      "both.json", "{\"rank\": 2, \"normals\": [], \"rays\": []}\n");
  CHECK(run({"classify", both.string()}).code == 2);

  auto wind = write_temp(
      "wind.json", "{\"rank\": 2, \"rays\": [[1,0]], \"winding\": 2}\n");
  CHECK(run({"classify", wind.string()}).code == 2);

  auto plane = write_temp(
      "plane.json", "{\"rank\": 2, \"normals\": [], \"winding\": 3}\n");
  RunResult rp = run({"classify", plane.string()});
  CHECK(rp.code == 0);
  CHECK(rp.out == "Free3D n=3\n");

  RunResult rdefault = run({"classify", "fullspace2"});
  CHECK(rdefault.code == 0);
  CHECK(rdefault.out == "Free3D n=1 (winding defaulted)\n");
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* name : {"orthant4", "cone-over-square", "wedge-rp3"}) {
    RunResult a = run({"classify", name, "--format", "json"});
    RunResult b = run({"classify", name, "--format", "json"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("CONETORIC_CATALOG overrides the built-in catalog") {
  auto dir = std::filesystem::temp_directory_path() / "conetoric-catalog";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "custom.json");
    f << "{\"name\":\"custom\",\"rank\":2,\"normals\":[[1,0],[0,1]]}\n";
  }
  setenv("CONETORIC_CATALOG", dir.c_str(), 1);
  auto names = catalog_names();
  unsetenv("CONETORIC_CATALOG");
  CHECK(names == std::vector<std::string>{"custom"});

  setenv("CONETORIC_CATALOG", dir.c_str(), 1);
  RunResult r = run({"check-good", "custom"});
  unsetenv("CONETORIC_CATALOG");
  CHECK(r.code == 0);
  CHECK(r.out == "GOOD (2 faces checked)\n");
}

TEST_CASE("unknown subcommand and unknown input fail with exit 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check-good", "/no/such/file.json"}).code == 2);
  CHECK(run({}).code == 2);
}
