#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "reebforge/io.hpp"

using namespace testing;
namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = reebforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const char* name) {
  const fs::path dir = fs::temp_directory_path() / "reebforge-cli-tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string put(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

std::string emit(const fs::path& dir, const std::string& name, std::vector<std::string> params = {}) {
  std::vector<std::string> args = {"fixtures", "emit", name, "-o", dir.string()};
  for (auto& p : params) {
    args.push_back("--param");
    args.push_back(p);
  }
  const Result r = run(args);
  REQUIRE(r.code == 0);
  return r.json()["written"][0].get<std::string>();
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv("REEBFORGE_CELL_CAP", value, 1); }
  ~EnvGuard() { ::unsetenv("REEBFORGE_CELL_CAP"); }
};

}  // namespace

TEST_CASE("betti command") {
  const auto dir = scratch("betti");
  const auto sphere = put(dir / "sphere.json", write_complex(tetrahedron_boundary()));
  const Result r = run({"betti", sphere});
  CHECK(r.code == 0);
  CHECK(r.json()["betti"] == Json::array({1, 0, 1}));

  const auto torus = emit(dir, "torus");
  CHECK(run({"betti", torus}).json()["betti"] == Json::array({1, 2, 1}));

  const auto bad = put(dir / "bad.json", "{\"simplices\": [[0, 1]");
  const Result broken = run({"betti", bad});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("line 1") != std::string::npos);

  const auto invalid = put(dir / "invalid.json", R"({"vertex_count": 3, "simplices": [[0, 1, 2]]})");
  CHECK(run({"betti", invalid}).code == 2);
  CHECK(run({"betti", (dir / "missing.json").string()}).code == 2);

  const auto out = dir / "report.json";
  CHECK(run({"betti", sphere, "-o", out.string()}).code == 0);
  std::ifstream in(out);
  CHECK(Json::parse(in)["betti"] == Json::array({1, 0, 1}));
}

TEST_CASE("reeb command") {
  const auto dir = scratch("reeb");
  const auto disk = emit(dir, "disk_collapse", {"n=2"});
  const Result space = run({"reeb", disk});
  CHECK(space.code == 0);
  CHECK(space.json()["betti"] == Json::array({1, 0, 1}));
  const Result detail = run({"reeb", disk, "--space", "--detail"});
  CHECK(detail.json().contains("strata_table"));

  const auto torus = emit(dir, "torus_function");
  const Result dot = run({"reeb", torus, "--graph", "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph") == 0);
  CHECK(run({"reeb", torus, "--graph"}).json()["betti"] == Json::array({1, 1}));
  // the same function as a Reeb space of its level map
  CHECK(run({"reeb", torus, "--space"}).json()["betti"] == Json::array({1, 1}));

  const auto constant =
      put(dir / "constant.json", R"({"complex": )" + write_complex(circle(4)) + R"(, "values": ["2","2","2","2"]})");
  const Result single = run({"reeb", constant, "--graph"});
  CHECK(single.json()["nodes"].size() == 1);

  CHECK(run({"reeb", disk, "--graph"}).code == 2);
  CHECK(run({"reeb", disk, "--graph", "--space"}).code == 2);
  const auto mismatch =
      put(dir / "mismatch.json", R"({"complex": )" + write_complex(circle(4)) + R"(, "values": ["2"]})");
  CHECK(run({"reeb", mismatch}).code == 2);
}

TEST_CASE("verify command") {
  const auto dir = scratch("verify");
  const auto disk = emit(dir, "disk_collapse", {"n=2"});
  const Result descent = run({"verify", disk, "--descent", "2"});
  CHECK(descent.code == 0);
  CHECK(descent.json()["pass"] == true);
  CHECK(descent.json()["checks"]["descent"]["betti_target"] == Json::array({1, 0, 1}));

  const auto torus = emit(dir, "torus_height");
  const Result b1 = run({"verify", torus, "--b1"});
  CHECK(b1.code == 0);
  CHECK(b1.json()["checks"]["b1"]["components"][0]["b1_reeb"] == 1);

  for (const char* name : {"disk_collapse", "torus_height", "identity_circle", "constant_circle", "random_map"}) {
    CAPTURE(name);
    const Result q = run({"verify", emit(dir, name), "--quotient", "--b1"});
    CHECK(q.code == 0);
    CHECK(q.json()["checks"]["quotient"]["holds"] == true);
  }
  CHECK(run({"verify", disk}).code == 2);
  CHECK(run({"verify", disk, "--descent", "1", "--target", "sideways"}).code == 2);
}

TEST_CASE("budget exhaustion has its own exit code") {
  const auto dir = scratch("budget");
  const auto circle_map = emit(dir, "constant_circle", {"n=5"});
  const Result capped = run({"fiber-power", circle_map, "-p", "2", "--method", "nerve", "--cell-cap", "50"});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("cap") != std::string::npos);
  {
    EnvGuard guard("50");
    CHECK(run({"fiber-power", circle_map, "-p", "2", "--method", "nerve"}).code == 3);
    CHECK(run({"verify", circle_map, "--descent", "2", "--method", "nerve"}).code == 3);
    // an explicit flag wins over the environment
    CHECK(run({"fiber-power", circle_map, "-p", "1", "--cell-cap", "100000"}).code == 0);
  }
  {
    EnvGuard guard("lots");
    CHECK(run({"fiber-power", circle_map}).code == 2);
  }
  const Result ok = run({"fiber-power", circle_map, "-p", "1"});
  CHECK(ok.code == 0);
  CHECK(ok.json()["betti"] == Json::array({1, 2, 1}));
}

TEST_CASE("bounds command") {
  auto value = [](std::vector<std::string> args) { return run(args).json()["value"].get<std::string>(); };
  CHECK(value({"bounds", "closed", "--s", "1", "--d", "2", "--k", "1"}) == "28");
  CHECK(value({"bounds", "general", "--s", "1", "--d", "2", "--k", "1"}) == "40");
  CHECK(value({"bounds", "sign-components", "--s", "1", "--d", "1", "--k", "1"}) == "4");
  CHECK(value({"bounds", "reeb", "--s", "2", "--d", "2", "--n", "1", "--m", "1", "--c", "1"}) == "16");
  const Result uni = run({"bounds", "univariate", "--poly", "X^2-1"});
  CHECK(uni.code == 0);
  CHECK(uni.json()["value"] == "5");

  CHECK(run({"bounds", "closed", "--s", "1", "--d", "2"}).code == 2);
  CHECK(run({"bounds", "closed", "--s", "0", "--d", "2", "--k", "1"}).code == 2);
  CHECK(run({"bounds", "closed", "--s", "1", "--d", "2", "--k", "1", "--c", "1"}).code == 2);
  CHECK(run({"bounds", "volume", "--s", "1"}).code == 2);
  CHECK(run({"bounds", "univariate", "--poly", "X^"}).code == 2);

  const auto dir = scratch("bounds");
  const auto disk = emit(dir, "disk_collapse", {"n=2"});
  const Result cmp = run({"bounds", "reeb", "--s", "2", "--d", "2", "--n", "2", "--m", "2", "--c", "1",
                          "--compare", disk});
  CHECK(cmp.code == 0);
  CHECK(cmp.json()["comparison"]["b_reeb"] == 2);
}

TEST_CASE("fixtures command") {
  const Result list = run({"fixtures", "list"});
  CHECK(list.code == 0);
  CHECK(list.json().size() == fixture_catalog().size());
  const auto dir = scratch("fixtures");
  CHECK(run({"fixtures", "emit", "nope", "-o", dir.string()}).code == 2);
  CHECK(run({"fixtures", "emit", "circle", "--param", "n", "-o", dir.string()}).code == 2);
  CHECK(run({"fixtures", "emit", "circle", "--param", "n=x", "-o", dir.string()}).code == 2);
  CHECK(run({"fixtures", "emit", "disk_collapse", "--param", "n=3", "-o", dir.string()}).code == 2);
  CHECK(run({"fixtures"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"betti"}).code == 2);
  CHECK(run({"betti", "--unknown-flag", "x"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical inputs give byte-identical outputs") {
  const auto dir = scratch("determinism");
  const auto f = emit(dir, "random_map", {"seed=7"});
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"reeb", f, "--detail"}, {"verify", f, "--descent", "2", "--b1", "--quotient"},
        {"fiber-power", f, "-p", "2"}}) {
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  auto threaded = std::vector<std::string>{"verify", f, "--descent", "2", "--threads", "4"};
  auto single = std::vector<std::string>{"verify", f, "--descent", "2"};
  CHECK(run(threaded).out == run(single).out);
}
