#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "nlohmann/json.hpp"

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Run {
  int status;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HERMSIG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(HERMSIG_CLI_DATA) + "/" + name; }

std::string write_temp(const std::string& name, const Json& j) {
  const fs::path p = fs::temp_directory_path() / ("hermsig_cli_" + name + ".json");
  std::ofstream(p) << j.dump();
  return p.string();
}

Json load(const std::string& path) {
  std::ifstream in(path);
  return Json::parse(in);
}

}  // namespace

TEST_CASE("signature of the reference form over M2(Q)") {
  const Run r = run("signature --config " + data("m2_phi_signature.json"));
  CHECK(r.status == 0);
  CHECK(r.json() == Json::parse(R"({"signatures":[2]})"));
}

TEST_CASE("nil orderings of the quaternion algebra (-1, sqrt 2)") {
  const Run r = run("nil --config " + data("quat_sqrt2_nil.json"));
  CHECK(r.status == 0);
  const Json j = r.json();
  REQUIRE(j["nil"].size() == 1);
  CHECK(j["orderings"] == 2);
  // the nil ordering is the one at which sqrt 2 is positive: the larger root
  CHECK(j["nil"][0] == 1);
}

TEST_CASE("input errors exit with status 2 and a machine-readable code") {
  const Run bad = run("signature --config " + data("malformed.json"));
  CHECK(bad.status == 2);
  CHECK(bad.json()["error"] == "ParseError");

  const Run nh = run("signature --config " + data("not_hermitian.json"));
  CHECK(nh.status == 2);
  CHECK(nh.json()["error"] == "NotHermitian");

  const Run missing = run("signature");
  CHECK(missing.status == 2);
  CHECK(missing.json()["error"] == "ParseError");

  CHECK(run("--format yaml signature --config " + data("m2_phi_signature.json")).status == 2);
}

TEST_CASE("count-roots") {
  const Run r = run("count-roots --config " + data("count_roots.json"));
  CHECK(r.status == 0);
  CHECK(r.json()["count"] == 1);
}

TEST_CASE("identical jobs give identical bytes") {
  for (const std::string job : {"--seed 5 --bound 30 cones --config " + data("quat_sqrt2_nil.json"),
                                "--seed 5 np --config " + data("np_quat.json"),
                                "--seed 5 --bound 30 extend --config " + data("extend_m2.json"),
                                "--format text --seed 5 --bound 30 cones --config " + data("quat_sqrt2_nil.json")}) {
    const Run a = run(job);
    const Run b = run(job);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("member witnesses re-verify") {
  const Json cfg = load(data("member_m2.json"));
  const Run r = run("member --config " + data("member_m2.json"));
  CHECK(r.status == 0);
  const Json j = r.json();
  REQUIRE(j["member"] == true);
  Json again = cfg;
  again["element"] = j["witness"]["element"];
  const Run back = run("member --config " + write_temp("member_again", again));
  CHECK(back.json()["member"] == true);

  Json neg = cfg;
  neg["orientation"] = -1;
  const Run n = run("member --config " + write_temp("member_neg", neg));
  CHECK(n.status == 0);
  CHECK(n.json()["member"] == false);
  CHECK_FALSE(n.json().contains("witness"));
}

TEST_CASE("Z-witness entries re-verify through member") {
  const Json cfg = load(data("np_quat.json"));
  const Run r = run("np --config " + data("np_quat.json"));
  CHECK(r.status == 0);
  const Json j = r.json();
  CHECK(j["in_NP"] == true);
  REQUIRE(j["witness"].is_object());
  CHECK(j["witness"]["evidence"]["kind"] == "EVIDENCE");
  CHECK(j["witness"]["a_list"].size() == j["witness"]["b_list"].size());
  for (const char* side : {"a_list", "b_list"}) {
    for (const auto& e : j["witness"][side]) {
      Json m{{"algebra", cfg["algebra"]}, {"ordering_index", 0}, {"orientation", 1}, {"element", e}};
      const Run back = run("member --config " + write_temp(std::string("z_") + side, m));
      CHECK(back.json()["member"] == true);
    }
  }

  Json pos = cfg;
  pos["form"] = Json::parse(R"({"diag": [[[["1", "0", "0", "0"]]]]})");
  const Run nz = run("np --config " + write_temp("np_pos", pos));
  CHECK(nz.status == 0);
  CHECK(nz.json()["in_NP"] == false);
  CHECK(nz.json()["signature"] == 1);
}

TEST_CASE("sylvester and extend reports") {
  const Run s = run("sylvester --config " + data("sylvester_m2.json"));
  CHECK(s.status == 0);
  CHECK(s.json()["signature_q"] == 4);
  CHECK(s.json()["evidence"]["kind"] == "EVIDENCE");

  const Run e = run("--bound 40 extend --config " + data("extend_m2.json"));
  CHECK(e.status == 0);
  CHECK(e.json()["ok"] == true);
  CHECK(e.json()["contained"] == 40);
}

TEST_CASE("text format") {
  const Run r = run("--format text signature --config " + data("m2_phi_signature.json"));
  CHECK(r.status == 0);
  CHECK(r.out == "ordering 0: signature 2\n");
}
