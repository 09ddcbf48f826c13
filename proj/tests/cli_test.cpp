#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tpl/canonical.hpp"
#include "tpl/constructions.hpp"
#include "tpl/enumeration.hpp"
#include "tpl/graph6.hpp"

using namespace tpl;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TPL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tpl_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("construct emits graph6 that round-trips") {
  const Run r = run("construct --family hn --n 11");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 1);
  const Graph g = decode_graph6(ls[0]);
  CHECK(encode_graph6(g) == ls[0]);
  CHECK(is_isomorphic(g, build_hn(11)));
  CHECK(lines(run("construct --family jn --n 9 --all").out).size() == enumerate_jn(9).size());
  CHECK(is_isomorphic(decode_graph6(lines(run("construct --family k4stack --n 9").out).at(0)), build_k4_stack(3)));
}

TEST_CASE("per-vertex C6 counts in H_11 have minimum h1(11)") {
  const fs::path in = scratch("hn11.g6");
  std::ofstream(in) << encode_graph6(build_hn(11)) << '\n';
  const Run r = run("count --pattern c6 --per-vertex < " + in.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("min=14\n") != std::string::npos);
  CHECK(run("count --pattern c6 --input " + in.string()).out == "44\n");
  CHECK(run("paths --triple 0 1 2 --input " + in.string()).out == "42\n");
}

TEST_CASE("verify C5C3 on 5..8 gives four exact rows") {
  const Run r = run("verify --theorem C5C3 --n 5..8 --format csv");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].find(",ExactMatch,") != std::string::npos);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const std::string g6 = ls[i].substr(ls[i].rfind(',') + 1);
    std::istringstream ws(g6);
    for (std::string w; std::getline(ws, w, ';');) CHECK(encode_graph6(decode_graph6(w)) == w);
  }
}

TEST_CASE("a violation exits 2 and persists the counterexample") {
  const fs::path dir = scratch("cx");
  fs::remove_all(dir);
  const Run r = run("verify --theorem T_C4C5 --n 4 --format json --counterexample-dir " + dir.string());
  CHECK(r.code == 2);
  CHECK(fs::exists(dir / "counterexample_T_C4C5_n4.g6"));
  CHECK(r.out.find("\"status\": \"Violation\"") != std::string::npos);
  CHECK(run("verify --theorem C4C5 --n 4 --mode observe").code == 0);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").code == 1);
  CHECK(run("verify --theorem NOPE --n 5").code == 1);
  CHECK(run("verify --theorem C4C3 --n 5..").code == 1);
  CHECK(run("verify --theorem C4C3 --n 30").code == 1);
  CHECK(run("construct --family nope --n 5").code == 1);
  CHECK(run("count --pattern c9 < /dev/null").code == 1);
  CHECK(run("enumerate --n 5 --constraints planar,bogus").code == 1);
  const fs::path bad = scratch("bad.g6");
  std::ofstream(bad) << "~~~~\n";
  CHECK(run("count --pattern c3 --input " + bad.string()).code == 1);
}

TEST_CASE("enumerate output is identical across threads and resumes from a frontier") {
  const std::string args = "enumerate --n 9 --constraints planar,c3free --split-depth 5";
  const Run one = run(args + " --threads 1"), three = run(args + " --threads 3");
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
  CHECK(lines(one.out).size() == 1532);
  CHECK(run(args + " --count").out == "1532\n");

  const EnumSpec spec{9, {Constraint::Planar, Constraint::C3free}};
  const auto units = work_units(spec, 5);
  REQUIRE(units.size() > 2);
  const fs::path out = scratch("resume.g6"), frontier = scratch("resume.frontier");
  {
    std::ofstream o(out), f(frontier);
    for (std::size_t u = 0; u < 2; ++u) {
      enumerate_unit(spec, units[u], [&](const Graph& g) { o << encode_graph6(g) << '\n'; });
      f << u << '\n';
    }
  }
  CHECK(run(args + " --frontier " + frontier.string() + " --out " + out.string()).code == 0);
  CHECK(slurp(out) == one.out);
  CHECK(lines(slurp(frontier)).size() == units.size());
  CHECK(run(args + " --frontier " + frontier.string() + " --out " + out.string()).code == 0);
  CHECK(slurp(out) == one.out);
}

TEST_CASE("conjecture and instance reports") {
  const Run c = run("conjecture --k 2 --n 6..7 --format csv");
  CHECK(c.code == 0);
  CHECK(c.out.find("2,7,odd,5,4,4,match") != std::string::npos);
  const fs::path in = scratch("c5.g6");
  std::ofstream(in) << "Dhc\n";
  const Run i = run("verify --instance --input " + in.string());
  CHECK(i.code == 0);
  CHECK(i.out.find("P5pair pass") != std::string::npos);
}
