#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exitCode;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(TEST_GGA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("validate exits 0 on valid input and 1 on an invalid one") {
  CHECK(run("validate " + data("ex-c3-id.gga")).exitCode == 0);

  std::string bad = "/tmp/gga-cli-bad.gga";
  std::ofstream(bad) << "gga bad\nvertex v\npoints: 1 2\ngens:\n"
                        "arc a from v to v reverse a\npoints: 1\ngens: (1 9)\nembed: 1->1\n";
  CHECK(run("validate " + bad).exitCode == 1);
}

TEST_CASE("usage errors exit 3") {
  CHECK(run("no-such-command").exitCode == 3);
  CHECK(run("validate").exitCode == 3);
}

TEST_CASE("enumerate prints the group summary from the worked examples") {
  RunResult r = run("enumerate " + data("ex-c3-id.gga") + " --radius 1");
  CHECK(r.exitCode == 0);
  CHECK(r.out.rfind("order 6, abelian, orders {1:1,2:1,3:2,6:2}", 0) == 0);

  RunResult small = run("enumerate " + data("ex-small.gga") + " --radius 1");
  CHECK(small.out.rfind("order 12, non-abelian, orders {1:1,2:1,3:2,4:6,6:2}", 0) == 0);
}

TEST_CASE("every command is byte-deterministic") {
  for (const std::string& args :
       {"augment " + data("bm-s3.bm"), "enumerate " + data("ex-parity.gga") + " --radius 2",
        "tree " + data("bm-c3.bm") + " --radius 2", "scaffold " + data("ex-small.gga"),
        "analyze subdeg " + data("ex-small.gga"),
        "analyze ipk " + data("ex-constlocal-s3.gga") + " --radius 3"}) {
    RunResult first = run(args);
    RunResult second = run(args);
    INFO(args);
    CHECK(first.exitCode == second.exitCode);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
  }
}

TEST_CASE("analyze verdict exit codes") {
  CHECK(run("analyze parity " + data("ex-parity.gga") + " --radius 2").exitCode == 0);
  CHECK(run("analyze p " + data("bm-c3.bm") + " --radius 2").exitCode == 0);
  CHECK(run("analyze p " + data("ex-constlocal-s3.gga") + " --radius 2").exitCode == 1);
  CHECK(run("analyze constant-local " + data("bm-s3.bm") + " --radius 2").exitCode == 1);
}

TEST_CASE("parity analysis prints the greppable verdict line") {
  RunResult r = run("analyze parity " + data("ex-parity.gga") + " --radius 2");
  CHECK(r.out.find("[PARITY] PASS") != std::string::npos);
}

TEST_CASE("transforms write parseable files") {
  std::string out = "/tmp/gga-cli-reduced.gga";
  CHECK(run("reduce " + data("ex-small.gga") + " -o " + out).exitCode == 0);
  CHECK(run("validate " + out).exitCode == 0);

  std::string sub = "/tmp/gga-cli-subdivided.gga";
  CHECK(run("subdivide " + data("ex-c3-swap.gga") + " -o " + sub).exitCode == 0);
  CHECK(run("validate " + sub).exitCode == 0);

  std::string conv = "/tmp/gga-cli-converted.gga";
  CHECK(run("convert --from bm " + data("bm-c3.bm") + " -o " + conv).exitCode == 0);
  CHECK(run("validate " + conv).exitCode == 0);
}

TEST_CASE("scaffold emits a text form accepted by check-scaffolding") {
  std::string scaf = "/tmp/gga-cli-scaffold.scaf";
  CHECK(run("scaffold " + data("ex-c3-swap.gga") + " --radius 1 --out " + scaf).exitCode == 0);
  RunResult check = run("check-scaffolding " + data("ex-c3-swap.gga") + " " + scaf);
  CHECK(check.exitCode == 0);
  CHECK(check.out.find("scaffolding valid") != std::string::npos);
}

TEST_CASE("render writes DOT files") {
  for (const std::string what : {"base", "augmented", "tree", "scaffold", "tplus"}) {
    std::string out = "/tmp/gga-cli-render-" + what + ".dot";
    RunResult r = run("render " + data("ex-small.gga") + " --what " + what + " --dot " + out);
    CHECK(r.exitCode == 0);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("{") != std::string::npos);
  }
}

TEST_CASE("quotient verdict") {
  CHECK(run("quotient " + data("ex-c3-id.gga") + " --radius 1").exitCode == 0);
  CHECK(run("quotient " + data("bm-c3.bm") + " --radius 2").exitCode == 0);
}
