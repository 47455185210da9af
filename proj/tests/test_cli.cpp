// End-to-end checks of the installed binary: goldens, exit codes, and
// byte-identical reruns. Paths are injected by the build.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <catch2/catch_amalgamated.hpp>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(URLAT_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(URLAT_DATA) + "/" + name; }

}  // namespace

TEST_CASE("eval applies the matrix rule") {
  RunResult r = run("--format compact eval " + data("op_t.json") + " " + data("x_11.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "{\"dim\":1,\"coords\":[\"4\"]}\n");
  RunResult r2 = run("--format compact eval " + data("op_t.json") + " " + data("x_12.json"));
  CHECK(r2.out == "{\"dim\":1,\"coords\":[\"9\"]}\n");
}

TEST_CASE("lattice subcommand emits operators, values and verdicts") {
  RunResult closed = run("--format compact latop meet " + data("op_t.json") + " " + data("op_s.json"));
  CHECK(closed.code == 0);
  CHECK(closed.out.find("\"entries\"") != std::string::npos);

  RunResult at = run("--format compact latop meet " + data("op_t.json") + " " + data("op_s.json") +
                     " --at " + data("x_11.json") + " --oracle");
  CHECK(at.code == 0);
  CHECK(at.out ==
        "{\"value\":{\"dim\":1,\"coords\":[\"1\"]},\"closed\":{\"dim\":1,\"coords\":[\"1\"]},"
        "\"verdict\":\"agree\"}\n");

  RunResult join = run("--format compact latop join " + data("op_t.json") + " " + data("op_s.json") +
                       " --at " + data("x_11.json") + " --oracle");
  CHECK(join.out.find("\"verdict\":\"agree\"") != std::string::npos);
  CHECK(join.out.find("[\"8\"]") != std::string::npos);

  RunResult self = run("--format compact latop join " + data("op_t.json") + " " + data("op_t.json"));
  RunResult ident = run("--format compact latop abs " + data("op_t.json") + " --at " + data("x_11.json"));
  CHECK(ident.out == "{\"dim\":1,\"coords\":[\"6\"]}\n");
  CHECK(self.code == 0);
}

TEST_CASE("finite subcommands check, certify and refute") {
  RunResult chk = run("--format compact finite check " + data("op_t.json"));
  CHECK(chk.out == "{\"finite\":true}\n");
  RunResult chk2 = run("--format compact finite check " + data("op_unit_tail.json"));
  CHECK(chk2.out == "{\"finite\":false}\n");

  RunResult maj = run("--format compact finite majorant " + data("op_t.json") + " --probe " +
                      data("op_s.json"));
  CHECK(maj.code == 0);
  CHECK(maj.out.find("\"majorant\"") != std::string::npos);
  CHECK(maj.out.find("\"probes\"") != std::string::npos);

  RunResult ref = run("--format compact finite refute " + data("op_unit_tail.json") + " " +
                      data("z_unit.json") + " --c 10/1");
  CHECK(ref.out == "{\"n\":12,\"x\":[\"11\"]}\n");
  RunResult ref1 = run("--format compact finite refute " + data("op_unit_tail.json") + " " +
                       data("z_unit.json") + " --c 1");
  CHECK(ref1.out == "{\"n\":3,\"x\":[\"2\"]}\n");
}

TEST_CASE("extension and projection evaluate the worked tables") {
  std::string base = data("ideal_f120.json") + " " + data("table_f120.json");
  CHECK(run("--format compact extend " + base + " --at " + data("x_125.json")).out ==
        "{\"dim\":1,\"coords\":[\"3\"]}\n");
  CHECK(run("--format compact extend " + base + " --at " + data("x_130.json")).out ==
        "{\"dim\":1,\"coords\":[\"1\"]}\n");
  CHECK(run("--format compact extend " + base + " --at " + data("x_789.json")).out ==
        "{\"dim\":1,\"coords\":[\"0\"]}\n");
  CHECK(run("--format compact project " + data("phi_proj.json") + " " + data("t_proj.json") +
            " --at " + data("x_11.json"))
            .out == "{\"dim\":1,\"coords\":[\"4\"]}\n");
}

TEST_CASE("bridge subcommands build, apply and check kernels") {
  RunResult build = run("--format compact bridge build " + data("kernel.json"));
  CHECK(build.code == 0);
  CHECK(build.out.find("[\"1\",\"6\"]") != std::string::npos);
  RunResult app = run("--format compact bridge apply " + data("kernel.json") + " " + data("f_21.json"));
  CHECK(app.out == "{\"dim\":2,\"coords\":[\"3\",\"1\"]}\n");
  RunResult chk = run("--format compact bridge check " + data("kernel_bad.json"));
  CHECK(chk.out.find("\"zero_ok\":false") != std::string::npos);
  CHECK(run("bridge build " + data("kernel_bad.json")).code == 2);
}

TEST_CASE("exit codes separate the failure families") {
  CHECK(run("eval " + data("op_t.json") + " " + data("x_125.json")).code == 3);
  CHECK(run("latop abs " + data("op_signchange.json")).code == 4);
  CHECK(run("--frag-cap 1 latop meet " + data("op_t.json") + " " + data("op_s.json") + " --at " +
            data("x_11.json") + " --oracle")
            .code == 5);
  CHECK(run("verify nonsense").code == 2);
  CHECK(run("eval /nonexistent.json " + data("x_11.json")).code == 2);
  CHECK(run("latop meet " + data("op_t.json")).code == 2);  // missing operand
}

TEST_CASE("verify reports are byte identical across reruns") {
  std::string args = "verify lattice --seed 7 --cases 5";
  RunResult a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"passed\": true") != std::string::npos);

  RunResult small = run("verify all --seed 0 --cases 2");
  CHECK(small.code == 0);
  RunResult diff = run("verify lattice --seed 8 --cases 5");
  CHECK(diff.out != a.out);
}
