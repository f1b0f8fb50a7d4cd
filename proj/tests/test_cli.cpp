// End-to-end checks of the CLI binary; argv[1] is its path. Runs each
// command through popen with stderr merged in and checks output + exit code.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string command = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << command << "\n";
    std::exit(1);
  }
  std::string output;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

void expect(bool ok, const std::string& what, const RunResult& result) {
  if (ok) return;
  ++g_failures;
  std::cerr << "FAIL: " << what << "\n  exit=" << result.exit_code << "\n  output:\n"
            << result.output << "\n";
}

void expect_exit(const std::string& args, int want) {
  RunResult r = run(args);
  expect(r.exit_code == want, args + " (want exit " + std::to_string(want) + ")", r);
}

void expect_output(const std::string& args, const std::string& want_line) {
  RunResult r = run(args);
  expect(r.exit_code == 0 && r.output == want_line + "\n", args + " (want \"" + want_line + "\")",
         r);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-cli>\n";
    return 1;
  }
  g_cli = argv[1];

  expect_output("group order \"PSL(2,7)\"", "168");
  expect_output("group order A5wr2", "7200");
  expect_output("group solvable S4", "true");
  expect_output("group solvable A5", "false");
  expect_output("group derived-series S4", "24 12 4 1");

  {
    RunResult r = run("group classes A5");
    expect(r.exit_code == 0 && r.output.find("(1 2 4 5 3)") != std::string::npos,
           "group classes A5 lists a 5-cycle representative", r);
  }

  {
    RunResult r = run("radical thompson A5 --json");
    expect(r.exit_code == 0, "radical thompson A5 --json exits 0", r);
    json doc = json::parse(r.output, nullptr, false);
    expect(!doc.is_discarded(), "thompson emits valid JSON", r);
    if (!doc.is_discarded()) {
      expect(doc["verdict"] == "equal", "thompson verdict equal", r);
      expect(doc["radical_order"] == 1, "thompson radical order 1", r);
    }
    // identical invocation, byte-identical output
    RunResult again = run("radical thompson A5 --json");
    expect(again.output == r.output, "thompson JSON is byte-identical across runs", r);
  }

  expect_exit("verify triple A5 \"(2 3)(4 5)\" \"(1 3)(4 5)\" \"(1 2)(4 5)\"", 0);
  expect_exit("verify lemma34 S5 \"(1 2)\"", 0);
  expect_exit("verify onehalf A5", 0);
  expect_exit("verify bgk A5", 0);
  expect_exit("verify pairs A5", 0);

  // precondition and usage failures exit 1 with a single-line diagnostic
  {
    RunResult r = run("verify onehalf S4");
    expect(r.exit_code == 1 && r.output.rfind("error:", 0) == 0, "verify onehalf S4 fails cleanly",
           r);
    expect(r.output.find('\n') == r.output.size() - 1, "diagnostic is a single line", r);
  }
  expect_exit("group order NOPE", 1);
  expect_exit("group nonsense A5", 1);
  expect_exit("nonsense", 1);
  expect_exit("group order", 1);

  // cap violations carry the actual order
  {
    RunResult r = run("radical thompson A5wr2 --cap 100");
    expect(r.exit_code == 1 && r.output.find("7200") != std::string::npos,
           "cap violation names the order", r);
  }

  // @file group specs
  {
    std::string path = "/tmp/solvrad_cli_group.txt";
    FILE* f = fopen(path.c_str(), "w");
    fputs("# inline A4\ndegree 4\n(1 2 3)\n(2 3 4)\n", f);
    fclose(f);
    expect_output("group order @" + path, "12");
    remove(path.c_str());
  }

  // lie subcommands
  expect_output("lie solvable sl2", "false");
  expect_output("lie solvable borel2", "true");
  expect_output("lie solvable gl2 \"1,0,0,0\" \"0,1,0,0\"", "true");
  {
    RunResult r = run("lie radical gl2 --json");
    expect(r.exit_code == 0, "lie radical gl2 --json exits 0", r);
    json doc = json::parse(r.output, nullptr, false);
    expect(!doc.is_discarded() && doc["radical"]["dim"] == 1, "gl2 radical is the scalar line", r);
  }
  {
    std::string path = "/tmp/solvrad_cli_algebra.json";
    FILE* f = fopen(path.c_str(), "w");
    fputs(R"({"dim": 3, "labels": ["x","y","z"], "brackets": [[0, 1, [[2, 1, 1]]]]})", f);
    fclose(f);
    RunResult r = run("lie radical @" + path);
    expect(r.exit_code == 0 && r.output.find("radical dim: 3 of 3") != std::string::npos,
           "lie radical from file", r);
    remove(path.c_str());
  }
  {
    RunResult r = run("lie vword nonabelian2 \"1,0\" \"0,1\" --nmax 4");
    expect(r.exit_code == 0 && r.output.find("first zero at n = 3") != std::string::npos,
           "vword reports the first vanishing index", r);
  }
  expect_exit("lie pairs sl2 \"1,0,0\" \"0,1,0\" \"0,0,1\"", 0);
  expect_exit("lie pairs gl2 \"0,0,0,1\"", 1);  // radical member: input error
  expect_exit("lie radical nosuch", 1);

  // seeded sampled search is byte-deterministic
  {
    RunResult a = run("lie pairs sl2 \"1,0,0\" \"0,1,0\" --seed 7 --json");
    RunResult b = run("lie pairs sl2 \"1,0,0\" \"0,1,0\" --seed 7 --json");
    expect(a.exit_code == 0 && a.output == b.output, "seeded lie pairs is byte-identical", a);
    RunResult c = run("lie pairs sl2 \"1,0,0\" \"0,1,0\" --seed 8 --json");
    expect(c.exit_code == 0, "other seed still verifies", c);
  }

  {
    RunResult r = run("catalog list");
    expect(r.exit_code == 0 && r.output.find("PSL(2,<p>)") != std::string::npos &&
               r.output.find("sl2") != std::string::npos,
           "catalog list shows both families", r);
  }

  if (g_failures) {
    std::cerr << g_failures << " CLI check(s) failed\n";
    return 1;
  }
  std::puts("all CLI checks passed");
  return 0;
}
