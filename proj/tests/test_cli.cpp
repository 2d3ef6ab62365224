#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the installed binary with stderr silenced; captures stdout.
RunResult run(const std::string& args) {
  std::string cmd = std::string(IRRCERT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check subcommand") {
  auto thm1 = run("check --poly \"x^2+x+4\" --criterion thm1 --p 2 --k 2 --d 1 --j 1");
  CHECK(thm1.exit_code == 0);
  CHECK(contains(thm1.out, "\"outcome\": \"irreducible\""));
  CHECK(contains(thm1.out, "\"theorem\": \"1\""));
  CHECK(contains(thm1.out, "\"tool_version\": \"irrcert 1.0.0\""));

  auto red = run("check --poly \"x^2+3x+2\" --criterion auto");
  CHECK(red.exit_code == 1);
  CHECK(contains(red.out, "\"outcome\": \"reducible\""));
  CHECK(contains(red.out, "x + 1"));
  CHECK(contains(red.out, "x + 2"));

  auto inc = run("check --poly \"x^2+x+1\" --criterion thmA --p 2 --d 1");
  CHECK(inc.exit_code == 2);
  CHECK(contains(inc.out, "\"outcome\": \"inconclusive\""));

  auto missing = run("check --poly \"x^2+x+4\" --criterion thm1 --p 2");
  CHECK(missing.exit_code == 64);

  auto bad_poly = run("check --poly \"x^^2\"");
  CHECK(bad_poly.exit_code == 65);

  // Unit constant term: no criterion applies, and degree 9 is past the
  // oracle cap, so the search must stop at Inconclusive.
  auto deg9 = run("check --poly \"x^9+x+1\" --criterion auto");
  CHECK(deg9.exit_code == 2);
}

TEST_CASE("check output is deterministic") {
  const std::string cmd = "check --poly \"x^2+x+4\" --criterion auto --quiet";
  auto first = run(cmd);
  auto second = run(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(!first.out.empty());
  CHECK(first.out.back() == '\n');
}

TEST_CASE("bound subcommand") {
  auto schur = run("bound --poly \"x^2+x+6\" --d 2 --method schur");
  CHECK(schur.exit_code == 0);
  CHECK(contains(schur.out, "CertifiedOutside"));

  auto dom = run("bound --poly \"x^2+x+6\" --d 2 --method dominance");
  CHECK(dom.exit_code == 2);
  CHECK(contains(dom.out, "Inconclusive"));

  auto inside = run("bound --poly \"x^2+3x+2\" --d 1");
  CHECK(inside.exit_code == 1);
  CHECK(contains(inside.out, "NotAllOutside"));

  auto bad = run("bound --poly \"x+1\" --d 0");
  CHECK(bad.exit_code == 64);
}

TEST_CASE("generate subcommand") {
  auto x = run("generate X --p 2 --k 1 --j 1 --n 2 --quiet");
  CHECK(x.exit_code == 0);
  CHECK(contains(x.out, "\"input\": \"x^2 + x + 4\""));
  CHECK(contains(x.out, "\"outcome\": \"irreducible\""));

  auto y = run("generate Y --p 3 --k 1 --j 1 --n 2 --m 2 --quiet");
  CHECK(y.exit_code == 0);
  CHECK(contains(y.out, "\"input\": \"3x^2 + 2x + 6\""));
  CHECK(contains(y.out, "\"outcome\": \"irreducible\""));

  auto bad = run("generate X --p 2 --k 1 --j 3 --n 2");
  CHECK(bad.exit_code == 64);
}

TEST_CASE("oracle subcommand") {
  auto split = run("oracle --poly \"x^4+4\"");
  CHECK(split.exit_code == 1);
  CHECK(contains(split.out, "x^2 - 2x + 2"));
  CHECK(contains(split.out, "x^2 + 2x + 2"));

  auto irr = run("oracle --poly \"x^2+x+4\"");
  CHECK(irr.exit_code == 0);
  CHECK(contains(irr.out, "irreducible-by-exhaustion"));

  auto over = run("oracle --poly \"x^9+x+3\"");
  CHECK(over.exit_code == 70);
}

TEST_CASE("fuzz subcommand") {
  auto report = run("fuzz --trials 200 --seed 7");
  CHECK(report.exit_code == 0);
  CHECK(contains(report.out, "violated: 0"));

  auto no_seed = run("fuzz --trials 10");
  CHECK(no_seed.exit_code == 64);
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 64);
  CHECK(run("frobnicate").exit_code == 64);
  CHECK(run("check").exit_code == 64);
}
