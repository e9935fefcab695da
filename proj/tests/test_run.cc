#include "doctest.h"

#include "solab/run.h"
#include "support.h"

using namespace solab;

TEST_CASE("permutation records round-trip")
{
  auto p = cyc("(1 3)(2 5 4)", 6);
  auto j = to_json(p);
  CHECK(j["degree"] == 6);
  CHECK(j["cycles"] == "(1 3)(2 5 4)");
  CHECK(permutation_from_json(j) == p);
  CHECK(to_json(Permutation(4))["cycles"] == "()");
  CHECK_THROWS(permutation_from_json(Json{{"cycles", "(1 2)"}}));
}

TEST_CASE("exact values are written as fractions")
{
  CHECK(to_json(Rational(6, 4)) == "3/2");
  CHECK(to_json(Rational(5)) == "5/1");
  CHECK(to_json(factorial(25)) == "15511210043330985984000000");
}

TEST_CASE("csv quoting")
{
  CsvTable t{{"a", "b"}, {{"(1 2)", "x,y"}, {"say \"hi\"", "2"}}};
  CHECK(t.render() == "a,b\n(1 2),\"x,y\"\n\"say \"\"hi\"\"\",2\n");
}

TEST_CASE("configs round-trip through text")
{
  RunConfig c;
  c.command = "verify facile";
  c.seed = 99;
  c.level = Level::smoke;
  c.output = OutputFormat::csv;
  c.workers = 2;
  c.samples = 1234;
  c.exact_ceiling = 777;
  c.params["n-max"] = "7";
  auto back = parse_config(to_text(c));
  CHECK(back.command == c.command);
  CHECK(back.seed == 99);
  CHECK(back.level == Level::smoke);
  CHECK(back.output == OutputFormat::csv);
  CHECK(back.workers == 2);
  CHECK(back.samples == std::optional<std::uint64_t>(1234));
  CHECK(back.exact_ceiling == std::optional<std::uint64_t>(777));
  CHECK(back.params == c.params);
  CHECK(to_text(back) == to_text(c));
  CHECK_THROWS_AS(parse_config("seed 4"), UsageError);
  CHECK_THROWS_AS(parse_config("seed = -4"), UsageError);
  CHECK_THROWS_AS(parse_config("level = huge"), UsageError);
}

TEST_CASE("run rejects bad commands and parameters")
{
  RunConfig c;
  c.command = "nope";
  CHECK_THROWS_AS(run(c), UsageError);
  c.command = "pins";
  CHECK_THROWS_AS(run(c), UsageError); // --a is required
  c.params["a"] = "(1 2";
  CHECK_THROWS_AS(run(c), UsageError);
  c.params["a"] = "(1 2)";
  c.params["n"] = "five";
  CHECK_THROWS_AS(run(c), UsageError);
  c.params["n"] = "5";
  c.params["colour"] = "red";
  CHECK_THROWS_AS(run(c), UsageError);
}

TEST_CASE("verification commands report failures")
{
  RunConfig c;
  c.command = "verify facile";
  c.params["n-max"] = "6";
  auto out = run(c);
  REQUIRE(out.failures.size() == 1);
  CHECK(out.failures[0].find("n=6 k=3") != std::string::npos);
  CHECK(exit_code(out) == 1);
  auto report = out.report(c);
  CHECK(report["status"] == "fail");
  CHECK(report["provenance"]["version"] == artifact_version);

  c.params["n-max"] = "5";
  auto ok = run(c);
  CHECK(ok.passed());
  CHECK(exit_code(ok) == 0);
}

TEST_CASE("exact reports carry rationals")
{
  RunConfig c;
  c.command = "solubilizer";
  c.params["group"] = "alt5";
  c.params["g"] = "(1 2 3 4 5)";
  auto out = run(c);
  CHECK(out.body["solubilizer"]["ratio"] == "1/6");
  c.output = OutputFormat::csv;
  CHECK(render(out, c) == "group,g,order,size,ratio\nalt5,(1 2 3 4 5),60,10,1/6\n");
}

TEST_CASE("Monte Carlo bodies do not depend on worker count")
{
  RunConfig c;
  c.command = "lambda-rate";
  c.params["n"] = "20";
  c.samples = 5000;
  c.seed = 3;
  c.workers = 1;
  auto one = run(c).body.dump();
  c.workers = 4;
  CHECK(run(c).body.dump() == one);
  c.seed = 4;
  CHECK(run(c).body.dump() != one);
}
