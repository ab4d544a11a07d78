#include <filesystem>
#include <fstream>
#include <sstream>

#include "nashres/cli.hpp"
#include "nashres/error.hpp"
#include "nashres/io.hpp"
#include "support.hpp"

using namespace nashres;
using namespace testing;

namespace {

const std::string corpus = NASHRES_CORPUS_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "nashres_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j)
      if (has_float(v)) return true;
  return false;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("arcs") {
    const Arc a = parse_arc(parse_json_text(R"({"precision":"exact","coords":{"x":"t^3","z":"t^2"}})"));
    CHECK(a == make_arc({{"x", "t^3"}, {"z", "t^2"}}));
    const Arc b = parse_arc(parse_json_text(R"({"precision":16, "coords":{"x":"t^3 + t^5", "z":"t^2"}})"));
    CHECK(b.precision() == std::optional<std::size_t>(16));
    CHECK(b.at("x") == S("t^3 + t^5", 16));
    CHECK_THROWS_WITH_AS(parse_arc(parse_json_text(R"({"precision":"exact","coords":{"x":"1 + t","z":"t"}})")),
                         doctest::Contains("arc not through the origin"), ValidationError);
    CHECK_THROWS_AS(parse_arc(parse_json_text(R"({"precision":"exact","coords":{"x":"z t"}})")), ValidationError);
    CHECK_THROWS_AS(parse_arc(parse_json_text(R"({"precision":0,"coords":{"x":"t"}})")), ValidationError);
    CHECK_THROWS_AS(parse_arc(parse_json_text(R"({"precision":4,"coords":{"x":"t"},"extra":1})")), ValidationError);
  }

  TEST_CASE("arc serialization replays") {
    const Arc a = make_arc({{"x", "t^3 + 2/3 t^7"}, {"z", "t^2"}}, 9);
    CHECK(parse_arc(parse_json_text(arc_to_json(a).dump())) == a);
    const Arc e = make_arc({{"x", "t^3"}, {"z", "t^2"}});
    CHECK(arc_to_json(e).dump() == R"({"precision":"exact","coords":{"x":"t^3","z":"t^2"}})");
  }

  TEST_CASE("presentations") {
    const LocalPresentation p =
        parse_presentation(parse_json_text(R"({"d":1,"hypersurfaces":[{"var":"x","b":2,"f":"x^2 + 2x z + z^3"}]})"));
    CHECK(p.hypersurfaces()[0].to_string() == "x^2 - z^2 + z^3");
    const LocalPresentation q = parse_presentation(parse_json_text(R"({"d":2,"hypersurfaces":[{"var":"x","f":"x^2-z1^2*z2"}]})"));
    CHECK(q.hypersurfaces()[0].b == 2);
    CHECK(parse_presentation(presentation_to_json(q)).to_string() == q.to_string());
    CHECK_THROWS_AS(parse_presentation(parse_json_text(R"({"d":1,"hypersurfaces":[]})")), ValidationError);
    CHECK_THROWS_AS(parse_presentation(parse_json_text(R"({"d":1,"hypersurfaces":[{"var":"x"}]})")), ValidationError);
    CHECK_THROWS_AS(parse_presentation(parse_json_text(R"({"d":1,"hyp":[]})")), ValidationError);
    CHECK_THROWS_AS(parse_presentation(parse_json_text(R"({"d":-1,"hypersurfaces":[{"var":"x","f":"x^2"}]})")),
                    ValidationError);
  }

  TEST_CASE("syntax errors are located") {
    try {
      parse_json_text("{\n  \"d\": 1,\n  oops\n}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    try {
      parse_presentation(parse_json_text(R"({"d":1,"hypersurfaces":[{"var":"x","f":"x^^2"}]})"));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 3);
    }
  }

  TEST_CASE("points") {
    CHECK(parse_point("0,0,5") == Point{Q(0), Q(0), Q(5)});
    CHECK(parse_point("1/2, -3") == Point{Q(1, 2), Q(-3)});
    CHECK_THROWS_AS(parse_point("1,x"), ParseError);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("contact on the cusp") {
    const Run r = run({"contact", corpus + "/cusp.json", corpus + "/cusp_arc.json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("r = 3, r_bar = 3/2, rho = 3") != std::string::npos);
  }

  TEST_CASE("nash with trace") {
    const Run r = run({"nash", corpus + "/cusp.json", corpus + "/cusp_arc.json", "--trace", "--json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["command"] == "nash");
    CHECK(j["results"]["rho"] == 3);
    CHECK(j["results"]["per_hypersurface"][0]["multiplicities"] == Json::array({2, 2, 2, 1}));
    CHECK(j["results"]["per_hypersurface"][0]["trace"].size() == 4);
    CHECK(j["checks"][0]["status"] == "pass");
  }

  TEST_CASE("report schema") {
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"elim", corpus + "/umbrella.json", "--json"},
             {"mult", corpus + "/umbrella.json", "--point", "0,0,5", "--json"},
             {"tsch", "--poly", "x^2 + 2x z + z^3", "--json"},
             {"generic-arc", corpus + "/umbrella.json", "--json"},
             {"verify", corpus + "/cusp.json", "--trials", "4", "--json"}}) {
      const Run r = run(cmd);
      REQUIRE(r.code == 0);
      const Json j = Json::parse(r.out);
      for (const char* key : {"command", "inputs", "results", "checks", "seed", "elapsed_ms"}) CHECK(j.contains(key));
      for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("witness"));
        CHECK((c["status"] == "pass" || c["status"] == "fail"));
      }
      CHECK_FALSE(has_float(j));
    }
  }

  TEST_CASE("defaults are echoed") {
    const Json j = Json::parse(run({"generic-arc", corpus + "/cusp.json", "--json"}).out);
    CHECK(j["inputs"]["alpha"] == 1);
    CHECK(j["inputs"]["search_bound"] == 8);
    CHECK(j["inputs"]["precision"] == 64);
    CHECK(j["results"]["contact"]["r_bar"] == "3/2");
  }

  TEST_CASE("verify replays under a fixed seed") {
    const std::vector<std::string> args = {"verify", corpus + "/umbrella.json", "--trials", "8", "--seed", "3", "--json"};
    Json a = Json::parse(run(args).out), b = Json::parse(run(args).out);
    CHECK(a["seed"] == 3);
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a.dump() == b.dump());
    Json c = Json::parse(run({"verify", corpus + "/umbrella.json", "--trials", "8", "--seed", "4", "--json"}).out);
    c.erase("elapsed_ms");
    CHECK(c["results"].dump() != a["results"].dump());
  }

  TEST_CASE("exit codes") {
    CHECK(run({"verify", corpus + "/cusp.json", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"elim", corpus + "/missing.json"}).code == 2);

    const std::string zero = scratch_file("zero.json", R"({"d":1,"hypersurfaces":[{"var":"x","b":2,"f":"x^2"}]})");
    const Run v = run({"verify", zero});
    CHECK(v.code == 2);
    CHECK(v.err.find("arc necessarily inside Max mult") != std::string::npos);

    const std::string bad = scratch_file("bad.json", R"({"d":1,"hypersurfaces":[{"var":"x","f":"x^^2"}]})");
    const Run b = run({"elim", bad});
    CHECK(b.code == 2);
    CHECK(b.err.find("column 3") != std::string::npos);

    const std::string off = scratch_file("off.json", R"({"precision":"exact","coords":{"x":"t^2","z":"t^2"}})");
    CHECK(run({"contact", corpus + "/cusp.json", off}).code == 2);

    const std::string coarse = scratch_file("coarse.json", R"({"precision":3,"coords":{"x":"t^3","z":"t^2"}})");
    const Run c = run({"contact", corpus + "/cusp.json", coarse});
    CHECK(c.code == 3);
    CHECK(c.err.find("insufficient precision") != std::string::npos);

    const std::string imag = scratch_file("imag.json", R"({"d":1,"hypersurfaces":[{"var":"x","f":"x^2 + z^2"}]})");
    const Run e = run({"generic-arc", imag, "--search-bound", "2"});
    CHECK(e.code == 4);
    CHECK(e.err.find("requires algebraic extension") != std::string::npos);
  }

  TEST_CASE("tsch needs an input") {
    CHECK(run({"tsch"}).code == 2);
    CHECK(run({"tsch", "--poly", "x^2 + 3x + z^2"}).code == 2);
    const Run r = run({"tsch", "--poly", "x^3 + 3x^2 z + z^4", "--var", "x"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS no x^2 term") != std::string::npos);
  }

  TEST_CASE("verify passes on the corpus") {
    const Run r = run({"verify", corpus + "/cusp.json", corpus + "/umbrella.json", corpus + "/two_hypersurfaces.json",
                       "--trials", "20", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}
