#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tlbasis/cli.hpp"
#include "tlbasis/errors.hpp"
#include "tlbasis/json_io.hpp"
#include "tlbasis/render.hpp"
#include "tlbasis/zinno.hpp"

using namespace tlbasis;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tlbasis");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::string sample_partition = R"({"n":5,"blocks":[[1,6],[2,3,5],[4]]})";

}  // namespace

TEST_CASE("JSON forms") {
  CHECK(json_io::to_json(LaurentPoly::delta()) == json::parse(R"({"-1":"1","1":"1"})"));
  CHECK(json_io::laurent_from_json(json::parse(R"({"-1":"1","1":"1"})")) == LaurentPoly::delta());
  CHECK(json_io::laurent_from_json(json::parse(R"({"2":"-123456789012345678901234567890"})")).coeff(2) ==
        BigInt("-123456789012345678901234567890"));
  CHECK_THROWS_AS(json_io::laurent_from_json(json::parse(R"({"x":"1"})")), FormatError);
  CHECK_THROWS_AS(json_io::laurent_from_json(json::parse(R"({"1":"1.5"})")), FormatError);

  const auto w = json_io::fc_from_json(json::parse(R"({"n":5,"J":[1,2,3],"I":[2,4,5]})"));
  CHECK(json_io::to_json(w) == json::parse(R"({"n":5,"J":[1,2,3],"I":[2,4,5]})"));
  CHECK_THROWS_AS(json_io::fc_from_json(json::parse(R"({"n":3,"J":[2],"I":[1]})")), PreconditionError);
  CHECK_THROWS_AS(json_io::fc_from_json(json::parse(R"({"n":3,"J":[2]})")), FormatError);

  const auto x = json_io::nc_from_json(json::parse(sample_partition));
  CHECK(json_io::to_json(x) == json::parse(sample_partition));
  CHECK_THROWS_AS(json_io::nc_from_json(json::parse(R"({"n":3,"blocks":[[1,3],[2,4]]})")), PreconditionError);

  const auto p = json_io::permutation_from_json(json::parse(R"({"n":5,"window":[6,3,5,4,2,1]})"));
  CHECK(json_io::to_json(p) == json::parse(R"({"n":5,"window":[6,3,5,4,2,1]})"));
  CHECK_THROWS_AS(json_io::permutation_from_json(json::parse(R"({"n":2,"window":[1,1,2]})")), PreconditionError);

  const auto m = json_io::signed_word_from_json(json::parse(R"({"letters":[[2,-1],[1,1],[2,1]]})"));
  CHECK(m == SignedWord{{2, -1}, {1, 1}, {2, 1}});
  CHECK(json_io::to_json(m) == json::parse(R"({"letters":[[2,-1],[1,1],[2,1]]})"));

  const json t = json::parse(R"({"n":3,"terms":[{"J":[1],"I":[1],"coeff":{"0":"1"}}]})");
  CHECK(json_io::to_json(json_io::tl_element_from_json(t)) == t);

  const auto d = TLDiagram::generator(2, 2);
  const json dj = json_io::to_json(d);
  CHECK(dj == json::parse(R"({"n":2,"pairs":[["T1","B1"],["T2","T3"],["B2","B3"]]})"));
  CHECK(json_io::diagram_from_json(dj) == d);

  CHECK_THROWS_AS(json_io::parse("{not json"), FormatError);
}

TEST_CASE("SVG rendering") {
  const auto x = json_io::nc_from_json(json::parse(sample_partition));
  const auto svg = render_svg(x);
  CHECK(svg.rfind("<svg", 0) == 0);
  auto count = [&](const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
    return c;
  };
  CHECK(count(svg, "class=\"block\"") == 1);
  CHECK(count(svg, "class=\"edge\"") == 1);
  CHECK(count(svg, "class=\"vertex\"") == 6);
  CHECK(render_svg(x) == svg);
  const auto empty = render_svg(NoncrossingPartition::identity(5));
  CHECK(count(empty, "class=\"vertex\"") == 6);
  CHECK(count(empty, "class=\"block\"") == 0);
  CHECK(count(empty, "class=\"edge\"") == 0);
  const auto diagram = render_svg(TLDiagram::generator(1, 3));
  CHECK(count(diagram, "class=\"chord\"") == 4);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--kind=nc", "--n=2"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.size() == 5);
  r = run({"--n", "3", "enumerate", "--kind", "fc"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.size() == 14);
  const auto& order = BasisOrder::get(3);
  for (std::size_t k = 0; k < j.size(); ++k) {
    CHECK(j[k]["index"] == k);
    CHECK(json_io::fc_from_json(j[k]) == order.fully_commutative()[k]);
  }
  r = run({"enumerate", "--kind=nc", "--n=4"});
  j = json::parse(r.out);
  for (std::size_t k = 1; k < j.size(); ++k) {
    CHECK(j[k - 1]["lS"] <= j[k]["lS"]);
    CHECK(json_io::nc_from_json(j[k]) == BasisOrder::get(4).partitions()[k]);
  }
  r = run({"enumerate", "--kind=nc", "--n=3", "--format=jsonl"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 14);
  CHECK(run({"enumerate", "--kind=xx", "--n=2"}).code == cli::kBadInput);
}

TEST_CASE("map") {
  auto r = run({"map", "--dir=phi", "--in", sample_partition});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["J"] == json{1, 2, 3});
  CHECK(j["I"] == json{2, 4, 5});

  const auto nc = run({"enumerate", "--kind=nc", "--n=4"}).out;
  const auto fc = run({"map", "--dir=phi", "--in", nc}).out;
  CHECK(fc == run({"enumerate", "--kind=fc", "--n=4"}).out);
  CHECK(run({"map", "--dir=psi", "--in", fc}).out == nc);

  CHECK(run({"map", "--dir=phi", "--in", "{\"n\":3,"}).code == cli::kBadInput);
  CHECK(run({"map", "--dir=phi", "--in", R"({"n":3,"blocks":[[1,3],[2,4]]})"}).code == cli::kPrecondition);
  CHECK(run({"map", "--dir=psi", "--in", R"({"n":9,"J":[1],"I":[1]})"}).code == cli::kPrecondition);
}

TEST_CASE("expand") {
  auto r = run({"expand", "--what=Zx", "--in", R"({"n":2,"blocks":[[1,2,3]]})"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["basis"] == "diagram");
  CHECK(j["terms"].size() == 4);
  r = run({"expand", "--what=bw", "--basis=zinno", "--in", R"({"n":1,"J":[1],"I":[1]})"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["terms"] == json::parse(R"([{"blocks":[[1],[2]],"coeff":{"-1":"1"}},{"blocks":[[1,2]],"coeff":{"0":"-1"}}])"));
  // X_{s_i} = b_{s_i}.
  r = run({"expand", "--what=Xw", "--in", R"({"n":3,"J":[2],"I":[2]})"});
  j = json::parse(r.out);
  CHECK(j["terms"] == json::parse(R"([{"J":[2],"I":[2],"coeff":{"0":"1"}}])"));
  r = run({"expand", "--what=bw", "--basis=x", "--in", R"({"n":3,"J":[2],"I":[2]})"});
  CHECK(json::parse(r.out)["terms"] == json::parse(R"([{"J":[2],"I":[2],"coeff":{"0":"1"}}])"));
  r = run({"expand", "--what=Zx", "--basis=zinno", "--in", sample_partition});
  CHECK(json::parse(r.out)["terms"].size() == 1);
}

TEST_CASE("matrix") {
  auto r = run({"matrix", "--n=1", "--which=H"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"([[{"0":"1"},{"-1":"1"}],[{},{"0":"-1"}]])"));
  r = run({"matrix", "--n=1", "--format=csv"});
  CHECK(r.out == ",e,\"(1,2)\"\ne,1,v^-1\n(s1),0,-1\n");
  r = run({"matrix", "--n=1", "--format=latex"});
  CHECK(r.out.find("v^{-1}") != std::string::npos);
  CHECK(r.out.find("\\begin{tabular}") == 0);
  CHECK(run({"matrix", "--n=1", "--format=xml"}).code == cli::kPrecondition);
  CHECK(run({"matrix", "--n=2"}).out == run({"matrix", "--n=2"}).out);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--n=2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS catalan_counts") != std::string::npos);
  const std::string report = "verify_report.json";
  std::filesystem::remove(report);
  r = run({"verify", "--n=4", "--only=a4_nonmonomial", "--report", report});
  CHECK(r.code == cli::kCheckFailed);
  CHECK(r.out.find("FAIL a4_nonmonomial") != std::string::npos);
  const auto j = json::parse(slurp(report));
  CHECK(j[0]["data"]["h_text"] == "v^3");
  CHECK(run({"verify", "--n=2", "--only=nope"}).code == cli::kPrecondition);
}

TEST_CASE("render and atomic output") {
  const std::string path = "sample.svg";
  std::filesystem::remove(path);
  auto r = run({"render", "--in", sample_partition, "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const auto svg = slurp(path);
  CHECK(svg == render_svg(json_io::nc_from_json(json::parse(sample_partition))));
  run({"render", "--in", sample_partition, "--out", path});
  CHECK(slurp(path) == svg);
  for (const auto& entry : std::filesystem::directory_iterator("."))
    CHECK(entry.path().string().find(".tmp") == std::string::npos);
  r = run({"render", "--in", R"({"n":2,"pairs":[["T1","T2"],["B1","B2"],["T3","B3"]]})"});
  CHECK(r.code == 0);
  CHECK(r.out.find("chord") != std::string::npos);
  r = run({"render", "--in", R"({"n":2,"J":[1],"I":[1]})"});
  CHECK(r.code == 0);
  CHECK(run({"render", "--in", sample_partition, "--out", "no/such/dir/x.svg"}).code != 0);
}

TEST_CASE("config and exit codes") {
  {
    std::ofstream cfg("tlbasis.json");
    cfg << R"({"n":2,"max_n":3})";
  }
  auto r = run({"--config", "tlbasis.json", "enumerate", "--kind=nc"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).size() == 5);
  r = run({"--config", "tlbasis.json", "--n=3", "enumerate", "--kind=nc"});
  CHECK(json::parse(r.out).size() == 14);
  CHECK(run({"--config", "tlbasis.json", "--n=4", "enumerate", "--kind=nc"}).code == cli::kPrecondition);
  CHECK(run({"--config", "missing.json", "enumerate", "--kind=nc"}).code == cli::kBadInput);
  {
    std::ofstream cfg("bad.json");
    cfg << R"({"n":"two"})";
  }
  CHECK(run({"--config", "bad.json", "enumerate", "--kind=nc"}).code == cli::kBadInput);

  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == cli::kBadInput);
  CHECK(run({"frobnicate"}).code == cli::kBadInput);
  CHECK(run({"enumerate", "--kind=nc"}).code == cli::kBadInput);
  CHECK(run({"enumerate", "--kind=nc", "--n=0"}).code == cli::kPrecondition);
  CHECK(run({"enumerate", "--kind=nc", "--n=9"}).code == cli::kPrecondition);
}
