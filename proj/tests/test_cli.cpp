#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cf/errors.hpp"
#include "cf/fixtures.hpp"
#include "cf/instance.hpp"
#include "cf/suites.hpp"
#include "doctest.h"

using namespace cf;

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(CF_CLI_TEST) + " " + args + " > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string tmp(const std::string& name) { return "/tmp/cfcli_test_" + name; }

std::string invalid_message(const Json& j) {
  try {
    parse_instance(j);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("scalar and matrix JSON") {
  CHECK(scalar_to_json(Scalar::frac(-3, 4)) == Json("-3/4"));
  CHECK(scalar_to_json(Scalar::gauss(1, -2)) == Json{{"re", "1"}, {"im", "-2"}});
  CHECK(scalar_from_json(Json(5)) == Scalar(5));
  CHECK(scalar_from_json(Json{{"re", "1/2"}}) == Scalar::frac(1, 2));
  CHECK_THROWS_AS(scalar_from_json(Json("x/2")), InvalidInput);
  Matrix m = Matrix::from_rows({{Scalar::gauss(0, 1), Scalar::frac(2, 3)}, {0, -1}}, 2);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(matrix_from_json(Json::array(), 3).cols() == 3);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), InvalidInput);
}

TEST_CASE("element and category JSON") {
  Vec v(8);
  v[0] = Scalar(2);
  v[5] = Scalar::gauss(0, -1);  // e_0 e_2
  Json j = element_to_json(v);
  CHECK(j.contains("[]"));
  CHECK(j.contains("[0,2]"));
  CHECK(element_from_json(j, 3) == v);
  CHECK_THROWS_AS(element_from_json(Json{{"[2,0]", "1"}}, 3), InvalidInput);

  for (const auto& c : {poset_category(3), z2xz2_category()}) {
    auto back = category_from_json(category_to_json(c));
    CHECK(back.objects == c.objects);
    CHECK(back.compose == c.compose);
    CHECK(back.identities == c.identities);
    CHECK(validate_category(back).ok);
  }
}

TEST_CASE("instance loading") {
  auto in = load_instance(CF_FIXTURES);
  CHECK(in.fixtures.size() == 5);
  for (const auto* n : {"FIX-R2", "FIX-C1", "FIX-C2", "FIX-G", "FIX-P"}) CHECK(in.fixtures.count(n));
  CHECK(in.correspondence("P1").lag == fixtures().p1.lag);
  CHECK(compose_corr(in.correspondence("G"), in.correspondence("G_inv")).lag == identity_corr(fixtures().c2).lag);
  CHECK(span_kernel(in.span("K_C1")).dim() == 1);
  CHECK(in.wannabes.at("W_P")->cat.objects.size() == 3);

  CHECK(parse_instance(Json::object()).spaces.empty());

  Json space = Json::parse(R"({"field": "Qi", "dim": 2, "inv": [["1","0"],["0","1"]]})");
  Json bad{{"spaces", {{"H", space}}}, {"lagrangians", {{"L", {{"space", "H"}, {"basis", Json::parse(R"([["1", "0"]])")}}}}}};
  auto msg = invalid_message(bad);
  CHECK(msg.find("lagrangian \"L\"") != std::string::npos);
  CHECK(msg.find("isotropic") != std::string::npos);

  Json dangling{{"correspondences", {{"C", {{"source", "H"}, {"target", "H"}, {"basis", Json::array()}}}}}};
  CHECK(invalid_message(dangling).find("unknown space \"H\"") != std::string::npos);

  Json cat = category_to_json(poset_category(2));
  cat["compose"].erase("0<1,1<2");
  CHECK(invalid_message(Json{{"categories", {{"K", cat}}}}).find("category \"K\"") != std::string::npos);
  CHECK(invalid_message(Json{{"bogus", Json::object()}}).find("bogus") != std::string::npos);
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), IoError);
}

TEST_CASE("suites: determinism and reports") {
  SuiteOptions o;
  o.seed = 7;
  o.dims = 2;
  o.cases = 10;
  auto a = run_suite("pentagon", o);
  CHECK(a.pass());
  CHECK(suite_report_text(a) == "ok: 10/10\n");
  auto b = run_suite("pentagon", o);
  CHECK(suite_report_to_json(a).dump() == suite_report_to_json(b).dump());

  o.drop_koszul = true;
  auto f = run_suite("pentagon", o);
  REQUIRE_FALSE(f.pass());
  auto text = suite_report_text(f);
  CHECK(text.find("fock-pentagon") != std::string::npos);
  CHECK(text.find("entry (0,0)") != std::string::npos);
  Json j = suite_report_to_json(f);
  CHECK(j["verdict"] == "fail");
  CHECK(suite_report_to_json(suite_report_from_json(j)).dump() == j.dump());

  CHECK_THROWS_AS(run_suite("nosuch", o), InvalidInput);
  o.cases = 0;
  CHECK_THROWS_AS(run_suite("scalar", o), InvalidInput);
}

TEST_CASE("every suite passes a small run") {
  SuiteOptions o;
  o.seed = 3;
  o.cases = 4;
  for (const auto& s : suite_names()) {
    CAPTURE(s);
    CHECK(run_suite(s, o).pass());
  }
  o.field = Field::Q;
  for (const auto& s : suite_names()) {
    CAPTURE(s);
    CHECK(run_suite(s, o).pass());
  }
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli(std::string("validate ") + CF_FIXTURES) == 0);
  CHECK(run_cli("validate /nonexistent.json") == 2);
  CHECK(run_cli(std::string("pfaffian ") + CF_FIXTURES + " P1 P2") == 0);
  CHECK(run_cli(std::string("pfaffian ") + CF_FIXTURES + " P1 nothing") == 2);
  CHECK(run_cli(std::string("fock ") + CF_FIXTURES + " L_plus") == 0);
  CHECK(run_cli(std::string("fock ") + CF_FIXTURES + " L_plus --kappa-one") == 1);
  CHECK(run_cli("coherence pentagon --seed 7 --dims 2 --cases 10") == 0);
  CHECK(run_cli("coherence pentagon --seed 7 --dims 2 --cases 10 --drop-koszul") == 1);
  CHECK(run_cli("coherence nosuch") == 2);
  CHECK(run_cli("coherence scalar --field R") == 2);
  CHECK(run_cli("frobnicate") == 2);
}

TEST_CASE("cli json output is reproducible") {
  auto a = tmp("a.json"), b = tmp("b.json"), f = tmp("f.json");
  REQUIRE(run_cli("coherence mixed --seed 11 --cases 4 --json-out " + a) == 0);
  REQUIRE(run_cli("coherence mixed --seed 11 --cases 4 --json-out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run_cli("report " + a) == 0);
  REQUIRE(run_cli("coherence mixed --cases 2 --kappa-one --json-out " + f) == 1);
  CHECK(run_cli("report " + f) == 1);
  CHECK(run_cli("report " + std::string(CF_FIXTURES)) == 2);
  CHECK(run_cli("fuzz --suites scalar,lagrangian --cases 3") == 0);
}
