#include <doctest.h>

#include <json.hpp>

#include "lamk/errors.hpp"
#include "lamk/report.hpp"
#include "lamk/scheme.hpp"

using namespace lamk;

TEST_CASE("empty csv is the header line") {
  CHECK(render_report({}, ReportFormat::Csv) == "checkId,model,params,status,witness,millis\n");
  CHECK(render_report({}, ReportFormat::Json) == "[]\n");
}

TEST_CASE("single pass report as json") {
  CheckReport r;
  r.check_id = "torsion_bound";
  r.model = "P2";
  r.params = "q<=2";
  const auto j = nlohmann::json::parse(render_report({r}, ReportFormat::Json));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["witness"].is_null());
  CHECK(j[0]["checkId"] == "torsion_bound");
}

TEST_CASE("fail witness round-trips through the expression grammar") {
  const auto p2 = projective_space(2);
  const auto x = p2.element("3*h^2 - 7*h + 2");
  CheckReport r;
  r.check_id = "adams_congruence";
  r.model = "P2";
  r.params = "n<=4,q<=2";
  r.status = CheckStatus::Fail;
  r.witness = Witness{x.to_string(), "top:2", false};
  const auto j = nlohmann::json::parse(render_report({r}, ReportFormat::Json));
  CHECK(p2.element(j[0]["witness"]["element"].get<std::string>()) == x);
  CHECK(j[0]["witness"]["expectedLevel"] == "top:2");
  const auto csv = render_report({r}, ReportFormat::Csv);
  CHECK(csv.find("\"n<=4,q<=2\"") != std::string::npos);
  CHECK(csv.find("3*h^2 - 7*h + 2 not in top:2") != std::string::npos);
  CHECK(render_report({r}, ReportFormat::Text).find("[fail]") == 0);
}

TEST_CASE("format names") {
  CHECK(parse_report_format("csv") == ReportFormat::Csv);
  CHECK_THROWS_AS(parse_report_format("xml"), InputError);
}
