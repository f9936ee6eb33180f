#include <algorithm>

#include "doctest.h"
#include "flagsym/report_io.hpp"
#include "flagsym/survey.hpp"

using namespace flagsym;

TEST_CASE("dim g agrees with 2|R+| + rank") {
  for (Family f : kAllFamilies) {
    for (int n = 1; n <= kMaxRank; ++n) {
      if (!is_valid_type(f, n)) continue;
      const RootSystem rs = build_root_system(f, n);
      CHECK(dim_g(f, n) == rs.size() + n);
    }
  }
  CHECK_THROWS_AS(dim_g(Family::G, 3), InvalidInput);
}

TEST_CASE("exception tags") {
  CHECK(onishchik_exception(Family::C, 3, {1}) == ExceptionTag::A);
  CHECK(onishchik_exception(Family::C, 5, {1}) == ExceptionTag::A);
  CHECK(onishchik_exception(Family::B, 2, {2}) == ExceptionTag::A);
  CHECK(onishchik_exception(Family::B, 4, {4}) == ExceptionTag::B);
  CHECK(onishchik_exception(Family::G, 2, {2}) == ExceptionTag::C);
  CHECK_FALSE(onishchik_exception(Family::G, 2, {1}).has_value());
  CHECK_FALSE(onishchik_exception(Family::C, 3, {1, 2}).has_value());
  CHECK_FALSE(onishchik_exception(Family::B, 4, {1}).has_value());
  CHECK_FALSE(onishchik_exception(Family::A, 3, {1}).has_value());
}

TEST_CASE("paintings and automorphism orbits") {
  const RootSystem a3 = build_root_system(Family::A, 3);
  CHECK(all_paintings(a3, false).size() == 7);
  CHECK(all_paintings(a3, true).size() == 5);
  const RootSystem d4 = build_root_system(Family::D, 4);
  CHECK(all_paintings(d4, true).size() == 7);  // triality
  const RootSystem e6 = build_root_system(Family::E, 6);
  CHECK(all_paintings(e6, false).size() == 63);
  CHECK(all_paintings(e6, true).size() == (63 + 15) / 2);
  const auto g2 = all_paintings(build_root_system(Family::G, 2), true);
  CHECK(g2 == std::vector<std::vector<int>>{{1}, {1, 2}, {2}});
}

TEST_CASE("enumeration summary and ordering") {
  EnumerationOptions options;
  options.max_rank = 3;
  options.families = {Family::G, Family::A};
  const EnumerationReport report = enumerate(options);
  CHECK(report.summary.entries == 1 + 3 + 7 + 3);
  CHECK(report.entries.front().spec() == "A1:{1}");
  CHECK(report.entries.back().spec() == "G2:{2}");
  CHECK(report.summary.exceptions == 1);
  CHECK(report.summary.failed_checks.empty());
  CHECK(report.summary.symmetric == 1 + 2 + 3);

  options.families = {Family::A};
  CHECK(enumerate(options).summary.entries == 11);

  options.max_rank = 2;
  options.families = {};
  int b2 = 0, g2 = 0;
  for (const auto& e : enumerate(options).entries) {
    b2 += e.type == SimpleType{Family::B, 2};
    g2 += e.type == SimpleType{Family::G, 2};
  }
  CHECK(b2 == 3);
  CHECK(g2 == 3);

  options.max_rank = 0;
  CHECK_THROWS_AS(enumerate(options), InvalidInput);
  options.max_rank = kMaxEnumerationRank + 1;
  CHECK_THROWS_AS(enumerate(options), InvalidInput);
}

TEST_CASE("verification flags exactly the rank-2 entries that break the bound") {
  EnumerationOptions options;
  options.max_rank = 4;
  const VerificationResult r = verify_theorem(enumerate(options));
  std::vector<std::string> flagged;
  for (const auto& v : r.violations) flagged.push_back(v.entry + " " + v.check);
  const std::vector<std::string> expected = {"A2:{1,2} coindex>=6", "A2:{1,2} dim_g<=k(k-1)/2",
                                             "B2:{1,2} k=6_only_su4"};
  CHECK(flagged == expected);
  CHECK_FALSE(r.passed);

  EnumerationReport rep = enumerate(options);
  std::erase_if(rep.entries, [](const EnumerationEntry& e) { return e.type.rank < 3; });
  CHECK(verify_theorem(rep).passed);
}

TEST_CASE("JSON records") {
  const PaintedDiagram pd = parse_painted("G2:{2}");
  const ChevalleyTable t = build_constants(*pd.rs);
  const auto xis = kahler_sample(make_flag(pd), 1, 3);
  const EnumerationEntry e = analyze_painting(pd, t, xis);
  const Json j = to_json(e);
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"family", "rank", "painted", "dim_g", "dim_M", "symmetric", "exception",
                                         "index", "coindex", "leaf", "checks"});
  CHECK(j["exception"] == "c");
  CHECK(j["coindex"] == 6);
  CHECK(j["leaf"]["u"] == "A2");
  CHECK(j["leaf"]["name"] == "CP^2");
  CHECK(j["checks"]["oracle_agree"] == true);

  const Json d = to_detailed_json(e);
  CHECK(d["spec"] == "G2:{2}");
  CHECK(d["xi"].size() == 3);
  CHECK(d["symmetry_roots"] == Json::array({"a1+3a2", "2a1+3a2"}));

  VerificationResult v;
  v.violations.push_back({"A2:{1,2}", "coindex>=6", "k = 4"});
  v.passed = false;
  const Json vj = to_json(v);
  CHECK(vj["passed"] == false);
  CHECK(vj["violations"][0]["check"] == "coindex>=6");
  CHECK(describe(e).find("Onishchik exception (c)") != std::string::npos);
}

TEST_CASE("kahler samples are deterministic") {
  const FlagData f = make_flag(parse_painted("B4:{1,4}"));
  const auto a = kahler_sample(f, 42, 5);
  const auto b = kahler_sample(f, 42, 5);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_string(a[i]) == to_string(b[i]));
  CHECK(to_string(kahler_sample(f, 43, 1)[0]) != to_string(a[0]));
}
