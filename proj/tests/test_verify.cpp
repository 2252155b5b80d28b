#include <doctest.h>

#include <sstream>

#include "wadj/verify.hpp"

using namespace wadj;

namespace {

const CaseRecord* find_case(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.cases) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const CaseRecord* find_coordinate(const VerificationReport& r, const std::string& coordinate) {
  for (const auto& c : r.cases) {
    if (c.coordinate && *c.coordinate == coordinate) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("printed tolerance") {
    CHECK(printed_tolerance("101.8670") == doctest::Approx(5e-4));
    CHECK(printed_tolerance("652.82") == doctest::Approx(5e-3));
    CHECK(printed_tolerance("1131") == doctest::Approx(0.5));
    CHECK(printed_tolerance("2.70928") == doctest::Approx(5e-4));
  }

  TEST_CASE("report serialisation") {
    VerificationReport r;
    r.campaign = "demo";
    CaseRecord a;
    a.id = "a";
    a.status = CaseStatus::pass;
    a.reference = "1.5";
    a.coordinate = "t[1][2]";
    a.computed = 1.5;
    CaseRecord b;
    b.id = "b, with comma";
    b.status = CaseStatus::info;
    r.cases = {a, b};
    CHECK(r.passed());
    const auto j = r.to_json();
    CHECK(j["campaign"] == "demo");
    CHECK(j["cases"].size() == 2);
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["info"] == 1);
    CHECK(j["cases"][0]["reference"] == "1.5");
    const std::string csv = r.to_csv();
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "campaign,id,status,coordinate,reference,computed,tolerance,note");
    CHECK(csv.find("\"b, with comma\"") != std::string::npos);

    r.cases.back().status = CaseStatus::fail;
    CHECK_FALSE(r.passed());
    const auto merged = merge_reports("all", {r, r});
    CHECK(merged.cases.size() == 4);
    CHECK(merged.summary().fail == 2);
  }

  TEST_CASE("table examples") {
    const auto n6 = run_table(TableId::appendix_n6);
    const auto* g3 = find_coordinate(n6, "appendix_n6[G3][(x+y)^2]");
    REQUIRE(g3);
    CHECK(*g3->reference == "101.8670");
    CHECK(g3->status == CaseStatus::pass);

    const auto n7 = run_table(TableId::appendix_n7);
    const auto* g2 = find_coordinate(n7, "appendix_n7[G2][(x+y)^2]");
    REQUIRE(g2);
    CHECK(g2->status == CaseStatus::pass);
    const auto* bold = find_case(n7, "n=7 f=(x+y)^2 row maximum");
    REQUIRE(bold);
    CHECK(bold->values["winner"] == "G2");
    CHECK(bold->status == CaseStatus::pass);

    const auto t1 = run_table(TableId::extended_table1);
    CHECK(t1.passed());
    const auto* b20 = find_case(t1, "n=20 bound");
    REQUIRE(b20);
    CHECK(*b20->reference == "38.1447");
    CHECK(find_case(t1, "n=20 bound < rho_ex(G2)")->status == CaseStatus::pass);
    CHECK(parse_table_id("appendix_n6") == TableId::appendix_n6);
    CHECK_THROWS(parse_table_id("table9"));
  }

  TEST_CASE("extremal examples") {
    const auto first = verify_extremal(6, 9, {WeightFunction::parse("zagreb1")}, ExtremalRank::first,
                                       ExtremalMode::exhaustive);
    CHECK(first.passed());
    CHECK(first.summary().pass == 4);

    const auto forgotten = verify_extremal(8, 30, {WeightFunction::parse("forgotten")}, ExtremalRank::second,
                                           ExtremalMode::candidate);
    CHECK(forgotten.passed());
    CHECK(forgotten.summary().pass == 23);

    const auto six = verify_extremal(6, 6, {WeightFunction::parse("zagreb1")}, ExtremalRank::second,
                                     ExtremalMode::candidate);
    REQUIRE(six.cases.size() == 1);
    CHECK(six.cases[0].values["winner"] == "G4");
    CHECK(six.cases[0].status == CaseStatus::info);

    const auto ext = verify_extremal(6, 7, {WeightFunction::parse("extended")}, ExtremalRank::first,
                                     ExtremalMode::exhaustive);
    CHECK(ext.summary().not_applicable == 1);
    CHECK(ext.summary().fail == 0);

    CHECK(second_rank_threshold(WeightFunction::parse("zagreb1")) == 10);
    CHECK(second_rank_threshold(WeightFunction::parse("hyper_zagreb")) == 9);
    CHECK(second_rank_threshold(WeightFunction::parse("forgotten")) == 8);
    CHECK_FALSE(second_rank_threshold(WeightFunction::parse("constant_one")).has_value());
  }

  TEST_CASE("Kelmans campaign is deterministic and separates P* weights") {
    KelmansOptions opts;
    opts.samples = 200;
    opts.seed = 99;
    const auto fs = parse_weight_list("zagreb1,extended");
    const auto a = verify_kelmans(fs, opts);
    const auto b = verify_kelmans(fs, opts);
    CHECK(a.to_json()["cases"] == b.to_json()["cases"]);
    for (const auto& c : a.cases) {
      if (c.id.find("f=x+y") != std::string::npos) CHECK(c.status == CaseStatus::pass);
      if (c.id.find("x/y") != std::string::npos) CHECK(c.status != CaseStatus::fail);
    }
    opts.seed = 100;
    CHECK(verify_kelmans(fs, opts).to_json()["cases"] != a.to_json()["cases"]);
  }

  TEST_CASE("extended-index chain at n = 12") {
    const auto r = verify_theorem41(12, 12);
    CHECK(r.passed());
    const auto* chain = find_case(r, "n=12 chain");
    REQUIRE(chain);
    CHECK(std::abs(chain->values["rho_ex_G2"].get<double>() - 15.8028) <= 5e-4);
    CHECK(chain->values["lower"].get<double>() == doctest::Approx(0.5 * 11.1 * std::sqrt(7.0)).epsilon(1e-12));
    const auto* family = find_case(r, "n=12 max degree n-2 family");
    REQUIRE(family);
    CHECK(family->values["classes"] == 9);
    CHECK_THROWS(verify_theorem41(11, 12));
    CHECK_THROWS(verify_theorem41(12, 61));
  }

  TEST_CASE("golden counts") {
    const std::size_t want[] = {1, 5, 19, 67, 236, 797, 2678};
    for (int n = 4; n <= 10; ++n) CHECK(*golden_bicyclic_count(n) == want[n - 4]);
    CHECK_FALSE(golden_bicyclic_count(11).has_value());
  }
}
