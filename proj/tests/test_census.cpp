#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>

#include "helpers.hpp"
#include "lgf/census.hpp"

using lgf::CensusRecord;
using lgf::LinkExpr;
using lgf::LinkVector;

namespace {

LinkVector vec_of(const std::string& s) { return lgf::parse_link_expr(s).components[0]; }
LinkExpr expr_of(const std::string& s) { return lgf::parse_link_expr(s); }

std::vector<std::string> formatted(const std::vector<LinkVector>& vecs) {
  std::vector<std::string> out;
  for (const auto& v : vecs) out.push_back(lgf::format_link_vector(v));
  return out;
}

}  // namespace

TEST_CASE("enumeration is exhaustive, valid, and ordered") {
  CHECK(formatted(lgf::enumerate_vectors(2, false)) == std::vector<std::string>{"(0)", "(2)"});

  auto w5 = formatted(lgf::enumerate_vectors(5, false));
  CHECK(w5 == std::vector<std::string>{"(0)", "(2)", "(2,1,0)", "(2,1,2)", "(2,2,0)", "(2,3,0)",
                                       "(4)", "(4,1,0)"});

  for (const auto& v : lgf::enumerate_vectors(9, true)) CHECK_NOTHROW(lgf::validate_vector(v));

  // Same standard set as the independent test generator.
  auto mine = lgf::enumerate_vectors(10, false);
  auto reference = lgf_test::standard_vectors(10);
  std::set<std::string> a, b;
  for (const auto& v : mine) a.insert(lgf::format_link_vector(v));
  for (const auto& v : reference) b.insert(lgf::format_link_vector(v));
  CHECK(a == b);
  CHECK(mine.size() == reference.size());

  CHECK_THROWS_AS(lgf::enumerate_vectors(1, false), lgf::Error);
}

TEST_CASE("flype expansion enumerates every p assignment, q pinned to zero") {
  auto w5 = formatted(lgf::enumerate_vectors(5, true));
  CHECK(w5 == std::vector<std::string>{"(0)", "(2)", "(2,1,0)", "(2,1,2)", "(2,1,2^1)",
                                       "(2,1,2^2)", "(2,2,0)", "(2,3,0)", "(4)", "(4,1,0)"});
  for (const auto& v : lgf::enumerate_vectors(9, true)) {
    for (int x : v.q) CHECK(x == 0);
  }
  std::size_t expect = 0;
  for (const auto& base : lgf_test::standard_vectors(9)) expect += lgf_test::all_flypes(base).size();
  CHECK(lgf::enumerate_vectors(9, true).size() == expect);
}

TEST_CASE("polynomial classes match the worked groupings") {
  auto records = lgf::records_for(
      {expr_of("(2,1,2)"), expr_of("(2,1,2^1)"), expr_of("~(2,1,2)"), expr_of("~(2,1,2^1)")});
  auto classes = lgf::polynomial_classes(records);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<std::size_t>{0, 3});  // ~(2,1,2^1) falls back to (2,1,2)
  CHECK(classes[1] == std::vector<std::size_t>{1, 2});  // ~(2,1,2) joins (2,1,2^1)

  auto l3 = lgf::records_for({expr_of("(2,1,2,1,2)"), expr_of("(2,1,2,1,2^1)"),
                              expr_of("(2,1,2^1,1,2)"), expr_of("(2,1,2^1,1,2^1)")});
  CHECK(lgf::polynomial_classes(l3).size() == 4);

  auto fig = lgf::records_for({expr_of("(2,1,2,1,0)"), expr_of("(2,1,2^2,1,0)")});
  CHECK(lgf::polynomial_classes(fig).size() == 1);
}

TEST_CASE("class partition is order-independent") {
  std::vector<LinkExpr> exprs;
  for (const auto& base : lgf_test::standard_vectors(7))
    for (const auto& v : lgf_test::all_flypes(base)) exprs.push_back(lgf::single(v));
  auto forward = lgf::records_for(exprs);
  std::reverse(exprs.begin(), exprs.end());
  auto backward = lgf::records_for(exprs);

  auto partition_sets = [](const std::vector<CensusRecord>& records) {
    std::set<std::set<std::string>> out;
    for (const auto& group : lgf::polynomial_classes(records)) {
      std::set<std::string> g;
      for (auto i : group) g.insert(lgf::format_link_expr(records[i].expr));
      out.insert(g);
    }
    return out;
  };
  CHECK(partition_sets(forward) == partition_sets(backward));
}

TEST_CASE("record fields") {
  auto records = lgf::records_for({expr_of("(2,1,0)#(2,1,0)"), expr_of("(4,1,0)"),
                                   expr_of("(2,1,2)"), expr_of("(2,1,2^1)"), expr_of("~(2,1,2)")});
  CHECK(records[0].rational == lgf::Rational(4, 3));  // sums add component values
  CHECK(records[1].rational == lgf::Rational(4, 5));
  CHECK(records[0].class_id == records[1].class_id);  // same polynomials...
  CHECK(records[0].orbit_id != records[1].orbit_id);  // ...different topological type
  CHECK(records[2].orbit_id == records[3].orbit_id);
  CHECK(records[3].orbit_id == records[4].orbit_id);
  CHECK(records[3].class_id == records[4].class_id);
  CHECK(records[2].class_id != records[3].class_id);
  CHECK(records[2].verdict.status == lgf::OrderVerdict::ORDERED);
}

TEST_CASE("dss_check verdicts and witnesses") {
  CHECK(lgf::dss_check({1, 2}).is_dss);
  CHECK(lgf::dss_check({1, 2, 4}).is_dss);
  CHECK(lgf::dss_check({2, 3, 4, 8}).is_dss);
  CHECK(lgf::dss_check({}).is_dss);

  auto bad = lgf::dss_check({1, 2, 3});
  CHECK_FALSE(bad.is_dss);
  CHECK(bad.witness_a == std::vector<long long>{1, 2});
  CHECK(bad.witness_b == std::vector<long long>{3});

  auto dup = lgf::dss_check({5, 5});
  CHECK_FALSE(dup.is_dss);
  CHECK(dup.witness_a == std::vector<long long>{5});
  CHECK(dup.witness_b == std::vector<long long>{5});

  for (int k = 1; k <= 12; ++k) {
    std::vector<long long> powers;
    for (int i = 0; i < k; ++i) powers.push_back(1LL << i);
    CHECK(lgf::dss_check(powers).is_dss);
  }

  CHECK_THROWS_AS(lgf::dss_check(std::vector<long long>(25, 1)), lgf::Error);
  CHECK_THROWS_AS(lgf::dss_check({0}), lgf::Error);
}

TEST_CASE("lower bounds: the worked cases") {
  auto report = lgf::verify_lower_bounds(vec_of("(2,1,2)"));
  CHECK(report.status == lgf::LowerBoundReport::Pass);
  CHECK(report.bound == 2);
  CHECK(report.observed == 2);

  report = lgf::verify_lower_bounds(vec_of("(2,1,2,1,2)"));
  CHECK(report.status == lgf::LowerBoundReport::Pass);
  CHECK(report.observed == 4);

  report = lgf::verify_lower_bounds(vec_of("(2,1,2,1,0)"));
  CHECK(report.status == lgf::LowerBoundReport::Pass);
  CHECK(report.observed == 4);
  CHECK(report.family.size() == 4);  // two flypes, each with its swap

  report = lgf::verify_lower_bounds(vec_of("(16,1,8,1,4,1,2)"));
  CHECK(report.status == lgf::LowerBoundReport::Pass);
  CHECK(report.bound == 8);
  CHECK(report.observed == 8);
}

TEST_CASE("lower bounds: hypotheses matter") {
  auto report = lgf::verify_lower_bounds(vec_of("(2,2,2,1,2)"));  // v_2 = 2v_1, h_2 = h_3
  CHECK(report.status == lgf::LowerBoundReport::HypothesisNotMet);
  CHECK(report.observed == 3);

  report = lgf::verify_lower_bounds(vec_of("(2,1,2,1,2,1,2)"));  // {1,1,1,1} far from d.s.s.
  CHECK(report.status == lgf::LowerBoundReport::HypothesisNotMet);
  CHECK(report.observed == 7);

  report = lgf::verify_lower_bounds(vec_of("(4)"));
  CHECK(report.status == lgf::LowerBoundReport::HypothesisNotMet);
  CHECK(report.observed == 1);

  CHECK_THROWS_AS(lgf::verify_lower_bounds(vec_of("(2,1,2^1)")), lgf::Error);
}

TEST_CASE("lower bounds never FAIL when the hypothesis holds") {
  for (const auto& base : lgf_test::standard_vectors(16)) {
    CAPTURE(lgf::format_link_vector(base));
    CHECK(lgf::verify_lower_bounds(base).status != lgf::LowerBoundReport::Fail);
  }
}

TEST_CASE("open pairs: the curated census reports the famous two") {
  std::vector<LinkExpr> exprs = {
      expr_of("(2,1,2,1,0)"),   expr_of("(2,1,2^1,1,0)"), expr_of("(2,1,2^2,1,0)"),
      expr_of("(4,1,0)"),       expr_of("(2,1,0)#(2,1,0)"),
      expr_of("(2,1^1,0)"),     expr_of("(2,1,0)"),  // identified by normalization: no pair
  };
  for (const auto& v : lgf_test::parity_flypes(vec_of("(2,1,2,1,2,1,2)")))
    exprs.push_back(lgf::single(v));

  auto pairs = lgf::open_pairs(lgf::records_for(exprs));
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& [a, b] : pairs)
    got.insert({lgf::format_link_expr(a), lgf::format_link_expr(b)});
  std::set<std::pair<std::string, std::string>> want = {
      {"(2,1,2,1,0)", "(2,1,2^2,1,0)"},
      {"(2,1,2,1,2^1,1,2)", "(2,1,2,1,2^1,1,2^1)"},
  };
  CHECK(got == want);
  for (const auto& [a, b] : pairs) {
    lgf::Rational ra(0), rb(0);
    for (const auto& c : a.components) ra = ra + lgf::rational_value(c);
    for (const auto& c : b.components) rb = rb + lgf::rational_value(c);
    CHECK(ra == rb);
  }
}

TEST_CASE("open pairs: tiny censuses are silent") {
  lgf::CensusOptions opt;
  opt.max_weight = 4;
  opt.with_flypes = true;
  CHECK(lgf::open_pairs(lgf::build_census(opt)).empty());
}

TEST_CASE("census serialization goldens") {
  lgf::CensusOptions opt;
  opt.max_weight = 2;
  auto records = lgf::build_census(opt);
  CHECK(lgf::census_json(records) ==
        "[\n"
        "  {\"expr\":\"(0)\",\"rational\":\"0/1\",\"gamma_minus\":{},\"gamma_plus\":{\"0\":1,\"1\":1},"
        "\"ordered\":\"ORDERED\",\"class\":0,\"orbit\":0},\n"
        "  {\"expr\":\"(2)\",\"rational\":\"2/1\",\"gamma_minus\":{\"0\":1},\"gamma_plus\":{\"1\":1},"
        "\"ordered\":\"UNORDERED\",\"class\":1,\"orbit\":1}\n"
        "]\n");
  CHECK(lgf::census_csv(records) ==
        "expr,rational,gamma_minus,gamma_plus,ordered,class,orbit\n"
        "(0),0/1,{},\"{\"\"0\"\":1,\"\"1\"\":1}\",ORDERED,0,0\n"
        "(2),2/1,\"{\"\"0\"\":1}\",\"{\"\"1\"\":1}\",UNORDERED,1,1\n");

  lgf::CensusOptions bigger;
  bigger.max_weight = 7;
  bigger.with_flypes = true;
  bigger.with_swaps = true;
  CHECK(lgf::census_json(lgf::build_census(bigger)) == lgf::census_json(lgf::build_census(bigger)));
}

TEST_CASE("swapped census entries sit next to their vector") {
  lgf::CensusOptions opt;
  opt.max_weight = 3;
  opt.with_swaps = true;
  auto records = lgf::build_census(opt);
  REQUIRE(records.size() == 6);
  CHECK(lgf::format_link_expr(records[0].expr) == "(0)");
  CHECK(lgf::format_link_expr(records[1].expr) == "~(0)");
  CHECK(records[0].orbit_id == records[1].orbit_id);
  CHECK(records[0].class_id != records[1].class_id);
}

TEST_CASE("the oracle spot-check hook fires on a deterministic sample") {
  std::vector<LinkExpr> exprs;
  for (const auto& v : lgf::enumerate_vectors(10, true)) exprs.push_back(lgf::single(v));
  int sampled = 0;
  for (const auto& e : exprs)
    if (lgf::detail::fnv1a(lgf::format_link_expr(e)) % 10 == 0) ++sampled;
  REQUIRE(sampled > 0);

  CHECK_NOTHROW(lgf::records_for(exprs, [](const LinkExpr& e) { return lgf::gamma_expr(e); }));
  CHECK_THROWS_AS(lgf::records_for(exprs,
                                   [](const LinkExpr&) {
                                     return lgf::GammaPair{lgf::LaurentPoly::monomial(7),
                                                           lgf::LaurentPoly::monomial(8)};
                                   }),
                  lgf::Error);
}
