#include <doctest.h>

#include "oracle.hpp"
#include "zlab/algebra.hpp"
#include "zlab/error.hpp"
#include "zlab/lemmas.hpp"
#include "zlab/search.hpp"
#include "zlab/waid.hpp"

using namespace zlab;

namespace {

using Rows = std::vector<std::vector<Element>>;

bool witness_reverifies(const FiniteZroupoid& alg, const Identity& id,
                        const SatisfactionReport& r) {
  Environment env;
  for (const auto& [v, e] : r.witness) env[v] = e;
  const Element l = eval_term(id.lhs, alg, env);
  const Element rr = eval_term(id.rhs, alg, env);
  return l != rr && l == r.lhs_value && rr == r.rhs_value;
}

}  // namespace

TEST_CASE("catalog tables") {
  CHECK(catalog().size() == 5);
  CHECK(catalog_algebra("T1").rows() == Rows{{0}});
  CHECK(catalog_algebra("2_s").rows() == Rows{{0, 1}, {1, 1}});
  CHECK(catalog_algebra("2_b").rows() == Rows{{1, 1}, {0, 1}});
  CHECK(catalog_algebra("A3").rows() == Rows{{2, 2, 2}, {1, 1, 2}, {0, 1, 2}});
  CHECK(catalog_algebra("A4").rows() ==
        Rows{{0, 1, 2, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {3, 3, 3, 3}});
  CHECK_THROWS_AS(catalog_algebra("A5"), NameError);
}

TEST_CASE("catalog memberships") {
  for (const auto& [name, alg] : catalog()) {
    INFO(name);
    CHECK(member_of(alg, variety("I")).holds);
    CHECK(member_of(alg, variety("S")).holds);
  }
  CHECK(member_of(catalog_algebra("2_b"), variety("BA")).holds);
  CHECK(member_of(catalog_algebra("2_s"), variety("SL")).holds);
  CHECK_FALSE(member_of(catalog_algebra("2_s"), variety("BA")).holds);
  CHECK_FALSE(member_of(catalog_algebra("2_b"), variety("SL")).holds);
  CHECK(member_of(catalog_algebra("A4"), variety("S")).holds);
  CHECK_FALSE(member_of(catalog_algebra("A4"), variety("43A12")).holds);
  CHECK(member_of(catalog_algebra("T1"), variety("T")).holds);
  CHECK_FALSE(member_of(catalog_algebra("2_s"), variety("T")).holds);
}

TEST_CASE("satisfies: examples and witnesses") {
  CHECK(satisfies(catalog_algebra("2_s"), identity_from_name("FLEX")).holds);
  const auto id = identity_from_name("43A23");
  const auto r = satisfies(catalog_algebra("2_b"), id);
  REQUIRE_FALSE(r.holds);
  CHECK(r.witness.size() == 3);
  CHECK(witness_reverifies(catalog_algebra("2_b"), id, r));
  const auto refl = parse_identity("x = x");
  for (const auto& [name, alg] : catalog()) CHECK(satisfies(alg, refl).holds);
}

TEST_CASE("satisfies agrees with the oracle and witnesses re-verify") {
  const auto ids = enumerate_waids(4);
  for (const auto& [name, alg] : catalog()) {
    const std::vector<Element> table(alg.table().begin(), alg.table().end());
    for (const auto& id : ids) {
      const auto r = satisfies(alg, id);
      CHECK(r.holds == oracle::holds(table, alg.size(), id.lhs, id.rhs));
      if (!r.holds) CHECK(witness_reverifies(alg, id, r));
    }
  }
}

TEST_CASE("witness is the lexicographically first violation") {
  // x -> y = y -> x fails on 2_b; the first assignment to check is x=0, y=0,
  // then x=0, y=1, which already violates it.
  const auto r = satisfies(catalog_algebra("2_b"), parse_identity("x -> y = y -> x"));
  REQUIRE_FALSE(r.holds);
  CHECK(r.witness == std::vector<std::pair<std::string, Element>>{{"x", 0}, {"y", 1}});
}

TEST_CASE("variety registry") {
  for (const char* n : {"I", "I20", "I10", "MC", "C", "S", "SL", "DM", "KL", "BA", "T"})
    CHECK_NOTHROW(variety(n));
  CHECK_THROWS_AS(variety("XYZ"), NameError);
  const auto& w = variety("42B35");
  CHECK(w.base == "S");
  CHECK(w.defining.size() == 1);
  const auto flat = flatten(w);
  CHECK(flat.size() == flatten(variety("S")).size() + 1);
  CHECK(flat.back().name == "42B35");
  CHECK(variety("LALT").defining.front().name == "32A12");
  CHECK(flatten(variety("BA")).size() > flatten(variety("DM")).size());
}

TEST_CASE("membership is monotone in the defining set") {
  // Same base, larger defining set: membership in the larger implies the smaller.
  std::vector<FiniteZroupoid> models;
  for (std::size_t n = 1; n <= 3; ++n) {
    SearchSpec spec;
    spec.size = n;
    spec.satisfy(variety("I"));
    for (auto& m : enumerate_models(spec)) models.push_back(std::move(m));
  }
  const VarietyDescriptor small{"small", "I", variety("I20").defining};
  VarietyDescriptor big{"big", "I", variety("I20").defining};
  big.defining.push_back(variety("MC").defining.front());
  for (const auto& m : models)
    if (member_of(m, big).holds) CHECK(member_of(m, small).holds);
}

TEST_CASE("member_of reports the failing identity") {
  const auto r = member_of(catalog_algebra("2_b"), variety("SL"));
  REQUIRE_FALSE(r.holds);
  CHECK_FALSE(r.failed.empty());
}

TEST_CASE("FiniteZroupoid validation") {
  CHECK_THROWS_AS(FiniteZroupoid("e", 0, {}), DataError);
  CHECK_THROWS_AS(FiniteZroupoid("e", 2, {0, 1, 1}), DataError);
  CHECK_THROWS_AS(FiniteZroupoid("e", 2, {0, 1, 2, 1}), DataError);
  CHECK_THROWS_AS(FiniteZroupoid("e", 2, {0, -1, 1, 1}), DataError);
  CHECK_THROWS_AS(FiniteZroupoid::from_rows("e", {{0, 1}, {1}}), DataError);
}

TEST_CASE("relabel") {
  const auto& a3 = catalog_algebra("A3");
  const std::vector<Element> swap{0, 2, 1};
  const auto b = relabel(a3, swap);
  CHECK_FALSE(b.same_table(a3));
  CHECK(relabel(b, swap).same_table(a3));
  CHECK(member_of(b, variety("S")).holds);
  const std::vector<Element> moves_zero{1, 0, 2};
  CHECK_THROWS_AS(relabel(a3, moves_zero), DataError);
  const std::vector<Element> not_perm{0, 1, 1};
  CHECK_THROWS_AS(relabel(a3, not_perm), DataError);
}

TEST_CASE("lemma suite on catalog algebras") {
  CHECK(lemma_clauses().size() >= 40);
  for (const auto& [name, alg] : catalog()) {
    INFO(name);
    const auto report = lemma_suite(alg);
    CHECK(report.all_pass_or_vacuous());
    CHECK(report.clauses.size() == lemma_clauses().size());
  }
  const auto t1 = lemma_suite(catalog_algebra("T1"));
  CHECK(t1.count(ClauseResult::Status::fail) == 0);
}

TEST_CASE("lemma suite is vacuous outside I") {
  // A zroupoid outside I leaves every clause vacuous rather than failing.
  const FiniteZroupoid junk("junk", 2, {1, 0, 0, 0});
  CHECK_FALSE(member_of(junk, variety("I")).holds);
  const auto report = lemma_suite(junk);
  CHECK(report.count(ClauseResult::Status::fail) == 0);
  CHECK(report.count(ClauseResult::Status::vacuous) == report.clauses.size());
}
