#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "zlab/error.hpp"
#include "zlab/search.hpp"
#include "zlab/waid.hpp"

using namespace zlab;

namespace {

std::vector<oracle::Law> laws_of(const std::vector<Identity>& ids) {
  std::vector<oracle::Law> out;
  for (const auto& id : ids) out.push_back({id.lhs, id.rhs});
  return out;
}

std::vector<std::vector<Element>> tables(const std::vector<FiniteZroupoid>& models) {
  std::vector<std::vector<Element>> out;
  for (const auto& m : models) out.emplace_back(m.table().begin(), m.table().end());
  return out;
}

SearchSpec spec_for(const char* variety_name, std::size_t n, bool iso) {
  SearchSpec s;
  s.size = n;
  s.iso_reduce = iso;
  s.satisfy(variety(variety_name));
  return s;
}

}  // namespace

TEST_CASE("size 1 yields the trivial algebra") {
  const auto models = enumerate_models(spec_for("S", 1, true));
  REQUIRE(models.size() == 1);
  CHECK(models[0].same_table(catalog_algebra("T1")));
}

TEST_CASE("size 2 symmetric models are exactly 2_s and 2_b") {
  const auto models = enumerate_models(spec_for("S", 2, true));
  REQUIRE(models.size() == 2);
  const bool forward = models[0].same_table(catalog_algebra("2_s")) &&
                       models[1].same_table(catalog_algebra("2_b"));
  CHECK(forward);
  // Brute force over all 16 tables gives the same set.
  const auto naive = oracle::naive_models(2, laws_of(flatten(variety("S"))));
  CHECK(naive == tables(enumerate_models(spec_for("S", 2, false))));
}

TEST_CASE("pruned search equals generate-and-test at size 3") {
  for (const char* v : {"S", "I"}) {
    INFO(v);
    const auto naive = oracle::naive_models(3, laws_of(flatten(variety(v))));
    const auto raw = tables(enumerate_models(spec_for(v, 3, false)));
    CHECK(raw == naive);

    const auto reps = oracle::iso_classes(naive, 3);
    const auto reduced = enumerate_models(spec_for(v, 3, true));
    CHECK(reduced.size() == reps.size());
    for (const auto& r : reps) {
      const bool covered = std::any_of(reduced.begin(), reduced.end(), [&](const auto& m) {
        return oracle::isomorphic(r, std::vector<Element>(m.table().begin(), m.table().end()), 3);
      });
      CHECK(covered);
    }
  }
}

TEST_CASE("iso reduction equals grouping raw output by canonical form") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<CanonicalForm> grouped;
    for (const auto& m : enumerate_models(spec_for("I", n, false))) grouped.insert(canonical_form(m));
    const auto reduced = enumerate_models(spec_for("I", n, true));
    REQUIRE(reduced.size() == grouped.size());
    std::size_t i = 0;
    for (const auto& c : grouped) {
      const auto cells = reduced[i++].table();
      CHECK(std::vector<Element>(cells.begin(), cells.end()) == c.cells);
    }
  }
}

TEST_CASE("every returned model re-verifies") {
  SearchSpec s = spec_for("S", 4, true);
  s.satisfy(identity_from_name("42A12"));
  for (const auto& m : enumerate_models(s)) {
    CHECK(member_of(m, variety("S")).holds);
    CHECK(satisfies(m, identity_from_name("42A12")).holds);
  }
}

TEST_CASE("must_fail and limits") {
  SearchSpec s = spec_for("S", 3, true);
  s.satisfy(identity_from_name("42A12")).fail(identity_from_name("43A12"));
  const auto models = enumerate_models(s);
  const bool has_a3 = std::any_of(models.begin(), models.end(), [](const auto& m) {
    return are_isomorphic(m, catalog_algebra("A3"));
  });
  CHECK(has_a3);
  for (const auto& m : models) CHECK_FALSE(satisfies(m, identity_from_name("43A12")).holds);

  SearchSpec lim = spec_for("I", 3, false);
  lim.limit = 5;
  CHECK(enumerate_models(lim).size() == 5);
  lim.iso_reduce = true;
  CHECK(enumerate_models(lim).size() == 5);
}

TEST_CASE("search argument errors") {
  CHECK_THROWS_AS(enumerate_models(spec_for("S", 0, true)), RangeError);
  CHECK_THROWS_AS(enumerate_models(spec_for("S", 5, true)), RangeError);
  SearchSpec both = spec_for("S", 2, true);
  both.satisfy(identity_from_name("42A12")).fail(identity_from_name("42A12"));
  CHECK_THROWS_AS(enumerate_models(both), std::invalid_argument);
}

TEST_CASE("canonical form and isomorphism") {
  const auto& s = catalog_algebra("2_s");
  const auto& b = catalog_algebra("2_b");
  CHECK(are_isomorphic(s, s));
  CHECK_FALSE(are_isomorphic(s, b));
  CHECK(canonical_form(s) != canonical_form(b));
  const auto& a3 = catalog_algebra("A3");
  const std::vector<Element> swap{0, 2, 1};
  CHECK(are_isomorphic(a3, relabel(a3, swap)));
  const auto& a4 = catalog_algebra("A4");
  std::vector<Element> p{0, 1, 2, 3};
  while (std::next_permutation(p.begin() + 1, p.end()))
    CHECK(canonical_form(relabel(a4, p)) == canonical_form(a4));
}

TEST_CASE("output does not depend on the thread count") {
  SearchSpec one = spec_for("S", 4, true);
  SearchSpec many = one;
  many.threads = 4;
  CHECK(oracle::hash_models(enumerate_models(one)) == oracle::hash_models(enumerate_models(many)));
  SearchSpec raw = spec_for("I", 3, false);
  SearchSpec raw_many = raw;
  raw_many.threads = 3;
  CHECK(oracle::hash_models(enumerate_models(raw)) == oracle::hash_models(enumerate_models(raw_many)));
}

TEST_CASE("find_separator") {
  const auto a12 = identity_from_name("43A12");
  const auto a23 = identity_from_name("43A23");
  const auto s1 = find_separator(a12, a23, 2);
  REQUIRE(s1);
  CHECK(are_isomorphic(*s1, catalog_algebra("2_b")));

  const auto s2 = find_separator(a23, a12, 4);
  REQUIRE(s2);
  CHECK(s2->size() == 4);
  CHECK(satisfies(*s2, a23).holds);
  CHECK_FALSE(satisfies(*s2, a12).holds);

  CHECK_FALSE(find_separator(a23, a23, 4));
  // 42C12 defines the same variety as 43A12, so nothing small separates them.
  CHECK_FALSE(find_separator(a12, identity_from_name("42C12"), 3));
  CHECK_THROWS_AS(find_separator(a12, a23, 5), RangeError);
}
