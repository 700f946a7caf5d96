#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bifree/mobius.hpp"
#include "bifree/partition.hpp"

using namespace bifree;

TEST_CASE("canonical form and parsing") {
  Partition p = Partition::parse("[[3,5,9],[1,2],[7,4],[6,8]]");
  CHECK(p.size() == 9);
  CHECK(p.to_string() == "[[1,2],[3,5,9],[4,7],[6,8]]");
  CHECK(p == Partition::parse("[[1,2],[3,5,9],[4,7],[6,8]]"));

  CHECK(Partition::singletons(3).to_string() == "[[1],[2],[3]]");
  CHECK(Partition::full(3).to_string() == "[[1,2,3]]");

  CHECK_THROWS(Partition::parse("[[1,2],[2,3]]"));  // not disjoint
  CHECK_THROWS(Partition::parse("[[1,3]]"));        // does not cover {1,2,3}
  CHECK_THROWS(Partition::parse("[[0,1]]"));        // 1-based literals only
  CHECK_THROWS(Partition::parse("[[1,2]"));
}

TEST_CASE("leq order") {
  CHECK(leq(Partition::singletons(3), Partition::full(3)));
  CHECK_FALSE(leq(Partition::parse("[[1,2],[3]]"), Partition::parse("[[1,3],[2]]")));
  CHECK(leq(Partition::parse("[[1,2],[3,5,9],[4,7],[6,8]]"), Partition::full(9)));
  CHECK_THROWS(leq(Partition::full(2), Partition::full(3)));
}

TEST_CASE("leq is a partial order on NC(n), n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto nc = enumerate_nc(n);
    for (const auto& a : nc) CHECK(leq(a, a));
    for (const auto& a : nc)
      for (const auto& b : nc) {
        if (leq(a, b) && leq(b, a)) CHECK(a == b);
        for (const auto& c : nc)
          if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
      }
  }
}

TEST_CASE("kernel") {
  std::vector<int> j1 = {1, 2, 1};
  CHECK(Partition::kernel(j1).to_string() == "[[1,3],[2]]");
  std::vector<int> j2 = {5, 5, 5};
  CHECK(Partition::kernel(j2) == Partition::full(3));
  std::vector<int> j3 = {1, 2, 3};
  CHECK(Partition::kernel(j3) == Partition::singletons(3));
}

TEST_CASE("kernel depends only on the equality pattern") {
  std::vector<std::vector<int>> tuples = {
      {1, 2, 1, 3, 2}, {4, 4, 1, 1, 2}, {9, 8, 7, 9, 9}, {2, 2, 2, 2, 2}};
  for (const auto& J : tuples) {
    // injective relabeling f(x) = 7x + 3
    std::vector<int> relabeled;
    for (int x : J) relabeled.push_back(7 * x + 3);
    CHECK(Partition::kernel(J) == Partition::kernel(relabeled));
  }
}

TEST_CASE("is_noncrossing") {
  CHECK_FALSE(is_noncrossing(Partition::parse("[[1,3],[2,4]]")));
  CHECK(is_noncrossing(Partition::parse("[[1,9],[2,5,8],[3,4],[6,7]]")));
  // interval blocks are always noncrossing
  CHECK(is_noncrossing(Partition::parse("[[1,2],[3,4,5],[6]]")));
  CHECK(is_noncrossing(Partition::full(4)));
}

TEST_CASE("enumerate_nc counts are Catalan") {
  CHECK(enumerate_nc(1).size() == 1);
  CHECK(enumerate_nc(3).size() == 5);
  CHECK(enumerate_nc(4).size() == 14);
  auto cats = catalan_numbers(8);
  for (int n = 1; n <= 8; ++n)
    CHECK(Integer(enumerate_nc(n).size()) == cats[n]);
  CHECK_THROWS(enumerate_nc(0));
  CHECK_THROWS(enumerate_nc(kEnumerationBound + 1));
}

TEST_CASE("enumerate_nc equals brute-force filter and order is RGS-lex") {
  for (int n = 1; n <= 6; ++n) {
    auto all = all_partitions(n);
    std::vector<Partition> filtered;
    for (const auto& p : all)
      if (is_noncrossing(p)) filtered.push_back(p);
    auto nc = enumerate_nc(n);
    REQUIRE(nc.size() == filtered.size());
    for (size_t i = 0; i < nc.size(); ++i) CHECK(nc[i] == filtered[i]);
    // RGS-lex order, no duplicates
    for (size_t i = 0; i + 1 < nc.size(); ++i) CHECK(nc[i].rgs() < nc[i + 1].rgs());
  }
  // Bell numbers as a sanity check on the unfiltered enumeration
  CHECK(all_partitions(4).size() == 15);
  CHECK(all_partitions(5).size() == 52);
}

TEST_CASE("mobius identities") {
  NCMobius mob;
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : enumerate_nc(n)) CHECK(mob.mu(s, s) == 1);
  CHECK(mob.mu(Partition::singletons(3), Partition::full(3)) == 2);
  CHECK(mob.mu(Partition::singletons(4), Partition::full(4)) == -5);
  CHECK_THROWS(mob.mu(Partition::parse("[[1,3],[2]]"), Partition::parse("[[1],[2,3]]")));
  CHECK_THROWS(mob.mu(Partition::parse("[[1,3],[2,4]]"), Partition::full(4)));
}

TEST_CASE("mobius of the full interval matches the Catalan formula") {
  NCMobius mob;
  auto cats = catalan_numbers(7);
  for (int n = 1; n <= 7; ++n) {
    Rational expected(cats[n - 1]);
    if (n % 2 == 0) expected = -expected;
    CHECK(mob.mu(Partition::singletons(n), Partition::full(n)) == expected);
  }
}

TEST_CASE("defining recursion holds on the whole lattice, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    NCLattice lat(n);
    for (int i = 0; i < int(lat.elements.size()); ++i) {
      for (int j : lat.below[i]) {
        // sum over rho in [pi, sigma] of mu(rho, sigma) = [pi == sigma]
        Rational acc = 0;
        for (int r : lat.below[i])
          if (leq(lat.elements[j], lat.elements[r])) acc += lat.mu[i][r];
        CHECK(acc == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("apply_perm relabels blocks") {
  Partition p = Partition::parse("[[1,2],[3]]");
  std::vector<int> perm = {2, 0, 1};  // 0->2, 1->0, 2->1
  CHECK(apply_perm(p, perm).to_string() == "[[1,3],[2]]");
}
