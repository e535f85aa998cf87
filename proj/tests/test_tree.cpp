#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "arf/errors.hpp"
#include "arf/genusr.hpp"
#include "arf/tree.hpp"

using arf::Error;
using arf::FiniteGoodSemigroup;
using arf::MultiplicitySequence;
using arf::NodeGrid;
using arf::TreeMatrix;
using arf::UntwistedTree;
using arf::errc;

namespace {

MultiplicitySequence seq(std::vector<int> v) {
  return MultiplicitySequence::validated(std::move(v));
}

UntwistedTree tree(std::vector<std::vector<int>> seqs, std::vector<int> glue) {
  std::vector<MultiplicitySequence> s;
  for (auto& v : seqs) s.push_back(seq(std::move(v)));
  return UntwistedTree::validated(std::move(s), std::move(glue));
}

std::set<std::vector<long long>> elements_of(const FiniteGoodSemigroup& s) {
  return {s.elements().begin(), s.elements().end()};
}

}  // namespace

TEST_SUITE_BEGIN("tree");

TEST_CASE("tree validation") {
  CHECK(tree({{1}, {3}}, {1}).rank() == 2);
  CHECK(tree({{2}, {2}}, {100}).gluing_level(1) == 100);
  try {
    tree({{1}, {2}}, {3});  // Comp([1],[2]) = 2
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::gluing_exceeds_compatibility);
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(tree({{1}, {2}}, {0}), Error);
  CHECK_THROWS_AS(tree({{1}, {2}}, {1, 1}), Error);
}

TEST_CASE("genus of a tree") {
  CHECK(tree({{1}, {3}}, {1}).genus() == 3);   // 0 + 2 + 1
  CHECK(tree({{1}, {1}}, {3}).genus() == 3);   // 0 + 0 + 3
  CHECK(tree({{2}, {2}}, {1}).genus() == 3);   // 1 + 1 + 1
  CHECK(tree({{2, 2}}, {}).genus() == 2);      // rank 1
}

TEST_CASE("conductor of a tree") {
  CHECK(tree({{1}, {3}}, {1}).conductor() == std::vector<long long>{1, 3});
  CHECK(tree({{1}, {2}}, {2}).conductor() == std::vector<long long>{2, 3});
  CHECK(tree({{1}, {1}}, {3}).conductor() == std::vector<long long>{3, 3});
  // rank 1 delegates to the numerical conductor
  CHECK(tree({{1}}, {}).conductor() == std::vector<long long>{0});
  CHECK(tree({{2, 2}}, {}).conductor() == std::vector<long long>{4});
}

TEST_CASE("node grid of the worked figures") {
  const auto g6 = node_grid(tree({{1}, {2}}, {2}));
  CHECK(g6.depth == 3);
  CHECK(g6.node(1, 1) == std::vector<int>{1, 2});
  CHECK(g6.node(2, 1) == std::vector<int>{1, 2});  // shared root
  CHECK(g6.node(1, 2) == std::vector<int>{1, 1});
  CHECK(g6.node(2, 2) == std::vector<int>{1, 1});
  CHECK(g6.node(1, 3) == std::vector<int>{1, 0});
  CHECK(g6.node(2, 3) == std::vector<int>{0, 1});
  CHECK(g6.distinct.size() == 4);

  const auto g1 = node_grid(tree({{1}, {3}}, {1}));
  CHECK(g1.depth == 2);
  CHECK(g1.node(1, 1) == std::vector<int>{1, 3});
  CHECK(g1.node(1, 2) == std::vector<int>{1, 0});
  CHECK(g1.node(2, 2) == std::vector<int>{0, 1});

  const auto gs = node_grid(tree({{2, 2}}, {}));
  CHECK(gs.depth == 3);
  CHECK(gs.node(1, 1) == std::vector<int>{2});
  CHECK(gs.node(1, 2) == std::vector<int>{2});
  CHECK(gs.node(1, 3) == std::vector<int>{1});
  CHECK(gs.node(1, 7) == std::vector<int>{1});  // lazily canonical
}

TEST_CASE("grid properties over small enumerations") {
  arf::TreeEnumerator enumerator;
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& t : enumerator.list(r, n)) {
        const auto grid = node_grid(t);
        // nodes at the final level are canonical
        for (int i = 1; i <= r; ++i) {
          const auto leaf = grid.node(i, grid.depth);
          int nonzero = 0;
          for (int h = 0; h < r; ++h)
            if (leaf[h] != 0) ++nonzero;
          CHECK(nonzero == 1);
          CHECK(leaf[i - 1] == 1);
        }
        // the sum of the distinct non-canonical nodes is the conductor
        std::vector<long long> sum(r, 0);
        for (const auto& node : grid.distinct)
          if (!node.is_canonical())
            for (int h = 0; h < r; ++h) sum[h] += node.value[h];
        CHECK(sum == t.conductor());
        // branch projection reproduces the sequences entrywise
        for (int i = 1; i <= r; ++i)
          for (int j = 1; j <= grid.depth; ++j)
            CHECK(grid.node(i, j)[i - 1] == t.sequence(i).entry(j));
      }
    }
  }
}

TEST_CASE("expansion inside a box") {
  const auto s1 = expand_semigroup(tree({{1}, {1}}, {3}), {5, 5});
  std::set<std::vector<long long>> expected{{0, 0}, {1, 1}, {2, 2}};
  for (long long a = 3; a < 5; ++a)
    for (long long b = 3; b < 5; ++b) expected.insert({a, b});
  CHECK(elements_of(s1) == expected);

  const auto s2 = expand_semigroup(tree({{2, 2}}, {}), {7});
  CHECK(elements_of(s2) ==
        std::set<std::vector<long long>>{{0}, {2}, {4}, {5}, {6}});

  const auto s3 = expand_semigroup(tree({{1}, {3}}, {1}), {3, 5});
  std::set<std::vector<long long>> expected3{{0, 0}};
  for (long long a = 0; a + 1 < 3; ++a)
    for (long long b = 0; b + 3 < 5; ++b) expected3.insert({1 + a, 3 + b});
  CHECK(elements_of(s3) == expected3);

  // only the zero vector has a zero component
  for (const auto& v : s1.elements())
    if (v != std::vector<long long>{0, 0})
      CHECK(std::find(v.begin(), v.end(), 0LL) == v.end());

  CHECK_THROWS_AS(expand_semigroup(tree({{1}, {3}}, {1}), {1, 3}), Error);
  try {
    expand_semigroup(tree({{1}, {3}}, {1}), {2, 3});
  } catch (const Error& e) {
    CHECK(e.code() == errc::box_too_small);
  }
}

TEST_CASE("reversal") {
  const auto t = tree({{1}, {3}}, {1});
  const auto rev = t.reversed();
  CHECK(rev == tree({{3}, {1}}, {1}));
  CHECK(rev.reversed() == t);
  CHECK(tree({{2}, {2}}, {1}).reversed() == tree({{2}, {2}}, {1}));

  arf::TreeEnumerator enumerator;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& u : enumerator.list(3, n)) {
      CHECK(u.reversed().reversed() == u);
      CHECK(u.reversed().genus() == u.genus());
      auto c = u.conductor();
      std::reverse(c.begin(), c.end());
      CHECK(u.reversed().conductor() == c);
    }
  }
}

TEST_CASE("matrix from a tree") {
  const auto m2 = TreeMatrix::from_tree(tree({{1}, {3}}, {1}));
  CHECK(m2.level(1, 2) == 1);
  CHECK(m2.levels() == std::vector<std::vector<int>>{{0, 1}, {0, 0}});

  const auto m3a = TreeMatrix::from_tree(tree({{2}, {2}, {2}}, {2, 1}));
  CHECK(m3a.level(1, 2) == 2);
  CHECK(m3a.level(2, 3) == 1);
  CHECK(m3a.level(1, 3) == 1);

  const auto m3b = TreeMatrix::from_tree(tree({{2}, {2}, {2}}, {1, 2}));
  CHECK(m3b.level(1, 3) == 1);
}

TEST_CASE("permutation of a matrix") {
  const auto t = tree({{1}, {3}}, {1});
  const auto m = TreeMatrix::from_tree(t);
  CHECK(m.permuted({1, 2}) == m);
  CHECK(m.permuted({2, 1}) == TreeMatrix::from_tree(t.reversed()));

  // rotation 1->2->3->1 means new position a shows old branch sigma[a]
  const auto t3 = tree({{2}, {2}, {2}}, {2, 1});
  const auto m3 = TreeMatrix::from_tree(t3);
  const std::vector<int> sigma{2, 3, 1};
  const auto rotated = m3.permuted(sigma);
  for (int a = 1; a <= 3; ++a) {
    CHECK(rotated.sequences()[a - 1] == t3.sequence(sigma[a - 1]));
    for (int b = a + 1; b <= 3; ++b)
      CHECK(rotated.level(a, b) == m3.level(sigma[a - 1], sigma[b - 1]));
  }
}

TEST_CASE("identity and full-reversal permutations stay untwisted") {
  arf::TreeEnumerator enumerator;
  for (int r = 2; r <= 4; ++r) {
    std::vector<int> identity(r), reversal(r);
    for (int i = 0; i < r; ++i) {
      identity[i] = i + 1;
      reversal[i] = r - i;
    }
    for (const auto& t : enumerator.list(r, 5)) {
      const auto m = TreeMatrix::from_tree(t);
      CHECK(m.permuted(identity).is_untwisted());
      CHECK(m.permuted(reversal).is_untwisted());
      CHECK(m.permuted(reversal) == TreeMatrix::from_tree(t.reversed()));
    }
  }
}

TEST_CASE("node grid of a twisted matrix") {
  // branches 1 and 3 glued to level 2, branch 2 split off after the root
  const auto twisted = TreeMatrix::validated(
      {seq({2}), seq({2}), seq({2, 2})},
      {{0, 1, 2}, {0, 0, 1}, {0, 0, 0}});
  const auto grid = node_grid(twisted);
  CHECK(grid.node(1, 1) == std::vector<int>{2, 2, 2});
  CHECK(grid.node(1, 2) == std::vector<int>{1, 0, 2});
  CHECK(grid.node(3, 2) == std::vector<int>{1, 0, 2});  // shared
  CHECK(grid.node(2, 2) == std::vector<int>{0, 1, 0});

  // non-canonical node sum = conductor of the untwisted form, un-permuted
  std::vector<long long> sum(3, 0);
  for (const auto& node : grid.distinct)
    if (!node.is_canonical())
      for (int h = 0; h < 3; ++h) sum[h] += node.value[h];
  CHECK(sum == std::vector<long long>{3, 2, 4});

  const auto sigma = twisted.untwisting_permutation();
  REQUIRE(sigma.has_value());
  const auto straight = twisted.permuted(*sigma).to_untwisted();
  for (int a = 1; a <= 3; ++a)
    CHECK(straight.conductor()[a - 1] == sum[(*sigma)[a - 1] - 1]);
}

TEST_CASE("untwistedness") {
  CHECK(TreeMatrix::from_tree(tree({{2}, {2}, {2}}, {2, 1})).is_untwisted());
  CHECK(TreeMatrix::from_tree(tree({{1}, {2}}, {2})).is_untwisted());

  // the twisted matrix from the worked example: p12=1, p13=2, p23=1
  const auto twisted = TreeMatrix::validated(
      {seq({2}), seq({2}), seq({2, 2})},
      {{0, 1, 2}, {0, 0, 1}, {0, 0, 0}});
  CHECK_FALSE(twisted.is_untwisted());
  const auto sigma = twisted.untwisting_permutation();
  REQUIRE(sigma.has_value());
  CHECK(twisted.permuted(*sigma).is_untwisted());

  // r = 2 matrices are always untwisted
  CHECK(TreeMatrix::validated({seq({1}), seq({3})}, {{0, 2}, {0, 0}})
            .is_untwisted());
}

TEST_CASE("matrix validation errors") {
  // level above compatibility
  try {
    TreeMatrix::validated({seq({1}), seq({2})}, {{0, 3}, {0, 0}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::gluing_exceeds_compatibility);
  }
  // no permutation of (3,1,3) is untwisted
  CHECK_THROWS_AS(
      TreeMatrix::validated({seq({2}), seq({2}), seq({2})},
                            {{0, 3, 1}, {0, 0, 3}, {0, 0, 0}}),
      Error);
  // twisted beyond the search cap
  try {
    TreeMatrix::validated({seq({2}), seq({2}), seq({2})},
                          {{0, 1, 2}, {0, 0, 1}, {0, 0, 0}}, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::rank_too_large_for_twisted);
  }
}

TEST_CASE("to_untwisted round trip") {
  const auto t = tree({{2}, {2}, {2, 2}}, {3, 2});
  CHECK(TreeMatrix::from_tree(t).to_untwisted() == t);
}

TEST_SUITE_END();
