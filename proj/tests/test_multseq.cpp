#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "arf/errors.hpp"
#include "arf/multiplicity_sequence.hpp"

using arf::CompatibilityLevel;
using arf::Error;
using arf::MultiplicitySequence;
using arf::compatibility;
using arf::errc;

namespace {

MultiplicitySequence seq(std::vector<int> v) {
  return MultiplicitySequence::validated(std::move(v));
}

// Random valid sequences, built from the tail outward: prepending a member
// of the semigroup that is >= the multiplicity always stays valid.
MultiplicitySequence random_sequence(std::mt19937& rng, int max_steps = 8,
                                     int max_entry = 40) {
  MultiplicitySequence m = MultiplicitySequence::ones();
  const int steps = static_cast<int>(rng() % (max_steps + 1));
  for (int s = 0; s < steps; ++s) {
    std::vector<long long> choices;
    for (long long x : m.elements_up_to(max_entry))
      if (x >= m.multiplicity() && x >= 1) choices.push_back(x);
    if (choices.empty()) break;
    m = m.prepend(static_cast<int>(choices[rng() % choices.size()]));
  }
  return m;
}

long long gap_count_below_conductor(const MultiplicitySequence& m) {
  long long gaps = 0;
  for (long long x = 0; x < m.conductor(); ++x)
    if (!m.contains(x)) ++gaps;
  return gaps;
}

}  // namespace

TEST_SUITE_BEGIN("multseq");

TEST_CASE("validation accepts the documented sequences") {
  CHECK(seq({2, 2}).entries() == std::vector<int>{2, 2});
  CHECK(seq({1}).is_ones());
  CHECK(seq({3, 2}).length() == 2);
  CHECK(seq({5}).length() == 1);
}

TEST_CASE("validation rejects [3,2,2]: no suffix-sum witness at entry 1") {
  // oracle: suffix partial sums of (2,2,1,1,...) never hit 3
  std::vector<int> tail{2, 2};
  std::vector<long long> sums;
  long long acc = 0;
  for (size_t i = 0; i < tail.size(); ++i) sums.push_back(acc += tail[i]);
  for (int pad = 0; pad < 4; ++pad) sums.push_back(acc += 1);
  CHECK(std::find(sums.begin(), sums.end(), 3) == sums.end());

  try {
    seq({3, 2, 2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_suffix_sum_witness);
    CHECK(e.index() == 1);
  }
}

TEST_CASE("validation rejects non-monotone and non-canonical input") {
  CHECK_THROWS_AS(seq({2, 3}), Error);
  try {
    seq({2, 3});
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_nonincreasing);
  }
  try {
    seq({2, 1});
  } catch (const Error& e) {
    CHECK(e.code() == errc::non_canonical_tail);
  }
  try {
    seq({1, 1});
  } catch (const Error& e) {
    CHECK(e.code() == errc::non_canonical_tail);
  }
  CHECK_THROWS_AS(seq({}), Error);
  CHECK_THROWS_AS(seq({0}), Error);
}

TEST_CASE("semigroup view of [1], [2,2] and [3,2]") {
  auto v1 = arf::semigroup_view(seq({1}));
  CHECK(v1.conductor == 0);
  CHECK(v1.genus == 0);
  CHECK(v1.small_elements.empty());

  auto v2 = arf::semigroup_view(seq({2, 2}));
  CHECK(v2.conductor == 4);
  CHECK(v2.genus == 2);
  CHECK(v2.small_elements == std::vector<long long>{0, 2});
  CHECK(gap_count_below_conductor(v2.source) == 2);  // gaps {1,3}

  auto v3 = arf::semigroup_view(seq({3, 2}));
  CHECK(v3.conductor == 5);
  CHECK(v3.genus == 3);
  CHECK(v3.small_elements == std::vector<long long>{0, 3});
  CHECK(gap_count_below_conductor(v3.source) == 3);  // gaps {1,2,4}
}

TEST_CASE("membership") {
  CHECK(seq({2, 2}).contains(2));
  CHECK_FALSE(seq({2, 2}).contains(3));
  CHECK(seq({1}).contains(1));
  CHECK(seq({2, 2}).contains(0));
  CHECK_FALSE(seq({2, 2}).contains(-1));
  CHECK(seq({2, 2}).elements_up_to(6) ==
        std::vector<long long>{0, 2, 4, 5, 6});
}

TEST_CASE("s-values") {
  CHECK(seq({1}).s_values(3) == std::vector<int>{2, 3, 4});
  CHECK(seq({3}).s_values(1) == std::vector<int>{4});
  CHECK(seq({2, 2}).s_values(2) == std::vector<int>{2, 4});
}

TEST_CASE("compatibility levels from the worked examples") {
  CHECK(compatibility(seq({1}), seq({3})) == CompatibilityLevel::at(2));
  CHECK(compatibility(seq({1}), seq({2, 2})) == CompatibilityLevel::at(3));
  CHECK(compatibility(seq({2}), seq({2})).is_unbounded());
  CHECK(compatibility(seq({1}), seq({2})) == CompatibilityLevel::at(2));
  CHECK(compatibility(seq({4}), seq({5})) == CompatibilityLevel::at(5));
  CHECK(compatibility(seq({4}), seq({3, 2})) == CompatibilityLevel::at(3));
  CHECK(compatibility(seq({2, 2}), seq({5})) == CompatibilityLevel::at(2));
  CHECK(compatibility(seq({2, 2}), seq({3, 2})) == CompatibilityLevel::at(2));
  CHECK(compatibility(seq({3}), seq({4})) == CompatibilityLevel::at(4));
}

TEST_CASE("compatibility allows() respects the bound") {
  const auto c = compatibility(seq({1}), seq({2}));
  CHECK(c.allows(1));
  CHECK(c.allows(2));
  CHECK_FALSE(c.allows(3));
  CHECK(compatibility(seq({2}), seq({2})).allows(100));
}

TEST_CASE("random sequences: round-trip, symmetry, genus oracle") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 300; ++iter) {
    const auto m = random_sequence(rng);
    CAPTURE(m.to_string());

    // round-trip through validation
    CHECK(MultiplicitySequence::validated(m.entries()) == m);

    // genus equals the number of gaps below the conductor
    CHECK(m.genus() == gap_count_below_conductor(m));

    // everything at or above the conductor is a member
    for (long long x = m.conductor(); x < m.conductor() + 40; ++x)
      CHECK(m.contains(x));

    // dropping the first entry stays valid
    CHECK(MultiplicitySequence::try_validated(m.tail().entries()).has_value());

    const auto other = random_sequence(rng);
    const auto ab = compatibility(m, other);
    const auto ba = compatibility(other, m);
    CHECK(ab == ba);
    if (m == other) {
      CHECK(ab.is_unbounded());
    } else {
      CHECK_FALSE(ab.is_unbounded());
      CHECK(ab.level() >= 1);
    }
  }
}

TEST_CASE("genus gap count on large conductors") {
  // exhaustive gap scan stays honest up to conductor 10^4
  const auto big = seq({5000, 5000});
  CHECK(big.conductor() == 10000);
  CHECK(big.genus() == 9998);
  CHECK(big.genus() == gap_count_below_conductor(big));
  const auto prime = seq({9973});
  CHECK(prime.genus() == gap_count_below_conductor(prime));
}

TEST_CASE("s-value is the unique suffix-sum witness") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    const auto m = random_sequence(rng);
    for (int k = 1; k <= m.length() + 2; ++k) {
      const int s = m.s_value(k);
      long long acc = 0;
      int hits = 0;
      for (int l = k + 1; l <= s + 3; ++l) {
        acc += m.entry(l);
        if (acc == m.entry(k)) {
          ++hits;
          CHECK(l == s);
        }
      }
      CHECK(hits == 1);
    }
  }
}

TEST_SUITE_END();
