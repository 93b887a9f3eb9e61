#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hankelcert/sequences.hpp"
#include "test_util.hpp"

using namespace hankelcert;

namespace {

/// Every alternating sum k_{j1} - k_{j2} + ... over strictly decreasing
/// positions (zero-valued frequencies excluded), found by enumerating all
/// subsets.  Returns value -> list of position subsets producing it.
std::map<std::int64_t, std::vector<std::vector<std::size_t>>> all_alternating_sums(
    const LacunarySet& K) {
  std::map<std::int64_t, std::vector<std::vector<std::size_t>>> sums;
  const std::size_t n = K.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<std::size_t> positions;  // descending
    for (std::size_t j = n; j-- > 0;)
      if (mask & (std::uint64_t(1) << j)) positions.push_back(j);
    bool has_zero_term = false;
    std::int64_t value = 0;
    double sign = 1.0;
    for (std::size_t pos : positions) {
      if (K[pos] == 0) has_zero_term = true;
      value += static_cast<std::int64_t>(sign) * K[pos];
      sign = -sign;
    }
    if (has_zero_term) continue;  // canonical representations skip value 0
    if (value < 0) continue;
    sums[value].push_back(positions);
  }
  return sums;
}

std::int64_t brute_force_dyadic_bound(const LacunarySet& K) {
  std::int64_t best = 0;
  if (K.size() == 0) return 0;
  for (std::int64_t m = 1; m <= K.max_index(); ++m) {
    std::int64_t count = 0;
    for (std::size_t j = 0; j < K.size(); ++j)
      if (K[j] >= m && K[j] < 2 * m) ++count;
    best = std::max(best, count);
  }
  return best;
}

}  // namespace

TEST_CASE("lacunary set validation and accessors") {
  const LacunarySet K({0, 1, 3, 7});
  CHECK(K.size() == 4);
  CHECK(K[2] == 3);
  CHECK(K.max_index() == 7);
  CHECK(K.contains_zero());
  CHECK(K.contains(3));
  CHECK_FALSE(K.contains(2));
  CHECK(K.position_of(7) == 3);

  CHECK_THROWS_AS(LacunarySet({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LacunarySet({3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(LacunarySet({-1, 2}), std::invalid_argument);
  CHECK(LacunarySet(std::vector<std::int64_t>{}).size() == 0);
  CHECK_FALSE(LacunarySet({5}).contains_zero());
}

TEST_CASE("hadamard gap condition") {
  CHECK(is_hadamard(LacunarySet({1, 2, 4, 8}), 0.9));
  CHECK_FALSE(is_hadamard(LacunarySet({1, 2, 3}), 0.9));
  CHECK(is_hadamard(LacunarySet({0, 1, 3, 7}), 0.5));
  CHECK(is_hadamard(LacunarySet(std::vector<std::int64_t>{}), 1.0));
  CHECK(is_hadamard(LacunarySet({9}), 5.0));
  CHECK_THROWS_AS(is_hadamard(LacunarySet({1, 2}), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(is_hadamard(LacunarySet({1, 2}), -1.0), std::invalid_argument);
}

TEST_CASE("strong lacunarity is the ratio-2 case") {
  CHECK(is_strongly_lacunary(LacunarySet({0, 1, 3, 7})));
  CHECK_FALSE(is_strongly_lacunary(LacunarySet({1, 2, 4})));  // 2 = 2*1 not strict
  CHECK(is_strongly_lacunary(LacunarySet({5, 11, 23})));
  CHECK(is_strongly_lacunary(LacunarySet(std::vector<std::int64_t>{})));
  CHECK(is_strongly_lacunary(LacunarySet({0})));
}

TEST_CASE("largest admissible gap ratio") {
  CHECK(detect_hadamard_eps(LacunarySet({1, 2, 3, 5, 9, 17})) == doctest::Approx(0.5));
  CHECK(std::isinf(detect_hadamard_eps(LacunarySet(std::vector<std::int64_t>{}))));
  CHECK(std::isinf(detect_hadamard_eps(LacunarySet({4}))));
  // Pairs starting at zero impose no ratio constraint.
  CHECK(std::isinf(detect_hadamard_eps(LacunarySet({0, 5}))));

  auto rng = testutil::make_rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const LacunarySet K = testutil::random_hadamard(rng, 0.3, 4000);
    if (K.size() < 2) continue;
    const double eps = detect_hadamard_eps(K);
    CHECK(eps >= 0.3);
    // The detected value is the supremum: strictly below it passes, strictly
    // above it fails somewhere (evaluating exactly at eps is rounding noise).
    CHECK(is_hadamard(K, eps * (1 - 1e-9)));
    CHECK_FALSE(is_hadamard(K, eps * (1 + 1e-9)));
  }
}

TEST_CASE("strong lacunarity matches eps = 1 detection") {
  auto rng = testutil::make_rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const LacunarySet K = testutil::random_hadamard(rng, 0.5, 2000);
    CHECK(is_strongly_lacunary(K) == is_hadamard(K, 1.0));
  }
}

TEST_CASE("dyadic interval count") {
  CHECK(dyadic_count_bound(LacunarySet({1, 2, 4, 8})) == 1);
  CHECK(dyadic_count_bound(LacunarySet({3, 4, 5})) == 3);
  CHECK(dyadic_count_bound(LacunarySet(std::vector<std::int64_t>{})) == 0);
  CHECK(dyadic_count_bound(LacunarySet({0})) == 0);  // no element >= 1
  CHECK(dyadic_count_bound(LacunarySet({1, 2, 3, 5, 9, 17})) == 2);

  // The family 2^j - 1 starting from 1 has exactly one element per interval.
  std::vector<std::int64_t> fam;
  for (int j = 1; j <= 12; ++j) {
    fam.push_back((std::int64_t(1) << j) - 1);
    CHECK(dyadic_count_bound(LacunarySet(fam)) == 1);
  }
}

TEST_CASE("dyadic count agrees with a brute-force scan") {
  auto rng = testutil::make_rng(303);
  for (int trial = 0; trial < 25; ++trial) {
    const LacunarySet K = testutil::random_hadamard(rng, 0.2, 800);
    CHECK(dyadic_count_bound(K) == brute_force_dyadic_bound(K));
  }
  // Dense non-Hadamard sets exercise larger counts.
  for (int trial = 0; trial < 25; ++trial) {
    std::set<std::int64_t> pool;
    std::uniform_int_distribution<std::int64_t> pick(0, 60);
    for (int i = 0; i < 12; ++i) pool.insert(pick(rng));
    const LacunarySet K(std::vector<std::int64_t>(pool.begin(), pool.end()));
    CHECK(dyadic_count_bound(K) == brute_force_dyadic_bound(K));
  }
}

TEST_CASE("greedy split into strongly lacunary parts") {
  const auto parts = decompose_strongly_lacunary(LacunarySet({1, 2, 4, 8}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].indices() == std::vector<std::int64_t>{1, 4});
  CHECK(parts[1].indices() == std::vector<std::int64_t>{2, 8});

  const auto whole = decompose_strongly_lacunary(LacunarySet({1, 3, 7, 15}));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].indices() == std::vector<std::int64_t>{1, 3, 7, 15});

  const auto pair = decompose_strongly_lacunary(LacunarySet({2, 3}));
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].indices() == std::vector<std::int64_t>{2});
  CHECK(pair[1].indices() == std::vector<std::int64_t>{3});
}

TEST_CASE("decomposition parts partition the set and bound the count") {
  auto rng = testutil::make_rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const double eps = 0.15 + 0.2 * (trial % 5);
    const LacunarySet K = testutil::random_hadamard(rng, eps, 5000);
    if (K.size() == 0) continue;
    const auto parts = decompose_strongly_lacunary(K);

    std::vector<std::int64_t> merged;
    for (const auto& part : parts) {
      CHECK(is_strongly_lacunary(part));
      merged.insert(merged.end(), part.indices().begin(), part.indices().end());
    }
    std::sort(merged.begin(), merged.end());
    CHECK(merged == K.indices());

    const double detected = detect_hadamard_eps(K);
    if (std::isfinite(detected) && detected > 0) {
      const auto limit = static_cast<std::size_t>(
          std::ceil(std::log(2.0) / std::log1p(detected))) + 1;
      CHECK(parts.size() <= limit);
    }
  }
}

TEST_CASE("alternating representation: pinned cases") {
  const LacunarySet K({0, 1, 3, 7});

  const auto rep5 = alternating_representation(5, K);
  REQUIRE(rep5.has_value());
  CHECK(rep5->positions == std::vector<std::size_t>{3, 2, 1});  // 7 - 3 + 1
  CHECK(rep5->value == 5);

  const auto rep0 = alternating_representation(0, K);
  REQUIRE(rep0.has_value());
  CHECK(rep0->positions.empty());

  const auto rep2 = alternating_representation(2, K);
  REQUIRE(rep2.has_value());
  CHECK(rep2->positions == std::vector<std::size_t>{2, 1});  // 3 - 1

  CHECK_FALSE(alternating_representation(2, LacunarySet({0, 1, 5})).has_value());
  CHECK_THROWS_AS(alternating_representation(3, LacunarySet({1, 2, 4})),
                  std::invalid_argument);
}

TEST_CASE("alternating representations are unique and greedily found") {
  auto rng = testutil::make_rng(505);
  for (int trial = 0; trial < 30; ++trial) {
    const LacunarySet K =
        testutil::random_strongly_lacunary(rng, 600, trial % 2 == 0);
    const auto sums = all_alternating_sums(K);

    for (const auto& [value, reps] : sums) {
      CHECK(reps.size() == 1);  // uniqueness over the whole enumeration
      const auto found = alternating_representation(value, K);
      REQUIRE(found.has_value());
      CHECK(found->positions == reps.front());
    }
    // Values with no representation are reported as such.
    for (std::int64_t k = 0; k <= K.max_index(); ++k) {
      const bool representable = sums.count(k) > 0;
      CHECK(alternating_representation(k, K).has_value() == representable);
    }
  }
}

TEST_CASE("representable frequencies up to a limit") {
  const auto full = fold_set(LacunarySet({0, 1, 3, 7}), 7);
  CHECK(full == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6, 7});

  const auto gappy = fold_set(LacunarySet({0, 1, 5}), 5);
  CHECK(gappy == std::vector<std::int64_t>{0, 1, 4, 5});

  const auto empty = fold_set(LacunarySet(std::vector<std::int64_t>{}), 3);
  CHECK(empty == std::vector<std::int64_t>{0});
}

TEST_CASE("fold set is exactly the domain of the representation") {
  auto rng = testutil::make_rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    const LacunarySet K =
        testutil::random_strongly_lacunary(rng, 400, trial % 2 == 0);
    const std::int64_t k_max = K.size() ? K.max_index() : 10;
    const auto folded = fold_set(K, k_max);
    std::set<std::int64_t> in_fold(folded.begin(), folded.end());
    for (std::int64_t k = 0; k <= k_max; ++k)
      CHECK(alternating_representation(k, K).has_value() == (in_fold.count(k) > 0));
  }
}
