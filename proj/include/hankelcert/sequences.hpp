#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hankelcert {

/// Strictly increasing finite set of nonnegative integer frequencies
/// k_0 < k_1 < ... < k_J.  The empty set is allowed.
class LacunarySet {
public:
  LacunarySet() = default;
  /// Validates that the entries are nonnegative and strictly increasing.
  explicit LacunarySet(std::vector<std::int64_t> indices);

  const std::vector<std::int64_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::int64_t operator[](std::size_t j) const { return indices_[j]; }
  /// Largest element k_J; requires a nonempty set.
  std::int64_t max_index() const;
  bool contains_zero() const { return !indices_.empty() && indices_.front() == 0; }
  bool contains(std::int64_t k) const;
  /// Position j with k_j == k, if present.
  std::optional<std::size_t> position_of(std::int64_t k) const;

private:
  std::vector<std::int64_t> indices_;
};

/// Signed decomposition k = k_{j_1} - k_{j_2} + k_{j_3} - ... with strictly
/// decreasing positions j_1 > j_2 > ... into a LacunarySet.  Canonical form:
/// a position whose frequency is 0 never appears (it would only pad the sum).
struct AlternatingRep {
  std::vector<std::size_t> positions;  // strictly decreasing
  std::int64_t value = 0;
};

/// True when k_{j+1} > (1+eps)*k_j for every consecutive pair.
bool is_hadamard(const LacunarySet& set, double eps);

/// True when k_{j+1} > 2*k_j for every consecutive pair (growth faster than
/// doubling; the classical "lacunary with ratio > 2" condition).
bool is_strongly_lacunary(const LacunarySet& set);

/// Supremum of the ratios eps where is_hadamard could hold, i.e.
/// min_j (k_{j+1}/k_j - 1) over pairs with k_j >= 1.  Returns +infinity when
/// no pair constrains the ratio (size <= 1, or only the pair starting at 0).
double detect_hadamard_eps(const LacunarySet& set);

/// M = max over m >= 1 of |K intersect [m, 2m)|.  Zero for the empty set and
/// for K = {0} (the element 0 lies in no interval [m, 2m) with m >= 1).
std::int64_t dyadic_count_bound(const LacunarySet& set);

/// Greedy partition of K into strongly lacunary subsequences: each element
/// joins the first part whose current tail it more than doubles.  Every
/// finite strictly increasing set decomposes; the part count is controlled
/// by detect_hadamard_eps (see tests).
std::vector<LacunarySet> decompose_strongly_lacunary(const LacunarySet& set);

/// Unique alternating representation of k over a strongly lacunary set, or
/// nullopt when none exists.  k = 0 always has the empty representation.
/// Throws std::invalid_argument if the set is not strongly lacunary.
std::optional<AlternatingRep> alternating_representation(std::int64_t k,
                                                         const LacunarySet& set);

/// All values in [0, k_max] possessing an alternating representation, sorted.
std::vector<std::int64_t> fold_set(const LacunarySet& set, std::int64_t k_max);

}  // namespace hankelcert
