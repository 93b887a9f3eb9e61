#include "hankelcert/sequences.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hankelcert {

LacunarySet::LacunarySet(std::vector<std::int64_t> indices)
    : indices_(std::move(indices)) {
  for (std::size_t j = 0; j < indices_.size(); ++j) {
    if (indices_[j] < 0)
      throw std::invalid_argument("LacunarySet: entries must be nonnegative");
    if (j > 0 && indices_[j] <= indices_[j - 1])
      throw std::invalid_argument("LacunarySet: entries must be strictly increasing");
  }
}

std::int64_t LacunarySet::max_index() const {
  if (indices_.empty())
    throw std::invalid_argument("LacunarySet::max_index: empty set");
  return indices_.back();
}

bool LacunarySet::contains(std::int64_t k) const {
  return std::binary_search(indices_.begin(), indices_.end(), k);
}

std::optional<std::size_t> LacunarySet::position_of(std::int64_t k) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), k);
  if (it == indices_.end() || *it != k) return std::nullopt;
  return static_cast<std::size_t>(it - indices_.begin());
}

bool is_hadamard(const LacunarySet& set, double eps) {
  if (eps <= 0.0)
    throw std::invalid_argument("is_hadamard: eps must be positive");
  const auto& k = set.indices();
  for (std::size_t j = 0; j + 1 < k.size(); ++j) {
    // k_j = 0 imposes no constraint: anything positive exceeds (1+eps)*0.
    if (static_cast<double>(k[j + 1]) <= (1.0 + eps) * static_cast<double>(k[j]))
      return false;
  }
  return true;
}

bool is_strongly_lacunary(const LacunarySet& set) {
  const auto& k = set.indices();
  for (std::size_t j = 0; j + 1 < k.size(); ++j)
    if (k[j + 1] <= 2 * k[j]) return false;
  return true;
}

double detect_hadamard_eps(const LacunarySet& set) {
  const auto& k = set.indices();
  double eps = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j + 1 < k.size(); ++j) {
    if (k[j] < 1) continue;
    double ratio = static_cast<double>(k[j + 1]) / static_cast<double>(k[j]) - 1.0;
    eps = std::min(eps, ratio);
  }
  return eps;
}

std::int64_t dyadic_count_bound(const LacunarySet& set) {
  // The count |K intersect [m, 2m)| is maximized at m equal to some element:
  // if [m, 2m) contains k_i..k_j with k_i >= m, then [k_i, 2k_i) contains the
  // same elements because k_j < 2m <= 2k_i.
  const auto& k = set.indices();
  std::int64_t best = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1) continue;
    auto lo = k.begin() + static_cast<std::ptrdiff_t>(i);
    auto hi = std::lower_bound(k.begin(), k.end(), 2 * k[i]);
    best = std::max(best, static_cast<std::int64_t>(hi - lo));
  }
  return best;
}

std::vector<LacunarySet> decompose_strongly_lacunary(const LacunarySet& set) {
  std::vector<std::vector<std::int64_t>> parts;
  for (std::int64_t k : set.indices()) {
    bool placed = false;
    for (auto& part : parts) {
      if (k > 2 * part.back()) {
        part.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) parts.push_back({k});
  }
  std::vector<LacunarySet> out;
  out.reserve(parts.size());
  for (auto& part : parts) out.emplace_back(std::move(part));
  return out;
}

std::optional<AlternatingRep> alternating_representation(std::int64_t k,
                                                         const LacunarySet& set) {
  if (!is_strongly_lacunary(set))
    throw std::invalid_argument(
        "alternating_representation: set must be strongly lacunary");
  if (k < 0) return std::nullopt;

  AlternatingRep rep;
  rep.value = k;
  const auto& ks = set.indices();
  std::int64_t remainder = k;
  // The leading index must be the smallest j with k_j >= remainder: any larger
  // j leaves a residue exceeding every admissible follow-up frequency.
  std::size_t limit = ks.size();  // indices below this are still available
  while (remainder > 0) {
    auto it = std::lower_bound(ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(limit),
                               remainder);
    if (it == ks.begin() + static_cast<std::ptrdiff_t>(limit)) return std::nullopt;
    std::size_t j = static_cast<std::size_t>(it - ks.begin());
    rep.positions.push_back(j);
    remainder = ks[j] - remainder;
    limit = j;  // subsequent positions must be strictly smaller
  }
  return rep;
}

std::vector<std::int64_t> fold_set(const LacunarySet& set, std::int64_t k_max) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k <= k_max; ++k)
    if (alternating_representation(k, set)) out.push_back(k);
  return out;
}

}  // namespace hankelcert
