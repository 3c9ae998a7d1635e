// Copyright 2026 The hystcon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYSTCON_PERMUTATION_HPP_
#define HYSTCON_PERMUTATION_HPP_

/// \file
/// Permutations in one-line notation and the few statistics the sorting
/// front ends need.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hystcon/errors.hpp"

namespace hystcon {

/// A bijection on [k], stored as the one-line sequence pi_1 ... pi_k.
class Permutation {
 public:
  Permutation() = default;

  /// Throws UsageError unless `images` holds each of 1..k exactly once.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const std::size_t k = images_.size();
    std::vector<char> seen(k + 1, 0);
    for (int v : images_) {
      if (v < 1 || static_cast<std::size_t>(v) > k) {
        throw UsageError("value " + std::to_string(v) + " outside [1," + std::to_string(k) + "]");
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw UsageError("value " + std::to_string(v) + " repeated in permutation");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(std::size_t k) {
    std::vector<int> images(k);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  std::size_t size() const noexcept { return images_.size(); }

  /// pi_i for 1 <= i <= k.
  int operator()(std::size_t i) const { return images_.at(i - 1); }

  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct CycleDecomposition {
  /// Every cycle including fixed points; smallest element first, cycles
  /// ordered by their smallest element.
  std::vector<std::vector<int>> cycles;

  std::size_t count() const noexcept { return cycles.size(); }

  /// Cycles of length at least two, in the same order.
  std::vector<std::vector<int>> nontrivial() const {
    std::vector<std::vector<int>> out;
    for (const auto& c : cycles) {
      if (c.size() > 1) out.push_back(c);
    }
    return out;
  }
};

inline CycleDecomposition cycle_decomposition(const Permutation& p) {
  const std::size_t k = p.size();
  std::vector<char> seen(k + 1, 0);
  CycleDecomposition out;
  for (std::size_t start = 1; start <= k; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(p(i))) {
      seen[i] = 1;
      cycle.push_back(static_cast<int>(i));
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

/// Minimum number of exchanges that sort p: k - c(p).
inline std::size_t cayley_distance(const Permutation& p) {
  return p.size() - cycle_decomposition(p).count();
}

/// Value pairs (pi_i, pi_j) with i < j and pi_i > pi_j, ordered by (i, j).
inline std::vector<std::pair<int, int>> inversions(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  const auto& a = p.images();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] > a[j]) out.emplace_back(a[i], a[j]);
    }
  }
  return out;
}

inline bool is_involution(const Permutation& p) {
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (static_cast<std::size_t>(p(static_cast<std::size_t>(p(i)))) != i) return false;
  }
  return true;
}

/// True iff every inversion sits on two neighboring positions.
inline bool all_inversions_adjacent(const Permutation& p) {
  const auto& a = p.images();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 2; j < a.size(); ++j) {
      if (a[i] > a[j]) return false;
    }
  }
  return true;
}

/// p with positions i and j swapped. Throws UsageError unless 1 <= i < j <= k.
inline Permutation apply_exchange(const Permutation& p, std::size_t i, std::size_t j) {
  if (!(1 <= i && i < j && j <= p.size())) {
    throw UsageError("exchange (" + std::to_string(i) + "," + std::to_string(j) +
                     ") invalid for size " + std::to_string(p.size()));
  }
  std::vector<int> images = p.images();
  std::swap(images[i - 1], images[j - 1]);
  return Permutation(std::move(images));
}

/// "2 3 1 4".
inline std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.images()[i]);
  }
  return out;
}

}  // namespace hystcon

#endif  // HYSTCON_PERMUTATION_HPP_
