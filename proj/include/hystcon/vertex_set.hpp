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

#ifndef HYSTCON_VERTEX_SET_HPP_
#define HYSTCON_VERTEX_SET_HPP_

/// \file
/// Vertices of the directed hypercube H_n: subsets of the ground set [n].
///
/// The hypercube is never materialized. A vertex is a bit vector over the
/// ground set and its neighborhoods are generated on demand. Arcs go upward,
/// from a set U to every U + {q} with q not in U.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hystcon/errors.hpp"

namespace hystcon {

/// A subset of the ground set {1, ..., n}.
///
/// Elements are 1-based externally; element q lives at bit q-1. Sets with
/// n <= 64 keep their single word inline, larger sets use a heap array of
/// words. Observable behavior does not depend on which storage is used.
///
/// The total order compares word by word, and inside a word the lowest
/// element is the most significant bit: a set containing the smallest
/// element on which two sets differ is the greater one.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;

  /// Empty set over a ground set of size n.
  explicit VertexSet(std::size_t n) : n_(n) {
    if (n > kWordBits) heap_ = std::make_unique<Word[]>(word_count(n));
  }

  VertexSet(std::size_t n, std::initializer_list<int> elements)
      : VertexSet(from_elements(n, std::span(elements.begin(), elements.size()))) {}

  /// Throws UsageError on an element outside [1, n] or a repeated element.
  static VertexSet from_elements(std::size_t n, std::span<const int> elements) {
    VertexSet v(n);
    for (int q : elements) {
      v.check_element(q);
      if (v.contains(q)) {
        throw UsageError("element " + std::to_string(q) + " repeated in set");
      }
      v.set_bit(static_cast<std::size_t>(q - 1));
    }
    return v;
  }

  static VertexSet from_elements(std::size_t n, const std::vector<int>& elements) {
    return from_elements(n, std::span<const int>(elements));
  }

  /// The top vertex [n].
  static VertexSet full(std::size_t n) {
    VertexSet v(n);
    for (std::size_t i = 0; i < n; ++i) v.set_bit(i);
    return v;
  }

  VertexSet(const VertexSet& other) : inline_(other.inline_), n_(other.n_) {
    if (other.heap_) {
      const std::size_t count = word_count(n_);
      heap_ = std::make_unique<Word[]>(count);
      std::copy_n(other.heap_.get(), count, heap_.get());
    }
  }

  VertexSet& operator=(const VertexSet& other) {
    if (this != &other) {
      VertexSet copy(other);
      *this = std::move(copy);
    }
    return *this;
  }

  VertexSet(VertexSet&& other) noexcept
      : inline_(other.inline_), heap_(std::move(other.heap_)), n_(other.n_) {}

  VertexSet& operator=(VertexSet&& other) noexcept {
    inline_ = other.inline_;
    heap_ = std::move(other.heap_);
    n_ = other.n_;
    return *this;
  }

  ~VertexSet() = default;

  std::size_t ground_size() const noexcept { return n_; }

  /// Throws UsageError if q is outside [1, n].
  bool contains(int q) const {
    check_element(q);
    return test_bit(static_cast<std::size_t>(q - 1));
  }

  /// Copy with q added. Throws UsageError if q is outside [1, n].
  VertexSet with(int q) const {
    check_element(q);
    VertexSet v(*this);
    v.set_bit(static_cast<std::size_t>(q - 1));
    return v;
  }

  /// Copy with q removed. Throws UsageError if q is outside [1, n].
  VertexSet without(int q) const {
    check_element(q);
    VertexSet v(*this);
    v.clear_bit(static_cast<std::size_t>(q - 1));
    return v;
  }

  std::size_t level() const noexcept {
    if (!heap_) return static_cast<std::size_t>(std::popcount(inline_));
    std::size_t count = 0;
    for (Word w : words()) count += static_cast<std::size_t>(std::popcount(w));
    return count;
  }

  /// Members in ascending order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(level());
    const auto ws = words();
    for (std::size_t i = 0; i < ws.size(); ++i) {
      Word w = ws[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        out.push_back(static_cast<int>(i * kWordBits) + bit + 1);
        w &= w - 1;
      }
    }
    return out;
  }

  std::span<const Word> words() const noexcept {
    if (heap_) return {heap_.get(), word_count(n_)};
    return {&inline_, 1};
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
    for (Word w : words()) h = mix(h ^ w);
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    if (a.n_ != b.n_) return false;
    if (!a.heap_) return a.inline_ == b.inline_;
    return std::ranges::equal(a.words(), b.words());
  }

  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) noexcept {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
      if (wa[i] == wb[i]) continue;
      const Word diff = wa[i] ^ wb[i];
      const Word lowest = diff & (~diff + 1);
      return (wa[i] & lowest) != 0 ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  /// u is a subset of v. Throws UsageError when the ground sets differ.
  friend bool is_subset(const VertexSet& u, const VertexSet& v) {
    require_same_ground(u, v);
    if (!u.heap_) return (u.inline_ & ~v.inline_) == 0;
    const auto wu = u.words();
    const auto wv = v.words();
    for (std::size_t i = 0; i < wu.size(); ++i) {
      if ((wu[i] & ~wv[i]) != 0) return false;
    }
    return true;
  }

  /// Calls f(neighbor) for every v + {q}, q not in v, in ascending q.
  template <class F>
  void for_each_up_neighbor(F&& f) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (test_bit(i)) continue;
      VertexSet u(*this);
      u.set_bit(i);
      f(std::move(u));
    }
  }

  /// Calls f(neighbor) for every v - {q}, q in v, in ascending q.
  template <class F>
  void for_each_down_neighbor(F&& f) const {
    const auto ws = words();
    for (std::size_t i = 0; i < ws.size(); ++i) {
      Word w = ws[i];
      while (w != 0) {
        const std::size_t bit = i * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        VertexSet u(*this);
        u.clear_bit(bit);
        f(std::move(u));
        w &= w - 1;
      }
    }
  }

 private:
  static constexpr std::size_t word_count(std::size_t n) noexcept {
    return n == 0 ? 1 : (n + kWordBits - 1) / kWordBits;
  }

  static std::uint64_t mix(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  static void require_same_ground(const VertexSet& u, const VertexSet& v) {
    if (u.n_ != v.n_) {
      throw UsageError("ground set mismatch: n=" + std::to_string(u.n_) +
                       " vs n=" + std::to_string(v.n_));
    }
  }

  void check_element(int q) const {
    if (q < 1 || static_cast<std::size_t>(q) > n_) {
      throw UsageError("element " + std::to_string(q) + " outside [1," +
                       std::to_string(n_) + "]");
    }
  }

  Word* mutable_words() noexcept { return heap_ ? heap_.get() : &inline_; }

  bool test_bit(std::size_t i) const noexcept {
    return (words()[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set_bit(std::size_t i) noexcept {
    mutable_words()[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void clear_bit(std::size_t i) noexcept {
    mutable_words()[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }

  Word inline_ = 0;
  std::unique_ptr<Word[]> heap_;
  std::size_t n_ = 0;
};

inline std::size_t level(const VertexSet& v) noexcept { return v.level(); }

/// All supersets of v one level up, ascending by the added element.
inline std::vector<VertexSet> up_neighbors(const VertexSet& v) {
  std::vector<VertexSet> out;
  out.reserve(v.ground_size() - v.level());
  v.for_each_up_neighbor([&](VertexSet&& u) { out.push_back(std::move(u)); });
  return out;
}

/// All subsets of v one level down, ascending by the removed element.
inline std::vector<VertexSet> down_neighbors(const VertexSet& v) {
  std::vector<VertexSet> out;
  out.reserve(v.level());
  v.for_each_down_neighbor([&](VertexSet&& u) { out.push_back(std::move(u)); });
  return out;
}

/// "{1,3}", or "{}" for the empty set.
inline std::string to_string(const VertexSet& v) {
  std::string out = "{";
  bool first = true;
  for (int q : v.elements()) {
    if (!first) out += ',';
    out += std::to_string(q);
    first = false;
  }
  out += '}';
  return out;
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& v) const noexcept { return v.hash(); }
};

}  // namespace hystcon

template <>
struct std::hash<hystcon::VertexSet> {
  std::size_t operator()(const hystcon::VertexSet& v) const noexcept { return v.hash(); }
};

#endif  // HYSTCON_VERTEX_SET_HPP_
