// Copyright 2026 The Clusterbound Authors.
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

#ifndef CLUSTERBOUND_POINT_SET_HPP_
#define CLUSTERBOUND_POINT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clusterbound/kernels.hpp"

namespace clusterbound {

// Point subsets at API boundaries: strictly ascending point indices.
using PointSet = std::vector<std::size_t>;

// Fixed-universe bitset used inside the combinatorial searches.
class PointMask {
 public:
  PointMask() = default;
  explicit PointMask(std::size_t universe) : universe_(universe), words_(kernels::WordsFor(universe), 0) {}

  static PointMask All(std::size_t universe) {
    PointMask mask(universe);
    for (std::size_t i = 0; i < universe; ++i) mask.Set(i);
    return mask;
  }

  static PointMask Of(std::size_t universe, const PointSet& points) {
    PointMask mask(universe);
    for (std::size_t p : points) mask.Set(p);
    return mask;
  }

  std::size_t universe() const { return universe_; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  bool Test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void Set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void Reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t Count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool Empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  PointMask& operator&=(const PointMask& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  PointMask& operator|=(const PointMask& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  // this \ other
  PointMask& Subtract(const PointMask& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend PointMask operator&(PointMask a, const PointMask& b) { return a &= b; }

  // Lowest set index >= from, or universe() if none.
  std::size_t NextFrom(std::size_t from) const {
    if (from >= universe_) return universe_;
    std::size_t w = from / 64;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      if (++w >= words_.size()) return universe_;
      bits = words_[w];
    }
  }

  PointSet ToPoints() const {
    PointSet points;
    for (std::size_t i = NextFrom(0); i < universe_; i = NextFrom(i + 1)) points.push_back(i);
    return points;
  }

  friend bool operator==(const PointMask&, const PointMask&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Validates and normalizes a caller-provided subset: sorts, rejects
// duplicates and out-of-range indices.
PointSet NormalizePointSet(PointSet points, std::size_t universe);

}  // namespace clusterbound

#endif  // CLUSTERBOUND_POINT_SET_HPP_
