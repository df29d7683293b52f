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

#ifndef CLUSTERBOUND_SPACE_HPP_
#define CLUSTERBOUND_SPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterbound/point_set.hpp"
#include "clusterbound/rational.hpp"

namespace clusterbound {

class SpaceError : public std::invalid_argument {
 public:
  static constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);

  explicit SpaceError(const std::string& what, std::size_t row = kNoRow) : std::invalid_argument(what), row_(row) {}

  // Matrix row of the offending cell, or kNoRow.
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

struct ScaleParams {
  Rational r;
  unsigned k = 1;

  // Throws std::invalid_argument unless r > 0 and k >= 1.
  void Validate() const;
};

enum class EdgeClass { kShort, kMedium, kLong };

const char* ToString(EdgeClass c);

struct BuildOptions {
  // Additionally reject inputs that violate the triangle inequality.
  bool require_metric = false;
};

// Finite point set with exact symmetric non-negative distances, zero
// diagonal and the uniform counting measure. Immutable once built.
//
// Besides the exact rationals, every distance is kept as an int64 key
// scaled by the common denominator of all entries, so threshold tests
// against a rational t reduce to integer comparisons (see KeyAtMost).
class FiniteSemimetricSpace {
 public:
  FiniteSemimetricSpace() = default;

  // Row-major n x n matrix. `tokens`, when non-empty, holds the original
  // decimal text of every entry and is echoed verbatim on output.
  // Throws SpaceError naming the offending cell.
  static FiniteSemimetricSpace Build(std::vector<std::string> labels, std::vector<Rational> dist,
                                     std::vector<std::string> tokens = {}, BuildOptions options = {});

  // Convenience for literal tables; same validation as Build.
  static FiniteSemimetricSpace FromRows(std::vector<std::string> labels,
                                        const std::vector<std::vector<Rational>>& rows, BuildOptions options = {});

  std::size_t size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  const Rational& dist(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  // Original text of the entry, or its canonical rendering.
  std::string token(std::size_t i, std::size_t j) const;
  bool has_tokens() const { return !tokens_.empty(); }

  const BigInt& scale() const { return scale_; }
  std::int64_t key(std::size_t i, std::size_t j) const { return keys_[i * n_ + j]; }
  std::span<const std::int64_t> key_row(std::size_t i) const {
    return std::span<const std::int64_t>(keys_).subspan(i * n_, n_);
  }

  // Largest key value K with: dist <= t  <=>  key <= K.
  std::int64_t KeyAtMost(const Rational& t) const;
  // Largest key value K with: dist < t  <=>  key <= K.
  std::int64_t KeyBelow(const Rational& t) const;

  // Adjacency rows of the graph {(i, j) : i != j, dist(i, j) <= t}.
  std::vector<PointMask> AdjacencyAtMost(const Rational& t) const;
  // Adjacency rows of {(i, j) : i != j, dist(i, j) < t}.
  std::vector<PointMask> AdjacencyBelow(const Rational& t) const;
  // Adjacency rows of {(i, j) : i != j, dist(i, j) > t}.
  std::vector<PointMask> AdjacencyAbove(const Rational& t) const;

  // Triangle inequality over all triples (exact).
  bool IsMetric() const;

  friend bool operator==(const FiniteSemimetricSpace& a, const FiniteSemimetricSpace& b) {
    return a.labels_ == b.labels_ && a.dist_ == b.dist_;
  }

 private:
  std::vector<PointMask> AdjacencyByKey(std::int64_t max_key, bool complement) const;

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> dist_;
  std::vector<std::string> tokens_;
  BigInt scale_ = 1;
  std::vector<std::int64_t> keys_;
};

// Validated construction from a square table; labels.size() must match.
FiniteSemimetricSpace BuildSpace(std::vector<std::string> labels, const std::vector<std::vector<Rational>>& matrix,
                                 BuildOptions options = {});

// Throws std::invalid_argument when i == j.
EdgeClass ClassifyEdge(const FiniteSemimetricSpace& space, std::size_t i, std::size_t j, const Rational& r);

// Max pairwise distance; 0 for empty and singleton subsets.
Rational SubsetDiameter(const FiniteSemimetricSpace& space, const PointSet& points);

// min over a in A, b in B of dist(a, b). Throws std::invalid_argument if
// either operand is empty.
Rational SetDistance(const FiniteSemimetricSpace& space, const PointSet& a, const PointSet& b);

// The same quantities as fixed-point keys (see FiniteSemimetricSpace::key).
std::int64_t SubsetDiameterKey(const FiniteSemimetricSpace& space, const PointSet& points);
std::int64_t SetDistanceKey(const FiniteSemimetricSpace& space, const PointSet& a, const PointSet& b);

}  // namespace clusterbound

#endif  // CLUSTERBOUND_SPACE_HPP_
