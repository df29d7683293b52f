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

#include "clusterbound/space.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include <boost/integer/common_factor_rt.hpp>

#include "clusterbound/kernels.hpp"

namespace clusterbound {
namespace {

std::string Cell(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

void ScaleParams::Validate() const {
  if (r <= 0) throw std::invalid_argument("r must be positive, got " + ToCanonicalString(r));
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

const char* ToString(EdgeClass c) {
  switch (c) {
    case EdgeClass::kShort:
      return "short";
    case EdgeClass::kMedium:
      return "medium";
    case EdgeClass::kLong:
      return "long";
  }
  return "?";
}

PointSet NormalizePointSet(PointSet points, std::size_t universe) {
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= universe) {
      throw std::invalid_argument("point index " + std::to_string(points[i]) + " out of range");
    }
    if (i > 0 && points[i] == points[i - 1]) {
      throw std::invalid_argument("duplicate point index " + std::to_string(points[i]));
    }
  }
  return points;
}

FiniteSemimetricSpace FiniteSemimetricSpace::Build(std::vector<std::string> labels, std::vector<Rational> dist,
                                                   std::vector<std::string> tokens, BuildOptions options) {
  const std::size_t n = labels.size();
  if (dist.size() != n * n) {
    throw SpaceError("matrix has " + std::to_string(dist.size()) + " entries, expected " + std::to_string(n * n) +
                     " for " + std::to_string(n) + " labels");
  }
  if (!tokens.empty() && tokens.size() != n * n) throw SpaceError("token table does not match matrix size");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& d = dist[i * n + j];
      if (i == j && d != 0) throw SpaceError("nonzero diagonal at " + Cell(i, j), i);
      if (d < 0) throw SpaceError("negative entry at " + Cell(i, j), i);
      if (j > i && d != dist[j * n + i]) throw SpaceError("asymmetric at " + Cell(i, j), i);
    }
  }

  FiniteSemimetricSpace space;
  space.n_ = n;
  space.labels_ = std::move(labels);
  space.dist_ = std::move(dist);
  space.tokens_ = std::move(tokens);

  BigInt scale = 1;
  for (const Rational& d : space.dist_) scale = boost::integer::lcm(scale, BigInt(denominator(d)));
  static const BigInt kMaxKey(std::numeric_limits<std::int64_t>::max());
  space.scale_ = scale;
  space.keys_.resize(n * n);
  for (std::size_t c = 0; c < n * n; ++c) {
    const Rational& d = space.dist_[c];
    const BigInt key = numerator(d) * (scale / denominator(d));
    if (key > kMaxKey) {
      throw SpaceError("distance precision exceeds the 63-bit fixed-point range at " + Cell(c / n, c % n), c / n);
    }
    space.keys_[c] = key.convert_to<std::int64_t>();
  }

  if (options.require_metric && !space.IsMetric()) throw SpaceError("triangle inequality violated");
  return space;
}

FiniteSemimetricSpace FiniteSemimetricSpace::FromRows(std::vector<std::string> labels,
                                                      const std::vector<std::vector<Rational>>& rows,
                                                      BuildOptions options) {
  const std::size_t n = labels.size();
  if (rows.size() != n) {
    throw SpaceError("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
  }
  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw SpaceError("ragged matrix: row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n),
                       i);
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return Build(std::move(labels), std::move(flat), {}, options);
}

std::string FiniteSemimetricSpace::token(std::size_t i, std::size_t j) const {
  if (!tokens_.empty()) return tokens_[i * n_ + j];
  return ToCanonicalString(dist(i, j));
}

std::int64_t FiniteSemimetricSpace::KeyAtMost(const Rational& t) const { return SaturateToInt64(Floor(t * scale_)); }

std::int64_t FiniteSemimetricSpace::KeyBelow(const Rational& t) const {
  return SaturateToInt64(Ceil(t * scale_) - 1);
}

std::vector<PointMask> FiniteSemimetricSpace::AdjacencyByKey(std::int64_t max_key, bool complement) const {
  const auto& kernel = kernels::Active();
  std::vector<PointMask> rows(n_, PointMask(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    auto words = rows[i].mutable_words();
    kernel.threshold_mask(key_row(i), max_key, words);
    if (complement) {
      for (auto& w : words) w = ~w;
      if (n_ % 64 != 0) words.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
    rows[i].Reset(i);
  }
  return rows;
}

std::vector<PointMask> FiniteSemimetricSpace::AdjacencyAtMost(const Rational& t) const {
  return AdjacencyByKey(KeyAtMost(t), false);
}

std::vector<PointMask> FiniteSemimetricSpace::AdjacencyBelow(const Rational& t) const {
  return AdjacencyByKey(KeyBelow(t), false);
}

std::vector<PointMask> FiniteSemimetricSpace::AdjacencyAbove(const Rational& t) const {
  return AdjacencyByKey(KeyAtMost(t), true);
}

bool FiniteSemimetricSpace::IsMetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const __int128 direct = key(i, j);
      for (std::size_t m = 0; m < n_; ++m) {
        if (m == i || m == j) continue;
        if (direct > static_cast<__int128>(key(i, m)) + key(m, j)) return false;
      }
    }
  }
  return true;
}

FiniteSemimetricSpace BuildSpace(std::vector<std::string> labels, const std::vector<std::vector<Rational>>& matrix,
                                 BuildOptions options) {
  return FiniteSemimetricSpace::FromRows(std::move(labels), matrix, options);
}

EdgeClass ClassifyEdge(const FiniteSemimetricSpace& space, std::size_t i, std::size_t j, const Rational& r) {
  if (i == j) throw std::invalid_argument("self-edge (" + std::to_string(i) + "," + std::to_string(j) + ") has no class");
  if (i >= space.size() || j >= space.size()) throw std::invalid_argument("point index out of range");
  const Rational& d = space.dist(i, j);
  if (d <= r) return EdgeClass::kShort;
  if (d > 3 * r) return EdgeClass::kLong;
  return EdgeClass::kMedium;
}

std::int64_t SubsetDiameterKey(const FiniteSemimetricSpace& space, const PointSet& points) {
  std::int64_t best = 0;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) best = std::max(best, space.key(points[a], points[b]));
  }
  return best;
}

Rational SubsetDiameter(const FiniteSemimetricSpace& space, const PointSet& points) {
  Rational best = 0;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) best = std::max(best, space.dist(points[a], points[b]));
  }
  return best;
}

std::int64_t SetDistanceKey(const FiniteSemimetricSpace& space, const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("set distance of an empty set is undefined");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t x : a) {
    for (std::size_t y : b) best = std::min(best, space.key(x, y));
  }
  return best;
}

Rational SetDistance(const FiniteSemimetricSpace& space, const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("set distance of an empty set is undefined");
  const Rational* best = &space.dist(a.front(), b.front());
  for (std::size_t x : a) {
    for (std::size_t y : b) {
      if (space.dist(x, y) < *best) best = &space.dist(x, y);
    }
  }
  return *best;
}

}  // namespace clusterbound
