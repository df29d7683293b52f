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

#ifndef CLUSTERBOUND_CLUSTERING_HPP_
#define CLUSTERBOUND_CLUSTERING_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clusterbound/point_set.hpp"
#include "clusterbound/rational.hpp"
#include "clusterbound/space.hpp"

namespace clusterbound {

class LimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Maximum-cardinality subset of `points` with diameter <= d, i.e. a maximum
// clique of the threshold graph {dist <= d} restricted to `points`. Among
// maximum cliques the lexicographically smallest index sequence is returned.
PointSet MaxCluster(const FiniteSemimetricSpace& space, const PointSet& points, const Rational& d);

using Edge = std::pair<std::size_t, std::size_t>;

struct DecompositionPart {
  PointSet z;  // part of the partition
  PointSet x;  // maximum 2r-cluster of the residual set at this step
  PointSet y;  // z \ (x u u)
  PointSet u;  // points covered by `matching`
  std::vector<Edge> matching;  // maximal matching of long edges inside z \ x
  std::size_t medium_edges = 0;  // M(Z_i)
  std::size_t long_edges = 0;  // L(Z_i)
};

struct GreedyDecomposition {
  Rational r;
  unsigned k = 1;
  std::size_t n = 0;
  Rational delta;  // observed medium-edge density 2M/n^2 used for I2
  std::vector<DecompositionPart> parts;  // construction order
  std::vector<std::size_t> sorted_sizes;  // W: |Z_i| descending
  std::vector<std::size_t> i0;  // the k largest |Z_i|, earlier index wins ties
  std::vector<std::size_t> i1;  // (k+1)|X_i| <= |Z_i|
  std::vector<std::size_t> i2;  // |Z_i| >= sqrt(delta) n
  std::size_t lambda_count = 0;  // sum over parts of M(Z_i) + L(Z_i)
};

// Repeatedly extracts X = MaxCluster(residual, 2r) and
// Z = {x in residual : dist(x, X) < r}, then matches long edges inside each
// Z \ X greedily in lexicographic edge order.
GreedyDecomposition GreedyDecompose(const FiniteSemimetricSpace& space, const ScaleParams& params);

struct ClusterStructure {
  unsigned order = 0;
  std::vector<PointSet> clusters;  // exactly `order` entries, possibly empty
  std::size_t measure = 0;
};

// {X_i : i in I0} in construction order, padded with empty clusters to k.
ClusterStructure GreedyStructure(const GreedyDecomposition& decomposition, unsigned k);
// {X_1, ..., X_k}, the first k parts in construction order.
ClusterStructure GreedyStructureFirstK(const GreedyDecomposition& decomposition, unsigned k);

struct ExactOptions {
  std::size_t max_points = 14;
  std::uint64_t max_nodes = 500'000'000;
};

struct ExactResult {
  ClusterStructure structure;
  bool optimal = true;  // false when max_nodes was hit
  std::uint64_t nodes = 0;
};

// Maximum-measure r-cluster structure of order k by branch and bound over
// point assignments (cluster or discard). Throws LimitError when
// n > options.max_points (hard cap 64).
ExactResult ExactStructure(const FiniteSemimetricSpace& space, const ScaleParams& params, ExactOptions options = {});

struct Violation {
  enum class Kind { kIndex, kOverlap, kDiameter, kSeparation, kOrder };
  Kind kind;
  std::size_t cluster_a = 0;
  std::size_t cluster_b = 0;
  std::size_t point_a = 0;
  std::size_t point_b = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport ValidateStructure(const FiniteSemimetricSpace& space, const ClusterStructure& structure,
                                   const ScaleParams& params);

}  // namespace clusterbound

#endif  // CLUSTERBOUND_CLUSTERING_HPP_
