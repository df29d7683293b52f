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

#ifndef CLUSTERBOUND_STATS_HPP_
#define CLUSTERBOUND_STATS_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "clusterbound/point_set.hpp"
#include "clusterbound/rational.hpp"
#include "clusterbound/space.hpp"

namespace clusterbound {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CountOptions {
  // Upper limit on search-tree nodes for anticlique enumeration; 0 = none.
  std::uint64_t max_nodes = 0;
};

// Tight densities making the medium-edge, (k+1)-anticlique and k-anticlique
// hypotheses hold with equality:
//   delta = 2 M / n^2,  beta = (k+1)! T_{k+1} / n^{k+1},  alpha = k! T_k / n^k.
// All densities are 0 for the empty space.
struct ObservedParams {
  unsigned k = 1;
  std::size_t n = 0;
  BigInt medium_edges;  // M
  BigInt anticliques_k;  // T_k
  BigInt anticliques_k1;  // T_{k+1}
  Rational delta;
  Rational beta;
  Rational alpha;
};

// Unordered pairs with r < dist <= 3r.
BigInt MediumEdgeCount(const FiniteSemimetricSpace& space, const Rational& r);

// Medium / long (dist > 3r) pairs inside a subset.
std::size_t MediumEdgesWithin(const FiniteSemimetricSpace& space, const Rational& r, const PointSet& points);
std::size_t LongEdgesWithin(const FiniteSemimetricSpace& space, const Rational& r, const PointSet& points);

// Unordered s-subsets whose points are pairwise at distance > r, by ordered
// backtracking with bitset candidate sets. s must be >= 1.
// Throws BudgetExceeded when options.max_nodes is hit.
BigInt AnticliqueCount(const FiniteSemimetricSpace& space, const Rational& r, unsigned s, CountOptions options = {});

// e_s(values): sum over s-subsets of the product, via the truncated product
// recurrence e_j <- e_j + v * e_{j-1}.
BigInt ElementarySymmetric(std::span<const BigInt> values, unsigned s);
BigInt ElementarySymmetric(std::span<const std::size_t> values, unsigned s);

ObservedParams ObservedParameters(const FiniteSemimetricSpace& space, const ScaleParams& params,
                                  CountOptions options = {});

}  // namespace clusterbound

#endif  // CLUSTERBOUND_STATS_HPP_
