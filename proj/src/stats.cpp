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

#include "clusterbound/stats.hpp"

#include "clusterbound/kernels.hpp"

namespace clusterbound {
namespace {

class AnticliqueCounter {
 public:
  AnticliqueCounter(std::vector<PointMask> far, std::uint64_t max_nodes)
      : far_(std::move(far)), max_nodes_(max_nodes), kernel_(kernels::Active()) {}

  // Number of `remaining`-subsets of `candidates` that are pairwise far.
  unsigned __int128 Count(PointMask candidates, unsigned remaining) {
    Tick();
    if (remaining == 1) return candidates.Count();
    unsigned __int128 total = 0;
    for (std::size_t v = candidates.NextFrom(0); v < candidates.universe(); v = candidates.NextFrom(v + 1)) {
      candidates.Reset(v);
      if (remaining == 2) {
        total += kernel_.popcount_and(candidates.words(), far_[v].words());
        continue;
      }
      PointMask next = candidates & far_[v];
      if (next.Count() + 1 < remaining) continue;
      total += Count(std::move(next), remaining - 1);
    }
    return total;
  }

 private:
  void Tick() {
    if (max_nodes_ != 0 && ++nodes_ > max_nodes_) {
      throw BudgetExceeded("anticlique enumeration exceeded " + std::to_string(max_nodes_) + " nodes");
    }
  }

  std::vector<PointMask> far_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  const kernels::KernelTable& kernel_;
};

BigInt FromU128(unsigned __int128 value) {
  BigInt result = static_cast<std::uint64_t>(value >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(value);
  return result;
}

template <typename Pred>
std::size_t CountPairsWithin(const FiniteSemimetricSpace& space, const PointSet& points, Pred pred) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) count += pred(space.key(points[a], points[b])) ? 1 : 0;
  }
  return count;
}

}  // namespace

BigInt MediumEdgeCount(const FiniteSemimetricSpace& space, const Rational& r) {
  const std::int64_t lo = space.KeyAtMost(r);
  const std::int64_t hi = space.KeyAtMost(3 * r);
  const auto& kernel = kernels::Active();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < space.size(); ++i) count += kernel.count_in_range(space.key_row(i).subspan(i + 1), lo, hi);
  return BigInt(count);
}

std::size_t MediumEdgesWithin(const FiniteSemimetricSpace& space, const Rational& r, const PointSet& points) {
  const std::int64_t lo = space.KeyAtMost(r);
  const std::int64_t hi = space.KeyAtMost(3 * r);
  return CountPairsWithin(space, points, [&](std::int64_t key) { return key > lo && key <= hi; });
}

std::size_t LongEdgesWithin(const FiniteSemimetricSpace& space, const Rational& r, const PointSet& points) {
  const std::int64_t hi = space.KeyAtMost(3 * r);
  return CountPairsWithin(space, points, [&](std::int64_t key) { return key > hi; });
}

BigInt AnticliqueCount(const FiniteSemimetricSpace& space, const Rational& r, unsigned s, CountOptions options) {
  if (s == 0) throw std::invalid_argument("anticlique order must be at least 1");
  const std::size_t n = space.size();
  if (s > n) return 0;
  if (s == 1) return BigInt(n);
  AnticliqueCounter counter(space.AdjacencyAbove(r), options.max_nodes);
  return FromU128(counter.Count(PointMask::All(n), s));
}

BigInt ElementarySymmetric(std::span<const BigInt> values, unsigned s) {
  std::vector<BigInt> e(s + 1, 0);
  e[0] = 1;
  for (const BigInt& v : values) {
    for (unsigned j = s; j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e[s];
}

BigInt ElementarySymmetric(std::span<const std::size_t> values, unsigned s) {
  std::vector<BigInt> big(values.begin(), values.end());
  return ElementarySymmetric(std::span<const BigInt>(big), s);
}

ObservedParams ObservedParameters(const FiniteSemimetricSpace& space, const ScaleParams& params,
                                  CountOptions options) {
  params.Validate();
  ObservedParams observed;
  observed.k = params.k;
  observed.n = space.size();
  observed.medium_edges = MediumEdgeCount(space, params.r);
  observed.anticliques_k = AnticliqueCount(space, params.r, params.k, options);
  observed.anticliques_k1 = AnticliqueCount(space, params.r, params.k + 1, options);
  if (observed.n == 0) return observed;

  const BigInt n(observed.n);
  observed.delta = Rational(2 * observed.medium_edges, n * n);
  observed.beta = Rational(Factorial(params.k + 1) * observed.anticliques_k1, Pow(n, params.k + 1));
  observed.alpha = Rational(Factorial(params.k) * observed.anticliques_k, Pow(n, params.k));
  return observed;
}

}  // namespace clusterbound
