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

#ifndef CLUSTERBOUND_GENERATORS_HPP_
#define CLUSTERBOUND_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "clusterbound/point_set.hpp"
#include "clusterbound/rational.hpp"
#include "clusterbound/space.hpp"

namespace clusterbound {

// Deterministic across platforms: std::mt19937_64 plus explicit rejection
// sampling (the standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform integer in [lo, hi].
  std::uint64_t Between(std::uint64_t lo, std::uint64_t hi);
  std::uint64_t Next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Stateless seed mixer (splitmix64 finalizer) for per-trial streams.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream);

struct WeightedFiniteSpace {
  FiniteSemimetricSpace base;
  std::vector<Rational> weights;  // one positive weight per point

  // Throws std::invalid_argument on size mismatch or non-positive weights.
  void Validate() const;
  Rational TotalWeight() const;
};

struct TightInstanceSpec {
  unsigned k = 1;
  std::size_t m = 1;   // |B_1| = ... = |B_k|
  std::size_t m0 = 1;  // |B_0|, at least m
  Rational r = 1;
};

// Blocks B_0 (first m0 points), B_1..B_k of m points each; distance r inside
// a block and 4r across blocks.
FiniteSemimetricSpace TightInstance(const TightInstanceSpec& spec);

// Recognizes spaces produced by TightInstance for the given r and k: k+1
// blocks with distance r inside and 4r across, k of them of a common size m
// and one of size m0 >= m. Block B_0 is reported as the largest block.
std::optional<TightInstanceSpec> DetectTightInstance(const FiniteSemimetricSpace& space, const Rational& r,
                                                     unsigned k);

struct PlantedSpec {
  unsigned k = 1;
  std::vector<std::size_t> block_sizes;
  Rational noise_fraction = 0;  // in [0, 1)
  Rational r = 1;
  std::uint64_t seed = 0;
};

// Intra-block distances uniform on (0, r], inter-block on (3r, 5r], both on
// a 1/1000 grid of r; then floor(noise_fraction * pairs) distinct pairs are
// re-drawn from (r, 3r]. The block count need not equal k.
FiniteSemimetricSpace PlantedInstance(const PlantedSpec& spec);

// Distances uniform on (0, max_distance] over a 1/1000 grid, symmetric.
FiniteSemimetricSpace UniformRandomSpace(std::size_t n, const Rational& max_distance, std::uint64_t seed);

// Shortest-path closure; the result satisfies the triangle inequality and
// is pointwise <= the input.
FiniteSemimetricSpace MetricClosure(const FiniteSemimetricSpace& space);

// Greedy covering: the lowest-index uncovered point c opens a part and
// collects, in index order, uncovered points within eps/2 of c that are also
// within eps of every point already in the part. Part diameters are <= eps.
std::vector<PointSet> EpsilonPartition(const WeightedFiniteSpace& w, const Rational& eps);

struct UniformizeOptions {
  std::size_t max_total = 100'000;        // cap on total multiplicity N
  std::size_t max_materialized = 4'096;   // cap on points in the emitted space
};

struct UniformizedSpace {
  std::vector<PointSet> parts;
  std::vector<Rational> part_measures;  // mu(A_i)
  unsigned decimal_digits = 0;          // q_i are truncations at this many places
  std::vector<Rational> q;
  std::vector<std::size_t> multiplicities;  // |B_i|, proportional to q_i, gcd 1
  std::size_t total = 0;                    // N
  std::vector<std::vector<Rational>> part_distances;  // dist(A_i, A_j), 0 on the diagonal

  // Blocks B_i with distance 0 inside and dist(A_i, A_j) across.
  // Throws std::length_error when total > max_materialized.
  FiniteSemimetricSpace Materialize(std::size_t max_materialized = 4'096) const;

  // Sum over k-subsets of parts with pairwise part distance > r of
  // prod |B_i|; equals T_k of the materialized space.
  BigInt BlockAnticliques(const Rational& r, unsigned k) const;
  // Same sum with mu(A_i) in place of |B_i|.
  Rational WeightedPartAnticliques(const Rational& r, unsigned k) const;
};

// Throws std::invalid_argument unless eps in (0, 1), weights positive and
// `partition` partitions the points; std::length_error when N would exceed
// options.max_total.
UniformizedSpace Uniformize(const WeightedFiniteSpace& w, const std::vector<PointSet>& partition,
                            const Rational& eps, UniformizeOptions options = {});

}  // namespace clusterbound

#endif  // CLUSTERBOUND_GENERATORS_HPP_
