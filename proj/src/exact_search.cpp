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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "clusterbound/clustering.hpp"

namespace clusterbound {
namespace {

constexpr std::size_t kMaxExactPoints = 64;
constexpr int kDiscarded = -1;

// Depth-first search over points in index order. Each point joins an open
// cluster, opens the next cluster, or is discarded, in that order; clusters
// therefore appear ordered by smallest member. The first structure reaching
// a new best measure is kept.
class StructureSearch {
 public:
  StructureSearch(const FiniteSemimetricSpace& space, const ScaleParams& params, std::uint64_t max_nodes)
      : n_(space.size()), k_(params.k), max_nodes_(max_nodes), within_2r_(n_, 0), separated_(n_, 0) {
    const std::int64_t diameter_key = space.KeyAtMost(2 * params.r);
    const std::int64_t separation_key = space.KeyBelow(params.r);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        if (space.key(i, j) <= diameter_key) within_2r_[i] |= Bit(j);
        if (space.key(i, j) > separation_key) separated_[i] |= Bit(j);
      }
    }
    assignment_.assign(n_, kDiscarded);
    allow_.assign(k_, 0);
  }

  void Run() {
    const std::uint64_t everyone = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    Search(0, 0, 0, everyone);
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

  ClusterStructure Best() const {
    ClusterStructure structure;
    structure.order = k_;
    structure.clusters.assign(k_, {});
    for (std::size_t p = 0; p < n_; ++p) {
      if (best_assignment_.empty() || best_assignment_[p] == kDiscarded) continue;
      structure.clusters[static_cast<std::size_t>(best_assignment_[p])].push_back(p);
      ++structure.measure;
    }
    return structure;
  }

 private:
  static std::uint64_t Bit(std::size_t i) { return std::uint64_t{1} << i; }

  // `free` holds points separated (>= r) from every clustered point so far.
  void Search(std::size_t p, unsigned open, std::size_t measure, std::uint64_t free) {
    if (aborted_) return;
    if (max_nodes_ != 0 && ++nodes_ > max_nodes_) {
      aborted_ = true;
      return;
    }
    if (max_nodes_ == 0) ++nodes_;
    if (p == n_) {
      if (static_cast<long long>(measure) > best_measure_) {
        best_measure_ = static_cast<long long>(measure);
        best_assignment_ = assignment_;
      }
      return;
    }

    std::uint64_t reachable = open < k_ ? free : 0;
    for (unsigned c = 0; c < open; ++c) reachable |= allow_[c];
    const std::uint64_t rest = ~(Bit(p) - 1);
    const auto bound = static_cast<long long>(measure + std::popcount(reachable & rest));
    if (bound <= best_measure_) return;

    std::vector<std::uint64_t> saved(allow_.begin(), allow_.begin() + open);
    for (unsigned c = 0; c < open; ++c) {
      if (!(saved[c] & Bit(p))) continue;
      for (unsigned other = 0; other < open; ++other) {
        allow_[other] = other == c ? saved[other] & within_2r_[p] : saved[other] & separated_[p];
      }
      assignment_[p] = static_cast<int>(c);
      Search(p + 1, open, measure + 1, free & separated_[p]);
      if (aborted_) return;
    }
    for (unsigned c = 0; c < open; ++c) allow_[c] = saved[c];

    if (open < k_ && (free & Bit(p))) {
      for (unsigned other = 0; other < open; ++other) allow_[other] = saved[other] & separated_[p];
      allow_[open] = within_2r_[p] & free;
      assignment_[p] = static_cast<int>(open);
      Search(p + 1, open + 1, measure + 1, free & separated_[p]);
      if (aborted_) return;
      for (unsigned c = 0; c < open; ++c) allow_[c] = saved[c];
    }

    assignment_[p] = kDiscarded;
    Search(p + 1, open, measure, free);
  }

  std::size_t n_;
  unsigned k_;
  std::uint64_t max_nodes_;
  std::vector<std::uint64_t> within_2r_;
  std::vector<std::uint64_t> separated_;
  std::vector<std::uint64_t> allow_;  // points that may still join cluster c
  std::vector<int> assignment_;
  std::vector<int> best_assignment_;
  long long best_measure_ = -1;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

ExactResult ExactStructure(const FiniteSemimetricSpace& space, const ScaleParams& params, ExactOptions options) {
  params.Validate();
  const std::size_t limit = std::min(options.max_points, kMaxExactPoints);
  if (space.size() > limit) {
    throw LimitError("exact search limited to " + std::to_string(limit) + " points, space has " +
                     std::to_string(space.size()));
  }
  StructureSearch search(space, params, options.max_nodes);
  search.Run();
  ExactResult result;
  result.structure = search.Best();
  result.optimal = !search.aborted();
  result.nodes = search.nodes();
  return result;
}

}  // namespace clusterbound
