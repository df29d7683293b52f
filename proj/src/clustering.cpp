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

#include "clusterbound/clustering.hpp"

#include <algorithm>
#include <numeric>

#include "clusterbound/stats.hpp"

namespace clusterbound {
namespace {

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const std::vector<PointMask>& adjacency) : adjacency_(adjacency) {}

  PointSet Run(const PointMask& candidates) {
    best_.clear();
    current_.clear();
    Expand(candidates);
    return best_;
  }

 private:
  // Greedy sequential colouring in index order; the number of colour
  // classes bounds the clique number of `candidates`.
  std::size_t ColourBound(const PointMask& candidates) const {
    std::size_t colours = 0;
    PointMask uncoloured = candidates;
    while (!uncoloured.Empty()) {
      ++colours;
      PointMask open = uncoloured;
      for (std::size_t v = open.NextFrom(0); v < open.universe(); v = open.NextFrom(v + 1)) {
        uncoloured.Reset(v);
        open.Subtract(adjacency_[v]);
      }
    }
    return colours;
  }

  void Expand(PointMask candidates) {
    if (candidates.Empty()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + ColourBound(candidates) <= best_.size()) return;
    for (std::size_t v = candidates.NextFrom(0); v < candidates.universe(); v = candidates.NextFrom(v + 1)) {
      if (current_.size() + candidates.Count() <= best_.size()) return;
      candidates.Reset(v);
      current_.push_back(v);
      Expand(candidates & adjacency_[v]);
      current_.pop_back();
    }
  }

  const std::vector<PointMask>& adjacency_;
  PointSet current_;
  PointSet best_;
};

PointSet Difference(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void MatchLongEdges(const FiniteSemimetricSpace& space, std::int64_t long_above, DecompositionPart& part) {
  const PointSet rest = Difference(part.z, part.x);
  std::vector<bool> matched(rest.size(), false);
  for (std::size_t a = 0; a < rest.size(); ++a) {
    if (matched[a]) continue;
    for (std::size_t b = a + 1; b < rest.size(); ++b) {
      if (matched[b] || space.key(rest[a], rest[b]) <= long_above) continue;
      matched[a] = matched[b] = true;
      part.matching.emplace_back(rest[a], rest[b]);
      break;
    }
  }
  for (std::size_t a = 0; a < rest.size(); ++a) (matched[a] ? part.u : part.y).push_back(rest[a]);
}

}  // namespace

PointSet MaxCluster(const FiniteSemimetricSpace& space, const PointSet& points, const Rational& d) {
  if (points.empty()) return {};
  const PointSet normalized = NormalizePointSet(points, space.size());
  const std::vector<PointMask> adjacency = space.AdjacencyAtMost(d);
  return MaxCliqueSearch(adjacency).Run(PointMask::Of(space.size(), normalized));
}

GreedyDecomposition GreedyDecompose(const FiniteSemimetricSpace& space, const ScaleParams& params) {
  params.Validate();
  const std::size_t n = space.size();
  GreedyDecomposition out;
  out.r = params.r;
  out.k = params.k;
  out.n = n;
  if (n == 0) return out;

  const std::vector<PointMask> within_2r = space.AdjacencyAtMost(2 * params.r);
  const std::vector<PointMask> below_r = space.AdjacencyBelow(params.r);
  const std::int64_t long_above = space.KeyAtMost(3 * params.r);
  MaxCliqueSearch clique(within_2r);

  PointMask residual = PointMask::All(n);
  while (!residual.Empty()) {
    DecompositionPart part;
    part.x = clique.Run(residual);
    PointMask z = PointMask::Of(n, part.x);
    for (std::size_t p : part.x) z |= below_r[p];
    z &= residual;
    residual.Subtract(z);
    part.z = z.ToPoints();
    MatchLongEdges(space, long_above, part);
    part.medium_edges = MediumEdgesWithin(space, params.r, part.z);
    part.long_edges = LongEdgesWithin(space, params.r, part.z);
    out.lambda_count += part.medium_edges + part.long_edges;
    out.parts.push_back(std::move(part));
  }

  const BigInt nn(n);
  out.delta = Rational(2 * MediumEdgeCount(space, params.r), nn * nn);

  std::vector<std::size_t> order(out.parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return out.parts[a].z.size() > out.parts[b].z.size(); });
  for (std::size_t idx : order) out.sorted_sizes.push_back(out.parts[idx].z.size());
  out.i0.assign(order.begin(), order.begin() + std::min<std::size_t>(params.k, order.size()));
  std::sort(out.i0.begin(), out.i0.end());

  for (std::size_t i = 0; i < out.parts.size(); ++i) {
    const auto& part = out.parts[i];
    if ((params.k + 1) * part.x.size() <= part.z.size()) out.i1.push_back(i);
    const BigInt size(part.z.size());
    if (Rational(size * size) >= out.delta * nn * nn) out.i2.push_back(i);
  }
  return out;
}

namespace {

ClusterStructure StructureFromParts(const GreedyDecomposition& decomposition, const std::vector<std::size_t>& picks,
                                    unsigned k) {
  ClusterStructure structure;
  structure.order = k;
  for (std::size_t i : picks) {
    structure.clusters.push_back(decomposition.parts[i].x);
    structure.measure += decomposition.parts[i].x.size();
  }
  structure.clusters.resize(k);
  return structure;
}

}  // namespace

ClusterStructure GreedyStructure(const GreedyDecomposition& decomposition, unsigned k) {
  if (k == decomposition.k) return StructureFromParts(decomposition, decomposition.i0, k);
  std::vector<std::size_t> order(decomposition.parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return decomposition.parts[a].z.size() > decomposition.parts[b].z.size();
  });
  order.resize(std::min<std::size_t>(k, order.size()));
  std::sort(order.begin(), order.end());
  return StructureFromParts(decomposition, order, k);
}

ClusterStructure GreedyStructureFirstK(const GreedyDecomposition& decomposition, unsigned k) {
  std::vector<std::size_t> picks(std::min<std::size_t>(k, decomposition.parts.size()));
  std::iota(picks.begin(), picks.end(), 0);
  return StructureFromParts(decomposition, picks, k);
}

ValidationReport ValidateStructure(const FiniteSemimetricSpace& space, const ClusterStructure& structure,
                                   const ScaleParams& params) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::size_t ca, std::size_t cb, std::size_t pa, std::size_t pb,
                 std::string message) { report.violations.push_back({kind, ca, cb, pa, pb, std::move(message)}); };

  if (structure.clusters.size() != params.k) {
    add(Violation::Kind::kOrder, 0, 0, 0, 0,
        "structure has " + std::to_string(structure.clusters.size()) + " clusters, expected " +
            std::to_string(params.k));
  }

  std::vector<int> owner(space.size(), -1);
  std::size_t measure = 0;
  for (std::size_t c = 0; c < structure.clusters.size(); ++c) {
    for (std::size_t p : structure.clusters[c]) {
      if (p >= space.size()) {
        add(Violation::Kind::kIndex, c, c, p, p, "point " + std::to_string(p) + " out of range");
        continue;
      }
      if (owner[p] >= 0) {
        add(Violation::Kind::kOverlap, static_cast<std::size_t>(owner[p]), c, p, p,
            "point " + std::to_string(p) + " in clusters " + std::to_string(owner[p]) + " and " + std::to_string(c));
        continue;
      }
      owner[p] = static_cast<int>(c);
      ++measure;
    }
  }
  if (measure != structure.measure) {
    add(Violation::Kind::kOrder, 0, 0, 0, 0,
        "recorded measure " + std::to_string(structure.measure) + " differs from point count " +
            std::to_string(measure));
  }

  const Rational diameter_limit = 2 * params.r;
  auto in_range = [&](const PointSet& s) {
    PointSet out;
    for (std::size_t p : s) {
      if (p < space.size()) out.push_back(p);
    }
    return out;
  };
  std::vector<PointSet> clusters;
  for (const auto& c : structure.clusters) clusters.push_back(in_range(c));

  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const PointSet& cl = clusters[c];
    for (std::size_t a = 0; a < cl.size(); ++a) {
      for (std::size_t b = a + 1; b < cl.size(); ++b) {
        if (space.dist(cl[a], cl[b]) > diameter_limit) {
          add(Violation::Kind::kDiameter, c, c, cl[a], cl[b],
              "cluster " + std::to_string(c) + ": dist(" + std::to_string(cl[a]) + "," + std::to_string(cl[b]) +
                  ") = " + ToCanonicalString(space.dist(cl[a], cl[b])) + " > 2r");
        }
      }
    }
  }
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (std::size_t e = c + 1; e < clusters.size(); ++e) {
      for (std::size_t p : clusters[c]) {
        for (std::size_t q : clusters[e]) {
          if (p != q && space.dist(p, q) < params.r) {
            add(Violation::Kind::kSeparation, c, e, p, q,
                "clusters " + std::to_string(c) + "," + std::to_string(e) + ": dist(" + std::to_string(p) + "," +
                    std::to_string(q) + ") = " + ToCanonicalString(space.dist(p, q)) + " < r");
          }
        }
      }
    }
  }
  return report;
}

}  // namespace clusterbound
