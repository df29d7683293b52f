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

#include "clusterbound/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/integer/common_factor_rt.hpp>

namespace clusterbound {
namespace {

constexpr std::uint64_t kGrid = 1000;

std::vector<std::string> NumberedLabels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

void SetSymmetric(std::vector<Rational>& dist, std::size_t n, std::size_t i, std::size_t j, const Rational& d) {
  dist[i * n + j] = d;
  dist[j * n + i] = d;
}

// Visits k-subsets of {0..count-1} in lexicographic order.
template <typename Visit>
void ForEachSubset(std::size_t count, unsigned k, Visit visit) {
  if (k == 0 || k > count) return;
  std::vector<std::size_t> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == count - k + static_cast<std::size_t>(pos)) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (unsigned i = static_cast<unsigned>(pos) + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

std::uint64_t Rng::Between(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + draw % range;
}

std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void WeightedFiniteSpace::Validate() const {
  if (weights.size() != base.size()) {
    throw std::invalid_argument("expected " + std::to_string(base.size()) + " weights, got " +
                                std::to_string(weights.size()));
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) throw std::invalid_argument("non-positive weight at point " + std::to_string(i));
  }
}

Rational WeightedFiniteSpace::TotalWeight() const {
  Rational total = 0;
  for (const Rational& w : weights) total += w;
  return total;
}

FiniteSemimetricSpace TightInstance(const TightInstanceSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("tight instance needs k >= 1");
  if (spec.m < 1) throw std::invalid_argument("tight instance needs m >= 1");
  if (spec.m0 < spec.m) throw std::invalid_argument("tight instance needs m0 >= m");
  if (spec.r <= 0) throw std::invalid_argument("tight instance needs r > 0");

  const std::size_t n = spec.m0 + spec.k * spec.m;
  std::vector<std::size_t> block(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    block[i] = i < spec.m0 ? 0 : 1 + (i - spec.m0) / spec.m;
    const std::size_t offset = block[i] == 0 ? i : (i - spec.m0) % spec.m;
    labels.push_back("B" + std::to_string(block[i]) + "_" + std::to_string(offset));
  }
  const Rational far = 4 * spec.r;
  std::vector<Rational> dist(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) SetSymmetric(dist, n, i, j, block[i] == block[j] ? spec.r : far);
  }
  return FiniteSemimetricSpace::Build(std::move(labels), std::move(dist));
}

std::optional<TightInstanceSpec> DetectTightInstance(const FiniteSemimetricSpace& space, const Rational& r,
                                                     unsigned k) {
  const std::size_t n = space.size();
  if (n == 0 || k < 1) return std::nullopt;
  const Rational far = 4 * r;
  std::vector<std::size_t> block(n, n);
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (block[i] != n) continue;
    block[i] = blocks;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (space.dist(i, j) == r) block[j] = blocks;
    }
    ++blocks;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& expected = block[i] == block[j] ? r : far;
      if (space.dist(i, j) != expected) return std::nullopt;
    }
  }
  if (blocks != k + 1) return std::nullopt;
  std::vector<std::size_t> sizes(blocks, 0);
  for (std::size_t b : block) ++sizes[b];
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  for (std::size_t b = 2; b < sizes.size(); ++b) {
    if (sizes[b] != sizes[1]) return std::nullopt;
  }
  return TightInstanceSpec{k, sizes[1], sizes[0], r};
}

FiniteSemimetricSpace PlantedInstance(const PlantedSpec& spec) {
  if (spec.block_sizes.empty()) throw std::invalid_argument("planted instance needs at least one block");
  if (spec.noise_fraction < 0 || spec.noise_fraction >= 1) {
    throw std::invalid_argument("noise fraction must lie in [0, 1)");
  }
  if (spec.r <= 0) throw std::invalid_argument("planted instance needs r > 0");

  std::vector<std::size_t> block;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) {
    for (std::size_t i = 0; i < spec.block_sizes[b]; ++i) {
      block.push_back(b);
      labels.push_back("C" + std::to_string(b) + "_" + std::to_string(i));
    }
  }
  const std::size_t n = block.size();
  Rng rng(spec.seed);
  const Rational unit = spec.r / kGrid;
  std::vector<Rational> dist(n * n, Rational(0));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t u = rng.Between(1, kGrid);
      const Rational d = block[i] == block[j] ? unit * u : 3 * spec.r + 2 * unit * u;
      SetSymmetric(dist, n, i, j, d);
      pairs.emplace_back(i, j);
    }
  }

  const std::size_t noisy =
      Floor(spec.noise_fraction * Rational(pairs.size())).convert_to<std::size_t>();
  for (std::size_t t = 0; t < noisy; ++t) {
    const std::size_t pick = t + rng.Between(0, pairs.size() - 1 - t);
    std::swap(pairs[t], pairs[pick]);
    const auto [i, j] = pairs[t];
    SetSymmetric(dist, n, i, j, spec.r + 2 * unit * rng.Between(1, kGrid));
  }
  return FiniteSemimetricSpace::Build(std::move(labels), std::move(dist));
}

FiniteSemimetricSpace UniformRandomSpace(std::size_t n, const Rational& max_distance, std::uint64_t seed) {
  if (max_distance <= 0) throw std::invalid_argument("max distance must be positive");
  Rng rng(seed);
  const Rational unit = max_distance / kGrid;
  std::vector<Rational> dist(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) SetSymmetric(dist, n, i, j, unit * rng.Between(1, kGrid));
  }
  return FiniteSemimetricSpace::Build(NumberedLabels(n, "p"), std::move(dist));
}

FiniteSemimetricSpace MetricClosure(const FiniteSemimetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::int64_t> keys(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) keys[i * n + j] = space.key(i, j);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const __int128 via = static_cast<__int128>(keys[i * n + m]) + keys[m * n + j];
        if (via < keys[i * n + j]) keys[i * n + j] = static_cast<std::int64_t>(via);
      }
    }
  }
  std::vector<Rational> dist(n * n);
  for (std::size_t c = 0; c < n * n; ++c) dist[c] = Rational(BigInt(keys[c]), space.scale());
  return FiniteSemimetricSpace::Build(space.labels(), std::move(dist));
}

std::vector<PointSet> EpsilonPartition(const WeightedFiniteSpace& w, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const FiniteSemimetricSpace& space = w.base;
  const std::size_t n = space.size();
  const Rational radius = eps / 2;
  std::vector<bool> covered(n, false);
  std::vector<PointSet> parts;
  for (std::size_t c = 0; c < n; ++c) {
    if (covered[c]) continue;
    PointSet part{c};
    covered[c] = true;
    for (std::size_t x = c + 1; x < n; ++x) {
      if (covered[x] || space.dist(c, x) > radius) continue;
      const bool fits = std::all_of(part.begin(), part.end(), [&](std::size_t p) { return space.dist(p, x) <= eps; });
      if (!fits) continue;
      part.push_back(x);
      covered[x] = true;
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

UniformizedSpace Uniformize(const WeightedFiniteSpace& w, const std::vector<PointSet>& partition,
                            const Rational& eps, UniformizeOptions options) {
  w.Validate();
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0, 1)");
  const std::size_t n = w.base.size();
  std::vector<int> seen(n, 0);
  for (const PointSet& part : partition) {
    if (part.empty()) throw std::invalid_argument("partition contains an empty part");
    for (std::size_t p : part) {
      if (p >= n) throw std::invalid_argument("partition index out of range");
      ++seen[p];
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p] != 1) throw std::invalid_argument("point " + std::to_string(p) + " is not covered exactly once");
  }

  UniformizedSpace out;
  out.parts = partition;
  for (const PointSet& part : partition) {
    Rational mass = 0;
    for (std::size_t p : part) mass += w.weights[p];
    out.part_measures.push_back(mass);
  }

  constexpr unsigned kMaxDigits = 60;
  const Rational floor_factor = 1 - eps;
  for (unsigned digits = 0;; ++digits) {
    if (digits > kMaxDigits) throw std::length_error("no decimal truncation within 60 places meets the (1-eps) floor");
    std::vector<Rational> q;
    bool ok = true;
    for (const Rational& mass : out.part_measures) {
      q.push_back(TruncateDecimal(mass, digits));
      if (q.back() < floor_factor * mass || q.back() <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.decimal_digits = digits;
      out.q = std::move(q);
      break;
    }
  }

  const BigInt scale = Pow(BigInt(10), out.decimal_digits);
  std::vector<BigInt> counts;
  BigInt g = 0;
  for (const Rational& q : out.q) {
    counts.push_back(numerator(q * scale));
    g = boost::integer::gcd(g, counts.back());
  }
  BigInt total = 0;
  for (BigInt& c : counts) {
    c /= g;
    total += c;
  }
  if (total > BigInt(options.max_total)) {
    throw std::length_error("total multiplicity " + total.str() + " exceeds cap " + std::to_string(options.max_total));
  }
  for (const BigInt& c : counts) out.multiplicities.push_back(c.convert_to<std::size_t>());
  out.total = total.convert_to<std::size_t>();

  const std::size_t parts = partition.size();
  out.part_distances.assign(parts, std::vector<Rational>(parts, Rational(0)));
  for (std::size_t i = 0; i < parts; ++i) {
    for (std::size_t j = i + 1; j < parts; ++j) {
      out.part_distances[i][j] = out.part_distances[j][i] = SetDistance(w.base, partition[i], partition[j]);
    }
  }
  return out;
}

FiniteSemimetricSpace UniformizedSpace::Materialize(std::size_t max_materialized) const {
  if (total > max_materialized) {
    throw std::length_error("uniformized space has " + std::to_string(total) + " points, cap is " +
                            std::to_string(max_materialized));
  }
  std::vector<std::size_t> block;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < multiplicities.size(); ++b) {
    for (std::size_t c = 0; c < multiplicities[b]; ++c) {
      block.push_back(b);
      labels.push_back("A" + std::to_string(b) + "_" + std::to_string(c));
    }
  }
  const std::size_t n = block.size();
  std::vector<Rational> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = part_distances[block[i]][block[j]];
  }
  return FiniteSemimetricSpace::Build(std::move(labels), std::move(dist));
}

BigInt UniformizedSpace::BlockAnticliques(const Rational& r, unsigned k) const {
  BigInt total = 0;
  ForEachSubset(multiplicities.size(), k, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (part_distances[idx[a]][idx[b]] <= r) return;
      }
    }
    BigInt product = 1;
    for (std::size_t i : idx) product *= multiplicities[i];
    total += product;
  });
  return total;
}

Rational UniformizedSpace::WeightedPartAnticliques(const Rational& r, unsigned k) const {
  Rational total = 0;
  ForEachSubset(part_measures.size(), k, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (part_distances[idx[a]][idx[b]] <= r) return;
      }
    }
    Rational product = 1;
    for (std::size_t i : idx) product *= part_measures[i];
    total += product;
  });
  return total;
}

}  // namespace clusterbound
