// Copyright 2026 The Authors.
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

#include "exmat/models.h"

#include <algorithm>
#include <bit>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <utility>

#include "exmat/errors.h"

namespace exmat {
namespace {

class UniformOracle : public IndependenceOracle {
 public:
  UniformOracle(std::size_t rank, std::size_t size) : rank_(rank), size_(size) {}

  std::size_t size() const override { return size_; }
  bool IsIndependent(const ElementSet& s) const override {
    return s.size() <= rank_;
  }
  std::string Describe() const override {
    return "U(" + std::to_string(rank_) + "," + std::to_string(size_) + ")";
  }

 private:
  std::size_t rank_;
  std::size_t size_;
};

class GraphicOracle : public IndependenceOracle {
 public:
  // endpoints[i] are the endpoints of the edge with id i.
  GraphicOracle(std::size_t vertex_count,
                std::vector<std::pair<std::size_t, std::size_t>> endpoints)
      : vertex_count_(vertex_count), endpoints_(std::move(endpoints)) {}

  std::size_t size() const override { return endpoints_.size(); }

  bool IsIndependent(const ElementSet& s) const override {
    if (s.size() >= vertex_count_ && !s.empty()) return false;
    std::vector<std::size_t> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (ElementId e : s) {
      auto [u, v] = endpoints_[e.index()];
      std::size_t ru = find(u);
      std::size_t rv = find(v);
      if (ru == rv) return false;
      parent[ru] = rv;
    }
    return true;
  }

  std::string Describe() const override {
    return "graphic(" + std::to_string(vertex_count_) + " vertices, " +
           std::to_string(endpoints_.size()) + " edges)";
  }

 private:
  std::size_t vertex_count_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
};

class Gf2Oracle : public IndependenceOracle {
 public:
  Gf2Oracle(std::size_t row_count, std::vector<std::vector<std::uint64_t>> columns)
      : row_count_(row_count), columns_(std::move(columns)) {}

  std::size_t size() const override { return columns_.size(); }

  // Elimination against an echelon basis keyed by leading bit.
  bool IsIndependent(const ElementSet& s) const override {
    if (s.size() > row_count_) return false;
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
    for (ElementId e : s) {
      std::vector<std::uint64_t> v = columns_[e.index()];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        std::size_t p = pivots[b];
        if ((v[p / 64] >> (p % 64)) & 1U) {
          for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= basis[b][w];
        }
      }
      std::size_t pivot = row_count_;
      for (std::size_t w = 0; w < v.size() && pivot == row_count_; ++w) {
        if (v[w] != 0) {
          pivot = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
        }
      }
      if (pivot == row_count_) return false;
      // Keep the basis reduced so later vectors only need one pass.
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if ((basis[b][pivot / 64] >> (pivot % 64)) & 1U) {
          for (std::size_t w = 0; w < v.size(); ++w) basis[b][w] ^= v[w];
        }
      }
      basis.push_back(std::move(v));
      pivots.push_back(pivot);
    }
    return true;
  }

  std::string Describe() const override {
    return "gf2(" + std::to_string(row_count_) + "x" +
           std::to_string(columns_.size()) + ")";
  }

 private:
  std::size_t row_count_;
  std::vector<std::vector<std::uint64_t>> columns_;
};

class SetSystemOracle : public IndependenceOracle {
 public:
  SetSystemOracle(std::size_t size, std::set<ElementSet> independent)
      : size_(size), independent_(std::move(independent)) {}

  std::size_t size() const override { return size_; }
  bool IsIndependent(const ElementSet& s) const override {
    return independent_.count(s) > 0;
  }
  std::string Describe() const override {
    return "set-system(" + std::to_string(independent_.size()) + " sets)";
  }

 private:
  std::size_t size_;
  std::set<ElementSet> independent_;
};

void CheckUniqueLabels(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw DomainError("duplicate element label '" + l + "'");
    }
  }
}

}  // namespace

void Validate(const UniformDescription& d) {
  CheckUniqueLabels(d.ground);
  if (d.rank > d.ground.size()) {
    throw DomainError("uniform matroid rank " + std::to_string(d.rank) +
                      " exceeds ground size " + std::to_string(d.ground.size()));
  }
}

void Validate(const MultiGraph& g) {
  std::vector<std::string> labels;
  labels.reserve(g.edges.size());
  for (const GraphEdge& edge : g.edges) {
    if (edge.u >= g.vertex_count || edge.v >= g.vertex_count) {
      throw DomainError("edge '" + edge.label + "' has an endpoint outside 0.." +
                        std::to_string(g.vertex_count) + "-1");
    }
    labels.push_back(edge.label);
  }
  CheckUniqueLabels(labels);
}

void Validate(const Gf2Matrix& m) {
  for (const auto& [label, bits] : m.columns) {
    if (bits.size() != m.row_count) {
      throw DomainError("column '" + label + "' has length " +
                        std::to_string(bits.size()) + ", expected " +
                        std::to_string(m.row_count));
    }
    for (std::uint8_t bit : bits) {
      if (bit > 1) throw DomainError("column '" + label + "' has a non-bit entry");
    }
  }
}

MatroidView UniformMatroid(const UniformDescription& d) {
  Validate(d);
  auto labels = std::make_shared<const LabelTable>(d.ground);
  return MatroidView(std::make_shared<UniformOracle>(d.rank, d.ground.size()),
                     std::move(labels));
}

MatroidView UniformMatroid(std::size_t rank,
                           const std::vector<std::string>& ground) {
  return UniformMatroid(UniformDescription{rank, ground});
}

MatroidView GraphicMatroid(const MultiGraph& g) {
  Validate(g);
  std::vector<std::string> labels;
  for (const GraphEdge& edge : g.edges) labels.push_back(edge.label);
  auto table = std::make_shared<const LabelTable>(labels);
  std::vector<std::pair<std::size_t, std::size_t>> endpoints(g.edges.size());
  for (const GraphEdge& edge : g.edges) {
    endpoints[table->Id(edge.label).index()] = {edge.u, edge.v};
  }
  return MatroidView(
      std::make_shared<GraphicOracle>(g.vertex_count, std::move(endpoints)),
      std::move(table));
}

MatroidView Gf2Matroid(const Gf2Matrix& m) {
  Validate(m);
  std::vector<std::string> labels;
  for (const auto& [label, bits] : m.columns) labels.push_back(label);
  auto table = std::make_shared<const LabelTable>(labels);
  std::size_t words = (m.row_count + 63) / 64;
  std::vector<std::vector<std::uint64_t>> columns(m.columns.size());
  for (const auto& [label, bits] : m.columns) {
    std::vector<std::uint64_t> packed(words, 0);
    for (std::size_t r = 0; r < bits.size(); ++r) {
      if (bits[r] != 0) packed[r / 64] |= std::uint64_t{1} << (r % 64);
    }
    columns[table->Id(label).index()] = std::move(packed);
  }
  return MatroidView(std::make_shared<Gf2Oracle>(m.row_count, std::move(columns)),
                     std::move(table));
}

MatroidView BuildMatroid(const MatroidDescription& d) {
  return std::visit(
      [](const auto& desc) -> MatroidView {
        using T = std::decay_t<decltype(desc)>;
        if constexpr (std::is_same_v<T, UniformDescription>) {
          return UniformMatroid(desc);
        } else if constexpr (std::is_same_v<T, MultiGraph>) {
          return GraphicMatroid(desc);
        } else {
          return Gf2Matroid(desc);
        }
      },
      d);
}

MatroidView SetSystemMatroid(
    const std::vector<std::string>& ground,
    const std::vector<std::vector<std::string>>& independent) {
  auto table = std::make_shared<const LabelTable>(ground);
  std::set<ElementSet> family;
  for (const auto& labels : independent) family.insert(table->Set(labels));
  return MatroidView(
      std::make_shared<SetSystemOracle>(ground.size(), std::move(family)),
      std::move(table));
}

MultiGraph CompleteGraph(std::size_t n) {
  if (n > 9) throw DomainError("CompleteGraph supports at most 9 vertices");
  MultiGraph g;
  g.vertex_count = n;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      g.edges.push_back({std::to_string(u + 1) + std::to_string(v + 1), u, v});
    }
  }
  return g;
}

std::vector<std::string> FigureGraph::T1() const {
  std::vector<std::string> out = e_edges;
  out.insert(out.end(), h_edges.begin(), h_edges.end());
  return out;
}

std::vector<std::string> FigureGraph::X0() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < f_edges.size(); i += 2) out.push_back(f_edges[i]);
  return out;
}

std::vector<std::string> FigureGraph::X1() const {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < f_edges.size(); i += 2) out.push_back(f_edges[i]);
  return out;
}

FigureGraph MakeFigureGraph(std::size_t vertex_count) {
  if (vertex_count < 4) {
    throw DomainError("figure graph needs at least 4 vertices (h0 joins v0 and v3)");
  }
  FigureGraph fig;
  fig.vertex_count = vertex_count;
  fig.graph.vertex_count = vertex_count;
  const std::size_t last = vertex_count - 1;
  for (std::size_t n = 0; n + 1 <= last; ++n) {
    std::string label = "f" + std::to_string(n);
    fig.graph.edges.push_back({label, n, n + 1});
    fig.f_edges.push_back(label);
  }
  for (std::size_t n = 0; 2 * n + 3 <= last; ++n) {
    std::string e = "e" + std::to_string(n);
    std::string h = "h" + std::to_string(n);
    fig.graph.edges.push_back({e, 2 * n + 1, 2 * n + 3});
    fig.graph.edges.push_back({h, 2 * n, 2 * n + 3});
    fig.e_edges.push_back(e);
    fig.h_edges.push_back(h);
  }
  return fig;
}

std::string ToString(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kUniform:
      return "uniform";
    case InstanceKind::kGraphic:
      return "graphic";
    case InstanceKind::kGf2:
      return "gf2";
  }
  return "unknown";
}

InstanceKind ParseInstanceKind(const std::string& name) {
  if (name == "uniform") return InstanceKind::kUniform;
  if (name == "graphic") return InstanceKind::kGraphic;
  if (name == "gf2") return InstanceKind::kGf2;
  throw DomainError("unknown instance kind '" + name + "'");
}

MatroidDescription RandomInstance(InstanceKind kind, std::size_t size,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coin = [&rng]() { return (rng() >> 63) != 0; };
  switch (kind) {
    case InstanceKind::kUniform: {
      UniformDescription d;
      d.rank = static_cast<std::size_t>(rng() % (size + 1));
      for (std::size_t i = 0; i < size; ++i) d.ground.push_back("e" + std::to_string(i));
      return d;
    }
    case InstanceKind::kGraphic: {
      MultiGraph g;
      std::size_t n = 1;
      while (n * (n - 1) / 2 < size) ++n;
      g.vertex_count = n;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (coin() && g.edges.size() < size) {
            g.edges.push_back({std::to_string(u) + "-" + std::to_string(v), u, v});
          }
        }
      }
      return g;
    }
    case InstanceKind::kGf2: {
      Gf2Matrix m;
      m.row_count = (2 * size + 2) / 3;
      for (std::size_t c = 0; c < size; ++c) {
        std::vector<std::uint8_t> bits(m.row_count);
        for (auto& b : bits) b = coin() ? 1 : 0;
        m.columns["c" + std::to_string(c)] = std::move(bits);
      }
      return m;
    }
  }
  throw DomainError("unknown instance kind");
}

}  // namespace exmat
