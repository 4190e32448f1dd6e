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

#include "exmat/counterexample.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "exmat/errors.h"

namespace exmat {
namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // False if x and y were already connected.
  bool Unite(std::size_t x, std::size_t y) {
    x = Find(x);
    y = Find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
  std::vector<std::size_t> parent;
};

struct Side {
  UnionFind forest;
  std::vector<std::size_t> edges;
};

class CandidateSearch {
 public:
  CandidateSearch(const FigureGraph& fig, bool require_connected)
      : fig_(fig), require_connected_(require_connected) {
    for (std::size_t i = 0; i < fig.graph.edges.size(); ++i) {
      index_[fig.graph.edges[i].label] = i;
    }
    for (std::size_t m = 0; m < fig.vertex_count; ++m) {
      boundary_.push_back(!IsInteriorVertex(fig.vertex_count, m));
    }
    // e0, h0, e1, h1, ...: neighbouring edges are decided together, which
    // prunes cycles early.
    for (std::size_t i = 0; i < fig.e_edges.size(); ++i) {
      free_.push_back(index_.at(fig.e_edges[i]));
      free_.push_back(index_.at(fig.h_edges[i]));
    }
  }

  CandidateEnumeration Run() {
    Side s0{UnionFind(fig_.vertex_count), {}};
    Side s1{UnionFind(fig_.vertex_count), {}};
    for (const auto& label : fig_.X0()) Add(s0, index_.at(label));
    for (const auto& label : fig_.X1()) Add(s1, index_.at(label));
    Recurse(0, s0, s1);
    return std::move(result_);
  }

 private:
  bool Add(Side& side, std::size_t edge) {
    const GraphEdge& g = fig_.graph.edges[edge];
    if (!side.forest.Unite(g.u, g.v)) return false;
    side.edges.push_back(edge);
    return true;
  }

  // Every component of the side must reach a boundary vertex.
  bool ReachesBoundary(Side& side) {
    std::vector<bool> ok(fig_.vertex_count, false);
    for (std::size_t m = 0; m < fig_.vertex_count; ++m) {
      if (boundary_[m]) ok[side.forest.Find(m)] = true;
    }
    for (std::size_t m = 0; m < fig_.vertex_count; ++m) {
      if (!ok[side.forest.Find(m)]) return false;
    }
    return true;
  }

  std::vector<std::string> Labels(const Side& side) const {
    std::vector<std::string> out;
    for (std::size_t e : side.edges) out.push_back(fig_.graph.edges[e].label);
    std::sort(out.begin(), out.end());
    return out;
  }

  void Recurse(std::size_t pos, Side& s0, Side& s1) {
    if (pos == free_.size()) {
      ++result_.checks;
      if (require_connected_ && (!ReachesBoundary(s0) || !ReachesBoundary(s1))) {
        return;
      }
      result_.candidates.push_back({Labels(s0), Labels(s1)});
      return;
    }
    for (Side* side : {&s0, &s1}) {
      Side copy = *side;
      if (!Add(copy, free_[pos])) continue;
      if (side == &s0) {
        Recurse(pos + 1, copy, s1);
      } else {
        Recurse(pos + 1, s0, copy);
      }
    }
  }

  const FigureGraph& fig_;
  bool require_connected_;
  std::map<std::string, std::size_t> index_;
  std::vector<bool> boundary_;
  std::vector<std::size_t> free_;
  CandidateEnumeration result_;
};

// Edges of the infinite graph at v_m, as (other endpoint) indices.
std::vector<std::size_t> InfiniteNeighbours(std::size_t m) {
  std::vector<std::size_t> out;
  auto visit = [&](std::size_t a, std::size_t b) {
    if (a == m) out.push_back(b);
    if (b == m) out.push_back(a);
  };
  for (std::size_t n = 0; n <= m + 1; ++n) {
    visit(n, n + 1);
    visit(2 * n + 1, 2 * n + 3);
    visit(2 * n, 2 * n + 3);
  }
  return out;
}

}  // namespace

bool IsInteriorVertex(std::size_t vertex_count, std::size_t m) {
  if (m >= vertex_count) return false;
  for (std::size_t other : InfiniteNeighbours(m)) {
    if (other >= vertex_count) return false;
  }
  return true;
}

CandidateEnumeration EnumerateCandidates(std::size_t vertex_count,
                                         bool require_connected) {
  FigureGraph fig = MakeFigureGraph(vertex_count);
  return CandidateSearch(fig, require_connected).Run();
}

std::size_t MaxAdmissibleK(std::size_t vertex_count) {
  if (vertex_count < 4) return 0;
  return vertex_count / 2 - 1;
}

std::vector<std::size_t> ProofCutSet(std::size_t n) {
  std::set<std::size_t> out;
  for (std::size_t k = 0; 4 * k <= 2 * n + 2; ++k) out.insert(2 * n + 2 - 4 * k);
  for (std::size_t k = 0; 4 * k <= 2 * n + 1; ++k) out.insert(2 * n + 1 - 4 * k);
  return {out.begin(), out.end()};
}

ForcedPrefixReport VerifyForcedPrefix(std::size_t vertex_count, std::size_t k) {
  FigureGraph fig = MakeFigureGraph(vertex_count);
  if (k > MaxAdmissibleK(vertex_count)) {
    throw DomainError("k = " + std::to_string(k) + " exceeds the largest admissible " +
                      std::to_string(MaxAdmissibleK(vertex_count)) + " for N = " +
                      std::to_string(vertex_count));
  }
  CandidateEnumeration found = EnumerateCandidates(vertex_count, true);

  ForcedPrefixReport report;
  report.vertex_count = vertex_count;
  report.k = k;
  report.candidate_count = found.candidates.size();
  report.checks = found.checks;
  for (std::size_t i = 0; i < k; ++i) {
    report.expected_s0.push_back(fig.e_edges[i]);
    report.expected_s1.push_back(fig.h_edges[i]);
  }
  for (std::size_t n = 0; n + 1 < k; ++n) report.cut_sets.push_back(ProofCutSet(n));

  report.vacuous = found.candidates.empty();
  if (report.vacuous) return report;

  std::set<std::string> x_edges;
  for (const auto& l : fig.T0()) x_edges.insert(l);
  auto intersect_all = [&](auto member) {
    std::set<std::string> common(
        (found.candidates.front().*member).begin(),
        (found.candidates.front().*member).end());
    for (const auto& c : found.candidates) {
      std::set<std::string> mine((c.*member).begin(), (c.*member).end());
      std::set<std::string> kept;
      std::set_intersection(common.begin(), common.end(), mine.begin(), mine.end(),
                            std::inserter(kept, kept.end()));
      common = std::move(kept);
    }
    std::vector<std::string> out;
    for (const auto& l : common) {
      if (x_edges.count(l) == 0) out.push_back(l);
    }
    return out;
  };
  report.forced_s0 = intersect_all(&AssignmentCandidate::s0);
  report.forced_s1 = intersect_all(&AssignmentCandidate::s1);

  auto contains_all = [](const std::vector<std::string>& haystack,
                         const std::vector<std::string>& needles) {
    return std::all_of(needles.begin(), needles.end(), [&](const std::string& n) {
      return std::find(haystack.begin(), haystack.end(), n) != haystack.end();
    });
  };
  report.passed = contains_all(report.forced_s0, report.expected_s0) &&
                  contains_all(report.forced_s1, report.expected_s1);
  return report;
}

std::size_t LimitWitness(std::size_t vertex_count) {
  if (vertex_count < 5) {
    throw DomainError("limit witness needs at least 5 vertices");
  }
  FigureGraph fig = MakeFigureGraph(vertex_count);
  std::map<std::string, const GraphEdge*> by_label;
  for (const GraphEdge& e : fig.graph.edges) by_label[e.label] = &e;

  std::vector<std::string> edges = fig.X1();
  edges.insert(edges.end(), fig.h_edges.begin(), fig.h_edges.end());
  UnionFind forest(vertex_count);
  std::vector<bool> covered(vertex_count, false);
  for (const auto& label : edges) {
    const GraphEdge* e = by_label.at(label);
    forest.Unite(e->u, e->v);
    covered[e->u] = covered[e->v] = true;
  }
  std::set<std::size_t> roots;
  for (std::size_t m = 0; m < vertex_count; ++m) {
    if (covered[m]) roots.insert(forest.Find(m));
  }
  return roots.size();
}

}  // namespace exmat
